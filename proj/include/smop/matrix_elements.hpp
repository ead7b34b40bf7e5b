#ifndef SMOP_MATRIX_ELEMENTS_HPP
#define SMOP_MATRIX_ELEMENTS_HPP

#include "smop/psi_table.hpp"

namespace smop {

// Vacuum expectation value <0|S|0>.
cplx psi00(const GroupParams& p);

// Seed vector (psi_{0,k}, psi_{1,k}) from the Hermite closed forms.
// Requires rho > 0 (psi_{1,k} carries 1/sh rho).
C2Vec psi_seed(const GroupParams& p, int k);

// Alternative closed form for psi_{1,k} (H_{k-1}-based), for cross-checking.
cplx psi1_alt(const GroupParams& p, int k);

// Seed vectors for k = 0..kmax by the stable three-term recurrence in k.
// Agrees with psi_seed to roundoff and does not overflow at large k.
std::vector<C2Vec> seed_row(const GroupParams& p, int kmax);

// Table by the vector recurrence in n. Requires rho > 0 and sigma > 0;
// degenerate parameters have closed forms in the decompose module.
PsiTable psi_table(const GroupParams& p, int nmax, int kmax);

// Brute-force ground truth: truncated a, a^+ matrices, matrix exponentials
// by scaling and squaring, entries read off the product.
// Requires dim >= 4*max(nmax,kmax) + 40.
PsiTable psi_oracle(const GroupParams& p, int nmax, int kmax, int dim);

enum class LadderDirection { lower, raise };

// A_k Psi (= sqrt(k) Psi_{0,k-1} on seed vectors) or Abar_k Psi
// (= sqrt(k+1) Psi_{0,k+1}).
C2Vec ladder_apply(const GroupParams& p, int k, const C2Vec& v,
                   LadderDirection dir);

// |sum_k psi_{n,k} conj(psi_{m,k}) - delta_{n,m}|
double unitarity_defect(const GroupParams& p, int n, int m, int kcut);

}  // namespace smop

#endif

#ifndef SMOP_DECOMPOSE_HPP
#define SMOP_DECOMPOSE_HPP

#include "smop/psi_table.hpp"

namespace smop {

// Matrix element of the displacement factor in terms of Charlier polynomials.
// sigma = 0 degenerates to the Kronecker delta.
cplx chi(const GroupParams& p, int n, int k);

// Matrix element of the squeeze factor in terms of Meixner polynomials.
// Vanishes unless n and m have the same parity; rho = 0 gives the delta.
cplx phi(const GroupParams& p, int n, int m);

// psi_{n,k} as the discrete convolution sum_m chi_{m,k} phi_{n,m}.
cplx psi_convolved(const GroupParams& p, int n, int k, int mcut);

// Full table by the convolution route.
PsiTable psi_table_convolved(const GroupParams& p, int nmax, int kmax,
                             int mcut = 200);

}  // namespace smop

#endif

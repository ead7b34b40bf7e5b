#ifndef SMOP_GENFUN_HPP
#define SMOP_GENFUN_HPP

#include "smop/psi_table.hpp"

namespace smop {

// Closed exponential-quadratic form of the 2-variable generating function
// G(x, y) = sum_{k,n} conj(x)^k y^n psi_{n,k} / sqrt(k! n!).
cplx g_closed(const GroupParams& p, cplx x, cplx y);

// Same quantity as a truncated double sum over a table of matrix elements.
cplx g_series(const GroupParams& p, cplx x, cplx y, int ncut, int kcut);

// psi_{n,k} through the 2-variable Hermite polynomial route; exact Taylor
// extraction, capped at k + n <= 60.
cplx psi_via_hermite2(const GroupParams& p, int n, int k);

// 1-variable generating function F_k(y) = sum_n y^n psi_{n,k} / sqrt(n!)
// in closed form; F_k(0) = psi_{0,k}. Requires rho > 0.
cplx f_closed(const GroupParams& p, int k, cplx y);

}  // namespace smop

#endif

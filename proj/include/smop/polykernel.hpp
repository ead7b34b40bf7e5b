#ifndef SMOP_POLYKERNEL_HPP
#define SMOP_POLYKERNEL_HPP

#include <utility>

#include "smop/complex2.hpp"

namespace smop::poly {

// Parameter pack for the classical families; range checks happen here.
struct PolyParams {
  double alpha;  // Laguerre, > -1
  double a;      // Charlier, > 0
  double beta;   // Meixner, > 0
  double c;      // Meixner, 0 < c < 1

  PolyParams(double alpha_, double a_, double beta_, double c_)
      : alpha(alpha_), a(a_), beta(beta_), c(c_) {
    if (!(alpha > -1.0))
      throw std::invalid_argument("PolyParams: alpha must be > -1");
    if (!(a > 0.0)) throw std::invalid_argument("PolyParams: a must be > 0");
    if (!(beta > 0.0))
      throw std::invalid_argument("PolyParams: beta must be > 0");
    if (!(c > 0.0 && c < 1.0))
      throw std::invalid_argument("PolyParams: c must be in (0,1)");
  }
};

// Symmetric 2x2 matrix parameter of the 2-variable Hermite generating
// function (a21 = a12 implicitly).
struct SymMatrix2 {
  cplx a11, a12, a22;
};

// H_n(x), forward recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
cplx hermite(int n, cplx x);

// L_n^alpha(x); alpha > -1.
cplx laguerre(int n, double alpha, cplx x);

// Charlier c_n(x;a), a > 0. Monic recurrence + conversion (-1/a)^n.
double charlier(int n, double x, double a);

// Meixner M_n(x;beta,c), beta > 0, 0 < c < 1.
double meixner(int n, double x, double beta, double c);

// Gessel even/odd-degree Charlier sums: returns (series side, finite side).
// x must be a nonnegative integer so the finite side terminates.
std::pair<double, double> gessel_even(int x, double a, double t, double tol);
std::pair<double, double> gessel_odd(int x, double a, double t, double tol);

// Same sums continued to complex t (the series and the finite sum are both
// analytic in t for |t| < 1); used by the convolution consistency checks.
std::pair<cplx, cplx> gessel_even_c(int x, double a, cplx t, double tol);
std::pair<cplx, cplx> gessel_odd_c(int x, double a, cplx t, double tol);

// 2-variable Hermite polynomial H_{k,n}(c1,c2): coefficient of
// t1^k t2^n / (k! n!) in exp{sum_ij a_ij (x_i t_j - t_i t_j / 2)},
// extracted by exact truncated Taylor expansion of the exponential.
cplx hermite2(int k, int n, const SymMatrix2& A, cplx c1, cplx c2);

}  // namespace smop::poly

#endif

#include "smop/polykernel.hpp"

#include <vector>

namespace smop::poly {

cplx hermite(int n, cplx x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  cplx hm1{0.0}, h{1.0};
  for (int j = 0; j < n; ++j) {
    const cplx hp1 = 2.0 * x * h - 2.0 * static_cast<double>(j) * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

cplx laguerre(int n, double alpha, cplx x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  if (!(alpha > -1.0))
    throw std::invalid_argument("laguerre: alpha must be > -1");
  cplx lm1{0.0}, l{1.0};
  for (int j = 0; j < n; ++j) {
    // (j+1) L_{j+1} = (2j + alpha + 1 - x) L_j - (j + alpha) L_{j-1}
    const cplx lp1 =
        ((2.0 * j + alpha + 1.0 - x) * l - (j + alpha) * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

namespace {

inline bool nonneg_int(double x) {
  return x >= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

}  // namespace

double charlier(int n, double x, double a) {
  if (n < 0) throw std::invalid_argument("charlier: n must be >= 0");
  if (!(a > 0.0)) throw std::invalid_argument("charlier: a must be > 0");
  if (nonneg_int(x)) {
    // terminating hypergeometric sum; the monic recurrence is exponentially
    // ill conditioned in n, this stays accurate at any degree
    const int xi = static_cast<int>(std::round(x));
    double s = 0.0, term = 1.0;
    const int kend = std::min(n, xi);
    for (int k = 0; k <= kend; ++k) {
      s += term;
      term *= (-n + k) * (-x + k) / ((k + 1.0) * -a);
    }
    return s;
  }
  // monic: p_{n+1} = (x - n - a) p_n - n a p_{n-1}
  double pm1 = 0.0, p = 1.0;
  double conv = 1.0;  // (-1/a)^n, updated per step
  for (int j = 0; j < n; ++j) {
    const double pp1 = (x - j - a) * p - j * a * pm1;
    pm1 = p;
    p = pp1;
    conv *= -1.0 / a;
  }
  return conv * p;
}

double meixner(int n, double x, double beta, double c) {
  if (n < 0) throw std::invalid_argument("meixner: n must be >= 0");
  if (!(beta > 0.0)) throw std::invalid_argument("meixner: beta must be > 0");
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("meixner: c must be in (0,1)");
  if (nonneg_int(x)) {
    const int xi = static_cast<int>(std::round(x));
    double s = 0.0, term = 1.0;
    const double z = 1.0 - 1.0 / c;
    const int kend = std::min(n, xi);
    for (int k = 0; k <= kend; ++k) {
      s += term;
      term *= (-n + k) * (-x + k) / ((beta + k) * (k + 1.0)) * z;
    }
    return s;
  }
  // monic: p_{n+1} = (x - (n + (n+beta)c)/(1-c)) p_n
  //                  - n(n+beta-1)c/(1-c)^2 p_{n-1}
  const double omc = 1.0 - c;
  double pm1 = 0.0, p = 1.0;
  double conv = 1.0;  // ((c-1)/c)^n / (beta)_n, updated per step
  for (int j = 0; j < n; ++j) {
    const double pp1 =
        (x - (j + (j + beta) * c) / omc) * p - j * (j + beta - 1.0) * c / (omc * omc) * pm1;
    pm1 = p;
    p = pp1;
    conv *= (c - 1.0) / c / (beta + j);
  }
  return conv * p;
}

namespace {

template <typename T>
std::pair<T, T> gessel_impl(int x, double a, T t, double tol, bool odd) {
  if (x < 0) throw std::invalid_argument("gessel: x must be a nonnegative integer");
  if (!(a > 0.0)) throw std::invalid_argument("gessel: a must be > 0");
  if (!(std::abs(t) < 1.0)) throw std::invalid_argument("gessel: need |t| < 1");

  // series side: sum_n c_{2n+d}(x;a) (-at/2)^n / n!, d = odd ? 1 : 0
  T lhs{0.0};
  T w{1.0};
  double runmax = 0.0;
  int below = 0;
  const int d = odd ? 1 : 0;
  bool converged = false;
  for (int n = 0; n <= 500; ++n) {
    const T term = charlier(2 * n + d, static_cast<double>(x), a) * w;
    lhs += term;
    const double m = std::abs(term);
    runmax = std::max(runmax, m);
    below = (m < tol * std::max(runmax, 1.0)) ? below + 1 : 0;
    if (below >= 5) {
      converged = true;
      break;
    }
    w *= (-a * t / 2.0) / (n + 1.0);
  }
  if (!converged) throw ConvergenceError("gessel: series did not converge");

  // finite side: terminates at l = floor(x/2) since (-x)_{2l} vanishes after
  T rhs{0.0};
  T pl{1.0};  // (-x)_{2l} (-t/2a)^l / l!
  const T onept = T{1.0} + t;
  for (int l = 0; 2 * l <= x; ++l) {
    // (1+t)^{x-2l}
    T pw{1.0};
    for (int j = 0; j < x - 2 * l; ++j) pw *= onept;
    T term = pl * pw;
    if (odd) term *= T{1.0} + (2.0 * l - x) / (a * onept);
    rhs += term;
    pl *= (-x + 2.0 * l) * (-x + 2.0 * l + 1.0) * (-t / (2.0 * a)) / (l + 1.0);
  }
  rhs *= std::exp(-a * t / 2.0);
  return {lhs, rhs};
}

}  // namespace

std::pair<double, double> gessel_even(int x, double a, double t, double tol) {
  return gessel_impl<double>(x, a, t, tol, false);
}

std::pair<double, double> gessel_odd(int x, double a, double t, double tol) {
  return gessel_impl<double>(x, a, t, tol, true);
}

std::pair<cplx, cplx> gessel_even_c(int x, double a, cplx t, double tol) {
  return gessel_impl<cplx>(x, a, t, tol, false);
}

std::pair<cplx, cplx> gessel_odd_c(int x, double a, cplx t, double tol) {
  return gessel_impl<cplx>(x, a, t, tol, true);
}

cplx hermite2(int k, int n, const SymMatrix2& A, cplx c1, cplx c2) {
  if (k < 0 || n < 0) throw std::invalid_argument("hermite2: k, n must be >= 0");
  // extended precision: the k! n! normalization amplifies cancellation in
  // the exponential series once k + n gets past ~15
  using lc = std::complex<long double>;
  const auto up = [](cplx z) { return lc(z.real(), z.imag()); };
  const int deg = k + n;
  const int w = deg + 1;
  // dense bivariate grids indexed [i1 * w + i2], total degree <= deg
  std::vector<lc> expo(w * w, lc{0.0L});
  if (deg >= 1) {
    expo[1 * w + 0] = up(A.a11 * c1 + A.a12 * c2);
    expo[0 * w + 1] = up(A.a12 * c1 + A.a22 * c2);
  }
  if (deg >= 2) {
    expo[2 * w + 0] = up(-A.a11 / 2.0);
    expo[0 * w + 2] = up(-A.a22 / 2.0);
    expo[1 * w + 1] = up(-A.a12);
  }

  std::vector<lc> acc(w * w, lc{0.0L});
  std::vector<lc> term(w * w, lc{0.0L});
  std::vector<lc> next(w * w);
  acc[0] = term[0] = lc{1.0L};
  // exp(E) = sum_m E^m / m!; E has no constant term, so E^m contributes
  // nothing below total degree m and the loop stops at m = deg.
  for (int m = 1; m <= deg; ++m) {
    std::fill(next.begin(), next.end(), lc{0.0L});
    for (int i1 = 0; i1 <= deg; ++i1)
      for (int i2 = 0; i1 + i2 <= deg; ++i2) {
        const lc tv = term[i1 * w + i2];
        if (tv == lc{0.0L}) continue;
        for (int j1 = 0; j1 <= 2 && i1 + j1 <= deg; ++j1)
          for (int j2 = 0; j2 <= 2 - j1 && i1 + j1 + i2 + j2 <= deg; ++j2) {
            const lc ev = expo[j1 * w + j2];
            if (ev == lc{0.0L}) continue;
            next[(i1 + j1) * w + (i2 + j2)] += tv * ev;
          }
      }
    for (int i = 0; i < w * w; ++i) {
      term[i] = next[i] / static_cast<long double>(m);
      acc[i] += term[i];
    }
  }

  long double kf = 1.0L, nf = 1.0L;
  for (int j = 2; j <= k; ++j) kf *= j;
  for (int j = 2; j <= n; ++j) nf *= j;
  const lc out = acc[k * w + n] * kf * nf;
  return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

}  // namespace smop::poly

#include "smop/decompose.hpp"

#include "smop/polykernel.hpp"

namespace smop {

namespace {
inline cplx phase(double a) { return std::polar(1.0, a); }
}  // namespace

cplx chi(const GroupParams& p, int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("chi: n, k must be >= 0");
  if (p.sigma == 0.0) return (n == k) ? cplx{1.0} : cplx{0.0};
  const double s2 = p.sigma * p.sigma;
  // prefactor in log magnitude: sigma^{n+k} e^{-sigma^2/2} / sqrt(n! k!)
  const double logmag = (n + k) * std::log(p.sigma) - 0.5 * s2 -
                        0.5 * (std::lgamma(n + 1.0) + std::lgamma(k + 1.0));
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(logmag) * phase(p.delta * (n - k)) *
         poly::charlier(n, static_cast<double>(k), s2);
}

cplx phi(const GroupParams& p, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("phi: n, m must be >= 0");
  if ((n + m) % 2 != 0) return cplx{0.0};
  if (p.rho == 0.0) return (n == m) ? cplx{1.0} : cplx{0.0};
  const double th = std::tanh(p.rho), ch = std::cosh(p.rho);
  const double c = th * th;
  const double ln2 = std::log(2.0), lnth = std::log(th);
  if (n % 2 == 0) {
    const int a = n / 2, b = m / 2;
    // (-1)^b / 2^{a+b} sqrt((2b)!(2a)!)/(a! b!) th^{a+b} / ch^{1/2}
    const double logmag =
        0.5 * (std::lgamma(2.0 * b + 1.0) + std::lgamma(2.0 * a + 1.0)) -
        std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - (a + b) * ln2 +
        (a + b) * lnth - 0.5 * std::log(ch);
    const double sign = (b % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(logmag) * phase(p.theta * (a - b)) *
           poly::meixner(a, static_cast<double>(b), 0.5, c);
  }
  const int a = (n - 1) / 2, b = (m - 1) / 2;
  const double logmag =
      0.5 * (std::lgamma(2.0 * b + 2.0) + std::lgamma(2.0 * a + 2.0)) -
      std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - (a + b) * ln2 +
      (a + b) * lnth - 1.5 * std::log(ch);
  const double sign = (b % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(logmag) * phase(p.theta * (a - b)) *
         poly::meixner(a, static_cast<double>(b), 1.5, c);
}

cplx psi_convolved(const GroupParams& p, int n, int k, int mcut) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("psi_convolved: n, k must be >= 0");
  if (mcut < 1) throw std::invalid_argument("psi_convolved: mcut must be >= 1");
  if (p.sigma == 0.0) return phi(p, n, k);  // chi = delta
  if (p.rho == 0.0) return chi(p, n, k);    // phi = delta
  cplx sum{0.0};
  double runmax = 0.0;
  int below = 0;
  bool converged = false;
  // phi_{n,m} vanishes for mismatched parity; skip those m outright
  for (int m = n % 2; m <= mcut; m += 2) {
    const cplx term = chi(p, m, k) * phi(p, n, m);
    sum += term;
    const double mag = std::abs(term);
    runmax = std::max(runmax, mag);
    below = (mag < 1e-16 * std::max(runmax, 1e-300)) ? below + 1 : 0;
    if (below >= 5 && m > n + 2) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ConvergenceError("psi_convolved: terms failed to decay by mcut");
  return sum;
}

PsiTable psi_table_convolved(const GroupParams& p, int nmax, int kmax,
                             int mcut) {
  PsiTable t(p, nmax, kmax, Route::convolution);
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= kmax; ++k) t.at(n, k) = psi_convolved(p, n, k, mcut);
  return t;
}

}  // namespace smop

#include "smop/group_core.hpp"

namespace smop {

namespace {
inline cplx phase(double a) { return std::polar(1.0, a); }
}  // namespace

DerivedScalars derived_scalars(const GroupParams& p) {
  DerivedScalars d{};
  const double th = std::tanh(p.rho);
  d.t = phase(2.0 * p.delta - p.theta) * th;
  d.c = th * th;
  if (p.rho > 0.0) {
    const double thh = std::sqrt(th);  // th^{1/2} rho, single root
    d.s = -(p.sigma / std::sqrt(2.0)) *
          (phase(p.delta - p.theta / 2.0) * thh +
           phase(-(p.delta - p.theta / 2.0)) / thh);
  } else {
    d.s = cplx{0.0};
  }
  const cplx v = p.v();
  // solved from the quadratic form of the 2-variable generating function;
  // for real v these reduce to -v (1 + e^{i theta} th rho) and v / ch rho
  d.c1 = -(v + phase(p.theta) * th * std::conj(v));
  d.c2 = std::conj(v) / std::cosh(p.rho);
  const double sh2 = std::sinh(2.0 * p.rho), ch2 = std::cosh(2.0 * p.rho);
  d.mu = p.sigma * (ch2 * phase(-p.delta) + sh2 * phase(p.delta - p.theta));
  d.nu = 0.5 * phase(-p.theta) * sh2;
  return d;
}

RecurrenceCoeffs recurrence_coeffs(const GroupParams& p, int n) {
  if (n < 0) throw std::invalid_argument("recurrence_coeffs: n must be >= 0");
  RecurrenceCoeffs r{};
  const double dn = n;
  r.xi = -0.5 * std::sqrt((dn - 1.0) * dn) * std::sinh(2.0 * p.rho) *
         phase(-p.theta);
  if (n == 0) r.xi = cplx{0.0};  // sqrt((n-1)n) = 0, avoid -0 artifacts
  r.eta = std::sqrt(dn) * p.sigma *
          (phase(p.delta - p.theta) * std::sinh(p.rho) -
           phase(-p.delta) * std::cosh(p.rho));
  r.zeta = (dn + 0.5) * std::cosh(2.0 * p.rho) + p.sigma * p.sigma - 0.5;
  return r;
}

std::pair<C2Mat, C2Mat> block_matrices(const GroupParams& p, int n) {
  if (n < 0) throw std::invalid_argument("block_matrices: n must be >= 0");
  const auto e = recurrence_coeffs(p, 2 * n);
  const auto o = recurrence_coeffs(p, 2 * n + 1);
  const C2Mat A{e.xi, 0.0, e.eta, o.xi};
  // diagonal is zeta_{2n}, zeta_{2n+1}: Hermitian block of the recurrence
  const C2Mat B{e.zeta, o.eta, std::conj(o.eta), o.zeta};
  return {A, B};
}

C2Mat ladder_lower(const GroupParams& p, int k) {
  if (!(p.rho > 0.0))
    throw SingularParameterError("ladder_lower: rho must be > 0");
  const double sh = std::sinh(p.rho), ch = std::cosh(p.rho);
  return {-p.sigma * phase(p.delta), ch,
          phase(p.theta) * (p.sigma * p.sigma - k) / sh,
          -p.sigma * (ch / sh) * phase(p.theta - p.delta)};
}

C2Mat ladder_raise(const GroupParams& p, int k) {
  if (!(p.rho > 0.0))
    throw SingularParameterError("ladder_raise: rho must be > 0");
  const double sh = std::sinh(p.rho), ch = std::cosh(p.rho);
  return {-p.sigma * phase(-p.delta), -phase(-p.theta) * sh,
          (k + 1.0 - p.sigma * p.sigma) / ch,
          -p.sigma * phase(p.delta - p.theta) * (sh / ch)};
}

std::pair<C2Mat, C2Mat> spectral_matrices(int n) {
  if (n < 0) throw std::invalid_argument("spectral_matrices: n must be >= 0");
  const double dn = n;
  const C2Mat gamma = C2Mat::diag(2.0 * dn, 2.0 * dn + 1.0);
  const C2Mat theta = C2Mat::diag(std::sqrt(2.0 * dn * (2.0 * dn - 1.0)),
                                  std::sqrt(2.0 * dn * (2.0 * dn + 1.0)));
  return {gamma, theta};
}

DifferenceCoeffs difference_coeffs(const GroupParams& p, int k) {
  DifferenceCoeffs d{};
  const double ch2 = std::cosh(2.0 * p.rho), sh2 = std::sinh(2.0 * p.rho);
  d.lambda = (k + p.sigma * p.sigma + 0.5) * ch2 +
             p.sigma * p.sigma * sh2 * std::cos(2.0 * p.delta - p.theta) - 0.5;
  d.mu = p.sigma * (ch2 * phase(-p.delta) + sh2 * phase(p.delta - p.theta));
  d.nu = 0.5 * phase(-p.theta) * sh2;
  return d;
}

}  // namespace smop

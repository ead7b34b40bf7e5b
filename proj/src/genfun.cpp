#include "smop/genfun.hpp"

#include "smop/decompose.hpp"
#include "smop/matrix_elements.hpp"
#include "smop/polykernel.hpp"

namespace smop {

namespace {
inline cplx phase(double a) { return std::polar(1.0, a); }
}  // namespace

cplx g_closed(const GroupParams& p, cplx x, cplx y) {
  const double th = std::tanh(p.rho), ch = std::cosh(p.rho);
  const cplx v = p.v();
  const cplx xb = std::conj(x);
  const cplx tm = phase(-p.theta) * th, tp = phase(p.theta) * th;
  const cplx pre = std::exp(-0.5 * v * std::conj(v) - 0.5 * tm * v * v) /
                   std::sqrt(ch);
  const cplx q = -0.5 * tm * xb * xb + xb * y / ch + 0.5 * tp * y * y -
                 (std::conj(v) + tm * v) * xb + v * y / ch;
  return pre * std::exp(q);
}

cplx g_series(const GroupParams& p, cplx x, cplx y, int ncut, int kcut) {
  if (ncut < 1 || kcut < 1)
    throw std::invalid_argument("g_series: cuts must be >= 1");
  const bool degenerate = (p.sigma == 0.0) || (p.rho == 0.0);
  const PsiTable t = degenerate ? psi_table_convolved(p, ncut, kcut)
                                : psi_table(p, ncut, kcut);
  const cplx xb = std::conj(x);
  cplx sum{0.0};
  double edge = 0.0, runmax = 0.0;
  cplx yw{1.0};
  for (int n = 0; n <= ncut; ++n) {
    cplx xw{1.0};
    for (int k = 0; k <= kcut; ++k) {
      const cplx term = xw * yw * t.at(n, k);
      sum += term;
      const double m = std::abs(term);
      runmax = std::max(runmax, m);
      if (n == ncut || k == kcut) edge = std::max(edge, m);
      xw *= xb / std::sqrt(k + 1.0);
    }
    yw *= y / std::sqrt(n + 1.0);
  }
  if (edge > 1e-13 * std::max(runmax, 1e-300))
    throw ConvergenceError("g_series: boundary terms have not decayed");
  return sum;
}

cplx psi_via_hermite2(const GroupParams& p, int n, int k) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("psi_via_hermite2: n, k must be >= 0");
  if (n + k > 60)
    throw std::invalid_argument("psi_via_hermite2: k + n capped at 60");
  const double th = std::tanh(p.rho);
  const poly::SymMatrix2 A{phase(-p.theta) * th, cplx{-1.0 / std::cosh(p.rho)},
                           -phase(p.theta) * th};
  const auto d = derived_scalars(p);
  const cplx h = poly::hermite2(k, n, A, d.c1, d.c2);
  return h * psi00(p) *
         std::exp(-0.5 * (std::lgamma(k + 1.0) + std::lgamma(n + 1.0)));
}

cplx f_closed(const GroupParams& p, int k, cplx y) {
  if (k < 0) throw std::invalid_argument("f_closed: k must be >= 0");
  if (!(p.rho > 0.0))
    throw SingularParameterError("f_closed: rho must be > 0");
  const double th = std::tanh(p.rho), ch = std::cosh(p.rho);
  const double sh2 = std::sinh(2.0 * p.rho);
  const auto d = derived_scalars(p);
  const cplx r = phase(p.theta / 2.0) * y / std::sqrt(sh2) + d.s;
  const cplx pref = std::exp(-0.5 * std::lgamma(k + 1.0)) *
                    sqrt_pow(0.5 * phase(-p.theta) * th, k);
  const cplx expo =
      std::exp(p.sigma * phase(p.delta) * y / ch +
               0.5 * phase(p.theta) * th * y * y);
  return pref * expo * poly::hermite(k, r) * psi00(p);
}

}  // namespace smop

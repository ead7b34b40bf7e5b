#include "smop/position_rep.hpp"

#include "smop/matrix_elements.hpp"
#include "smop/mops.hpp"
#include "smop/polykernel.hpp"

namespace smop {

double phi_wave(int n, double x) {
  if (n < 0) throw std::invalid_argument("phi_wave: n must be >= 0");
  const double logpre = -0.25 * std::log(M_PI) - 0.5 * n * std::log(2.0) -
                        0.5 * std::lgamma(n + 1.0) - 0.5 * x * x;
  return std::exp(logpre) * poly::hermite(n, x).real();
}

namespace {

// decay guard shared by the series below: the last few terms must be
// negligible against the largest one
void check_tail(const std::vector<double>& mags, const char* what) {
  if (mags.size() < 6) throw ConvergenceError(what);
  double runmax = 0.0;
  for (double m : mags) runmax = std::max(runmax, m);
  for (size_t i = mags.size() - 3; i < mags.size(); ++i)
    if (mags[i] > 1e-12 * std::max(runmax, 1e-300)) throw ConvergenceError(what);
}

}  // namespace

double translate_defect(int n, double sigma, double x, int kcut) {
  if (n < 0 || kcut < 1)
    throw std::invalid_argument("translate_defect: bad arguments");
  if (!(sigma > 0.0))
    throw std::invalid_argument("translate_defect: sigma must be > 0");
  const double s2 = sigma * sigma;
  const double lhs = poly::hermite(n, x + std::sqrt(2.0) * sigma).real();
  double sum = 0.0, w = 1.0;  // w = (-sigma)^k / (2^{k/2} k!)
  std::vector<double> mags;
  mags.reserve(kcut + 1);
  for (int k = 0; k <= kcut; ++k) {
    const double term = w * poly::charlier(n, k, s2) * poly::hermite(k, x).real();
    sum += term;
    mags.push_back(std::abs(term));
    w *= -sigma / (std::sqrt(2.0) * (k + 1.0));
  }
  check_tail(mags, "translate_defect: series tail has not decayed");
  double pre = std::exp(std::sqrt(2.0) * sigma * x + 0.5 * s2);
  for (int j = 0; j < n; ++j) pre *= std::sqrt(2.0) * sigma;
  return std::abs(lhs - pre * sum) / std::max(std::abs(lhs), 1e-300);
}

double dilate_defect(int n, double rho, double x, int kcut, Parity parity) {
  if (n < 0 || kcut < 1)
    throw std::invalid_argument("dilate_defect: bad arguments");
  if (!(rho > 0.0))
    throw std::invalid_argument("dilate_defect: rho must be > 0");
  const double th = std::tanh(rho), ch = std::cosh(rho);
  const double beta = (parity == Parity::even) ? 0.5 : 1.5;
  const int deg = (parity == Parity::even) ? 2 * n : 2 * n + 1;
  const double lhs = poly::hermite(deg, std::exp(rho) * x).real();
  double sum = 0.0, w = 1.0;  // w = (-th rho)^k / (2^{2k} k!)
  std::vector<double> mags;
  mags.reserve(kcut + 1);
  for (int k = 0; k <= kcut; ++k) {
    const int hk = (parity == Parity::even) ? 2 * k : 2 * k + 1;
    const double term =
        w * poly::meixner(n, k, beta, th * th) * poly::hermite(hk, x).real();
    sum += term;
    mags.push_back(std::abs(term));
    w *= -th / (4.0 * (k + 1.0));
  }
  check_tail(mags, "dilate_defect: series tail has not decayed");
  // (deg)!/n! th^n / ch^{1/2 or 3/2}, log space against overflow
  const double logpre = std::lgamma(deg + 1.0) - std::lgamma(n + 1.0) +
                        n * std::log(th) - (beta) * std::log(ch) -
                        0.5 * rho +
                        0.5 * (std::exp(2.0 * rho) - 1.0) * x * x;
  return std::abs(lhs - std::exp(logpre) * sum) /
         std::max(std::abs(lhs), 1e-300);
}

double affine_vector_defect(const GroupParams& p, int n, double x, int kcut) {
  if (n < 0 || kcut < 1)
    throw std::invalid_argument("affine_vector_defect: bad arguments");
  if (p.delta != 0.0 || p.theta != 0.0)
    throw std::invalid_argument(
        "affine_vector_defect: requires delta = theta = 0");
  if (!(p.rho > 0.0) || !(p.sigma > 0.0))
    throw std::invalid_argument(
        "affine_vector_defect: requires rho > 0 and sigma > 0");
  const double xp = std::exp(p.rho) * (x + std::sqrt(2.0) * p.sigma);
  const double l0 =
      poly::hermite(2 * n, xp).real() *
      std::exp(-n * std::log(2.0) - 0.5 * std::lgamma(2.0 * n + 1.0));
  const double l1 =
      poly::hermite(2 * n + 1, xp).real() *
      std::exp(-(n + 0.5) * std::log(2.0) - 0.5 * std::lgamma(2.0 * n + 2.0));
  const MatPoly P = mop(p, n);
  const auto seeds = seed_row(p, kcut);
  C2Vec sum{};
  std::vector<double> mags;
  mags.reserve(kcut + 1);
  double w = 1.0;  // 1 / (2^{k/2} sqrt(k!))
  for (int k = 0; k <= kcut; ++k) {
    const C2Vec term =
        (w * poly::hermite(k, x).real()) * (P.eval(k) * seeds[k]);
    sum = sum + term;
    mags.push_back(term.norm());
    w /= std::sqrt(2.0 * (k + 1.0));
  }
  check_tail(mags, "affine_vector_defect: series tail has not decayed");
  const double pre = std::exp(0.5 * (xp * xp - x * x) - 0.5 * p.rho);
  const double scale = std::max({std::abs(l0), std::abs(l1), 1e-300});
  return std::max(std::abs(l0 - pre * sum.x.real()) + std::abs(pre * sum.x.imag()),
                  std::abs(l1 - pre * sum.y.real()) + std::abs(pre * sum.y.imag())) /
         scale;
}

}  // namespace smop

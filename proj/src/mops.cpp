#include "smop/mops.hpp"

#include "smop/matrix_elements.hpp"

namespace smop {

void MatPoly::trim(double eps) {
  while (coeffs.size() > 1 && coeffs.back().max_norm() <= eps)
    coeffs.pop_back();
}

C2Mat MatPoly::eval(double k) const {
  C2Mat acc = coeffs.back();
  for (int i = static_cast<int>(coeffs.size()) - 2; i >= 0; --i)
    acc = acc * cplx{k} + coeffs[i];
  return acc;
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
  MatPoly r;
  r.coeffs.assign(std::max(coeffs.size(), o.coeffs.size()), C2Mat{});
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + coeffs[i];
  for (size_t i = 0; i < o.coeffs.size(); ++i)
    r.coeffs[i] = r.coeffs[i] + o.coeffs[i];
  return r;
}

MatPoly MatPoly::operator-(const MatPoly& o) const {
  return *this + o * cplx{-1.0};
}

MatPoly MatPoly::operator*(cplx s) const {
  MatPoly r = *this;
  for (auto& c : r.coeffs) c = c * s;
  return r;
}

MatPoly MatPoly::operator*(const MatPoly& o) const {
  MatPoly r;
  r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, C2Mat{});
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j)
      r.coeffs[i + j] = r.coeffs[i + j] + coeffs[i] * o.coeffs[j];
  return r;
}

MatPoly MatPoly::left_mul(const C2Mat& c) const {
  MatPoly r = *this;
  for (auto& a : r.coeffs) a = c * a;
  return r;
}

MatPoly MatPoly::right_mul(const C2Mat& c) const {
  MatPoly r = *this;
  for (auto& a : r.coeffs) a = a * c;
  return r;
}

MatPoly MatPoly::mul_k() const {
  MatPoly r;
  r.coeffs.assign(coeffs.size() + 1, C2Mat{});
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i + 1] = coeffs[i];
  return r;
}

MatPoly MatPoly::shift(double s) const {
  const int d = degree();
  MatPoly r;
  r.coeffs.assign(d + 1, C2Mat{});
  for (int i = 0; i <= d; ++i) {
    double binom = 1.0, pw = 1.0;  // C(i,j) s^{i-j}, built from j = i down
    for (int j = i; j >= 0; --j) {
      r.coeffs[j] = r.coeffs[j] + coeffs[i] * cplx{binom * pw};
      binom *= j;
      binom /= (i - j + 1.0);
      pw *= s;
    }
  }
  return r;
}

MatPoly mop(const GroupParams& p, int n) {
  if (n < 0) throw std::invalid_argument("mop: n must be >= 0");
  MatPoly prev, cur = MatPoly::identity();
  for (int j = 0; j < n; ++j) {
    const auto [Aj, Bj] = block_matrices(p, j);
    const auto An = block_matrices(p, j + 1).first;
    MatPoly next = cur.mul_k() - cur.left_mul(Bj);
    if (j > 0) next = next - prev.left_mul(Aj.adjoint());
    next = next.left_mul(An.inverse());
    prev = cur;
    cur = next;
  }
  return cur;
}

C2Mat mop_point(const GroupParams& p, int n, double k) {
  if (n < 0) throw std::invalid_argument("mop_point: n must be >= 0");
  C2Mat prev{}, cur = C2Mat::identity();
  for (int j = 0; j < n; ++j) {
    const auto [Aj, Bj] = block_matrices(p, j);
    const auto An = block_matrices(p, j + 1).first;
    C2Mat next = cur * cplx{k} - Bj * cur;
    if (j > 0) next = next - Aj.adjoint() * prev;
    next = An.inverse() * next;
    prev = cur;
    cur = next;
  }
  return cur;
}

C2Mat weight(const GroupParams& p, int k) {
  if (k < 0) throw std::invalid_argument("weight: k must be >= 0");
  const C2Vec v = psi_seed(p, k);
  return outer(v, v);
}

C2Mat gram(const GroupParams& p, int n, int m, int kcut) {
  if (n < 0 || m < 0 || kcut < 0)
    throw std::invalid_argument("gram: bad indices");
  const MatPoly Pn = mop(p, n);
  const MatPoly Pm = mop(p, m);
  const auto seeds = seed_row(p, kcut);
  C2Mat sum{};
  double runmax = 0.0;
  int tiny = 0;
  for (int k = 0; k <= kcut; ++k) {
    const C2Vec vn = Pn.eval(k) * seeds[k];
    const C2Vec vm = (m == n) ? vn : Pm.eval(k) * seeds[k];
    const C2Mat term = outer(vn, vm);
    sum = sum + term;
    const double mag = term.max_norm();
    runmax = std::max(runmax, mag);
    tiny = (mag < 1e-16 * std::max(runmax, 1e-300)) ? tiny + 1 : 0;
    if (tiny >= 10) break;
  }
  return sum;
}

namespace {

// A_k and Abar_k as degree-1 polynomials in k
MatPoly lower_poly(const GroupParams& p) {
  const C2Mat a0 = ladder_lower(p, 0);
  const C2Mat a1 = ladder_lower(p, 1);
  return MatPoly::linear(a0, a1 - a0);
}

MatPoly raise_poly(const GroupParams& p) {
  const C2Mat a0 = ladder_raise(p, 0);
  const C2Mat a1 = ladder_raise(p, 1);
  return MatPoly::linear(a0, a1 - a0);
}

// shared template of the three right-acting second-order operators:
// cmm P(k-2) A(k-1) A(k) + cpp P(k+2) Ab(k+1) Ab(k)
// + cm P(k-1) A(k) + cp P(k+1) Ab(k) + (d0 + d1 k) P(k)
MatPoly second_order_apply(const GroupParams& p, const MatPoly& P, cplx cmm,
                           cplx cpp, cplx cm, cplx cp, cplx d0, cplx d1) {
  const MatPoly A = lower_poly(p);
  const MatPoly Ab = raise_poly(p);
  MatPoly out = (P.shift(-2.0) * (A.shift(-1.0) * A)) * cmm;
  out = out + (P.shift(2.0) * (Ab.shift(1.0) * Ab)) * cpp;
  out = out + (P.shift(-1.0) * A) * cm;
  out = out + (P.shift(1.0) * Ab) * cp;
  out = out + P * d0 + P.mul_k() * d1;
  out.trim(0.0);
  return out;
}

}  // namespace

MatPoly apply_difference(const GroupParams& p, const MatPoly& P) {
  const auto d = difference_coeffs(p, 0);
  // lambda(k) = d.lambda + k ch 2rho
  return second_order_apply(p, P, d.nu, std::conj(d.nu), d.mu,
                            std::conj(d.mu), d.lambda, std::cosh(2.0 * p.rho));
}

MatPoly apply_raise(const GroupParams& p, const MatPoly& P) {
  const cplx a = std::cosh(p.rho);
  const cplx b = std::polar(std::sinh(p.rho), p.theta);
  const cplx g = p.sigma * (std::polar(std::cosh(p.rho), p.delta) +
                            std::polar(std::sinh(p.rho), p.theta - p.delta));
  return second_order_apply(p, P, a * a, b * b, 2.0 * a * g, 2.0 * b * g,
                            a * b + g * g, 2.0 * a * b);
}

MatPoly apply_lower(const GroupParams& p, const MatPoly& P) {
  const cplx a = std::polar(std::sinh(p.rho), -p.theta);
  const cplx b = std::cosh(p.rho);
  const cplx g = p.sigma * (std::polar(std::cosh(p.rho), -p.delta) +
                            std::polar(std::sinh(p.rho), p.delta - p.theta));
  return second_order_apply(p, P, a * a, b * b, 2.0 * a * g, 2.0 * b * g,
                            a * b + g * g, 2.0 * a * b);
}

MatPoly rodrigues(const GroupParams& p, int n) {
  if (n < 0) throw std::invalid_argument("rodrigues: n must be >= 0");
  MatPoly q = MatPoly::identity();
  C2Mat theta_prod = C2Mat::identity();
  for (int i = 1; i <= n; ++i) {
    q = apply_raise(p, q);
    theta_prod = theta_prod * spectral_matrices(i).second;
  }
  return q.left_mul(theta_prod.inverse());
}

}  // namespace smop

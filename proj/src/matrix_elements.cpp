#include "smop/matrix_elements.hpp"

#include <cstdio>

#include "smop/decompose.hpp"
#include "smop/polykernel.hpp"

namespace smop {

namespace {
inline cplx phase(double a) { return std::polar(1.0, a); }
constexpr int kClosedFormLimit = 150;  // H_k overflows double soon after
}  // namespace

cplx psi00(const GroupParams& p) {
  const double th = std::tanh(p.rho);
  return std::exp(-0.5 * p.sigma * p.sigma) / std::sqrt(std::cosh(p.rho)) *
         std::exp(-0.5 * p.sigma * p.sigma * phase(2.0 * p.delta - p.theta) *
                  th);
}

C2Vec psi_seed(const GroupParams& p, int k) {
  if (k < 0) throw std::invalid_argument("psi_seed: k must be >= 0");
  if (!(p.rho > 0.0))
    throw SingularParameterError("psi_seed: rho must be > 0");
  if (k > kClosedFormLimit) return seed_row(p, k).back();
  const auto d = derived_scalars(p);
  const double th = std::tanh(p.rho), sh = std::sinh(p.rho);
  const cplx base = 0.5 * phase(-p.theta) * th;
  const cplx pref =
      std::exp(-0.5 * std::lgamma(k + 1.0)) * sqrt_pow(base, k) * psi00(p);
  const cplx hk = poly::hermite(k, d.s);
  const cplx hk1 = poly::hermite(k + 1, d.s);
  C2Vec out;
  out.x = pref * hk;
  out.y = -(pref / sh) * (p.sigma * phase(p.theta - p.delta) * hk +
                          sqrt_pow(0.5 * phase(p.theta) * th, 1) * hk1);
  return out;
}

cplx psi1_alt(const GroupParams& p, int k) {
  if (k < 0) throw std::invalid_argument("psi1_alt: k must be >= 0");
  if (!(p.rho > 0.0))
    throw SingularParameterError("psi1_alt: rho must be > 0");
  const auto d = derived_scalars(p);
  const double th = std::tanh(p.rho), ch = std::cosh(p.rho);
  const cplx base = 0.5 * phase(-p.theta) * th;
  const cplx pref =
      std::exp(-0.5 * std::lgamma(k + 1.0)) * sqrt_pow(base, k) * psi00(p) / ch;
  const cplx hk = poly::hermite(k, d.s);
  const cplx hkm = (k > 0) ? poly::hermite(k - 1, d.s) : cplx{0.0};
  return pref * (p.sigma * phase(p.delta) * hk +
                 std::sqrt(2.0) * static_cast<double>(k) * phase(p.theta / 2.0) /
                     std::sqrt(th) * hkm);
}

std::vector<C2Vec> seed_row(const GroupParams& p, int kmax) {
  if (kmax < 0) throw std::invalid_argument("seed_row: kmax must be >= 0");
  if (!(p.rho > 0.0))
    throw SingularParameterError("seed_row: rho must be > 0");
  const double sh = std::sinh(p.rho), ch = std::cosh(p.rho);
  const cplx g =
      p.sigma * (phase(-p.delta) * ch + phase(p.delta - p.theta) * sh);
  // chain in k for psi_{0,k}, run one past kmax for the psi_{1,k} formula
  std::vector<cplx> top(kmax + 2);
  top[0] = psi00(p);
  if (kmax + 1 >= 1) top[1] = -g * top[0] / ch;
  for (int k = 1; k <= kmax; ++k)
    top[k + 1] = -(phase(-p.theta) * sh * std::sqrt(double(k)) * top[k - 1] +
                   g * top[k]) /
                 (ch * std::sqrt(k + 1.0));
  std::vector<C2Vec> row(kmax + 1);
  const cplx f = -phase(p.theta) / sh;
  for (int k = 0; k <= kmax; ++k) {
    row[k].x = top[k];
    row[k].y = f * (p.sigma * phase(-p.delta) * top[k] +
                    std::sqrt(k + 1.0) * top[k + 1]);
  }
  return row;
}

namespace {

// extended-precision 2-vector / 2x2 helpers for the block recurrence, which
// amplifies roundoff through the A_n inverses when rho is small
using lc = std::complex<long double>;

struct LVec {
  lc x{0.0L}, y{0.0L};
};

struct LMat {
  lc m00, m01, m10, m11;
};

inline LVec mul(const LMat& m, const LVec& v) {
  return {m.m00 * v.x + m.m01 * v.y, m.m10 * v.x + m.m11 * v.y};
}

inline LMat inv(const LMat& m) {
  const lc d = m.m00 * m.m11 - m.m01 * m.m10;
  if (std::abs(d) == 0.0L)
    throw SingularParameterError("psi_table: singular recurrence block");
  return {m.m11 / d, -m.m01 / d, -m.m10 / d, m.m00 / d};
}

inline LMat adj(const LMat& m) {
  return {std::conj(m.m00), std::conj(m.m10), std::conj(m.m01),
          std::conj(m.m11)};
}

inline lc lphase(long double a) { return {std::cos(a), std::sin(a)}; }

// seed chain in extended precision; seed errors are what the block
// recurrence amplifies the most
std::vector<LVec> seed_row_l(const GroupParams& p, int kmax) {
  const long double sg = p.sigma, dl = p.delta, rh = p.rho, th = p.theta;
  const long double sh = std::sinh(rh), ch = std::cosh(rh);
  const lc psi0 = std::exp(-0.5L * sg * sg) / std::sqrt(ch) *
                  std::exp(-0.5L * sg * sg * lphase(2.0L * dl - th) *
                           (sh / ch));
  const lc g = sg * (lphase(-dl) * ch + lphase(dl - th) * sh);
  std::vector<lc> top(kmax + 2);
  top[0] = psi0;
  top[1] = -g * top[0] / ch;
  for (int k = 1; k <= kmax; ++k)
    top[k + 1] =
        -(lphase(-th) * sh * std::sqrt(static_cast<long double>(k)) *
              top[k - 1] +
          g * top[k]) /
        (ch * std::sqrt(static_cast<long double>(k) + 1.0L));
  std::vector<LVec> row(kmax + 1);
  const lc f = -lphase(th) / sh;
  for (int k = 0; k <= kmax; ++k) {
    row[k].x = top[k];
    row[k].y = f * (sg * lphase(-dl) * top[k] +
                    std::sqrt(static_cast<long double>(k) + 1.0L) * top[k + 1]);
  }
  return row;
}

std::pair<LMat, LMat> block_matrices_l(const GroupParams& p, int n) {
  const long double sg = p.sigma, dl = p.delta, rh = p.rho, th = p.theta;
  const long double sh = std::sinh(rh), ch = std::cosh(rh);
  const long double sh2 = 2.0L * sh * ch, ch2 = 2.0L * ch * ch - 1.0L;
  const auto xi = [&](int m) -> lc {
    return -0.5L * std::sqrt((m - 1.0L) * m) * sh2 * lphase(-th);
  };
  const auto eta = [&](int m) -> lc {
    return std::sqrt(static_cast<long double>(m)) * sg *
           (lphase(dl - th) * sh - lphase(-dl) * ch);
  };
  const auto zeta = [&](int m) -> long double {
    return (m + 0.5L) * ch2 + sg * sg - 0.5L;
  };
  const LMat A{xi(2 * n), lc{0.0L}, eta(2 * n), xi(2 * n + 1)};
  const lc e = eta(2 * n + 1);
  const LMat B{lc{zeta(2 * n)}, e, std::conj(e), lc{zeta(2 * n + 1)}};
  return {A, B};
}

}  // namespace

PsiTable psi_table(const GroupParams& p, int nmax, int kmax) {
  if (!(p.rho > 0.0))
    throw SingularParameterError(
        "psi_table: rho must be > 0; use the convolution route at rho = 0");
  if (!(p.sigma > 0.0))
    throw SingularParameterError(
        "psi_table: sigma must be > 0; use the convolution route at sigma = 0");
  if (p.rho < 0.01)
    std::fprintf(stderr,
                 "psi_table: rho = %g is close to singular, the recurrence "
                 "may lose accuracy\n",
                 p.rho);
  PsiTable t(p, nmax, kmax, Route::recurrence);
  const int nblocks = nmax / 2 + 1;  // vector index pairs (2j, 2j+1)
  std::vector<LVec> prev(kmax + 1), next(kmax + 1);
  std::vector<LVec> cur = seed_row_l(p, kmax);
  auto store = [&](int j, const std::vector<LVec>& v) {
    if (2 * j <= nmax)
      for (int k = 0; k <= kmax; ++k)
        t.at(2 * j, k) = {static_cast<double>(v[k].x.real()),
                          static_cast<double>(v[k].x.imag())};
    if (2 * j + 1 <= nmax)
      for (int k = 0; k <= kmax; ++k)
        t.at(2 * j + 1, k) = {static_cast<double>(v[k].y.real()),
                              static_cast<double>(v[k].y.imag())};
  };
  store(0, cur);
  for (int j = 0; j + 1 < nblocks; ++j) {
    const auto [Aj, B] = block_matrices_l(p, j);
    const LMat Ainv = inv(block_matrices_l(p, j + 1).first);
    const LMat Adj = adj(Aj);
    for (int k = 0; k <= kmax; ++k) {
      const LVec bk = mul(B, cur[k]);
      LVec rhs{static_cast<long double>(k) * cur[k].x - bk.x,
               static_cast<long double>(k) * cur[k].y - bk.y};
      if (j > 0) {
        const LVec ak = mul(Adj, prev[k]);
        rhs.x -= ak.x;
        rhs.y -= ak.y;
      }
      next[k] = mul(Ainv, rhs);
    }
    store(j + 1, next);
    prev.swap(cur);
    cur.swap(next);
  }
  return t;
}

namespace {

using CVec = std::vector<cplx>;

double vec_norm(const CVec& y) {
  double s = 0.0;
  for (const cplx& z : y) s += std::norm(z);
  return std::sqrt(s);
}

// y <- exp(M) y for the banded generators below, by scaling (2^s halvings)
// and a truncated Taylor series applied to the vector at each step
template <typename Apply>
void expm_apply(CVec& y, double norm_bound, const Apply& mat_vec) {
  int s = 0;
  while (norm_bound > 0.5) {
    norm_bound *= 0.5;
    ++s;
  }
  const double scale = std::pow(2.0, -s);
  const int rounds = 1 << s;
  CVec term(y.size()), next(y.size());
  for (int r = 0; r < rounds; ++r) {
    term = y;
    CVec acc = y;
    for (int j = 1; j <= 60; ++j) {
      mat_vec(term, next);
      const double f = scale / j;
      for (size_t i = 0; i < term.size(); ++i) term[i] = next[i] * f;
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
      if (vec_norm(term) < 1e-20 * std::max(vec_norm(acc), 1e-300)) break;
    }
    y = std::move(acc);
  }
}

}  // namespace

PsiTable psi_oracle(const GroupParams& p, int nmax, int kmax, int dim) {
  const int need = 4 * std::max(nmax, kmax) + 40;
  if (dim < need)
    throw std::invalid_argument("psi_oracle: dim too small for requested table");
  const cplx v = p.v(), w = p.w();
  // displacement generator: (v a - conj(v) a+), one band each side
  const auto apply_m1 = [&](const CVec& x, CVec& out) {
    const int d = static_cast<int>(x.size());
    for (int i = 0; i < d; ++i) {
      cplx z{0.0};
      if (i + 1 < d) z += v * std::sqrt(i + 1.0) * x[i + 1];
      if (i >= 1) z -= std::conj(v) * std::sqrt(double(i)) * x[i - 1];
      out[i] = z;
    }
  };
  // squeeze generator: (w a^2 - conj(w) a+^2) / 2, two bands each side
  const auto apply_m2 = [&](const CVec& x, CVec& out) {
    const int d = static_cast<int>(x.size());
    for (int i = 0; i < d; ++i) {
      cplx z{0.0};
      if (i + 2 < d)
        z += 0.5 * w * std::sqrt((i + 1.0) * (i + 2.0)) * x[i + 2];
      if (i >= 2)
        z -= 0.5 * std::conj(w) * std::sqrt(i * (i - 1.0)) * x[i - 2];
      out[i] = z;
    }
  };
  const double n1 = 2.0 * p.sigma * std::sqrt(double(dim));
  const double n2 = p.rho * dim;
  PsiTable t(p, nmax, kmax, Route::oracle);
  for (int n = 0; n <= nmax; ++n) {
    CVec y(dim, cplx{0.0});
    y[n] = 1.0;
    expm_apply(y, n2, apply_m2);
    expm_apply(y, n1, apply_m1);
    // truncation is only trustworthy if the used columns have died out
    // near the bottom of the vector
    for (int r = dim - 10; r < dim; ++r)
      if (std::abs(y[r]) > 1e-12)
        throw ConvergenceError(
            "psi_oracle: truncated operator has not converged, raise dim");
    for (int k = 0; k <= kmax; ++k) t.at(n, k) = y[k];
  }
  return t;
}

C2Vec ladder_apply(const GroupParams& p, int k, const C2Vec& v,
                   LadderDirection dir) {
  if (dir == LadderDirection::lower) {
    if (k < 1) throw std::invalid_argument("ladder_apply: lower needs k >= 1");
    return ladder_lower(p, k) * v;
  }
  if (k < 0) throw std::invalid_argument("ladder_apply: k must be >= 0");
  return ladder_raise(p, k) * v;
}

double unitarity_defect(const GroupParams& p, int n, int m, int kcut) {
  if (n < 0 || m < 0 || kcut < 0)
    throw std::invalid_argument("unitarity_defect: bad indices");
  const bool degenerate = (p.sigma == 0.0) || (p.rho == 0.0);
  std::vector<cplx> rn(kcut + 1), rm(kcut + 1);
  if (degenerate) {
    for (int k = 0; k <= kcut; ++k) {
      rn[k] = psi_convolved(p, n, k, kcut + 1);
      rm[k] = (m == n) ? rn[k] : psi_convolved(p, m, k, kcut + 1);
    }
  } else {
    const auto t = psi_table(p, std::max(n, m), kcut);
    for (int k = 0; k <= kcut; ++k) {
      rn[k] = t.at(n, k);
      rm[k] = t.at(m, k);
    }
  }
  cplx sum{0.0};
  int tiny = 0;
  for (int k = 0; k <= kcut; ++k) {
    const cplx term = rn[k] * std::conj(rm[k]);
    sum += term;
    tiny = (std::abs(term) < 1e-14) ? tiny + 1 : 0;
    if (tiny >= 10) break;
  }
  if (n == m) sum -= 1.0;
  return std::abs(sum);
}

}  // namespace smop

#include "smop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "smop/decompose.hpp"
#include "smop/genfun.hpp"
#include "smop/matrix_elements.hpp"
#include "smop/mops.hpp"
#include "smop/polykernel.hpp"
#include "smop/position_rep.hpp"

namespace smop {

std::vector<GroupParams> default_grid() {
  std::vector<GroupParams> g;
  for (double sigma : {0.3, 0.7, 1.1})
    for (double rho : {0.2, 0.5, 0.9})
      for (auto [delta, theta] :
           {std::pair{0.0, 0.0}, {0.1, 0.5}, {2.0, 0.4}})
        g.emplace_back(sigma, delta, rho, theta);
  return g;
}

namespace {

double poly_dist(const MatPoly& a, const MatPoly& b) {
  double d = 0.0;
  const int deg = std::max(a.degree(), b.degree());
  for (int i = 0; i <= deg; ++i) {
    const C2Mat ca = (i <= a.degree()) ? a.coeffs[i] : C2Mat{};
    const C2Mat cb = (i <= b.degree()) ? b.coeffs[i] : C2Mat{};
    d = std::max(d, (ca - cb).max_norm());
  }
  return d;
}

double poly_scale(const MatPoly& a) {
  double s = 1.0;
  for (const auto& c : a.coeffs) s = std::max(s, c.max_norm());
  return s;
}

using Checks = std::vector<CheckResult>;

void add(Checks& out, const std::string& name, double residual) {
  out.push_back({name, residual, false});
}

void suite_unitarity(Checks& out) {
  double diag = 0.0, off = 0.0;
  for (const auto& p : default_grid())
    for (int n = 0; n <= 6; ++n)
      for (int m = n; m <= 6; ++m) {
        const double d = unitarity_defect(p, n, m, 200);
        (n == m ? diag : off) = std::max(n == m ? diag : off, d);
      }
  add(out, "row_norms", diag);
  add(out, "row_cross_products", off);
}

void suite_orthogonality(Checks& out) {
  double res = 0.0;
  for (const auto& p : default_grid())
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= n; ++m) {
        const C2Mat expect = (n == m) ? C2Mat::identity() : C2Mat{};
        res = std::max(res, (gram(p, n, m, 300) - expect).max_norm());
      }
  add(out, "gram_vs_identity", res);
}

void suite_difference(Checks& out) {
  double res = 0.0;
  for (const auto& p : default_grid())
    for (int n = 0; n <= 8; ++n) {
      const MatPoly P = mop(p, n);
      const MatPoly lhs = apply_difference(p, P);
      const MatPoly rhs = P.left_mul(spectral_matrices(n).first);
      for (int k = 0; k <= 30; ++k) {
        const C2Mat r = rhs.eval(k);
        res = std::max(res, (lhs.eval(k) - r).max_norm() /
                                std::max(1.0, r.max_norm()));
      }
    }
  add(out, "eigen_equation_pointwise", res);
}

void suite_ladder(Checks& out) {
  double ident = 0.0, shift = 0.0, contract = 0.0;
  for (const auto& p : default_grid()) {
    for (int k = 1; k <= 20; ++k) {
      const C2Mat lhs = ladder_lower(p, k + 1) * ladder_raise(p, k) -
                        ladder_raise(p, k - 1) * ladder_lower(p, k);
      ident = std::max(ident, (lhs - C2Mat::identity()).max_norm());
    }
    const auto row = seed_row(p, 41);
    for (int k = 1; k <= 40; ++k) {
      const C2Vec lo = ladder_lower(p, k) * row[k] -
                       std::sqrt(double(k)) * row[k - 1];
      const C2Vec hi = ladder_raise(p, k) * row[k] -
                       std::sqrt(k + 1.0) * row[k + 1];
      const double sc = std::max(row[k].norm(), 1e-30);
      shift = std::max({shift, lo.norm() / sc, hi.norm() / sc});
    }
    for (int n = 0; n <= 6; ++n) {
      const MatPoly up = apply_raise(p, mop(p, n));
      const MatPoly up_ref =
          mop(p, n + 1).left_mul(spectral_matrices(n + 1).second);
      contract = std::max(contract, poly_dist(up, up_ref) / poly_scale(up_ref));
      const MatPoly dn = apply_lower(p, mop(p, n));
      const MatPoly dn_ref =
          (n == 0) ? MatPoly(C2Mat{})
                   : mop(p, n - 1).left_mul(spectral_matrices(n).second);
      contract = std::max(contract, poly_dist(dn, dn_ref) / poly_scale(dn_ref));
    }
  }
  add(out, "commutation_identity", ident);
  add(out, "seed_shift_relations", shift);
  add(out, "raise_lower_contracts", contract);
}

void suite_rodrigues(Checks& out) {
  double res = 0.0;
  for (const auto& p : default_grid())
    for (int n = 0; n <= 6; ++n) {
      const MatPoly b = mop(p, n);
      res = std::max(res, poly_dist(rodrigues(p, n), b) / poly_scale(b));
    }
  add(out, "iterated_raising_vs_recurrence", res);
}

void suite_convolution(Checks& out) {
  double res = 0.0;
  for (const auto& p : default_grid()) {
    const auto t = psi_table(p, 10, 10);
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= 10; ++k)
        res = std::max(res, std::abs(psi_convolved(p, n, k, 200) - t.at(n, k)));
  }
  add(out, "factored_vs_recurrence", res);
  double sres = 0.0;
  const GroupParams disp{0.8, 0.3, 0.0, 0.0}, sq{0.0, 0.0, 0.6, 1.1};
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k) {
      sres = std::max(sres,
                      std::abs(psi_convolved(disp, n, k, 50) - chi(disp, n, k)));
      sres = std::max(sres,
                      std::abs(psi_convolved(sq, n, k, 50) - phi(sq, n, k)));
    }
  add(out, "degenerate_specializations", sres);
}

void suite_genfun(Checks& out) {
  double gres = 0.0, h2 = 0.0, f0 = 0.0;
  const std::vector<std::pair<cplx, cplx>> points = {
      {cplx{0.2, 0.1}, cplx{0.3, 0.0}}, {cplx{-0.4, 0.25}, cplx{0.1, -0.45}}};
  for (const auto& p : default_grid()) {
    for (const auto& [x, y] : points)
      gres = std::max(gres,
                      std::abs(g_series(p, x, y, 40, 40) - g_closed(p, x, y)));
    const auto t = psi_table(p, 10, 10);
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= 10; ++k)
        h2 = std::max(h2, std::abs(psi_via_hermite2(p, n, k) - t.at(n, k)));
    const auto row = seed_row(p, 30);
    for (int k = 0; k <= 30; ++k)
      f0 = std::max(f0, std::abs(f_closed(p, k, 0.0) - row[k].x) /
                            std::max(std::abs(row[k].x), 1e-30));
  }
  add(out, "series_vs_closed", gres);
  add(out, "hermite2_route_vs_table", h2);
  add(out, "one_variable_at_origin", f0);
}

void suite_position(Checks& out) {
  double tr = 0.0, di = 0.0, af = 0.0;
  for (int n : {1, 3, 5})
    for (double sigma : {0.3, 0.6, 0.9})
      for (double x : {-1.0, 0.2, 1.5})
        tr = std::max(tr, translate_defect(n, sigma, x, 90));
  for (int n : {0, 2, 3})
    for (double rho : {0.2, 0.4, 0.6})
      for (double x : {-1.5, 0.3, 1.1})
        for (Parity par : {Parity::even, Parity::odd})
          di = std::max(di, dilate_defect(n, rho, x, 110, par));
  for (int n : {0, 1, 2})
    for (double sigma : {0.2, 0.4})
      for (double rho : {0.2, 0.4})
        for (double x : {-0.5, 0.2, 0.8})
          af = std::max(af, affine_vector_defect(GroupParams{sigma, 0.0, rho, 0.0},
                                                 n, x, 140));
  add(out, "translation_expansion", tr);
  add(out, "dilation_expansion", di);
  add(out, "affine_vector_expansion", af);
  double red = std::max(translate_defect(0, 0.5, 0.3, 60),
                        dilate_defect(0, 0.4, 0.7, 80, Parity::even));
  add(out, "degree_zero_reductions", red);
}

void suite_appendix(Checks& out) {
  double ges = 0.0;
  for (int x = 0; x <= 10; ++x)
    for (double a : {0.8, 1.3})
      for (double t : {0.2, -0.15, 0.45}) {
        const auto [le, re] = poly::gessel_even(x, a, t, 1e-16);
        ges = std::max(ges, std::abs(le - re) / std::max(1.0, std::abs(re)));
        const auto [lo, ro] = poly::gessel_odd(x, a, t, 1e-16);
        ges = std::max(ges, std::abs(lo - ro) / std::max(1.0, std::abs(ro)));
      }
  add(out, "gessel_even_odd_sums", ges);

  double hl = 0.0;
  for (int m = 0; m <= 8; ++m)
    for (double x : {0.5, 1.37, -0.9}) {
      double f = 1.0;
      for (int j = 1; j <= m; ++j) f *= 4.0 * j;
      const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
      const double even = sgn * f * poly::laguerre(m, -0.5, x * x).real();
      const double odd =
          sgn * 2.0 * f * x * poly::laguerre(m, 0.5, x * x).real();
      hl = std::max(hl, std::abs(poly::hermite(2 * m, x).real() - even) /
                            std::max(1.0, std::abs(even)));
      hl = std::max(hl, std::abs(poly::hermite(2 * m + 1, x).real() - odd) /
                            std::max(1.0, std::abs(odd)));
    }
  add(out, "hermite_laguerre_links", hl);

  double ap = 0.0;
  const double h = 1e-3;
  for (int n : {2, 5, 10, 20})
    for (double x : {-0.8, 0.4, 1.6}) {
      const auto deriv = [&](double step) {
        return (poly::hermite(n, x + step) - poly::hermite(n, x - step))
                   .real() /
               (2.0 * step);
      };
      const double rich = (4.0 * deriv(h / 2) - deriv(h)) / 3.0;
      const double expect = 2.0 * n * poly::hermite(n - 1, x).real();
      ap = std::max(ap, std::abs(rich - expect) / std::max(1.0, std::abs(expect)));
    }
  add(out, "appell_derivative", ap);

  double gf = 0.0;
  for (double x : {-0.6, 0.9})
    for (double z : {0.5, -0.35, 0.2}) {
      // one-variable Hermite generating function
      double s = 0.0, w = 1.0;
      for (int n = 0; n <= 60; ++n) {
        s += poly::hermite(n, x).real() * w;
        w *= z / (n + 1.0);
      }
      const double closed = std::exp(2.0 * x * z - z * z);
      gf = std::max(gf, std::abs(s - closed) / std::max(1.0, std::abs(closed)));
      // Laguerre generating function
      for (double alpha : {-0.5, 0.5, 1.5}) {
        double sl = 0.0, wl = 1.0;
        for (int n = 0; n <= 200; ++n) {
          sl += poly::laguerre(n, alpha, x).real() * wl;
          wl *= z;
        }
        const double cl = std::pow(1.0 - z, -alpha - 1.0) *
                          std::exp(x * z / (z - 1.0));
        gf = std::max(gf, std::abs(sl - cl) / std::max(1.0, std::abs(cl)));
      }
    }
  // Charlier generating function needs a nonnegative integer argument
  for (int x = 0; x <= 6; ++x)
    for (double a : {0.49, 1.2})
      for (double t : {0.15, -0.3}) {
        double s = 0.0, w = 1.0;
        for (int n = 0; n <= 80; ++n) {
          s += poly::charlier(n, x, a) * w;
          w *= t / (n + 1.0);
        }
        const double closed = std::exp(t) * std::pow(1.0 - t / a, x);
        gf = std::max(gf, std::abs(s - closed) / std::max(1.0, std::abs(closed)));
      }
  add(out, "generating_functions", gf);
}

}  // namespace

VerificationReport run_suite(const std::string& suite, double tol) {
  VerificationReport r;
  r.suite = suite;
  r.tol = tol;
  const bool all = (suite == "all");
  bool known = all;
  const auto want = [&](const char* name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("unitarity")) suite_unitarity(r.checks);
  if (want("orthogonality")) suite_orthogonality(r.checks);
  if (want("difference")) suite_difference(r.checks);
  if (want("ladder")) suite_ladder(r.checks);
  if (want("rodrigues")) suite_rodrigues(r.checks);
  if (want("convolution")) suite_convolution(r.checks);
  if (want("genfun")) suite_genfun(r.checks);
  if (want("position")) suite_position(r.checks);
  if (want("appendix")) suite_appendix(r.checks);
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  r.pass = true;
  for (auto& c : r.checks) {
    c.pass = c.residual <= tol;
    r.pass = r.pass && c.pass;
  }
  return r;
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["tol"] = r.tol;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  j["checks"] = std::move(checks);
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

}  // namespace smop

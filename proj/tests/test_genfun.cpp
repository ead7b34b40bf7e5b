#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smop/genfun.hpp"
#include "smop/matrix_elements.hpp"
#include "smop/mops.hpp"
#include "smop/polykernel.hpp"

using namespace smop;

namespace {
const GroupParams kP{0.7, 0.1, 0.3, 0.5};
const GroupParams kQ{1.1, 2.0, 0.9, 0.4};
}  // namespace

TEST_CASE("closed generating function: limiting cases") {
  CHECK(std::abs(g_closed(kP, 0.0, 0.0) - psi00(kP)) <= 1e-15);
  const GroupParams id{0.0, 0.0, 0.0, 0.0};
  const cplx x{0.3, -0.2}, y{0.1, 0.4};
  CHECK(std::abs(g_closed(id, x, y) - std::exp(std::conj(x) * y)) <= 1e-15);
}

TEST_CASE("series sum converges to the closed form") {
  const cplx x{0.2, 0.1}, y{0.3, 0.0};
  for (const auto& p : {kP, kQ}) {
    const cplx a = g_series(p, x, y, 40, 40);
    const cplx b = g_closed(p, x, y);
    CHECK(std::abs(a - b) <= 1e-9);
  }
  // a second point inside the unit disk
  const cplx x2{-0.4, 0.25}, y2{0.1, -0.45};
  CHECK(std::abs(g_series(kP, x2, y2, 40, 40) - g_closed(kP, x2, y2)) <= 1e-9);
  CHECK(std::abs(g_series(kP, 0.0, 0.0, 5, 5) - psi00(kP)) <= 1e-15);
  CHECK_THROWS_AS(g_series(kP, cplx{0.95, 0.0}, cplx{0.9, 0.0}, 4, 4),
                  ConvergenceError);
}

TEST_CASE("2-variable Hermite route reproduces the table") {
  for (const auto& p : {kP, kQ}) {
    const auto t = psi_table(p, 10, 10);
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= 10 - n; ++k)
        CHECK(std::abs(psi_via_hermite2(p, n, k) - t.at(n, k)) <= 1e-8);
  }
  CHECK(std::abs(psi_via_hermite2(kP, 0, 0) - psi00(kP)) <= 1e-15);
  // fully degenerate parameters give the identity matrix element
  const GroupParams id{0.0, 0.0, 0.0, 0.0};
  CHECK(std::abs(psi_via_hermite2(id, 4, 4) - 1.0) <= 1e-14);
  CHECK(std::abs(psi_via_hermite2(id, 4, 2)) <= 1e-14);
  CHECK_THROWS_AS(psi_via_hermite2(kP, 40, 30), std::invalid_argument);
}

TEST_CASE("1-variable generating function against row sums") {
  const cplx y{0.4, 0.0};
  for (const auto& p : {kP, kQ}) {
    const auto t = psi_table(p, 40, 6);
    for (int k = 0; k <= 6; ++k) {
      cplx s{0.0}, yw{1.0};
      for (int n = 0; n <= 40; ++n) {
        s += yw * t.at(n, k);
        yw *= y / std::sqrt(n + 1.0);
      }
      CHECK(std::abs(f_closed(p, k, y) - s) <= 1e-9);
    }
  }
}

TEST_CASE("1-variable generating function at the origin is the seed") {
  for (const auto& p : {kP, kQ})
    for (int k = 0; k <= 25; ++k) {
      const cplx a = f_closed(p, k, 0.0);
      const cplx b = psi_seed(p, k).x;
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
  CHECK_THROWS_AS(f_closed(GroupParams{0.5, 0, 0, 0}, 2, 0.1),
                  SingularParameterError);
}

TEST_CASE("derivative of the 1-variable function gives the second seed") {
  // central differences with one Richardson level
  const double h = 1e-3;
  for (const auto& p : {kP, kQ})
    for (int k = 0; k <= 10; ++k) {
      const cplx d1 = (f_closed(p, k, h) - f_closed(p, k, -h)) / (2.0 * h);
      const cplx d2 =
          (f_closed(p, k, h / 2) - f_closed(p, k, -h / 2)) / (2.0 * (h / 2));
      const cplx deriv = (4.0 * d2 - d1) / 3.0;
      const cplx expect = psi_seed(p, k).y;
      CHECK(std::abs(deriv - expect) <= 1e-6 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("2-variable Hermite vector identity ties the modules together") {
  // normalized 2-variable Hermite pair = P_n(k) acting on the seed vector,
  // stripped of the common psi_{0,0} factor
  for (const auto& p : {kP, kQ}) {
    const auto d = derived_scalars(p);
    const double th = std::tanh(p.rho);
    const poly::SymMatrix2 A{std::polar(th, -p.theta),
                             cplx{-1.0 / std::cosh(p.rho)},
                             -std::polar(th, p.theta)};
    const auto seeds = seed_row(p, 10);
    const cplx p00 = psi00(p);
    for (int n = 0; n <= 4; ++n) {
      const MatPoly P = mop(p, n);
      double f2n = 1.0, f2n1 = 1.0;
      for (int j = 2; j <= 2 * n; ++j) f2n *= j;
      f2n1 = f2n * (2 * n + 1);
      for (int k = 0; k <= 10; ++k) {
        const cplx lhs0 =
            poly::hermite2(k, 2 * n, A, d.c1, d.c2) / std::sqrt(f2n);
        const cplx lhs1 =
            poly::hermite2(k, 2 * n + 1, A, d.c1, d.c2) / std::sqrt(f2n1);
        double kf = 1.0;
        for (int j = 2; j <= k; ++j) kf *= j;
        const C2Vec rhs = std::sqrt(kf) / p00 * (P.eval(k) * seeds[k]);
        CHECK(std::abs(lhs0 - rhs.x) <= 1e-8 * std::max(1.0, std::abs(lhs0)));
        CHECK(std::abs(lhs1 - rhs.y) <= 1e-8 * std::max(1.0, std::abs(lhs1)));
      }
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smop/group_core.hpp"

using namespace smop;

namespace {
const GroupParams kP{0.7, 0.1, 0.3, 0.5};
inline cplx ph(double a) { return std::polar(1.0, a); }
}  // namespace

TEST_CASE("params: polar decomposition and validation") {
  CHECK(std::abs(kP.v() - 0.7 * ph(0.1)) <= 1e-16);
  CHECK(std::abs(kP.w() - 0.3 * ph(0.5)) <= 1e-16);
  CHECK_THROWS_AS(GroupParams(-0.1, 0, 0.3, 0), std::invalid_argument);
  CHECK_THROWS_AS(GroupParams(0.1, 0, -0.3, 0), std::invalid_argument);
}

TEST_CASE("recurrence coefficients: frozen values at the reference point") {
  // sigma = 0.7, delta = 0.1, rho = 0.3, theta = 0.5
  const auto r0 = recurrence_coeffs(kP, 0);
  CHECK(r0.xi == cplx{0.0});
  CHECK(r0.eta == cplx{0.0});
  // zeta_0 = ch(0.6)/2 + 0.49 - 0.5
  CHECK(r0.zeta == doctest::Approx(0.5 * std::cosh(0.6) - 0.01).epsilon(1e-15));

  const auto r3 = recurrence_coeffs(kP, 3);
  // xi_3 = -sqrt(6)/2 sh(0.6) e^{-i 0.5}
  const cplx xi3 = -0.5 * std::sqrt(6.0) * std::sinh(0.6) * ph(-0.5);
  CHECK(std::abs(r3.xi - xi3) <= 1e-15);
  // eta_3 = sqrt(3) * 0.7 * (e^{-i0.4} sh(0.3) - e^{-i0.1} ch(0.3))
  const cplx eta3 = std::sqrt(3.0) * 0.7 *
                    (ph(-0.4) * std::sinh(0.3) - ph(-0.1) * std::cosh(0.3));
  CHECK(std::abs(r3.eta - eta3) <= 1e-15);
  CHECK(r3.zeta == doctest::Approx(3.5 * std::cosh(0.6) - 0.01).epsilon(1e-15));
}

TEST_CASE("block matrices: structure and hermiticity") {
  for (int n : {0, 1, 4}) {
    const auto [A, B] = block_matrices(kP, n);
    const auto e = recurrence_coeffs(kP, 2 * n);
    const auto o = recurrence_coeffs(kP, 2 * n + 1);
    CHECK(std::abs(A.m00 - e.xi) <= 1e-16);
    CHECK(A.m01 == cplx{0.0});
    CHECK(std::abs(A.m10 - e.eta) <= 1e-16);
    CHECK(std::abs(A.m11 - o.xi) <= 1e-16);
    CHECK(std::abs(B.m00 - e.zeta) <= 1e-16);
    CHECK(std::abs(B.m11 - o.zeta) <= 1e-16);
    CHECK(std::abs(B.m01 - std::conj(B.m10)) <= 1e-16);
    CHECK(std::abs(B.m01 - o.eta) <= 1e-16);
  }
}

TEST_CASE("ladder matrices: commutation identity A_{k+1} Abar_k - Abar_{k-1} A_k = I") {
  for (const auto& p :
       {kP, GroupParams{1.1, 2.0, 0.9, 0.4}, GroupParams{0.3, 0.0, 0.2, 0.0}}) {
    for (int k = 1; k <= 12; ++k) {
      const C2Mat lhs = ladder_lower(p, k + 1) * ladder_raise(p, k) -
                        ladder_raise(p, k - 1) * ladder_lower(p, k);
      CHECK((lhs - C2Mat::identity()).max_norm() <= 1e-12);
    }
  }
}

TEST_CASE("ladder matrices: determinants") {
  // det A_k = sigma^2 cth rho e^{i(theta-delta)} ... checked numerically
  // against the explicit entry formulas instead of a separate closed form
  for (int k : {0, 3, 7}) {
    const C2Mat A = ladder_lower(kP, k);
    const cplx d = A.m00 * A.m11 - A.m01 * A.m10;
    CHECK(std::abs(A.det() - d) <= 1e-15);
  }
  CHECK_THROWS_AS(ladder_lower(GroupParams(0.5, 0, 0, 0), 1),
                  SingularParameterError);
  CHECK_THROWS_AS(ladder_raise(GroupParams(0.5, 0, 0, 0), 1),
                  SingularParameterError);
}

TEST_CASE("spectral matrices") {
  const auto [g2, t2] = spectral_matrices(2);
  CHECK(g2.m00 == cplx{4.0});
  CHECK(g2.m11 == cplx{5.0});
  CHECK(t2.m00 == cplx{std::sqrt(12.0)});
  CHECK(t2.m11 == cplx{std::sqrt(20.0)});
  const auto [g0, t0] = spectral_matrices(0);
  CHECK(t0.m00 == cplx{0.0});
  CHECK(t0.m11 == cplx{0.0});
}

TEST_CASE("difference coefficients: frozen values") {
  const auto d = difference_coeffs(kP, 3);
  const double ch2 = std::cosh(0.6), sh2 = std::sinh(0.6);
  CHECK(d.lambda == doctest::Approx((3.0 + 0.49 + 0.5) * ch2 +
                                    0.49 * sh2 * std::cos(-0.3) - 0.5)
                        .epsilon(1e-15));
  CHECK(std::abs(d.mu - 0.7 * (ch2 * ph(-0.1) + sh2 * ph(-0.4))) <= 1e-15);
  CHECK(std::abs(d.nu - 0.5 * ph(-0.5) * sh2) <= 1e-15);
  // lambda is affine in k with slope ch 2rho
  const auto d5 = difference_coeffs(kP, 5);
  CHECK(d5.lambda - d.lambda == doctest::Approx(2.0 * ch2).epsilon(1e-14));
}

TEST_CASE("derived scalars: internal consistency") {
  const auto d = derived_scalars(kP);
  const double th = std::tanh(0.3);
  CHECK(d.c == doctest::Approx(th * th).epsilon(1e-16));
  CHECK(std::abs(d.t - ph(2 * 0.1 - 0.5) * th) <= 1e-15);
  // s from the two half-power pieces
  const double r = std::sqrt(th);
  const cplx s = -(0.7 / std::sqrt(2.0)) * (ph(0.1 - 0.25) * r + ph(0.25 - 0.1) / r);
  CHECK(std::abs(d.s - s) <= 1e-15);
  const cplx v = kP.v();
  CHECK(std::abs(d.c1 + (v + ph(0.5) * th * std::conj(v))) <= 1e-15);
  CHECK(std::abs(d.c2 - std::conj(v) / std::cosh(0.3)) <= 1e-15);
}

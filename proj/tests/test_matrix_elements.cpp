#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smop/decompose.hpp"
#include "smop/matrix_elements.hpp"

using namespace smop;

namespace {
const GroupParams kP{0.7, 0.1, 0.3, 0.5};
const GroupParams kQ{1.1, 2.0, 0.9, 0.4};
}  // namespace

TEST_CASE("psi00 against the truncated-operator product") {
  for (const auto& p : {kP, kQ}) {
    const auto t = psi_oracle(p, 0, 0, 200);
    CHECK(std::abs(psi00(p) - t.at(0, 0)) <= 1e-13);
  }
  // frozen value at the reference point, cross-checked against the
  // truncated-operator product above
  const cplx v = psi00(kP);
  CHECK(v.real() == doctest::Approx(0.714925657930922).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(0.0150812675568042).epsilon(1e-12));
}

TEST_CASE("seed closed forms match the k-recurrence") {
  for (const auto& p : {kP, kQ}) {
    const auto row = seed_row(p, 80);
    for (int k = 0; k <= 80; ++k) {
      const C2Vec s = psi_seed(p, k);
      const double scale = std::max(1e-300, row[k].norm());
      CHECK((s - row[k]).norm() <= 1e-10 * std::max(scale, 1e-12));
    }
  }
}

TEST_CASE("two closed forms for psi_{1,k} agree") {
  for (const auto& p : {kP, kQ})
    for (int k = 0; k <= 40; ++k) {
      const cplx a = psi_seed(p, k).y;
      const cplx b = psi1_alt(p, k);
      CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("seed row satisfies the three-term chain in k") {
  const auto d = [](const GroupParams& p) {
    return p.sigma * (std::polar(1.0, -p.delta) * std::cosh(p.rho) +
                      std::polar(1.0, p.delta - p.theta) * std::sinh(p.rho));
  };
  for (const auto& p : {kP, kQ}) {
    const auto row = seed_row(p, 50);
    const cplx g = d(p);
    for (int k = 1; k < 50; ++k) {
      const cplx res = std::sqrt(k + 1.0) * std::cosh(p.rho) * row[k + 1].x +
                       std::polar(1.0, -p.theta) * std::sinh(p.rho) *
                           std::sqrt(double(k)) * row[k - 1].x +
                       g * row[k].x;
      CHECK(std::abs(res) <= 1e-13);
    }
  }
}

TEST_CASE("recurrence table matches the truncated-operator product") {
  for (const auto& p : {kP, kQ, GroupParams{0.3, 0.0, 0.2, 0.0}}) {
    const auto a = psi_table(p, 8, 8);
    const auto b = psi_oracle(p, 8, 8, 300);
    CHECK(max_deviation(a, b) <= 1e-10);
  }
}

TEST_CASE("recurrence table matches the convolution route") {
  for (const auto& p : {kP, kQ}) {
    const auto a = psi_table(p, 10, 10);
    const auto b = psi_table_convolved(p, 10, 10);
    CHECK(max_deviation(a, b) <= 1e-10);
  }
}

TEST_CASE("degenerate parameters route through the factor tables") {
  const GroupParams disp{0.9, 0.7, 0.0, 0.0};
  const auto a = psi_table_convolved(disp, 6, 6);
  const auto ao = psi_oracle(disp, 6, 6, 70);
  CHECK(max_deviation(a, ao) <= 1e-12);
  const GroupParams sq{0.0, 0.0, 0.8, 1.1};
  const auto b = psi_table_convolved(sq, 6, 6);
  const auto bo = psi_oracle(sq, 6, 6, 200);
  CHECK(max_deviation(b, bo) <= 1e-12);
  CHECK_THROWS_AS(psi_table(disp, 4, 4), SingularParameterError);
  CHECK_THROWS_AS(psi_table(sq, 4, 4), SingularParameterError);
}

TEST_CASE("ladder matrices shift the seed vectors") {
  for (const auto& p : {kP, kQ}) {
    const auto row = seed_row(p, 30);
    for (int k = 1; k <= 29; ++k) {
      const C2Vec lo = ladder_apply(p, k, row[k], LadderDirection::lower);
      const C2Vec lo_ref = std::sqrt(double(k)) * row[k - 1];
      CHECK((lo - lo_ref).norm() <= 1e-11 * std::max(1.0, lo_ref.norm()));
      const C2Vec hi = ladder_apply(p, k, row[k], LadderDirection::raise);
      const C2Vec hi_ref = std::sqrt(k + 1.0) * row[k + 1];
      CHECK((hi - hi_ref).norm() <= 1e-11 * std::max(1.0, hi_ref.norm()));
    }
    CHECK_THROWS_AS(ladder_apply(p, 0, row[0], LadderDirection::lower),
                    std::invalid_argument);
  }
}

TEST_CASE("rows of the table are orthonormal") {
  for (const auto& p : {kP, kQ}) {
    for (int n = 0; n <= 4; ++n)
      for (int m = n; m <= 4; ++m)
        CHECK(unitarity_defect(p, n, m, 200) <= 1e-10);
  }
  // degenerate parameters use the factor tables internally
  CHECK(unitarity_defect(GroupParams{0.9, 0.7, 0.0, 0.0}, 2, 2, 120) <= 1e-11);
  CHECK(unitarity_defect(GroupParams{0.0, 0.0, 0.8, 1.1}, 3, 1, 200) <= 1e-11);
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(psi_oracle(kP, 8, 8, 40), std::invalid_argument);
  CHECK_THROWS_AS(psi_seed(GroupParams{0.5, 0, 0, 0}, 3),
                  SingularParameterError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smop/polykernel.hpp"
#include "smop/position_rep.hpp"

using namespace smop;

TEST_CASE("wavefunction values") {
  CHECK(phi_wave(0, 0.0) == doctest::Approx(std::pow(M_PI, -0.25)));
  CHECK(phi_wave(1, 0.0) == doctest::Approx(0.0));
  const double x = 1.2;
  const double direct = std::pow(M_PI, -0.25) / std::sqrt(32.0 * 120.0) *
                        std::exp(-0.5 * x * x) *
                        poly::hermite(5, x).real();
  CHECK(phi_wave(5, x) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("wavefunction orthonormality by quadrature") {
  const double h = 1e-3;
  for (int n = 0; n <= 8; ++n)
    for (int m = n; m <= 8; ++m) {
      double s = 0.0;
      for (double x = -12.0; x <= 12.0; x += h)
        s += phi_wave(n, x) * phi_wave(m, x);
      s *= h;
      CHECK(std::abs(s - (n == m ? 1.0 : 0.0)) <= 1e-8);
    }
}

TEST_CASE("translation expansion of Hermite polynomials") {
  CHECK(translate_defect(0, 0.5, 0.3, 60) <= 1e-10);  // generating function
  CHECK(translate_defect(2, 0.5, 0.3, 60) <= 1e-9);
  CHECK(translate_defect(4, 0.8, -0.7, 80) <= 1e-8);
  for (int n : {1, 3, 5})
    for (double sigma : {0.3, 0.6, 0.9})
      for (double x : {-1.0, 0.2, 1.5})
        CHECK(translate_defect(n, sigma, x, 90) <= 1e-8);
  CHECK_THROWS_AS(translate_defect(2, 0.5, 0.3, 4), ConvergenceError);
}

TEST_CASE("dilation expansion of even and odd Hermite polynomials") {
  CHECK(dilate_defect(0, 0.4, 0.7, 80, Parity::even) <= 1e-9);  // Laguerre case
  CHECK(dilate_defect(1, 0.3, 0.5, 80, Parity::even) <= 1e-8);
  CHECK(dilate_defect(1, 0.3, 0.5, 80, Parity::odd) <= 1e-8);
  for (int n : {0, 2, 3})
    for (double rho : {0.2, 0.4, 0.6})
      for (double x : {-1.5, 0.3, 1.1})
        for (Parity par : {Parity::even, Parity::odd})
          CHECK(dilate_defect(n, rho, x, 110, par) <= 1e-8);
}

TEST_CASE("affine 2-vector expansion through the matrix polynomials") {
  CHECK(affine_vector_defect(GroupParams{0.4, 0.0, 0.3, 0.0}, 1, 0.2, 100) <=
        1e-7);
  CHECK(affine_vector_defect(GroupParams{0.4, 0.0, 0.3, 0.0}, 2, -0.5, 120) <=
        1e-7);
  for (int n : {0, 1, 2})
    for (double sigma : {0.2, 0.5})
      for (double rho : {0.2, 0.5})
        CHECK(affine_vector_defect(GroupParams{sigma, 0.0, rho, 0.0}, n, 0.4,
                                   140) <= 1e-7);
  CHECK_THROWS_AS(
      affine_vector_defect(GroupParams{0.4, 0.1, 0.3, 0.0}, 1, 0.2, 100),
      std::invalid_argument);
  CHECK_THROWS_AS(
      affine_vector_defect(GroupParams{0.4, 0.0, 0.0, 0.0}, 1, 0.2, 100),
      std::invalid_argument);
}

TEST_CASE("sigma continuity near the pure dilation limit") {
  // small sigma within the valid range stays consistent with the n = 0 case
  CHECK(affine_vector_defect(GroupParams{0.05, 0.0, 0.3, 0.0}, 0, 0.4, 120) <=
        1e-7);
}

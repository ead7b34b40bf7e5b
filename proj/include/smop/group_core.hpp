#ifndef SMOP_GROUP_CORE_HPP
#define SMOP_GROUP_CORE_HPP

#include "smop/complex2.hpp"

namespace smop {

// Group element S(v,w) in polar form: v = sigma e^{i delta}, w = rho e^{i theta}.
// Moduli are nonnegative; signs live in the phases.
struct GroupParams {
  double sigma, delta, rho, theta;

  GroupParams(double sigma_, double delta_, double rho_, double theta_)
      : sigma(sigma_), delta(delta_), rho(rho_), theta(theta_) {
    if (!(sigma >= 0.0))
      throw std::invalid_argument("GroupParams: sigma must be >= 0");
    if (!(rho >= 0.0))
      throw std::invalid_argument("GroupParams: rho must be >= 0");
  }

  cplx v() const { return sigma * std::polar(1.0, delta); }
  cplx w() const { return rho * std::polar(1.0, theta); }
};

// Scalars derived from the group parameters that the closed-form matrix
// elements and generating functions use.
struct DerivedScalars {
  cplx s;        // Hermite argument of the seed elements
  cplx t;        // e^{i(2 delta - theta)} th rho
  double c;      // th^2 rho
  cplx c1, c2;   // 2-variable Hermite arguments
  cplx mu, nu;   // difference-equation off-diagonal coefficients
};

DerivedScalars derived_scalars(const GroupParams& p);

struct RecurrenceCoeffs {
  cplx xi, eta;
  double zeta;
};

// xi_n, eta_n, zeta_n of the five-term recurrence.
RecurrenceCoeffs recurrence_coeffs(const GroupParams& p, int n);

// Blocks of the vector three-term recurrence:
// A_n lower triangular, B_n Hermitian with diagonal (zeta_{2n}, zeta_{2n+1}).
std::pair<C2Mat, C2Mat> block_matrices(const GroupParams& p, int n);

// k-dependent ladder matrices acting on the seed vector. Require rho > 0.
C2Mat ladder_lower(const GroupParams& p, int k);   // A_k
C2Mat ladder_raise(const GroupParams& p, int k);   // Abar_k

// gamma(n) = diag(2n, 2n+1) and Theta_n = diag(sqrt(2n(2n-1)), sqrt(2n(2n+1))).
std::pair<C2Mat, C2Mat> spectral_matrices(int n);

struct DifferenceCoeffs {
  double lambda;  // real diagonal coefficient
  cplx mu, nu;
};

DifferenceCoeffs difference_coeffs(const GroupParams& p, int k);

}  // namespace smop

#endif

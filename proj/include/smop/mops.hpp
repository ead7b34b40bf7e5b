#ifndef SMOP_MOPS_HPP
#define SMOP_MOPS_HPP

#include "smop/group_core.hpp"

#include <vector>

namespace smop {

// Polynomial in the spectral variable k with 2x2 matrix coefficients,
// coeffs[i] multiplying k^i. Matrix products never commute, so left and
// right multiplication are separate operations.
struct MatPoly {
  std::vector<C2Mat> coeffs;

  MatPoly() : coeffs(1) {}
  explicit MatPoly(const C2Mat& c0) : coeffs{c0} {}

  static MatPoly identity() { return MatPoly(C2Mat::identity()); }
  // the degree-1 polynomial c0 + c1 k
  static MatPoly linear(const C2Mat& c0, const C2Mat& c1) {
    MatPoly p;
    p.coeffs = {c0, c1};
    return p;
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  void trim(double eps = 0.0);

  C2Mat eval(double k) const;  // Horner

  MatPoly operator+(const MatPoly& o) const;
  MatPoly operator-(const MatPoly& o) const;
  MatPoly operator*(cplx s) const;
  // coefficient order a_i b_j: (A B)(k) = sum_ij a_i b_j k^{i+j}
  MatPoly operator*(const MatPoly& o) const;

  MatPoly left_mul(const C2Mat& c) const;   // c * P
  MatPoly right_mul(const C2Mat& c) const;  // P * c
  MatPoly mul_k() const;                    // k * P
  MatPoly shift(double s) const;            // P(k + s), binomial expansion
};

// P_n by the coefficient form of the three-term recurrence; P_0 = I.
MatPoly mop(const GroupParams& p, int n);

// P_n(k) by running the same recurrence on values only.
C2Mat mop_point(const GroupParams& p, int n, double k);

// weight W(k) = Psi_{0,k} Psi_{0,k}^+, rank-1 Hermitian.
C2Mat weight(const GroupParams& p, int k);

// sum_k P_n(k) W(k) P_m(k)^+, equal to delta_{nm} I for the exact weight.
C2Mat gram(const GroupParams& p, int n, int m, int kcut = 300);

// Image of P under the second-order difference operator acting from the
// right; eigen-equation: apply_difference(mop(p,n)) = gamma(n) mop(p,n).
MatPoly apply_difference(const GroupParams& p, const MatPoly& P);

// Raising and lowering, also acting from the right:
// apply_raise(P_n) = Theta_{n+1} P_{n+1}, apply_lower(P_n) = Theta_n P_{n-1}.
MatPoly apply_raise(const GroupParams& p, const MatPoly& P);
MatPoly apply_lower(const GroupParams& p, const MatPoly& P);

// P_n from n-fold raising of the constant polynomial I, normalized by the
// accumulated Theta factors.
MatPoly rodrigues(const GroupParams& p, int n);

}  // namespace smop

#endif

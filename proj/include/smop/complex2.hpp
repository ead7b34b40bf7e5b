#ifndef SMOP_COMPLEX2_HPP
#define SMOP_COMPLEX2_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace smop {

using cplx = std::complex<double>;

struct SingularParameterError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 2-component complex vector (psi_{2n,k}, psi_{2n+1,k}).
struct C2Vec {
  cplx x{0.0}, y{0.0};

  C2Vec operator+(const C2Vec& o) const { return {x + o.x, y + o.y}; }
  C2Vec operator-(const C2Vec& o) const { return {x - o.x, y - o.y}; }
  C2Vec operator*(cplx s) const { return {x * s, y * s}; }
  double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
};

inline C2Vec operator*(cplx s, const C2Vec& v) { return v * s; }

// Dense 2x2 complex matrix, row-major.
struct C2Mat {
  cplx m00{0.0}, m01{0.0}, m10{0.0}, m11{0.0};

  static C2Mat identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static C2Mat diag(cplx a, cplx b) { return {a, 0.0, 0.0, b}; }

  C2Mat operator+(const C2Mat& o) const {
    return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
  }
  C2Mat operator-(const C2Mat& o) const {
    return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
  }
  C2Mat operator*(const C2Mat& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
  C2Vec operator*(const C2Vec& v) const {
    return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y};
  }
  C2Mat operator*(cplx s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

  C2Mat adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
  cplx det() const { return m00 * m11 - m01 * m10; }
  cplx trace() const { return m00 + m11; }

  C2Mat inverse() const {
    const cplx d = det();
    if (std::abs(d) == 0.0)
      throw SingularParameterError("C2Mat::inverse: singular matrix");
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
  }

  // max entrywise modulus
  double max_norm() const {
    return std::max(std::max(std::abs(m00), std::abs(m01)),
                    std::max(std::abs(m10), std::abs(m11)));
  }
  // Frobenius norm
  double norm() const {
    return std::sqrt(std::norm(m00) + std::norm(m01) + std::norm(m10) +
                     std::norm(m11));
  }
};

inline C2Mat operator*(cplx s, const C2Mat& m) { return m * s; }

// outer product v w^+
inline C2Mat outer(const C2Vec& v, const C2Vec& w) {
  return {v.x * std::conj(w.x), v.x * std::conj(w.y), v.y * std::conj(w.x),
          v.y * std::conj(w.y)};
}

// z^{k/2} with a single principal square root shared by all half powers:
// sqrt(z) once, then integer powers.
inline cplx sqrt_pow(cplx z, int k) {
  const cplx r = std::sqrt(z);
  cplx acc{1.0};
  cplx base = r;
  int e = k;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace smop

#endif

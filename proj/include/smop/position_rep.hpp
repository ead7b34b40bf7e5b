#ifndef SMOP_POSITION_REP_HPP
#define SMOP_POSITION_REP_HPP

#include "smop/group_core.hpp"

namespace smop {

// Oscillator wavefunction pi^{-1/4} 2^{-n/2} (n!)^{-1/2} e^{-x^2/2} H_n(x);
// the normalization is assembled in log space.
double phi_wave(int n, double x);

// Normalized residual of the Hermite translation expansion
// H_n(x + sqrt(2) sigma) against its Charlier-coefficient series.
double translate_defect(int n, double sigma, double x, int kcut);

enum class Parity { even, odd };

// Normalized residual of the dilation expansion of H_{2n} (even) or
// H_{2n+1} (odd) with Meixner coefficients.
double dilate_defect(int n, double rho, double x, int kcut, Parity parity);

// Normalized residual of the affine 2-vector expansion that couples the
// matrix polynomials to the seed vectors; requires delta = theta = 0.
double affine_vector_defect(const GroupParams& p, int n, double x, int kcut);

}  // namespace smop

#endif

#ifndef SMOP_VERIFY_HPP
#define SMOP_VERIFY_HPP

#include <string>
#include <vector>

#include "smop/group_core.hpp"

namespace smop {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  double tol = 1e-8;
  std::vector<CheckResult> checks;
  bool pass = false;
};

// default 27-point parameter grid used by all suites
std::vector<GroupParams> default_grid();

// suite in {unitarity, orthogonality, difference, ladder, rodrigues,
// convolution, genfun, position, appendix, all}
VerificationReport run_suite(const std::string& suite, double tol);

std::string report_json(const VerificationReport& r);

}  // namespace smop

#endif

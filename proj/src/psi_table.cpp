#include "smop/psi_table.hpp"

#include <algorithm>

namespace smop {

std::string route_name(Route r) {
  switch (r) {
    case Route::recurrence: return "recurrence";
    case Route::convolution: return "convolution";
    case Route::hermite2: return "hermite2";
    case Route::oracle: return "oracle";
  }
  return "unknown";
}

Route route_from_name(const std::string& name) {
  if (name == "recurrence") return Route::recurrence;
  if (name == "convolution") return Route::convolution;
  if (name == "hermite2") return Route::hermite2;
  if (name == "oracle") return Route::oracle;
  throw std::invalid_argument("unknown route: " + name);
}

double max_deviation(const PsiTable& a, const PsiTable& b) {
  const int nmax = std::min(a.nmax, b.nmax);
  const int kmax = std::min(a.kmax, b.kmax);
  double dev = 0.0;
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= kmax; ++k)
      dev = std::max(dev, std::abs(a.at(n, k) - b.at(n, k)));
  return dev;
}

}  // namespace smop

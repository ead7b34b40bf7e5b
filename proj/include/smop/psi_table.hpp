#ifndef SMOP_PSI_TABLE_HPP
#define SMOP_PSI_TABLE_HPP

#include <string>
#include <vector>

#include "smop/group_core.hpp"

namespace smop {

enum class Route { recurrence, convolution, hermite2, oracle };

std::string route_name(Route r);
Route route_from_name(const std::string& name);

// Dense table of matrix elements psi_{n,k}, 0 <= n <= nmax, 0 <= k <= kmax,
// with a record of which route produced it.
struct PsiTable {
  GroupParams params;
  int nmax = 0, kmax = 0;
  Route route = Route::recurrence;
  std::vector<cplx> entries;  // row-major, (nmax+1) x (kmax+1)

  PsiTable(const GroupParams& p, int nmax_, int kmax_, Route r)
      : params(p), nmax(nmax_), kmax(kmax_), route(r),
        entries(static_cast<size_t>(nmax_ + 1) * (kmax_ + 1)) {
    if (nmax_ < 0 || kmax_ < 0)
      throw std::invalid_argument("PsiTable: nmax, kmax must be >= 0");
  }

  cplx& at(int n, int k) {
    return entries[static_cast<size_t>(n) * (kmax + 1) + k];
  }
  cplx at(int n, int k) const {
    return entries[static_cast<size_t>(n) * (kmax + 1) + k];
  }
};

// max entrywise |a - b| over the common shape
double max_deviation(const PsiTable& a, const PsiTable& b);

}  // namespace smop

#endif

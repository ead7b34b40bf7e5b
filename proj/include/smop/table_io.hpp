#ifndef SMOP_TABLE_IO_HPP
#define SMOP_TABLE_IO_HPP

#include <string>

#include "smop/psi_table.hpp"

namespace smop {

// CSV with header n,k,psi_re,psi_im; floats at 17 significant digits so the
// values round-trip.
std::string to_csv(const PsiTable& t);

// JSON object {params, route, nmax, kmax, entries}; complex values are
// two-element arrays [re, im].
std::string to_json(const PsiTable& t);

}  // namespace smop

#endif

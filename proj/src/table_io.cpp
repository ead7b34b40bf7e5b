#include "smop/table_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace smop {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string to_csv(const PsiTable& t) {
  std::string out = "n,k,psi_re,psi_im\n";
  for (int n = 0; n <= t.nmax; ++n)
    for (int k = 0; k <= t.kmax; ++k) {
      const cplx z = t.at(n, k);
      out += std::to_string(n);
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += fmt(z.real());
      out += ',';
      out += fmt(z.imag());
      out += '\n';
    }
  return out;
}

std::string to_json(const PsiTable& t) {
  nlohmann::ordered_json j;
  j["params"] = {{"sigma", t.params.sigma},
                 {"delta", t.params.delta},
                 {"rho", t.params.rho},
                 {"theta", t.params.theta}};
  j["route"] = route_name(t.route);
  j["nmax"] = t.nmax;
  j["kmax"] = t.kmax;
  auto entries = nlohmann::ordered_json::array();
  for (int n = 0; n <= t.nmax; ++n) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k <= t.kmax; ++k) {
      const cplx z = t.at(n, k);
      row.push_back({z.real(), z.imag()});
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

}  // namespace smop

// Command-line front end: psi tables, verification suites, benchmarks.
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 convergence
// failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smop/decompose.hpp"
#include "smop/genfun.hpp"
#include "smop/matrix_elements.hpp"
#include "smop/table_io.hpp"
#include "smop/verify.hpp"

namespace {

using namespace smop;

PsiTable table_oracle_autodim(const GroupParams& p, int nmax, int kmax) {
  // retry with a larger truncation if the tail check trips
  int dim = 4 * std::max(nmax, kmax) + 40;
  for (int attempt = 0; attempt < 4; ++attempt, dim *= 2) {
    try {
      return psi_oracle(p, nmax, kmax, dim);
    } catch (const ConvergenceError&) {
      if (attempt == 3) throw;
    }
  }
  throw ConvergenceError("oracle route failed to converge");
}

PsiTable build_table(const GroupParams& p, int nmax, int kmax,
                     const std::string& route) {
  if (route == "recurrence") return psi_table(p, nmax, kmax);
  if (route == "convolution") return psi_table_convolved(p, nmax, kmax);
  if (route == "oracle") return table_oracle_autodim(p, nmax, kmax);
  if (route == "hermite2") {
    PsiTable t(p, nmax, kmax, Route::hermite2);
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= kmax; ++k) t.at(n, k) = psi_via_hermite2(p, n, k);
    return t;
  }
  throw std::invalid_argument("unknown route: " + route);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "cannot open output file: %s\n", out_path.c_str());
    return 2;
  }
  f << text;
  return 0;
}

struct BenchRow {
  int size;
  double t_recurrence, t_convolution, t_oracle;
  double max_deviation;
};

double timed(PsiTable& dst, const std::function<PsiTable()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  dst = f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix elements and matrix orthogonal polynomials of the "
               "displaced-squeezed oscillator transform"};
  app.require_subcommand(1);

  double sigma = 0.7, delta = 0.1, rho = 0.3, theta = 0.5;
  int nmax = 8, kmax = 8;
  std::string route = "recurrence", format = "csv", out_path;
  std::string suite = "all";
  double tol = 1e-8;
  std::vector<int> sizes = {8, 16, 32};

  auto add_params = [&](CLI::App* c) {
    c->add_option("--sigma", sigma, "displacement modulus");
    c->add_option("--delta", delta, "displacement phase");
    c->add_option("--rho", rho, "squeeze modulus");
    c->add_option("--theta", theta, "squeeze phase");
  };

  CLI::App* t = app.add_subcommand("table", "compute a psi table");
  add_params(t);
  t->add_option("--nmax", nmax, "largest degree index");
  t->add_option("--kmax", kmax, "largest variable index");
  t->add_option("--route", route, "computation route")
      ->check(CLI::IsMember({"recurrence", "convolution", "hermite2",
                             "oracle"}));
  t->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  t->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"unitarity", "orthogonality", "difference",
                             "ladder", "rodrigues", "convolution", "genfun",
                             "position", "appendix", "all"}));
  v->add_option("--tol", tol, "pass tolerance");

  CLI::App* b = app.add_subcommand("bench", "time the table routes");
  add_params(b);
  b->add_option("--sizes", sizes, "table sizes (nmax = kmax)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (t->parsed()) {
      const GroupParams p{sigma, delta, rho, theta};
      const PsiTable tab = build_table(p, nmax, kmax, route);
      return emit(format == "csv" ? to_csv(tab) : to_json(tab), out_path);
    }
    if (v->parsed()) {
      const VerificationReport r = run_suite(suite, tol);
      std::fputs(report_json(r).c_str(), stdout);
      return r.pass ? 0 : 1;
    }
    if (b->parsed()) {
      const GroupParams p{sigma, delta, rho, theta};
      std::vector<BenchRow> rows;
      for (int s : sizes) {
        BenchRow row{};
        row.size = s;
        PsiTable a(p, 0, 0, Route::recurrence), c = a, o = a;
        row.t_recurrence = timed(a, [&] { return psi_table(p, s, s); });
        row.t_convolution =
            timed(c, [&] { return psi_table_convolved(p, s, s); });
        row.t_oracle = timed(o, [&] { return table_oracle_autodim(p, s, s); });
        row.max_deviation =
            std::max(max_deviation(a, c), max_deviation(a, o));
        rows.push_back(row);
      }
      nlohmann::ordered_json j;
      j["params"] = {{"sigma", sigma}, {"delta", delta}, {"rho", rho},
                     {"theta", theta}};
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows)
        arr.push_back({{"size", r.size},
                       {"t_recurrence", r.t_recurrence},
                       {"t_convolution", r.t_convolution},
                       {"t_oracle", r.t_oracle},
                       {"max_deviation", r.max_deviation}});
      j["rows"] = std::move(arr);
      std::fputs((j.dump(2) + "\n").c_str(), stdout);
      return 0;
    }
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "convergence failure: %s\n", e.what());
    return 3;
  } catch (const SingularParameterError& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid arguments: %s\n", e.what());
    return 2;
  }
  return 2;
}

// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "hkzeta/verify.hpp"

using namespace hkzeta;

namespace {

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  double threshold = 0.0;
  std::string note;
};

void absorb(Outcome& o, const Check& c) {
  if (c.threshold > 0.0) o.worst = std::max(o.worst, c.worst / c.threshold * o.threshold);
  else if (!c.pass) o.worst = std::max(o.worst, c.worst);
  if (!c.pass) {
    o.pass = false;
    if (!o.note.empty()) o.note += "; ";
    o.note += c.name + ": " + c.detail;
  }
}

const std::vector<const char*> kGraphs{"k4", "c5", "c8", "cube", "k33", "petersen"};

}  // namespace

int main(int argc, char** argv) {
  int failures = 0;
  auto report = [&](const char* id, const char* title, double budget_s,
                    const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
      o.pass = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!o.pass) ++failures;
    std::printf("%s %s %s: worst=%.3e threshold=%.0e time=%.2fs%s%s\n", o.pass ? "PASS" : "FAIL",
                id, title, o.worst, o.threshold, secs, o.note.empty() ? "" : "  ",
                o.note.c_str());
  };

  const std::vector<double> tree_ts{0.1, 0.5, 1.0, 2.0, 5.0};
  report("AC1", "tree series vs integral formula", 10.0, [&] {
    Outcome o{true, 0.0, 1e-8, ""};
    for (int q : {2, 3, 4}) absorb(o, check_tree_formula(q, tree_ts, 10, 1e-8));
    return o;
  });

  report("AC2", "tree heat-equation residual", 0.0, [&] {
    Outcome o{true, 0.0, 1e-8, ""};
    for (int q : {2, 3, 4}) absorb(o, check_tree_residual(q, tree_ts, 10, 1e-8));
    return o;
  });

  report("AC3", "heat series vs spectral (1e-7) and ODE (1e-6)", 30.0, [&] {
    Outcome o{true, 0.0, 1e-7, ""};
    const std::vector<double> ts{0.1, 0.5, 1.0, 2.0};
    double spectral = 0.0, ode = 0.0;
    for (const char* name : kGraphs) {
      const auto checks = check_heat_three_way(builtin_graph(name), ts, 1e-7, 1e-6);
      for (const Check& c : checks) absorb(o, c);
      spectral = std::max(spectral, checks[0].worst);
      ode = std::max(ode, checks[1].worst);
    }
    o.worst = spectral;
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst vs ODE=%.3e", ode);
    o.note = o.pass ? buf : o.note;
    return o;
  });

  report("AC4", "counting recursions equal enumeration, k <= 10", 0.0, [&] {
    Outcome o{true, 0.0, 0.0, ""};
    for (const char* name : kGraphs) absorb(o, check_counting_oracle(builtin_graph(name), 10));
    return o;
  });

  report("AC5", "determinant formula recovers N_m, m <= 12", 0.0, [&] {
    Outcome o{true, 0.0, 1e-6, ""};
    for (const char* name : kGraphs) absorb(o, check_determinant_recovery(builtin_graph(name), 12, 1e-6));
    return o;
  });

  report("AC6", "tree zeta identity and spectral moments", 0.0, [&] {
    Outcome o{true, 0.0, 1e-7, ""};
    const std::vector<double> us{0.05, 0.1, 0.2};
    for (int q : {2, 3}) {
      absorb(o, check_tree_zeta_identity(q, us, 1e-7));
      absorb(o, check_kesten_moments(q, 12));
    }
    return o;
  });

  report("AC7", "g-transform of building blocks", 0.0, [&] {
    Outcome o{true, 0.0, 1e-6, ""};
    for (int q : {2, 3}) {
      const std::vector<double> us{0.1 / std::sqrt(double(q)), 0.25 / std::sqrt(double(q))};
      absorb(o, check_building_block_transform(q, 6, us, 1e-6));
    }
    return o;
  });

  report("AC8", "g-transform of the diagonal heat kernel vs zeta", 0.0, [&] {
    Outcome o{true, 0.0, 1e-6, ""};
    const std::vector<double> us{0.02, 0.05};
    for (const char* name : {"k4", "petersen"}) {
      absorb(o, check_diagonal_transform(builtin_graph(name), us, 1e-6));
    }
    return o;
  });

  report("AC9", "Laplace identity calibration", 0.0, [&] {
    Outcome o{true, 0.0, 1e-9, ""};
    const std::vector<double> ss{0.5, 1.0, 2.0};
    absorb(o, check_laplace_identity(6, ss, 1e-9));
    return o;
  });

  report("AC10", "verify command on all builtins exits 0", 120.0, [&] {
    Outcome o{true, 0.0, 0.0, ""};
    if (argc < 2) {
      o.pass = false;
      o.note = "path to the CLI not given";
      return o;
    }
    const std::string command = std::string(argv[1]) + " verify > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.pass = code == 0;
    o.note = "exit code " + std::to_string(code);
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

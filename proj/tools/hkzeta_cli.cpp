#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hkzeta/automorphism.hpp"
#include "hkzeta/counting.hpp"
#include "hkzeta/graph.hpp"
#include "hkzeta/heat_graph.hpp"
#include "hkzeta/heat_tree.hpp"
#include "hkzeta/verify.hpp"
#include "hkzeta/zeta.hpp"

using namespace hkzeta;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string graph;
  int q = 0;
  std::optional<int> order;
  std::vector<double> t;
  std::vector<double> u;
  double tol = 1e-13;
  std::string format;
  std::string out;
};

// Numbers are carried through the JSON tree as tagged strings and spliced
// back in as raw text, so floats keep the fixed scientific format and big
// integers keep every digit.
const std::string kRawTag = "\x01raw:";

std::string sci(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

json num(double v) { return kRawTag + sci(v); }
json num(const BigInt& v) { return kRawTag + v.str(); }

json num_array(const CountSequence& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(num(v));
  return a;
}

std::string dump(const json& j) {
  std::string text = j.dump(2);
  const std::string open = "\"\\u0001raw:";
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = text.find(open, pos);
    if (hit == std::string::npos) break;
    const std::size_t end = text.find('"', hit + open.size());
    out.append(text, pos, hit - pos);
    out.append(text, hit + open.size(), end - hit - open.size());
    pos = end + 1;
  }
  out.append(text, pos, std::string::npos);
  return out + "\n";
}

std::string verdict_name(TransitivityVerdict v) {
  switch (v) {
    case TransitivityVerdict::transitive: return "transitive";
    case TransitivityVerdict::not_transitive: return "not_transitive";
    case TransitivityVerdict::unknown: return "unknown";
  }
  return "unknown";
}

bool tree_mode(const RunConfig& cfg) { return cfg.graph == "tree"; }

int tree_q(const RunConfig& cfg) {
  if (cfg.q < 1) throw InputError("tree mode needs --q >= 1");
  return cfg.q;
}

Graph resolve_graph(const RunConfig& cfg) {
  if (cfg.graph.empty()) throw InputError("--graph is required");
  if (is_builtin_graph_name(cfg.graph)) return builtin_graph(cfg.graph);
  return load_graph(cfg.graph);
}

int order_or(const RunConfig& cfg, int fallback) {
  const int m = cfg.order.value_or(fallback);
  if (m < 1) throw InputError("--order must be >= 1");
  return m;
}

void check_u_grid(const std::vector<double>& us, int q) {
  for (double u : us) {
    if (!(u > 0.0 && u < 1.0 / q)) {
      throw InputError("u = " + sci(u) + " outside (0, 1/q) for q = " + std::to_string(q));
    }
  }
}

void check_t_grid(const std::vector<double>& ts) {
  for (double t : ts) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw InputError("t values must be finite and >= 0");
  }
}

struct Output {
  std::string text;
};

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const auto& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  return row + "\n";
}

std::string str(const BigInt& v) { return v.str(); }
std::string str(int v) { return std::to_string(v); }

json header(const std::string& command) {
  json j;
  j["schema"] = "1";
  j["command"] = command;
  return j;
}

// ---------------------------------------------------------------- analyze

Output cmd_analyze(const RunConfig& cfg) {
  const int M = order_or(cfg, 10);
  json j = header("analyze");
  CountSequence a, c0, n0, total, primes;
  if (tree_mode(cfg)) {
    const int q = tree_q(cfg);
    for (int k = 0; k <= M; ++k) {
      a.push_back(tree_closed_walks(q, k));
      c0.push_back(k == 0 ? 1 : 0);
      n0.push_back(k == 0 ? 1 : 0);
    }
    j["graph"] = "tree";
    j["q"] = q;
    j["n"] = nullptr;
    j["transitivity"] = "transitive";
  } else {
    const Graph g = resolve_graph(cfg);
    const int q = g.require_regular();
    const auto verdict = check_vertex_transitive(g).verdict;
    a = diagonal(path_counts(g, 0, M), 0);
    c0 = diagonal(geodesic_counts(g, 0, M), 0);
    if (verdict == TransitivityVerdict::transitive) {
      n0 = closed_geodesics_at_vertex(g, 0, M, Transitivity::assume);
    }
    total = closed_geodesics_total(g, M);
    primes = prime_geodesic_counts(total, M);
    j["graph"] = g.name();
    j["q"] = q;
    j["n"] = g.num_vertices();
    j["transitivity"] = verdict_name(verdict);
  }
  j["order"] = M;
  j["base_vertex"] = 0;

  if (cfg.format == "csv") {
    std::string text = csv_row({"k", "a", "c0", "N0", "N", "pi"});
    for (int k = 0; k <= M; ++k) {
      auto cell = [&](const CountSequence& s, bool skip_zero = false) {
        if (s.empty() || (skip_zero && k == 0)) return std::string();
        return str(s[k]);
      };
      text += csv_row({str(k), cell(a), cell(c0), cell(n0), cell(total), cell(primes, true)});
    }
    return {text};
  }
  j["a"] = num_array(a);
  j["c0"] = num_array(c0);
  j["N0"] = n0.empty() ? json(nullptr) : num_array(n0);
  j["N"] = total.empty() ? json(nullptr) : num_array(total);
  j["pi"] = primes.empty() ? json(nullptr) : num_array(primes);
  return {dump(j)};
}

// ---------------------------------------------------------------- heat

Output cmd_heat(const RunConfig& cfg) {
  std::vector<double> ts = cfg.t.empty() ? std::vector<double>{1.0} : cfg.t;
  check_t_grid(ts);
  if (!(cfg.tol > 0.0)) throw InputError("--tol must be > 0");
  json j = header("heat");
  json entries = json::array();
  std::string text;
  double max_delta = 0.0;
  bool has_check = false;

  if (tree_mode(cfg)) {
    const int q = tree_q(cfg);
    const int R = cfg.order.value_or(10);
    if (R < 0) throw InputError("--order must be >= 0");
    has_check = q >= 2;
    text = csv_row({"t", "r", "value", "integral", "delta"});
    j["graph"] = "tree";
    j["q"] = q;
    for (double t : ts) {
      for (int r = 0; r <= R; ++r) {
        const double value = tree_heat_kernel(q, t, r, cfg.tol).value;
        json e;
        e["t"] = num(t);
        e["r"] = r;
        e["value"] = num(value);
        std::string integral_cell, delta_cell;
        if (has_check) {
          const double integral = tree_heat_kernel_cy(q, t, r);
          const double delta = std::abs(value - integral);
          max_delta = std::max(max_delta, delta);
          e["integral"] = num(integral);
          e["delta"] = num(delta);
          integral_cell = sci(integral);
          delta_cell = sci(delta);
        }
        entries.push_back(e);
        text += csv_row({sci(t), str(r), sci(value), integral_cell, delta_cell});
      }
    }
  } else {
    const Graph g = resolve_graph(cfg);
    const int q = g.require_regular();
    const int n = g.num_vertices();
    const double t_max = *std::max_element(ts.begin(), ts.end());
    const HeatSeries series(g, 0, t_max, cfg.tol);
    const auto table = heat_kernel_table(series, ts);
    std::optional<SpectralData> sd;
    if (n <= kMaxSpectralVertices) sd = spectral_decomposition(g);
    has_check = sd.has_value();
    const std::vector<int> dist = bfs_distances(g, 0);
    text = csv_row({"t", "x", "distance", "series", "spectral", "delta"});
    j["graph"] = g.name();
    j["q"] = q;
    j["n"] = n;
    j["base_vertex"] = 0;
    j["series_order"] = series.order();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (Vertex x = 0; x < n; ++x) {
        const double value = table[i][x];
        json e;
        e["t"] = num(ts[i]);
        e["x"] = x;
        e["distance"] = dist[x];
        e["series"] = num(value);
        std::string spectral_cell, delta_cell;
        if (sd) {
          const double spectral = heat_kernel_spectral(*sd, 0, x, ts[i]);
          const double delta = std::abs(value - spectral);
          max_delta = std::max(max_delta, delta);
          e["spectral"] = num(spectral);
          e["delta"] = num(delta);
          spectral_cell = sci(spectral);
          delta_cell = sci(delta);
        }
        entries.push_back(e);
        text += csv_row({sci(ts[i]), str(x), str(dist[x]), sci(value), spectral_cell,
                         delta_cell});
      }
    }
  }
  if (cfg.format == "csv") return {text};
  j["entries"] = entries;
  j["max_delta"] = has_check ? num(max_delta) : json(nullptr);
  return {dump(j)};
}

// ---------------------------------------------------------------- zeta

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Output cmd_zeta(const RunConfig& cfg) {
  if (tree_mode(cfg)) throw InputError("zeta needs a finite graph");
  const Graph g = resolve_graph(cfg);
  const int q = g.require_regular();
  const int M = order_or(cfg, 12);
  std::vector<double> us = cfg.u.empty() ? std::vector<double>{0.02, 0.05} : cfg.u;
  check_u_grid(us, q);

  const CountSequence total = closed_geodesics_total(g, M);
  const CountSequence primes = prime_geodesic_counts(total, M);
  const ExactSeries log_series = zeta_log_series_from_counts(total, M);
  const SpectralData sd = spectral_decomposition(g);
  const RealSeries det = ihara_determinant_series(sd, M);
  const CountRecovery rec = recover_counts(det);
  double max_discrepancy = 0.0;
  for (int m = 1; m <= M; ++m) {
    const double d = std::abs(static_cast<double>(m * det[m]) - total[m].convert_to<double>());
    max_discrepancy = std::max(max_discrepancy, d);
  }

  // Pointwise: zeta^{Ih}(u)^{-1} as a product of per-vertex spectral factors,
  // against the count series (more terms than the report order).
  const int terms = std::max(M, 120);
  const CountSequence long_total = closed_geodesics_total(g, terms);
  json points = json::array();
  std::string point_rows;
  for (double u : us) {
    double log_inverse = 0.0;
    for (Vertex x0 = 0; x0 < g.num_vertices(); ++x0) {
      log_inverse += std::log(zeta_spectral(SpectralMeasure::atomic_at(sd, x0), q, u));
    }
    long double s = 0.0L, p = 1.0L;
    for (int m = 1; m <= terms; ++m) {
      p *= u;
      s += long_total[m].convert_to<long double>() * p / m;
    }
    const double spectral = std::exp(-log_inverse);
    const double series = std::exp(static_cast<double>(s));
    const double rel = std::abs(spectral / series - 1.0);
    max_discrepancy = std::max(max_discrepancy, rel);
    json pt;
    pt["u"] = num(u);
    pt["zeta_spectral"] = num(spectral);
    pt["zeta_series"] = num(series);
    pt["relative_delta"] = num(rel);
    points.push_back(pt);
    point_rows += csv_row({sci(u), sci(spectral), sci(series), sci(rel)});
  }

  if (cfg.format == "csv") {
    std::string text = csv_row({"m", "N", "pi", "log_zeta", "determinant", "recovered"});
    for (int m = 1; m <= M; ++m) {
      text += csv_row({str(m), str(total[m]), str(primes[m]), rational_text(log_series[m]),
                       sci(static_cast<double>(det[m])), str(rec.counts[m])});
    }
    text += "\n" + csv_row({"u", "zeta_spectral", "zeta_series", "relative_delta"}) + point_rows;
    return {text};
  }
  json j = header("zeta");
  j["graph"] = g.name();
  j["q"] = q;
  j["n"] = g.num_vertices();
  j["order"] = M;
  j["N"] = num_array(total);
  j["pi"] = num_array(primes);
  json logc = json::array(), detc = json::array();
  for (int m = 0; m <= M; ++m) {
    logc.push_back(rational_text(log_series[m]));
    detc.push_back(num(static_cast<double>(det[m])));
  }
  j["log_zeta_coefficients"] = logc;
  j["determinant_coefficients"] = detc;
  j["determinant_recovered_N"] = num_array(rec.counts);
  j["determinant_max_rounding"] = num(rec.max_deviation);
  j["pointwise"] = points;
  j["max_discrepancy"] = num(max_discrepancy);
  return {dump(j)};
}

// ---------------------------------------------------------------- verify

struct VerifyOutcome {
  Output output;
  bool passed;
};

VerifyOutcome cmd_verify(const RunConfig& cfg) {
  std::vector<VerifyReport> reports;
  if (cfg.graph.empty()) {
    for (const char* name : {"k4", "c5", "c8", "cube", "k33", "petersen"}) {
      reports.push_back(verify_graph(builtin_graph(name)));
    }
    reports.push_back(verify_tree(2));
    reports.push_back(verify_tree(3));
  } else if (tree_mode(cfg)) {
    const int R = cfg.order.value_or(10);
    if (R < 0) throw InputError("--order must be >= 0");
    reports.push_back(verify_tree(tree_q(cfg), R));
  } else {
    reports.push_back(verify_graph(resolve_graph(cfg)));
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();

  if (cfg.format == "json") {
    json j = header("verify");
    json targets = json::array();
    for (const auto& r : reports) {
      json t;
      t["target"] = r.target;
      t["passed"] = r.passed();
      json checks = json::array();
      for (const auto& c : r.checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["worst"] = num(c.worst);
        cj["threshold"] = num(c.threshold);
        cj["detail"] = c.detail;
        checks.push_back(cj);
      }
      t["checks"] = checks;
      targets.push_back(t);
    }
    j["targets"] = targets;
    j["passed"] = passed;
    return {{dump(j)}, passed};
  }
  std::string text;
  if (cfg.format == "csv") {
    text = csv_row({"target", "check", "pass", "worst", "threshold", "detail"});
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        text += csv_row({r.target, "\"" + c.name + "\"", c.pass ? "1" : "0", sci(c.worst),
                         sci(c.threshold), "\"" + c.detail + "\""});
    return {{text}, passed};
  }
  int failures = 0, total = 0;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      ++total;
      if (!c.pass) ++failures;
      text += std::string(c.pass ? "PASS" : "FAIL") + "  " + r.target + "  " + c.name +
              "  worst=" + sci(c.worst) + "  threshold=" + sci(c.threshold);
      if (!c.detail.empty()) text += "  (" + c.detail + ")";
      text += "\n";
    }
  }
  text += std::to_string(total - failures) + "/" + std::to_string(total) + " checks passed\n";
  return {{text}, passed};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + cfg.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat kernels and zeta functions of regular graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph,
                    "Graph file or builtin: k<n>, c<n>, petersen, cube, k33, tree");
    sub->add_option("--q", cfg.q, "Branching q of the (q+1)-regular tree (tree mode)");
    sub->add_option("--order", cfg.order, "Series order M (tree mode: maximum radius)");
    sub->add_option("--t", cfg.t, "Comma-separated times")->delimiter(',');
    sub->add_option("--u", cfg.u, "Comma-separated u values in (0, 1/q)")->delimiter(',');
    sub->add_option("--tol", cfg.tol, "Truncation tolerance");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
  };
  for (const char* name : {"analyze", "heat", "zeta", "verify"}) {
    static const std::map<std::string, std::string> help{
        {"analyze", "Counting tables: a_k, c_k, N_k^0, N_k, pi_k"},
        {"heat", "Heat kernel over a time grid"},
        {"zeta", "Zeta report with four-way cross-checks"},
        {"verify", "Run the identity suite (all builtins by default)"}};
    add_common(app.add_subcommand(name, help.at(name)));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (!(cfg.tol > 0.0)) throw InputError("--tol must be > 0");
    if (cfg.command == "verify") {
      const VerifyOutcome v = cmd_verify(cfg);
      emit(cfg, v.output.text);
      return v.passed ? kExitOk : kExitInvariant;
    }
    if (cfg.format.empty()) cfg.format = "json";
    Output out;
    if (cfg.command == "analyze") out = cmd_analyze(cfg);
    else if (cfg.command == "heat") out = cmd_heat(cfg);
    else out = cmd_zeta(cfg);
    emit(cfg, out.text);
    return kExitOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  }
}

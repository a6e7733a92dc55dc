#include "hkzeta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>

#include "hkzeta/automorphism.hpp"
#include "hkzeta/bessel.hpp"
#include "hkzeta/counting.hpp"
#include "hkzeta/gtransform.hpp"
#include "hkzeta/heat_graph.hpp"
#include "hkzeta/heat_tree.hpp"
#include "hkzeta/zeta.hpp"

namespace hkzeta {
namespace {

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Tracks the largest discrepancy and where it occurred.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double d, const std::function<std::string()>& describe) {
    if (!(d <= value)) {  // also records NaN
      value = d;
      where = describe();
    }
  }
};

Check run(const std::string& name, double threshold,
          const std::function<void(Worst&)>& body) {
  Check c{name, 0.0, threshold, false, ""};
  try {
    Worst w;
    body(w);
    c.worst = w.value;
    c.pass = w.value <= threshold;
    if (!c.pass) c.detail = w.where;
  } catch (const std::exception& e) {
    c.worst = std::numeric_limits<double>::infinity();
    c.detail = e.what();
  }
  return c;
}

Check skipped(const std::string& name, const std::string& reason) {
  return {name, 0.0, 0.0, true, "skipped: " + reason};
}

bool is_primitive(const std::vector<EdgeId>& cycle) {
  const std::size_t m = cycle.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    if (std::equal(cycle.begin(), cycle.end() - d, cycle.begin() + d)) return false;
  }
  return true;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check check_bessel_agreement(int max_order, std::span<const double> ts, double threshold) {
  return run("bessel series vs quadrature", threshold, [&](Worst& w) {
    for (int n = 0; n <= max_order; ++n) {
      for (double t : ts) {
        const double quad = bessel_i_quadrature_adaptive(n, t, 1e-15).value;
        const double d = std::abs(bessel_i(n, t) - quad) / std::max(1.0, std::abs(quad));
        w.update(d, [&] { return fmt("n=%d t=%g", n, t); });
      }
    }
  });
}

Check check_laplace_identity(int max_n, std::span<const double> ss, double threshold) {
  return run("laplace identity", threshold, [&](Worst& w) {
    for (int n = 0; n <= max_n; ++n) {
      for (double s : ss) {
        const LaplaceIdentity li = laplace_identity_check(n, s);
        w.update(std::abs(li.numeric - li.closed_form),
                 [&] { return fmt("n=%d s=%g", n, s); });
      }
    }
  });
}

Check check_building_block_transform(int q, int max_k, std::span<const double> us,
                                     double threshold) {
  return run(fmt("g-transform of building blocks (q=%d)", q), threshold, [&](Worst& w) {
    for (int k = 0; k <= max_k; ++k) {
      for (double u : us) {
        const auto r = g_transform_numeric([&](double t) { return building_block(q, k, t); },
                                           q, u, 1e-10, tree_growth(q));
        w.update(std::abs(r.value - std::pow(u, k - 1)),
                 [&] { return fmt("k=%d u=%g", k, u); });
      }
    }
  });
}

Check check_tree_formula(int q, std::span<const double> ts, int max_r, double threshold) {
  if (q < 2) return skipped("tree series vs integral formula", "needs q >= 2");
  return run(fmt("tree series vs integral formula (q=%d)", q), threshold, [&](Worst& w) {
    for (double t : ts) {
      for (int r = 0; r <= max_r; ++r) {
        const double series = tree_heat_kernel(q, t, r).value;
        const double integral = tree_heat_kernel_cy(q, t, r);
        w.update(std::abs(series - integral), [&] { return fmt("t=%g r=%d", t, r); });
      }
    }
  });
}

Check check_tree_residual(int q, std::span<const double> ts, int max_r, double threshold) {
  return run(fmt("tree heat-equation residual (q=%d)", q), threshold, [&](Worst& w) {
    for (double t : ts) {
      for (int r = 0; r <= max_r; ++r) {
        w.update(std::abs(tree_heat_residual(q, t, r)),
                 [&] { return fmt("t=%g r=%d", t, r); });
      }
    }
  });
}

Check check_tree_mass(int q, std::span<const double> ts, double threshold) {
  return run(fmt("tree mass and positivity (q=%d)", q), threshold, [&](Worst& w) {
    for (double t : ts) {
      double mass = 0.0;
      for (int r = 0; r < 2000; ++r) {
        const double sphere = tree_sphere_size(q, r);
        const double k = tree_heat_kernel(q, t, r, 1e-16 / sphere).value;
        if (!(k > 0.0) && t > 0.0) {
          w.update(std::numeric_limits<double>::infinity(),
                   [&] { return fmt("nonpositive at t=%g r=%d", t, r); });
        }
        const double term = sphere * k;
        mass += term;
        if (r > 4.0 * (q + 1) * t + 10 && term < 1e-18) break;
      }
      w.update(std::abs(mass - 1.0), [&] { return fmt("mass at t=%g", t); });
    }
  });
}

Check check_horocycle(int q, std::span<const double> ts, int max_n, double threshold) {
  return run(fmt("horocycle solution residual (q=%d)", q), threshold, [&](Worst& w) {
    for (double t : ts) {
      for (int n = -max_n; n <= max_n; ++n) {
        w.update(std::abs(horocycle_residual(q, t, n)),
                 [&] { return fmt("t=%g n=%d", t, n); });
      }
    }
  });
}

Check check_tree_zeta_identity(int q, std::span<const double> us, double threshold) {
  return run(fmt("tree zeta identity (q=%d)", q), threshold, [&](Worst& w) {
    const SpectralMeasure mu = kesten_tree_measure(q);
    for (double u : us) {
      w.update(std::abs(zeta_spectral(mu, q, u) - 1.0), [&] { return fmt("u=%g", u); });
    }
  });
}

Check check_kesten_moments(int q, int max_k) {
  return run(fmt("tree spectral moments vs walk counts (q=%d)", q), 0.0, [&](Worst& w) {
    const SpectralMeasure mu = kesten_tree_measure(q);
    for (int k = 0; k <= max_k; ++k) {
      const double moment = spectral_moment(mu, k);
      const double rounded = std::round(moment);
      const bool ok = std::abs(moment - rounded) <= 1e-6 &&
                      BigInt(static_cast<long long>(rounded)) == tree_closed_walks(q, k);
      w.update(ok ? 0.0 : 1.0, [&] {
        return fmt("k=%d moment=%.12g walks=%s", k, moment,
                   tree_closed_walks(q, k).str().c_str());
      });
    }
  });
}

Check check_tree_diagonal_transform(int q, std::span<const double> us, double threshold) {
  return run(fmt("g-transform of the tree diagonal (q=%d)", q), threshold, [&](Worst& w) {
    for (double u : us) {
      const auto r = g_transform_numeric(
          [&](double t) { return tree_heat_kernel(q, t, 0).value; }, q, u, 1e-10,
          tree_growth(q));
      const double expected = 1.0 / u - (q - 1.0) * u / (1.0 - u * u);
      w.update(std::abs(r.value - expected), [&] { return fmt("u=%g", u); });
    }
  });
}

Check check_counting_oracle(const Graph& g, int max_k) {
  return run("counting recursions vs enumeration", 0.0, [&](Worst& w) {
    const int q = g.require_regular();
    const int n = g.num_vertices();
    const bool transitive =
        check_vertex_transitive(g).verdict == TransitivityVerdict::transitive;
    auto mismatch = [&](const std::string& what) {
      w.update(1.0, [&] { return what; });
    };

    CountSequence loops(max_k + 1), enumerated_total(max_k + 1), primitive(max_k + 1);
    for (Vertex x0 = 0; x0 < n; ++x0) {
      const VertexTable c = geodesic_counts(g, x0, max_k);
      if (c != geodesic_counts_three_term(g, x0, max_k)) mismatch(fmt("c_k three-term x0=%d", x0));
      if (c != enumerate_geodesic_counts(g, x0, max_k)) mismatch(fmt("c_k enumeration x0=%d", x0));
      if (path_counts(g, x0, max_k) != enumerate_path_counts(g, x0, max_k)) {
        mismatch(fmt("a_k enumeration x0=%d", x0));
      }
      const CountSequence c0 = diagonal(c, x0);
      const CountSequence closed = closed_from_loop_counts(c0, q);
      if (closed != closed_from_loop_counts_recursive(c0, q)) {
        mismatch(fmt("N_k^0 recursions x0=%d", x0));
      }
      CountSequence enumerated(max_k + 1);
      for (int k = 0; k <= max_k; ++k) {
        const auto cycles = enumerate_closed_geodesics(g, x0, k, max_k);
        enumerated[k] = cycles.size();
        loops[k] += c0[k];
        enumerated_total[k] += cycles.size();
        if (k > 0) {
          primitive[k] += std::count_if(cycles.begin(), cycles.end(), is_primitive);
        }
      }
      if (transitive && closed != enumerated) {
        mismatch(fmt("N_k^0 vs enumeration x0=%d", x0));
      }
    }
    const CountSequence total = closed_geodesics_total(g, max_k);
    if (total != enumerated_total) mismatch("N_k vs enumeration");
    if (geodesic_loop_totals(g, max_k) != loops) mismatch("loop totals");
    const CountSequence primes = prime_geodesic_counts(total, max_k);
    for (int k = 1; k <= max_k; ++k) {
      if (primes[k] * k != primitive[k]) mismatch(fmt("pi_%d vs primitive enumeration", k));
    }
  });
}

std::vector<Check> check_heat_three_way(const Graph& g, std::span<const double> ts,
                                        double spectral_threshold, double ode_threshold) {
  Worst spectral_worst, ode_worst;
  Check spectral = run("heat series vs spectral", spectral_threshold, [&](Worst& w) {
    const SpectralData sd = spectral_decomposition(g);
    const double t_max = *std::max_element(ts.begin(), ts.end());
    for (Vertex x0 = 0; x0 < g.num_vertices(); ++x0) {
      const HeatSeries series(g, x0, t_max);
      for (double t : ts) {
        const std::vector<double> values = series.evaluate_all(t);
        const std::vector<double> ode = heat_kernel_ode(g, x0, t);
        for (Vertex x = 0; x < g.num_vertices(); ++x) {
          w.update(std::abs(values[x] - heat_kernel_spectral(sd, x0, x, t)),
                   [&] { return fmt("t=%g x0=%d x=%d", t, x0, x); });
          ode_worst.update(std::abs(values[x] - ode[x]),
                           [&] { return fmt("t=%g x0=%d x=%d", t, x0, x); });
        }
      }
    }
  });
  Check ode{"heat series vs ODE", ode_worst.value, ode_threshold,
            ode_worst.value <= ode_threshold, ""};
  if (!ode.pass) ode.detail = ode_worst.where;
  if (std::isinf(spectral.worst)) {
    ode.pass = false;
    ode.worst = spectral.worst;
    ode.detail = spectral.detail;
  }
  return {spectral, ode};
}

Check check_heat_mass(const Graph& g, std::span<const double> ts, double threshold) {
  return run("heat mass, positivity and initial value", threshold, [&](Worst& w) {
    const double t_max = *std::max_element(ts.begin(), ts.end());
    for (Vertex x0 = 0; x0 < g.num_vertices(); ++x0) {
      const HeatSeries series(g, x0, t_max);
      const std::vector<double> initial = series.evaluate_all(0.0);
      for (Vertex x = 0; x < g.num_vertices(); ++x) {
        w.update(std::abs(initial[x] - (x == x0 ? 1.0 : 0.0)),
                 [&] { return fmt("t=0 x0=%d x=%d", x0, x); });
      }
      for (double t : ts) {
        const std::vector<double> values = series.evaluate_all(t);
        double mass = 0.0;
        for (Vertex x = 0; x < g.num_vertices(); ++x) {
          if (!(values[x] > 0.0)) {
            w.update(std::numeric_limits<double>::infinity(),
                     [&] { return fmt("nonpositive t=%g x0=%d x=%d", t, x0, x); });
          }
          mass += values[x];
        }
        w.update(std::abs(mass - 1.0), [&] { return fmt("mass t=%g x0=%d", t, x0); });
      }
    }
  });
}

Check check_zeta_series(const Graph& g, int M) {
  return run("zeta log-series vs Euler product", 0.0, [&](Worst& w) {
    const CountSequence total = closed_geodesics_total(g, M);
    const ExactSeries log_series = zeta_log_series_from_counts(total, M);
    const ExactSeries euler = euler_product_series(prime_geodesic_counts(total, M), M);
    if (log_series.exp() != euler) w.update(1.0, [] { return std::string("exp(log) != Euler"); });
    if (euler.log() != log_series) w.update(1.0, [] { return std::string("log(Euler) != log"); });
    if (check_vertex_transitive(g).verdict == TransitivityVerdict::transitive) {
      const CountSequence per_vertex = closed_geodesics_at_vertex(g, 0, M);
      for (int m = 1; m <= M; ++m) {
        if (total[m] != per_vertex[m] * g.num_vertices()) {
          w.update(1.0, [&] { return fmt("N_%d != n N_%d^0", m, m); });
        }
      }
    }
  });
}

Check check_determinant_recovery(const Graph& g, int M, double threshold) {
  return run("determinant-formula integer recovery", threshold, [&](Worst& w) {
    const CountSequence total = closed_geodesics_total(g, M);
    const CountRecovery rec =
        recover_counts(ihara_determinant_series(spectral_decomposition(g), M));
    w.update(rec.max_deviation, [] { return std::string("pre-round deviation"); });
    for (int m = 1; m <= M; ++m) {
      if (rec.counts[m] != total[m]) {
        w.update(std::numeric_limits<double>::infinity(), [&] {
          return fmt("m=%d recovered %s, counted %s", m, rec.counts[m].str().c_str(),
                     total[m].str().c_str());
        });
      }
    }
  });
}

Check check_zeta_pointwise(const Graph& g, std::span<const double> us, double threshold) {
  return run("spectral zeta vs count series", threshold, [&](Worst& w) {
    const int q = g.require_regular();
    const int terms = 120;
    const SpectralData sd = spectral_decomposition(g);
    const CountSequence total = closed_geodesics_total(g, terms);
    const bool transitive =
        check_vertex_transitive(g).verdict == TransitivityVerdict::transitive;
    const CountSequence per_vertex =
        transitive ? closed_geodesics_at_vertex(g, 0, terms) : CountSequence{};
    auto log_sum = [&](const CountSequence& counts, double u) {
      long double s = 0.0L, p = 1.0L;
      for (int m = 1; m <= terms; ++m) {
        p *= u;
        s += counts[m].convert_to<long double>() * p / m;
      }
      return static_cast<double>(s);
    };
    for (double u : us) {
      if (!(u < 1.0 / q)) continue;
      // Product over base vertices of the per-vertex factors is zeta^{Ih}.
      double log_inverse = 0.0;
      for (Vertex x0 = 0; x0 < g.num_vertices(); ++x0) {
        log_inverse += std::log(zeta_spectral(SpectralMeasure::atomic_at(sd, x0), q, u));
      }
      w.update(std::abs(std::expm1(-log_inverse - log_sum(total, u))),
               [&] { return fmt("Ihara zeta u=%g", u); });
      if (transitive) {
        const double inverse = zeta_spectral(SpectralMeasure::atomic_at(sd, 0), q, u);
        w.update(std::abs(inverse - std::exp(-log_sum(per_vertex, u))),
                 [&] { return fmt("vertex zeta u=%g", u); });
      }
    }
  });
}

Check check_diagonal_transform(const Graph& g, std::span<const double> us, double threshold) {
  if (check_vertex_transitive(g).verdict != TransitivityVerdict::transitive) {
    return skipped("g-transform of the diagonal heat kernel", "not vertex-transitive");
  }
  return run("g-transform of the diagonal heat kernel", threshold, [&](Worst& w) {
    const int q = g.require_regular();
    const CountSequence per_vertex = closed_geodesics_at_vertex(g, 0, 120);
    const double tol = 1e-10;
    for (double u : us) {
      if (!(u < 0.5 / q)) continue;
      const GrowthBound growth = finite_graph_growth(q);
      const HeatSeries series(g, 0, g_transform_horizon(q, u, tol, growth));
      const auto r = g_transform_numeric([&](double t) { return series.evaluate(0, t).value; },
                                         q, u, tol, growth);
      w.update(std::abs(r.value - diagonal_g_transform_expected(q, per_vertex, u)),
               [&] { return fmt("u=%g", u); });
    }
  });
}

Check check_corollary(const Graph& g, std::span<const double> ts, double threshold) {
  if (check_vertex_transitive(g).verdict != TransitivityVerdict::transitive) {
    return skipped("diagonal heat kernel from closed geodesics", "not vertex-transitive");
  }
  return run("diagonal heat kernel from closed geodesics", threshold, [&](Worst& w) {
    const double t_max = *std::max_element(ts.begin(), ts.end());
    const HeatSeries series(g, 0, t_max);
    for (double t : ts) {
      w.update(std::abs(corollary_diagonal(g, 0, t) - series.evaluate(0, t).value),
               [&] { return fmt("t=%g", t); });
    }
  });
}

Check check_two_variable_zeta(const Graph& g, std::span<const double> us, double threshold) {
  return run("two-variable zeta series vs spectral", threshold, [&](Worst& w) {
    const int q = g.require_regular();
    for (Vertex x = 1; x < g.num_vertices(); ++x) {
      const TwoVariableZeta z(g, 0, x, 120);
      for (double u : us) {
        if (!(u < 1.0 / q)) continue;
        w.update(std::abs(z.evaluate_series(u) - z.evaluate_spectral(u)),
                 [&] { return fmt("x=%d u=%g", x, u); });
      }
    }
  });
}

VerifyReport verify_graph(const Graph& g) {
  const int q = g.require_regular();
  VerifyReport report{g.name(), {}};
  auto& c = report.checks;
  const std::vector<double> bessel_ts{0.01, 0.1, 1.0, 5.0, 20.0};
  const std::vector<double> laplace_ss{0.5, 1.0, 2.0};
  const std::vector<double> block_us{0.1 / std::sqrt(double(q)), 0.25 / std::sqrt(double(q))};
  const std::vector<double> heat_ts{0.1, 0.5, 1.0, 2.0};
  const std::vector<double> zeta_us{0.02, 0.05, 0.1 / q};
  const std::vector<double> diagonal_us{0.02, 0.05};

  c.push_back(check_bessel_agreement(20, bessel_ts));
  c.push_back(check_laplace_identity(6, laplace_ss));
  c.push_back(check_building_block_transform(q, 6, block_us));
  c.push_back(check_counting_oracle(g, 10));
  for (Check& h : check_heat_three_way(g, heat_ts)) c.push_back(std::move(h));
  c.push_back(check_heat_mass(g, heat_ts));
  c.push_back(check_corollary(g, heat_ts));
  c.push_back(check_zeta_series(g, 12));
  c.push_back(check_determinant_recovery(g, 12));
  c.push_back(check_zeta_pointwise(g, zeta_us));
  c.push_back(check_diagonal_transform(g, diagonal_us));
  c.push_back(check_two_variable_zeta(g, diagonal_us));
  return report;
}

VerifyReport verify_tree(int q, int max_r) {
  if (q < 1) throw std::invalid_argument("verify_tree: q >= 1");
  if (max_r < 0) throw std::invalid_argument("verify_tree: radius >= 0");
  VerifyReport report{fmt("tree(q=%d)", q), {}};
  auto& c = report.checks;
  const double root = std::sqrt(double(q));
  const std::vector<double> bessel_ts{0.01, 0.1, 1.0, 5.0, 20.0};
  const std::vector<double> laplace_ss{0.5, 1.0, 2.0};
  const std::vector<double> block_us{0.1 / root, 0.25 / root};
  const std::vector<double> tree_ts{0.1, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> zeta_us;
  for (double u : {0.05, 0.1, 0.2}) {
    if (u < 1.0 / q) zeta_us.push_back(u);
  }
  std::vector<double> diagonal_us;
  for (double u : {0.1, 0.2}) {
    if (u < 1.0 / root) diagonal_us.push_back(u);
  }

  c.push_back(check_bessel_agreement(20, bessel_ts));
  c.push_back(check_laplace_identity(6, laplace_ss));
  c.push_back(check_building_block_transform(q, 6, block_us));
  c.push_back(check_tree_formula(q, tree_ts, max_r));
  c.push_back(check_tree_residual(q, tree_ts, max_r));
  c.push_back(check_tree_mass(q, tree_ts));
  c.push_back(check_horocycle(q, tree_ts, max_r));
  c.push_back(check_tree_zeta_identity(q, zeta_us));
  c.push_back(check_kesten_moments(q, 12));
  c.push_back(check_tree_diagonal_transform(q, diagonal_us));
  return report;
}

}  // namespace hkzeta

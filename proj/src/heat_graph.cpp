#include "hkzeta/heat_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "hkzeta/bessel.hpp"
#include "hkzeta/heat_tree.hpp"

namespace hkzeta {
namespace {

// Bound on |coefficient_m| for m >= 1 in the two series built on the tree
// blocks: b_m(x) in the theorem series, N_m^0 in the diagonal corollary.
enum class CoefficientBound { b_coefficient, closed_geodesic };

double log_coefficient_bound(int q, int m, CoefficientBound kind) {
  const double qq = q;
  const double grow = (m - 1) * std::log(qq);
  if (kind == CoefficientBound::closed_geodesic) return std::log(qq + 1.0) + grow;
  // c_m <= (q+1) q^{m-1}; the alternating tail adds at most q^{m-1} + (q-1).
  return grow + std::log(qq + 2.0 + qq * std::exp(-grow));
}

double series_tail(int q, double t, int M, CoefficientBound kind) {
  if (t == 0.0) return 0.0;
  const double z = 2.0 * std::sqrt(double(q)) * t;
  double sum = 0.0;
  for (int m = std::max(M + 1, 1);; ++m) {
    const double term =
        std::exp(log_coefficient_bound(q, m, kind) + log_building_block_bound(q, m, t));
    // Ratio of consecutive bound terms is at most sqrt(q) (1 + m/z)^{-1/2}.
    const double rho = std::sqrt(double(q) / (1.0 + m / z));
    if (rho <= 0.5) return sum + term / (1.0 - rho);
    sum += term;
  }
}

int smallest_order(int q, double t, double tol, CoefficientBound kind) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  // The tail is decreasing in M: bracket, then bisect.
  int hi = 1;
  while (series_tail(q, t, hi, kind) > tol) hi *= 2;
  int lo = -1;  // tail(lo) > tol, with tail(-1) read as +infinity
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (mid >= 0 && series_tail(q, t, mid, kind) <= tol) hi = mid;
    else lo = mid;
  }
  return hi;
}

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("time must be finite and >= 0");
}

}  // namespace

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) a(g.origin(e), g.terminus(e)) += 1.0;
  return a;
}

Eigen::MatrixXd laplacian(const Graph& g) {
  const int q = g.require_regular();
  const int n = g.num_vertices();
  return (q + 1.0) * Eigen::MatrixXd::Identity(n, n) - adjacency_matrix(g);
}

SpectralData spectral_decomposition(const Graph& g) {
  if (g.num_vertices() > kMaxSpectralVertices) {
    throw std::invalid_argument("spectral path refused: " +
                                std::to_string(g.num_vertices()) + " vertices exceeds " +
                                std::to_string(kMaxSpectralVertices));
  }
  SpectralData sd;
  sd.q = g.require_regular();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen-solve of the Laplacian failed");
  }
  sd.eigenvalues = solver.eigenvalues();
  sd.eigenvectors = solver.eigenvectors();
  return sd;
}

double heat_kernel_spectral(const SpectralData& sd, Vertex x0, Vertex x, double t) {
  check_time(t);
  long double sum = 0.0L;
  for (Eigen::Index j = 0; j < sd.eigenvalues.size(); ++j) {
    sum += std::exp(-sd.eigenvalues[j] * t) * sd.eigenvectors(x, j) *
           sd.eigenvectors(x0, j);
  }
  return static_cast<double>(sum);
}

VertexTable b_coefficients_from_geodesics(const VertexTable& c, int q) {
  VertexTable b = c;
  if (c.empty()) return b;
  // tails[p][x] = c_{m-2}(x) + c_{m-4}(x) + ... for m of parity p.
  std::vector<std::vector<BigInt>> tails(2, std::vector<BigInt>(c[0].size()));
  for (std::size_t m = 2; m < c.size(); ++m) {
    auto& tail = tails[m % 2];
    for (std::size_t x = 0; x < c[m].size(); ++x) {
      tail[x] += c[m - 2][x];
      b[m][x] -= (q - 1) * tail[x];
    }
  }
  return b;
}

VertexTable b_coefficients(const Graph& g, Vertex x0, int M) {
  return b_coefficients_from_geodesics(geodesic_counts(g, x0, M), g.require_regular());
}

double HeatSeries::certified_tail(int q, double t, int M) {
  return series_tail(q, t, M, CoefficientBound::b_coefficient);
}

int HeatSeries::certified_order(int q, double t, double tol) {
  return smallest_order(q, t, tol, CoefficientBound::b_coefficient);
}

HeatSeries::HeatSeries(const Graph& g, Vertex x0, double t_max, double tol)
    : q_(g.require_regular()), x0_(x0), t_max_(t_max), tol_(tol) {
  check_time(t_max);
  if (!(tol > 0.0)) throw std::invalid_argument("HeatSeries: tol > 0");
  // The doubling loop in evaluate() starts at 16; once the order reaches a
  // power of two past the certified order, one more doubling passes both tests.
  const int needed = certified_order(q_, t_max, 0.5 * tol);
  int order = 16;
  while (order < needed) order *= 2;
  order *= 2;
  b_exact_ = b_coefficients(g, x0, order);
  b_.resize(b_exact_.size());
  for (std::size_t m = 0; m < b_exact_.size(); ++m) {
    b_[m].reserve(b_exact_[m].size());
    for (const auto& v : b_exact_[m]) b_[m].push_back(v.convert_to<long double>());
  }
}

HeatSeries::Slice HeatSeries::slice(double t) const {
  check_time(t);
  if (t > t_max_) {
    throw std::invalid_argument("HeatSeries: t = " + std::to_string(t) +
                                " beyond the prepared range t_max = " +
                                std::to_string(t_max_));
  }
  Slice s;
  s.t = t;
  s.blocks.resize(order() + 1);
  const long double log_q = std::log(static_cast<long double>(q_));
  const double z = 2.0 * std::sqrt(double(q_)) * t;
  for (int m = 0; m <= order(); ++m) {
    const double direct = building_block(q_, m, t);
    if (direct > 1e-280 || t == 0.0) {
      s.blocks[m] = direct;
    } else {
      // Below the double range the block can still meet a huge b_m.
      s.blocks[m] = std::exp(static_cast<long double>(log_bessel_i(m, z)) - 0.5L * m * log_q -
                             static_cast<long double>(q_ + 1) * t);
    }
  }
  for (int M = 16; M <= order(); M *= 2) s.tails.push_back(certified_tail(q_, t, M));
  return s;
}

HeatKernelEvaluation HeatSeries::evaluate(Vertex x, const Slice& s) const {
  if (x < 0 || x >= num_vertices()) throw std::invalid_argument("vertex out of range");
  auto partial = [&](int M) {
    long double sum = 0.0L;
    for (int m = 0; m <= M; ++m) sum += b_[m][x] * s.blocks[m];
    return static_cast<double>(sum);
  };
  int M = 16, level = 0;
  double prev = partial(M);
  while (2 * M <= order()) {
    const double cur = partial(2 * M);
    const double tail = s.tails[level + 1];
    if (std::abs(cur - prev) <= tol_ && tail <= tol_) return {cur, 2 * M + 1, tail};
    prev = cur;
    M *= 2;
    ++level;
  }
  return {prev, M + 1, s.tails[level]};
}

HeatKernelEvaluation HeatSeries::evaluate(Vertex x, double t) const {
  return evaluate(x, slice(t));
}

std::vector<double> HeatSeries::evaluate_all(double t) const {
  const Slice s = slice(t);
  std::vector<double> out(num_vertices());
  for (Vertex x = 0; x < num_vertices(); ++x) out[x] = evaluate(x, s).value;
  return out;
}

HeatKernelEvaluation heat_kernel_series(const Graph& g, Vertex x0, Vertex x, double t,
                                        double tol) {
  return HeatSeries(g, x0, t, tol).evaluate(x, t);
}

std::vector<std::vector<double>> heat_kernel_table(const HeatSeries& series,
                                                   std::span<const double> times,
                                                   Exec exec) {
  const int nt = static_cast<int>(times.size());
  const int n = series.num_vertices();
  std::vector<HeatSeries::Slice> slices(nt);
  std::vector<std::vector<double>> table(nt, std::vector<double>(n));
  const int cells = nt * n;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nt; ++i) slices[i] = series.slice(times[i]);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < cells; ++i) {
      table[i / n][i % n] = series.evaluate(i % n, slices[i / n]).value;
    }
  } else {
    for (int i = 0; i < nt; ++i) slices[i] = series.slice(times[i]);
    for (int i = 0; i < cells; ++i) {
      table[i / n][i % n] = series.evaluate(i % n, slices[i / n]).value;
    }
  }
  return table;
}

std::vector<double> heat_kernel_ode(const Graph& g, Vertex x0, double t, double tol) {
  namespace odeint = boost::numeric::odeint;
  check_time(t);
  const int q = g.require_regular();
  using State = std::vector<double>;
  State k(g.num_vertices(), 0.0);
  k.at(x0) = 1.0;
  if (t == 0.0) return k;
  auto rhs = [&](const State& f, State& df, double) {
    for (std::size_t x = 0; x < f.size(); ++x) df[x] = -(q + 1.0) * f[x];
    for (EdgeId e = 0; e < g.num_edges(); ++e) df[g.terminus(e)] += f[g.origin(e)];
  };
  try {
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_adaptive(stepper, rhs, k, 0.0, t, std::min(1e-3, t));
  } catch (const odeint::odeint_error& e) {
    throw std::runtime_error(std::string("heat_kernel_ode: step-size underflow: ") +
                             e.what());
  }
  return k;
}

int corollary_order(int q, double t, double tol) {
  return smallest_order(q, t, tol, CoefficientBound::closed_geodesic);
}

double corollary_diagonal_from_counts(int q, const CountSequence& closed_at_vertex,
                                      double t, double tol) {
  check_time(t);
  long double sum = tree_heat_kernel(q, t, 0, 0.5 * tol).value;
  for (std::size_t m = 1; m < closed_at_vertex.size(); ++m) {
    if (closed_at_vertex[m] == 0) continue;
    sum += closed_at_vertex[m].convert_to<long double>() *
           building_block(q, static_cast<int>(m), t);
  }
  return static_cast<double>(sum);
}

double corollary_diagonal(const Graph& g, Vertex x0, double t, double tol,
                          Transitivity mode) {
  const int q = g.require_regular();
  const int M = std::max(1, corollary_order(q, t, 0.5 * tol));
  return corollary_diagonal_from_counts(q, closed_geodesics_at_vertex(g, x0, M, mode), t,
                                        tol);
}

}  // namespace hkzeta

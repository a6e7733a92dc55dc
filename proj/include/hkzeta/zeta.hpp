#pragma once

// Ihara-type zeta functions of (q+1)-regular graphs.
//
//   log zeta^{Ih}(u) = sum_m N_m u^m / m            (finite graphs)
//   log zeta(u)      = sum_m N_m^0 u^m / m          (vertex-transitive graphs)
//   log zeta(u, x)   = sum_m b_m(x) u^m / m         (two-variable, x != x0)
//
// computed from counts, from the Euler product over prime geodesics, from
// the Laplacian spectrum (determinant formula), and from a spectral measure.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hkzeta/counting.hpp"
#include "hkzeta/graph.hpp"
#include "hkzeta/heat_graph.hpp"
#include "hkzeta/power_series.hpp"

namespace hkzeta {

using Rational = boost::multiprecision::cpp_rational;
using ExactSeries = PowerSeries<Rational>;
using RealSeries = PowerSeries<long double>;

/// sum_{m=1}^{M} counts[m] u^m / m.
ExactSeries zeta_log_series_from_counts(const CountSequence& counts, int M);

/// prod_k (1 - u^k)^{-pi_k} expanded to order M (integer coefficients).
ExactSeries euler_product_series(const CountSequence& primes, int M);

/// log zeta^{Ih} from the determinant formula, through the Laplacian
/// eigenvalues: coefficient m is
///   ( sum_j (alpha_j^m + beta_j^m) + n (q-1) [m even] ) / m
/// where alpha_j beta_j = q and alpha_j + beta_j = q + 1 - lambda_j.
RealSeries ihara_determinant_series(const SpectralData& sd, int M);

struct CountRecovery {
  CountSequence counts;        // index 0 unused (0)
  double max_deviation = 0.0;  // max |m c_m - round(m c_m)| before rounding
};

/// Rounds m [u^m] of a real log-series to integers.
CountRecovery recover_counts(const RealSeries& log_series);

/// Spectral measure of the Laplacian at a base vertex: atomic for finite
/// graphs, the Kesten-McKay density for the (q+1)-regular tree.
struct SpectralMeasure {
  enum class Kind { atomic, tree_density };
  Kind kind = Kind::atomic;
  int q = 1;
  std::vector<double> points;   // atomic: lambda_j
  std::vector<double> weights;  // atomic: psi_j(x0)^2

  static SpectralMeasure atomic_at(const SpectralData& sd, Vertex x0);
};

/// Kesten-McKay density in the Laplacian variable lambda, supported on
/// [q+1-2 sqrt(q), q+1+2 sqrt(q)].
double kesten_mckay_density(int q, double lambda);

SpectralMeasure kesten_tree_measure(int q);

/// int (q+1-lambda)^k d mu(lambda).
double spectral_moment(const SpectralMeasure& mu, int k, double tol = 1e-14);

/// Closed walks of length k at a vertex of the (q+1)-regular tree.
BigInt tree_closed_walks(int q, int k);

/// zeta(u)^{-1} = (1-u^2)^{(q-1)/2} exp( int log(1-(q+1-lambda)u+qu^2) d mu ).
/// Requires 0 < u < 1/q.
double zeta_spectral(const SpectralMeasure& mu, int q, double u, double tol = 1e-13);

/// d/du [ log u + (q-1)/2 log(1-u^2) + log zeta(u) ] from N_m^0
/// (index 0 ignored), truncated at the end of the sequence.
double diagonal_g_transform_expected(int q, const CountSequence& closed_at_vertex,
                                     double u);

/// Two-variable zeta log zeta(u, x) for x != x0 on a finite graph.
class TwoVariableZeta {
 public:
  TwoVariableZeta(const Graph& g, Vertex x0, Vertex x, int M);

  /// sum_{m=1}^{M} b_m(x) u^m / m, exact.
  const ExactSeries& series() const { return series_; }
  double evaluate_series(double u) const;
  /// -sum_j psi_j(x) psi_j(x0) log(1 - (q+1-lambda_j) u + q u^2); 0 < u < 1/q.
  double evaluate_spectral(double u) const;

 private:
  int q_;
  Vertex x0_, x_;
  ExactSeries series_;
  SpectralData spectral_;
};

}  // namespace hkzeta

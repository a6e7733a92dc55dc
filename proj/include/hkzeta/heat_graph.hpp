#pragma once

// Heat kernel K(t, x0, x) on a finite (q+1)-regular graph, computed three ways:
//
//  * HeatSeries  - e^{-(q+1)t} sum_m b_m(x) q^{-m/2} I_m(2 sqrt(q) t), with
//                  b_m(x) = c_m(x) - (q-1)(c_{m-2}(x) + c_{m-4}(x) + ...)
//                  (the tail ends at c_1 or c_0 according to parity);
//  * spectral    - sum_j e^{-lambda_j t} psi_j(x) psi_j(x0) over an
//                  orthonormal eigenbasis of the Laplacian;
//  * ODE         - dK/dt = -Laplacian K from the indicator of x0 (oracle).

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hkzeta/counting.hpp"
#include "hkzeta/exec.hpp"
#include "hkzeta/graph.hpp"

namespace hkzeta {

inline constexpr int kMaxSpectralVertices = 2048;

/// Dense (q+1) I - A. Throws GraphError for non-regular input.
Eigen::MatrixXd laplacian(const Graph& g);

/// Dense adjacency matrix with edge multiplicities.
Eigen::MatrixXd adjacency_matrix(const Graph& g);

struct SpectralData {
  int q = 1;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column j is psi_j, orthonormal
};

/// Dense symmetric eigen-solve of the Laplacian. Refuses graphs with more
/// than kMaxSpectralVertices vertices.
SpectralData spectral_decomposition(const Graph& g);

double heat_kernel_spectral(const SpectralData& sd, Vertex x0, Vertex x, double t);

/// b_m(x) for m = 0..M, x over all vertices. Entries may be negative.
VertexTable b_coefficients(const Graph& g, Vertex x0, int M);

/// b_m(x) from an existing geodesic-count table c_m(x).
VertexTable b_coefficients_from_geodesics(const VertexTable& c, int q);

struct HeatKernelEvaluation {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;  // certified bound on the omitted series terms
};

/// Series evaluator for one base vertex. The coefficient table is built
/// once, large enough to certify tolerance `tol` for every t <= t_max; after
/// construction all evaluation is read-only and thread-safe.
class HeatSeries {
 public:
  HeatSeries(const Graph& g, Vertex x0, double t_max, double tol = 1e-13);

  int q() const { return q_; }
  Vertex base() const { return x0_; }
  int num_vertices() const { return static_cast<int>(b_.empty() ? 0 : b_[0].size()); }
  int order() const { return static_cast<int>(b_.size()) - 1; }
  double t_max() const { return t_max_; }
  const VertexTable& b() const { return b_exact_; }

  /// Truncation by doubling the order until two successive partial sums
  /// agree to tol and the certified tail is below tol.
  HeatKernelEvaluation evaluate(Vertex x, double t) const;
  std::vector<double> evaluate_all(double t) const;

  /// Everything that depends on t alone (building blocks, tail bounds);
  /// reuse it to evaluate many vertices at the same time.
  struct Slice {
    double t = 0.0;
    std::vector<long double> blocks;
    std::vector<double> tails;  // certified tail at orders 16, 32, ...
  };
  Slice slice(double t) const;
  HeatKernelEvaluation evaluate(Vertex x, const Slice& s) const;

  /// Smallest order whose certified tail is below tol at time t.
  static int certified_order(int q, double t, double tol);
  /// Certified bound on sum_{m > M} |b_m| B_m(t).
  static double certified_tail(int q, double t, int M);

 private:
  int q_ = 1;
  Vertex x0_ = 0;
  double t_max_ = 0.0;
  double tol_ = 0.0;
  VertexTable b_exact_;
  std::vector<std::vector<long double>> b_;  // [m][x]; exceeds double range at high order
};

/// One-shot Theorem-series evaluation.
HeatKernelEvaluation heat_kernel_series(const Graph& g, Vertex x0, Vertex x, double t,
                                        double tol = 1e-13);

/// K(t, x0, x) for every t in `times` and every x; rows follow `times`.
/// Parallel over (t, x); the serial loop is the reference.
std::vector<std::vector<double>> heat_kernel_table(const HeatSeries& series,
                                                   std::span<const double> times,
                                                   Exec exec = Exec::parallel);

/// Adaptive Dormand-Prince integration of dK/dt = -Laplacian K from the
/// indicator of x0. Test oracle only. Throws std::runtime_error if the step
/// size underflows.
std::vector<double> heat_kernel_ode(const Graph& g, Vertex x0, double t,
                                    double tol = 1e-12);

/// Diagonal formula for vertex-transitive graphs:
///   K(t, x0, x0) = K_tree(t, 0) + e^{-(q+1)t} sum_{m>=1} N_m^0 q^{-m/2} I_m(2 sqrt(q) t).
double corollary_diagonal(const Graph& g, Vertex x0, double t, double tol = 1e-13,
                          Transitivity mode = Transitivity::verify);

/// Same formula from a closed-geodesic sequence N_m^0 (index 0 ignored);
/// terms beyond the sequence are treated as zero, so pass enough terms.
double corollary_diagonal_from_counts(int q, const CountSequence& closed_at_vertex,
                                      double t, double tol = 1e-13);

/// Closed-geodesic order needed so corollary_diagonal's omitted terms stay
/// below tol at time t.
int corollary_order(int q, double t, double tol);

}  // namespace hkzeta

#pragma once

// Identity and cross-check suite shared by the `verify` command and the
// acceptance tests. Each check reports its worst discrepancy next to the
// threshold it is held to; exact checks report a mismatch count against 0.

#include <span>
#include <string>
#include <vector>

#include "hkzeta/graph.hpp"

namespace hkzeta {

struct Check {
  std::string name;
  double worst = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;  // failing case or exception message
};

struct VerifyReport {
  std::string target;
  std::vector<Check> checks;
  bool passed() const;
};

// Bessel / transform calibration.
Check check_bessel_agreement(int max_order, std::span<const double> ts,
                             double threshold = 1e-9);
Check check_laplace_identity(int max_n, std::span<const double> ss, double threshold = 1e-9);
Check check_building_block_transform(int q, int max_k, std::span<const double> us,
                                     double threshold = 1e-6);

// Tree.
Check check_tree_formula(int q, std::span<const double> ts, int max_r,
                         double threshold = 1e-8);
Check check_tree_residual(int q, std::span<const double> ts, int max_r,
                          double threshold = 1e-8);
Check check_tree_mass(int q, std::span<const double> ts, double threshold = 1e-9);
Check check_horocycle(int q, std::span<const double> ts, int max_n, double threshold = 1e-10);
Check check_tree_zeta_identity(int q, std::span<const double> us, double threshold = 1e-7);
Check check_kesten_moments(int q, int max_k);
Check check_tree_diagonal_transform(int q, std::span<const double> us,
                                    double threshold = 1e-6);

// Finite graphs.
Check check_counting_oracle(const Graph& g, int max_k);
std::vector<Check> check_heat_three_way(const Graph& g, std::span<const double> ts,
                                        double spectral_threshold = 1e-7,
                                        double ode_threshold = 1e-6);
Check check_heat_mass(const Graph& g, std::span<const double> ts, double threshold = 1e-9);
Check check_zeta_series(const Graph& g, int M);
Check check_determinant_recovery(const Graph& g, int M, double threshold = 1e-6);
Check check_zeta_pointwise(const Graph& g, std::span<const double> us,
                           double threshold = 1e-8);
Check check_diagonal_transform(const Graph& g, std::span<const double> us,
                               double threshold = 1e-6);
Check check_corollary(const Graph& g, std::span<const double> ts, double threshold = 1e-9);
Check check_two_variable_zeta(const Graph& g, std::span<const double> us,
                              double threshold = 1e-8);

/// Full suite on a finite graph. Checks that need vertex transitivity are
/// skipped (and named as such) when the automorphism search cannot confirm it.
VerifyReport verify_graph(const Graph& g);

/// Full suite on the (q+1)-regular tree, radii 0..max_r.
VerifyReport verify_tree(int q, int max_r = 10);

}  // namespace hkzeta

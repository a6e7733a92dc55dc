#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hkzeta/bessel.hpp"
#include "hkzeta/counting.hpp"
#include "hkzeta/gtransform.hpp"
#include "hkzeta/heat_graph.hpp"
#include "hkzeta/heat_tree.hpp"
#include "hkzeta/zeta.hpp"

using namespace hkzeta;

TEST_CASE("Laplace identity") {
  CHECK(laplace_closed_form(0, 1.0) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(laplace_closed_form(1, 1.0) == doctest::Approx((2 - std::sqrt(3.0)) / std::sqrt(3.0)).epsilon(1e-15));
  for (int n = 0; n <= 6; ++n) {
    for (double s : {0.5, 1.0, 2.0}) {
      const LaplaceIdentity li = laplace_identity_check(n, s);
      CHECK(std::abs(li.numeric - li.closed_form) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(laplace_closed_form(1, 0.0), std::invalid_argument);
}

TEST_CASE("building blocks transform to powers of u") {
  for (int q : {1, 2, 3}) {
    for (int k = 0; k <= 6; ++k) {
      for (double scale : {0.1, 0.25, 0.6}) {
        const double u = scale / std::sqrt(double(q));
        const GTransformResult r = g_transform_numeric(
            [&](double t) { return building_block(q, k, t); }, q, u, 1e-10, tree_growth(q));
        CHECK(r.u == u);
        CHECK(std::abs(r.value - std::pow(u, k - 1)) <= 1e-6);
        CHECK(r.quadrature_error <= 1e-9);
      }
    }
  }
}

TEST_CASE("tree diagonal") {
  const int q = 2;
  const double u = 0.2;
  const GTransformResult r = g_transform_numeric(
      [&](double t) { return tree_heat_kernel(q, t, 0).value; }, q, u, 1e-10, tree_growth(q));
  CHECK(std::abs(r.value - (1 / u - (q - 1) * u / (1 - u * u))) <= 1e-6);
}

TEST_CASE("diagonal of a finite graph") {
  for (const char* name : {"k4", "petersen"}) {
    const Graph g = builtin_graph(name);
    const int q = g.require_regular();
    const CountSequence n0 = closed_geodesics_at_vertex(g, 0, 120);
    const SpectralData sd = spectral_decomposition(g);
    for (double u : {0.02, 0.05, 0.1}) {
      if (!(u < 0.5 / q)) continue;
      const GTransformResult r = g_transform_numeric(
          [&](double t) { return heat_kernel_spectral(sd, 0, 0, t); }, q, u, 1e-10,
          finite_graph_growth(q));
      CHECK(std::abs(r.value - diagonal_g_transform_expected(q, n0, u)) <= 1e-6);
    }
  }
}

TEST_CASE("convergence domain") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(g_transform_numeric(one, 2, 0.0, 1e-8, finite_graph_growth(2)), std::domain_error);
  CHECK_THROWS_AS(g_transform_numeric(one, 2, 0.5, 1e-8, finite_graph_growth(2)), std::domain_error);
  CHECK_THROWS_AS(g_transform_numeric(one, 2, 1 / std::sqrt(2.0), 1e-8, tree_growth(2)), std::domain_error);
  CHECK_NOTHROW(g_transform_numeric(one, 2, 0.4, 1e-8, finite_graph_growth(2)));
  CHECK(g_transform_horizon(2, 0.05, 1e-10, finite_graph_growth(2)) > 0.0);
}

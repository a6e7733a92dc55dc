#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hkzeta/bessel.hpp"
#include "hkzeta/heat_tree.hpp"
#include "hkzeta/quadrature.hpp"

using namespace hkzeta;

namespace {

const std::vector<double> kTimes{0.1, 0.5, 1.0, 2.0, 5.0};

// Radial heat equation on the tree, truncated far away and integrated by
// classical RK4:
//   dK(0)/dt = -(q+1) K(0) + (q+1) K(1)
//   dK(r)/dt = -(q+1) K(r) + q K(r+1) + K(r-1)
std::vector<double> radial_rk4(int q, double t, int R) {
  std::vector<double> k(R + 2, 0.0);
  k[0] = 1.0;
  auto rhs = [&](const std::vector<double>& f) {
    std::vector<double> d(R + 2, 0.0);
    d[0] = -(q + 1) * f[0] + (q + 1) * f[1];
    for (int r = 1; r <= R; ++r) d[r] = -(q + 1) * f[r] + q * f[r + 1] + f[r - 1];
    return d;
  };
  const int steps = std::max(1, static_cast<int>(std::ceil(t / 5e-4)));
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    auto axpy = [&](const std::vector<double>& d, double a) {
      std::vector<double> out(k);
      for (int r = 0; r <= R; ++r) out[r] += a * d[r];
      return out;
    };
    const auto k1 = rhs(k);
    const auto k2 = rhs(axpy(k1, h / 2));
    const auto k3 = rhs(axpy(k2, h / 2));
    const auto k4 = rhs(axpy(k3, h));
    for (int r = 0; r <= R; ++r) k[r] += h / 6 * (k1[r] + 2 * k2[r] + 2 * k3[r] + k4[r]);
  }
  return k;
}

}  // namespace

TEST_CASE("initial condition") {
  for (int q : {1, 2, 3}) {
    CHECK(tree_heat_kernel(q, 0.0, 0).value == doctest::Approx(1.0).epsilon(1e-15));
    for (int r = 1; r <= 5; ++r) CHECK(tree_heat_kernel(q, 0.0, r).value == 0.0);
  }
  CHECK(tree_heat_kernel_cy(2, 0.0, 0, 1e-12) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("q = 1 is the line") {
  for (double t : kTimes) {
    for (int r = 0; r <= 6; ++r) {
      CHECK(tree_heat_kernel(1, t, r).value ==
            doctest::Approx(std::exp(-2 * t) * std::cyl_bessel_i(double(r), 2 * t)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(tree_heat_kernel_cy(1, 1.0, 0), std::invalid_argument);
}

TEST_CASE("series vs integral formula") {
  CHECK(std::abs(tree_heat_kernel(2, 1.0, 0, 1e-10).value - tree_heat_kernel_cy(2, 1.0, 0)) <= 1e-9);
  CHECK(std::abs(tree_heat_kernel_cy(2, 0.5, 3, 1e-10) - tree_heat_kernel(2, 0.5, 3).value) <= 1e-9);
  CHECK(std::abs(tree_heat_kernel_cy(3, 2.0, 0, 1e-10) - tree_heat_kernel(3, 2.0, 0).value) <= 1e-9);
  for (int q : {2, 3, 4}) {
    for (double t : kTimes) {
      for (int r = 0; r <= 10; ++r) {
        CHECK(std::abs(tree_heat_kernel(q, t, r).value - tree_heat_kernel_cy(q, t, r)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("series vs radial ODE") {
  for (int q : {2, 3}) {
    for (double t : {0.5, 2.0}) {
      const auto ode = radial_rk4(q, t, 80);
      for (int r = 0; r <= 10; ++r) {
        CHECK(std::abs(tree_heat_kernel(q, t, r).value - ode[r]) <= 1e-9);
      }
    }
  }
}

TEST_CASE("heat equation residual") {
  for (int q : {1, 2, 3, 4}) {
    for (double t : kTimes) {
      for (int r = 0; r <= 10; ++r) CHECK(std::abs(tree_heat_residual(q, t, r)) <= 1e-8);
    }
  }
  // The analytic time derivative against a centred difference.
  for (int r : {0, 3}) {
    const double h = 1e-5;
    const double fd =
        (tree_heat_kernel(2, 1.0 + h, r).value - tree_heat_kernel(2, 1.0 - h, r).value) / (2 * h);
    CHECK(std::abs(tree_heat_kernel_dt(2, 1.0, r) - fd) <= 1e-8);
  }
}

TEST_CASE("mass and positivity") {
  for (int q : {2, 3}) {
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      double mass = 0.0;
      for (int r = 0; r <= 60; ++r) {
        const double sphere = tree_sphere_size(q, r);
        const TreeHeatValue v = tree_heat_kernel(q, t, r, 1e-16 / sphere);
        CHECK(v.value > 0.0);
        CHECK(v.value <= 1.0);
        mass += sphere * v.value;
      }
      CHECK(std::abs(mass - 1.0) <= 1e-6);
    }
  }
  CHECK(tree_sphere_size(3, 0) == 1.0);
  CHECK(tree_sphere_size(3, 2) == 12.0);
}

TEST_CASE("truncation metadata") {
  const TreeHeatValue v = tree_heat_kernel(3, 2.0, 1, 1e-12);
  CHECK(v.q == 3);
  CHECK(v.r == 1);
  CHECK(v.tail_bound <= 1e-12);
  CHECK(v.truncation_index > 0);
  // Tighter tolerance never needs fewer terms.
  CHECK(tree_heat_kernel(3, 2.0, 1, 1e-15).truncation_index >= v.truncation_index);
}

TEST_CASE("horocycle solution") {
  for (int q : {1, 2, 3}) {
    CHECK(horocycle_solution(q, 0.0, 0) == 1.0);
    CHECK(horocycle_solution(q, 0.0, 2) == 0.0);
    CHECK(horocycle_solution(q, 0.0, -2) == 0.0);
  }
  for (int n : {1, 3, 5}) {
    // f(t, n) q^{n/2} is symmetric under n -> -n.
    CHECK(horocycle_solution(2, 1.0, n) * std::pow(2.0, n / 2.0) ==
          doctest::Approx(horocycle_solution(2, 1.0, -n) * std::pow(2.0, -n / 2.0)).epsilon(1e-14));
  }
  CHECK(std::abs(horocycle_residual(2, 1.0, 0)) < 1e-8);
  for (int q : {2, 3}) {
    for (double t : kTimes) {
      for (int n = -8; n <= 8; ++n) CHECK(std::abs(horocycle_residual(q, t, n)) <= 1e-10);
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(tree_heat_kernel(0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(tree_heat_kernel(2, -1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(tree_heat_kernel(2, 1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(tree_heat_kernel(2, 1.0, 0, 0.0), std::invalid_argument);
}

TEST_CASE("adaptive quadrature") {
  const QuadResult r = integrate_gk15([](double x) { return std::exp(-x) * std::sin(5 * x); },
                                      0.0, 10.0, 1e-13, 1e-14);
  const double exact = (5.0 - std::exp(-10.0) * (std::sin(50.0) + 5 * std::cos(50.0))) / 26.0;
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) <= 1e-12);
  CHECK_THROWS_AS(integrate_gk15_or_throw([](double x) { return 1.0 / x; },
                                          0.0, 1.0, 1e-10, 0.0, "divergent"),
                  QuadratureError);
}

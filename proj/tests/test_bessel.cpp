#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hkzeta/bessel.hpp"

using namespace hkzeta;

namespace {

// Naive series in long double, small arguments only.
long double naive_series(int n, long double t) {
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= (t / 2) / k;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= (t / 2) * (t / 2) / (k * static_cast<long double>(k + n));
    sum += term;
  }
  return sum;
}

double centered_difference(int n, double t, double h) {
  return (bessel_i(n, t + h) - bessel_i(n, t - h)) / (2 * h);
}

const std::vector<double> kGrid{0.01, 0.1, 1.0, 5.0, 20.0};

}  // namespace

TEST_CASE("values at zero") {
  CHECK(bessel_i(0, 0.0, 1e-12) == 1.0);
  CHECK(bessel_i(3, 0.0, 1e-12) == 0.0);
  CHECK(bessel_i_quadrature(0, 0.0, 64) == doctest::Approx(1.0).epsilon(1e-15));
  const BesselEval e = bessel_i_eval(0, 0.0);
  CHECK(e.method == BesselMethod::series);
  CHECK(e.value == 1.0);
}

TEST_CASE("series agrees with quadrature and the standard library") {
  CHECK(std::abs(bessel_i(0, 2.0, 1e-12) - bessel_i_quadrature(0, 2.0, 64)) <= 1e-10);
  CHECK(std::abs(bessel_i_quadrature(1, 1.0, 64) - bessel_i(1, 1.0, 1e-12)) <= 1e-10);
  const double ref = bessel_i(5, 10.0, 1e-12);
  CHECK(std::abs(bessel_i_quadrature(5, 10.0, 128) - ref) <= 1e-9 * ref);

  for (int n = 0; n <= 20; ++n) {
    for (double t : kGrid) {
      const double quad = bessel_i_quadrature_adaptive(n, t, 1e-15).value;
      const double series = bessel_i(n, t);
      CHECK(std::abs(series - quad) <= 1e-9 * std::max(1.0, quad));
      const double std_ref = std::cyl_bessel_i(double(n), t);
      CHECK(std::abs(series - std_ref) <= 1e-13 * std::max(std::abs(std_ref), 1e-300));
    }
  }
  for (int n : {0, 1, 4, 9}) {
    for (double t : {0.05, 0.7, 3.0}) {
      const long double ref = naive_series(n, t);
      CHECK(std::abs(bessel_i(n, t) - static_cast<double>(ref)) <= 1e-14 * ref);
    }
  }
}

TEST_CASE("large arguments stay finite in log and scaled forms") {
  CHECK_THROWS_AS(bessel_i(0, 800.0), std::overflow_error);
  const double log_value = log_bessel_i(3, 800.0);
  // I_n(t) ~ e^t / sqrt(2 pi t) for t >> n^2.
  CHECK(log_value == doctest::Approx(800.0 - 0.5 * std::log(2 * M_PI * 800.0)).epsilon(1e-5));
  const double scaled = bessel_i_scaled(3, 800.0);
  CHECK(std::isfinite(scaled));
  CHECK(scaled == doctest::Approx(std::exp(log_value - 800.0)).epsilon(1e-12));
  CHECK(std::isinf(log_bessel_i(2, 0.0)));
}

TEST_CASE("derivative from the recurrence") {
  CHECK(bessel_i_derivative(1, 1e-6, 1e-12) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(bessel_i_derivative(0, 2.0, 1e-12) - centered_difference(0, 2.0, 1e-5)) <= 1e-8);
  CHECK(std::abs(bessel_i_derivative(3, 5.0, 1e-12) - centered_difference(3, 5.0, 1e-5)) <= 1e-8);
}

TEST_CASE("recurrence residual against finite differences") {
  // Relative to max(1, I): at t = 20 the finite difference alone loses
  // about eps * I / h in absolute terms.
  for (int n = 0; n <= 20; ++n) {
    for (double t : kGrid) {
      const double h = std::min(1e-4, t / 4);
      const double lower = n == 0 ? bessel_i(1, t) : bessel_i(n - 1, t);
      const double residual = bessel_i(n + 1, t) + lower - 2 * centered_difference(n, t, h);
      CHECK(std::abs(residual) <= 1e-6 * std::max(1.0, bessel_i(n, t)));
    }
  }
}

TEST_CASE("uniform bound") {
  CHECK(bessel_upper_bound(0, 1.0) == doctest::Approx(1.0));
  CHECK(std::exp(-1.0) * bessel_i(0, 1.0) == doctest::Approx(0.4658).epsilon(1e-4));
  CHECK(bessel_upper_bound(10, 1.0) == doctest::Approx(std::pow(11.0, -5)).epsilon(1e-12));
  CHECK(std::exp(-1.0) * bessel_i(10, 1.0) <= std::pow(11.0, -5));
  CHECK(std::exp(-2.0) * bessel_i(4, 2.0) <= std::pow(3.0, -2) / std::sqrt(2.0));
  for (int n = 0; n <= 20; ++n) {
    for (double t : kGrid) {
      CHECK(std::sqrt(t) * bessel_i_scaled(n, t) <= std::pow(1.0 + n / t, -0.5 * n));
      CHECK(log_bessel_upper_bound(n, t) ==
            doctest::Approx(std::log(bessel_upper_bound(n, t))).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(bessel_upper_bound(1, 0.0), std::invalid_argument);
}

TEST_CASE("monotone in the order") {
  for (double t : kGrid) {
    for (int n = 0; n < 20; ++n) CHECK(bessel_i(n, t) >= bessel_i(n + 1, t));
  }
}

TEST_CASE("building block") {
  CHECK(building_block(2, 0, 0.0) == 1.0);
  CHECK(building_block(2, 3, 0.0) == 0.0);
  for (int r : {0, 1, 5}) {
    for (double t : {0.3, 2.0}) {
      CHECK(building_block(1, r, t) ==
            doctest::Approx(std::exp(-2 * t) * std::cyl_bessel_i(double(r), 2 * t)).epsilon(1e-13));
    }
  }
  const double expected = 0.5 * std::exp(-3.0) * bessel_i(2, 2 * std::sqrt(2.0));
  const double by_quadrature =
      0.5 * std::exp(-3.0) * bessel_i_quadrature_adaptive(2, 2 * std::sqrt(2.0), 1e-15).value;
  CHECK(building_block(2, 2, 1.0, 1e-12) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(building_block(2, 2, 1.0, 1e-12) == doctest::Approx(by_quadrature).epsilon(1e-12));

  // Both sides of the log-domain switch agree.
  const double z_switch = 500.0 / (2 * std::sqrt(3.0));
  CHECK(building_block(3, 4, z_switch * (1 - 1e-9)) ==
        doctest::Approx(building_block(3, 4, z_switch * (1 + 1e-9))).epsilon(1e-6));
  CHECK(building_block(3, 4, 400.0) > 0.0);
  CHECK(std::log(building_block(3, 4, 400.0)) ==
        doctest::Approx(-2 * std::log(3.0) - 1600.0 + log_bessel_i(4, 800 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(building_block(3, 4, 1e4) == 0.0);  // below the smallest double
}

TEST_CASE("building block time derivative") {
  for (int q : {1, 2, 3}) {
    for (int r : {0, 1, 4}) {
      for (double t : {0.2, 1.5, 300.0}) {
        const double h = 1e-5 * std::max(1.0, t);
        const double fd = (building_block(q, r, t + h) - building_block(q, r, t - h)) / (2 * h);
        CHECK(std::abs(building_block_dt(q, r, t) - fd) <= 1e-8);
        // dB_r/dt = -(q+1) B_r + B_{r-1} + q B_{r+1}, with B_{-1} = q B_1.
        const double lower = r == 0 ? q * building_block(q, 1, t) : building_block(q, r - 1, t);
        const double rhs = -(q + 1) * building_block(q, r, t) + lower + q * building_block(q, r + 1, t);
        CHECK(building_block_dt(q, r, t) == doctest::Approx(rhs).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(bessel_i(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bessel_i(1, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(bessel_i_quadrature(1, 1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(bessel_i(1, 1.0, 0.0), std::invalid_argument);
}

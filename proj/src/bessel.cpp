#include "hkzeta/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hkzeta {
namespace {

constexpr double kLogMax = 709.0;
constexpr double kLogDomainThreshold = 500.0;

void check_args(int order, double t) {
  if (order < 0) throw std::invalid_argument("bessel: order must be >= 0");
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("bessel: argument must be finite and >= 0");
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bessel: tol must be > 0");
}

struct LogSeries {
  double log_value;
  int terms;
};

// Sum of x^{2k+n} / (k! (k+n)!) with x = t/2, accumulated relative to the
// largest term so neither the terms nor the sum can overflow.
LogSeries log_series(int n, double t, double tol) {
  if (t == 0.0) {
    return {n == 0 ? 0.0 : -std::numeric_limits<double>::infinity(), 1};
  }
  const double x = 0.5 * t;
  const double x2 = x * x;
  // Index of the largest term: first k with (k+1)(k+1+n) >= x^2.
  const double root = 0.5 * (-n + std::sqrt(double(n) * n + 4.0 * x2));
  long mode = std::max(0L, static_cast<long>(std::floor(root)) - 1);
  while ((mode + 1.0) * (mode + 1.0 + n) < x2) ++mode;

  const double log_mode = (2.0 * mode + n) * std::log(x) -
                          std::lgamma(mode + 1.0) -
                          std::lgamma(mode + n + 1.0);
  double sum = 1.0;
  int terms = 1;

  // Forward tail.
  double rel = 1.0;
  for (long k = mode;; ++k) {
    rel *= x2 / ((k + 1.0) * (k + 1.0 + n));
    sum += rel;
    ++terms;
    if (rel < tol * (sum + tol) && 2.0 * (k + 1) + n > t) break;
    if (rel == 0.0) break;
  }
  // Terms before the mode decrease monotonically going backwards.
  rel = 1.0;
  for (long k = mode - 1; k >= 0; --k) {
    rel *= ((k + 1.0) * (k + 1.0 + n)) / x2;
    sum += rel;
    ++terms;
    if (rel < 0.25 * tol * sum) break;
  }
  return {log_mode + std::log(sum), terms};
}

}  // namespace

BesselEval bessel_i_eval(int order, double t, double tol) {
  check_args(order, t);
  check_tol(tol);
  const LogSeries s = log_series(order, t, tol);
  if (s.log_value > kLogMax) {
    throw std::overflow_error("bessel_i: I_" + std::to_string(order) + "(" +
                              std::to_string(t) +
                              ") overflows a double; use log_bessel_i");
  }
  return {order, t, std::exp(s.log_value), BesselMethod::series, s.terms};
}

double bessel_i(int order, double t, double tol) {
  return bessel_i_eval(order, t, tol).value;
}

double log_bessel_i(int order, double t, double tol) {
  check_args(order, t);
  check_tol(tol);
  return log_series(order, t, tol).log_value;
}

double bessel_i_scaled(int order, double t, double tol) {
  return std::exp(log_bessel_i(order, t, tol) - t);
}

double bessel_i_quadrature(int order, double t, int nodes) {
  check_args(order, t);
  if (nodes < 16) throw std::invalid_argument("bessel_i_quadrature: nodes >= 16");
  if (t > kLogMax) {
    throw std::overflow_error("bessel_i_quadrature: e^t overflows a double");
  }
  // Integrate e^{t (cos th - 1)} cos(n th) and restore e^t at the end.
  const double h = std::numbers::pi / nodes;
  auto f = [&](double th) {
    return std::exp(t * (std::cos(th) - 1.0)) * std::cos(th * order);
  };
  double sum = 0.5 * (f(0.0) + f(std::numbers::pi));
  for (int i = 1; i < nodes; ++i) sum += f(i * h);
  return std::exp(t) * sum * h / std::numbers::pi;
}

BesselEval bessel_i_quadrature_adaptive(int order, double t, double tol) {
  check_tol(tol);
  int nodes = 16;
  double prev = bessel_i_quadrature(order, t, nodes);
  constexpr int kMaxNodes = 1 << 22;
  while (nodes < kMaxNodes) {
    nodes *= 2;
    const double cur = bessel_i_quadrature(order, t, nodes);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) {
      return {order, t, cur, BesselMethod::quadrature, nodes};
    }
    prev = cur;
  }
  return {order, t, prev, BesselMethod::quadrature, nodes};
}

double bessel_i_derivative(int order, double t, double tol) {
  check_args(order, t);
  if (order == 0) return bessel_i(1, t, tol);
  return 0.5 * (bessel_i(order - 1, t, tol) + bessel_i(order + 1, t, tol));
}

double log_bessel_upper_bound(int order, double t) {
  if (order < 0) throw std::invalid_argument("bessel_upper_bound: order >= 0");
  if (!(t > 0.0)) throw std::invalid_argument("bessel_upper_bound: t > 0");
  return -0.5 * std::log(t) - 0.5 * order * std::log1p(order / t);
}

double bessel_upper_bound(int order, double t) {
  return std::exp(log_bessel_upper_bound(order, t));
}

double log_building_block_bound(int q, int m, double t) {
  if (q < 1) throw std::invalid_argument("building block bound: q >= 1");
  const double z = 2.0 * std::sqrt(double(q)) * t;
  const double s = std::sqrt(double(q)) - 1.0;
  return -0.5 * m * std::log(double(q)) - s * s * t + log_bessel_upper_bound(m, z);
}

double building_block(int q, int r, double t, double tol) {
  if (q < 1) throw std::invalid_argument("building_block: q >= 1");
  check_args(r, t);
  if (t == 0.0) return r == 0 ? 1.0 : 0.0;
  const double z = 2.0 * std::sqrt(double(q)) * t;
  if (z <= kLogDomainThreshold) {
    return std::pow(double(q), -0.5 * r) * std::exp(-(q + 1.0) * t) *
           bessel_i(r, z, tol);
  }
  return std::exp(-0.5 * r * std::log(double(q)) - (q + 1.0) * t +
                  log_bessel_i(r, z, tol));
}

double building_block_dt(int q, int r, double t, double tol) {
  if (q < 1) throw std::invalid_argument("building_block_dt: q >= 1");
  check_args(r, t);
  const double z = 2.0 * std::sqrt(double(q)) * t;
  if (z <= kLogDomainThreshold) {
    return -(q + 1.0) * building_block(q, r, t, tol) +
           std::pow(double(q), -0.5 * r) * std::exp(-(q + 1.0) * t) *
               2.0 * std::sqrt(double(q)) * bessel_i_derivative(r, z, tol);
  }
  // d/dt B_r = -(q+1) B_r + B_{r-1} + q B_{r+1}, with B_{-1} = q B_1.
  const double lower = r == 0 ? q * building_block(q, 1, t, tol)
                              : building_block(q, r - 1, t, tol);
  return -(q + 1.0) * building_block(q, r, t, tol) + lower +
         q * building_block(q, r + 1, t, tol);
}

}  // namespace hkzeta

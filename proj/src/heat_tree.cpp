#include "hkzeta/heat_tree.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "hkzeta/bessel.hpp"
#include "hkzeta/quadrature.hpp"

namespace hkzeta {
namespace {

void check(int q, double t, int r) {
  if (q < 1) throw std::invalid_argument("tree heat kernel: q >= 1");
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::invalid_argument("tree heat kernel: t must be finite and >= 0");
  if (r < 0) throw std::invalid_argument("tree heat kernel: r >= 0");
}

// Certified bound on (q-1) sum_{j > J} B_{r+2j}. Successive bound terms
// shrink by at least rho = 1 / (q (1 + m/z)), so the tail is geometric.
double correction_tail_bound(int q, double t, int r, int J) {
  if (q == 1) return 0.0;
  const double z = 2.0 * std::sqrt(double(q)) * t;
  const int m = r + 2 * (J + 1);
  const double rho = 1.0 / (q * (1.0 + m / z));
  return (q - 1.0) * std::exp(log_building_block_bound(q, m, t)) / (1.0 - rho);
}

}  // namespace

TreeHeatValue tree_heat_kernel(int q, double t, int r, double tol) {
  check(q, t, r);
  if (!(tol > 0.0)) throw std::invalid_argument("tree heat kernel: tol > 0");
  TreeHeatValue out{q, t, r, 0.0, 0, 0.0};
  if (t == 0.0) {
    out.value = r == 0 ? 1.0 : 0.0;
    return out;
  }
  const double z = 2.0 * std::sqrt(double(q)) * t;
  long double sum = building_block(q, r, t);
  if (q == 1) {
    out.value = static_cast<double>(sum);
    return out;
  }
  int J = 0;
  double tail = correction_tail_bound(q, t, r, J);
  while (!(r + 2 * J > z && tail < tol)) {
    ++J;
    sum -= (q - 1.0L) * building_block(q, r + 2 * J, t);
    tail = correction_tail_bound(q, t, r, J);
  }
  out.value = static_cast<double>(sum);
  out.truncation_index = J;
  out.tail_bound = tail;
  return out;
}

double tree_heat_kernel_dt(int q, double t, int r, double tol) {
  check(q, t, r);
  const TreeHeatValue v = tree_heat_kernel(q, t, r, tol);
  long double sum = building_block_dt(q, r, t);
  if (q == 1) return static_cast<double>(sum);
  // |dB_m/dt| <= (q+1) B_m + B_{m-1} + q B_{m+1}; two extra terms past the
  // value's truncation keep the derivative tail below the value tolerance.
  const int J = v.truncation_index + 2;
  for (int j = 1; j <= J; ++j) sum -= (q - 1.0L) * building_block_dt(q, r + 2 * j, t);
  return static_cast<double>(sum);
}

double tree_heat_kernel_cy(int q, double t, int r, double tol) {
  check(q, t, r);
  if (q < 2) {
    throw std::invalid_argument(
        "tree_heat_kernel_cy: q >= 2 (the integrand is singular at q = 1)");
  }
  const double qq = q;
  const double z = 2.0 * std::sqrt(qq) * t;
  const double decay = (qq + 1.0) * t;
  std::function<double(double)> integrand;
  if (r == 0) {
    const double pref = 2.0 * qq * (qq + 1.0) / std::numbers::pi;
    integrand = [=](double u) {
      const double c = std::cos(u), s = std::sin(u);
      return pref * std::exp(z * c - decay) * s * s /
             ((qq + 1.0) * (qq + 1.0) - 4.0 * qq * c * c);
    };
  } else {
    const double pref = 2.0 / (std::numbers::pi * std::pow(qq, 0.5 * r - 1.0));
    integrand = [=](double u) {
      const double c = std::cos(u), s = std::sin(u);
      return pref * std::exp(z * c - decay) * s *
             (qq * std::sin((r + 1.0) * u) - std::sin((r - 1.0) * u)) /
             ((qq + 1.0) * (qq + 1.0) - 4.0 * qq * c * c);
    };
  }
  return integrate_gk15_or_throw(integrand, 0.0, std::numbers::pi, tol, 0.0,
                                 "tree_heat_kernel_cy")
      .value;
}

double tree_heat_residual(int q, double t, int r, double tol) {
  check(q, t, r);
  const double f = tree_heat_kernel(q, t, r, tol).value;
  const double up = tree_heat_kernel(q, t, r + 1, tol).value;
  const double dt = tree_heat_kernel_dt(q, t, r, tol);
  if (r == 0) return (q + 1.0) * f - (q + 1.0) * up + dt;
  const double down = tree_heat_kernel(q, t, r - 1, tol).value;
  return (q + 1.0) * f - q * up - down + dt;
}

double horocycle_solution(int q, double t, int n) {
  check(q, t, 0);
  const int a = n < 0 ? -n : n;
  // q^{-n/2} = q^{-|n|/2} * q^{(|n| - n)/2}
  return std::pow(double(q), 0.5 * (a - n)) * building_block(q, a, t);
}

double horocycle_solution_dt(int q, double t, int n) {
  check(q, t, 0);
  const int a = n < 0 ? -n : n;
  return std::pow(double(q), 0.5 * (a - n)) * building_block_dt(q, a, t);
}

double horocycle_residual(int q, double t, int n) {
  return (q + 1.0) * horocycle_solution(q, t, n) - q * horocycle_solution(q, t, n + 1) -
         horocycle_solution(q, t, n - 1) + horocycle_solution_dt(q, t, n);
}

double tree_sphere_size(int q, int r) {
  if (r == 0) return 1.0;
  return (q + 1.0) * std::pow(double(q), r - 1);
}

}  // namespace hkzeta

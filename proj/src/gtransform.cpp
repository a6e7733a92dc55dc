#include "hkzeta/gtransform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hkzeta/bessel.hpp"
#include "hkzeta/quadrature.hpp"

namespace hkzeta {

GrowthBound tree_growth(int q) { return {2.0 * std::sqrt(double(q)), 1.0}; }

GrowthBound finite_graph_growth(int q) { return {q + 1.0, 1.0}; }

namespace {

struct Truncation {
  double rate, margin, pref, horizon, tail;
};

Truncation truncation_for(int q, double u, double tol, GrowthBound growth) {
  if (q < 1) throw std::invalid_argument("g_transform: q >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("g_transform: tol > 0");
  if (!(u > 0.0)) throw std::domain_error("g_transform: u must be > 0");
  Truncation tr{};
  tr.rate = q * u + 1.0 / u;
  tr.margin = tr.rate - growth.rate;
  if (!(tr.margin > 0.0)) {
    throw std::domain_error("g_transform: integral diverges at u = " + std::to_string(u) +
                            " (qu + 1/u = " + std::to_string(tr.rate) +
                            " does not exceed the growth rate " +
                            std::to_string(growth.rate) + ")");
  }
  tr.pref = 1.0 / (u * u) - q;
  // |pref| * C * int_T^inf e^{-margin t} dt <= tol / 4.
  const double scale = std::abs(tr.pref) * growth.constant / tr.margin;
  tr.horizon = std::max(std::log(4.0 * scale / tol) / tr.margin, 1.0 / tr.margin);
  tr.tail = scale * std::exp(-tr.margin * tr.horizon);
  return tr;
}

}  // namespace

double g_transform_horizon(int q, double u, double tol, GrowthBound growth) {
  return truncation_for(q, u, tol, growth).horizon;
}

GTransformResult g_transform_numeric(const std::function<double(double)>& f, int q,
                                     double u, double tol, GrowthBound growth) {
  const Truncation tr = truncation_for(q, u, tol, growth);
  const double shift = tr.rate - (q + 1.0);
  auto integrand = [&](double t) { return tr.pref * std::exp(-shift * t) * f(t); };
  const QuadResult r = integrate_gk15_or_throw(integrand, 0.0, tr.horizon, 0.5 * tol,
                                               1e-15, "g_transform");
  return {u, r.value, r.error + tr.tail};
}

double laplace_closed_form(int n, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("laplace identity: s > 0");
  if (n < 0) throw std::invalid_argument("laplace identity: n >= 0");
  const double root = std::sqrt(s * s + 2.0 * s);
  return std::pow(s + 1.0 - root, n) / root;
}

LaplaceIdentity laplace_identity_check(int n, double s, double tol) {
  const double closed = laplace_closed_form(n, s);
  // e^{-t} I_n(t) <= t^{-1/2}, so the tail past T is at most T^{-1/2} e^{-sT} / s.
  double horizon = 1.0;
  while (std::exp(-s * horizon) / (s * std::sqrt(horizon)) > 0.25 * tol) horizon *= 1.25;
  auto integrand = [&](double t) { return std::exp(-s * t) * bessel_i_scaled(n, t); };
  const QuadResult r =
      integrate_gk15_or_throw(integrand, 0.0, horizon, 0.5 * tol, 1e-15, "laplace identity");
  return {r.value, closed};
}

}  // namespace hkzeta

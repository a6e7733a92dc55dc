#pragma once

// Modified Bessel functions I_n of integer order and the heat-kernel building
// block q^{-r/2} e^{-(q+1)t} I_r(2 sqrt(q) t).
//
// Two independent evaluation paths are provided: the power series (the
// production path, evaluated around its largest term so it never overflows
// internally) and the trapezoidal rule on the integral representation
// (1/pi) int_0^pi e^{t cos th} cos(n th) dth, which is spectrally accurate
// because the integrand is smooth and periodic.

namespace hkzeta {

enum class BesselMethod { series, quadrature };

struct BesselEval {
  int order = 0;
  double argument = 0.0;
  double value = 0.0;
  BesselMethod method = BesselMethod::series;
  int terms_or_nodes = 0;
};

inline constexpr double kDefaultBesselTol = 1e-16;

/// Series evaluation with metadata. Throws std::overflow_error if I_n(t)
/// does not fit in a double (use log_bessel_i instead).
BesselEval bessel_i_eval(int order, double t, double tol = kDefaultBesselTol);

double bessel_i(int order, double t, double tol = kDefaultBesselTol);

/// log I_n(t); -infinity when I_n(t) = 0 (t = 0, n > 0).
double log_bessel_i(int order, double t, double tol = kDefaultBesselTol);

/// e^{-t} I_n(t), finite for every t >= 0.
double bessel_i_scaled(int order, double t, double tol = kDefaultBesselTol);

/// Trapezoidal rule with `nodes` subintervals on [0, pi]; nodes >= 16.
double bessel_i_quadrature(int order, double t, int nodes);

/// Trapezoidal rule with the node count doubled until two successive values
/// agree to tol (relative to max(1, |value|)).
BesselEval bessel_i_quadrature_adaptive(int order, double t, double tol);

/// dI_n/dt = (I_{n-1} + I_{n+1}) / 2, with I_{-1} = I_1.
double bessel_i_derivative(int order, double t, double tol = kDefaultBesselTol);

/// Uniform bound  e^{-t} I_x(t) <= t^{-1/2} (1 + x/t)^{-x/2}, t > 0.
double bessel_upper_bound(int order, double t);

/// log of bessel_upper_bound; usable where the bound itself underflows.
double log_bessel_upper_bound(int order, double t);

/// log of the uniform bound on building_block(q, m, t), t > 0:
///   q^{-m/2} e^{-(sqrt(q)-1)^2 t} z^{-1/2} (1 + m/z)^{-m/2},  z = 2 sqrt(q) t.
double log_building_block_bound(int q, int m, double t);

/// q^{-r/2} e^{-(q+1)t} I_r(2 sqrt(q) t).
double building_block(int q, int r, double t, double tol = kDefaultBesselTol);

/// Time derivative of building_block, from the product rule and the Bessel
/// recurrence (no finite differences).
double building_block_dt(int q, int r, double t,
                         double tol = kDefaultBesselTol);

}  // namespace hkzeta

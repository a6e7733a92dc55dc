#pragma once

// The transform  Gf(u) = (u^{-2} - q) int_0^inf e^{-(qu + 1/u)t} e^{(q+1)t} f(t) dt,
// which sends the heat-kernel building block of order k to u^{k-1}.

#include <functional>

namespace hkzeta {

/// Growth envelope |e^{(q+1)t} f(t)| <= constant * e^{rate t}, used to
/// certify where the t-integral may be truncated.
struct GrowthBound {
  double rate = 0.0;
  double constant = 1.0;
};

/// Envelope for building blocks and the tree heat kernel: rate 2 sqrt(q).
GrowthBound tree_growth(int q);
/// Envelope for heat kernels of finite graphs (K <= 1): rate q + 1.
GrowthBound finite_graph_growth(int q);

struct GTransformResult {
  double u = 0.0;
  double value = 0.0;
  double quadrature_error = 0.0;  // quadrature estimate plus truncation bound
};

/// Numerical G-transform. Throws std::domain_error unless u > 0 and
/// qu + 1/u > growth.rate (otherwise the integral diverges), and
/// QuadratureError if the tolerance cannot be met.
GTransformResult g_transform_numeric(const std::function<double(double)>& f, int q,
                                     double u, double tol, GrowthBound growth);

/// Upper end of the t-integral used by g_transform_numeric for these
/// arguments; f is never sampled beyond it.
double g_transform_horizon(int q, double u, double tol, GrowthBound growth);

struct LaplaceIdentity {
  double numeric = 0.0;
  double closed_form = 0.0;
};

/// (s + 1 - sqrt(s^2 + 2s))^n / sqrt(s^2 + 2s).
double laplace_closed_form(int n, double s);

/// int_0^inf e^{-st} e^{-t} I_n(t) dt numerically, next to the closed form.
LaplaceIdentity laplace_identity_check(int n, double s, double tol = 1e-12);

}  // namespace hkzeta

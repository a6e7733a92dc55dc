#pragma once

// Heat kernel K(t, r) of the (q+1)-regular tree in the radial coordinate r.
//
// Production path: the Bessel series
//   K(t, r) = B_r(t) - (q-1) sum_{j>=1} B_{r+2j}(t),
//   B_m(t)  = q^{-m/2} e^{-(q+1)t} I_m(2 sqrt(q) t),
// truncated where the uniform Bessel bound certifies the tail. Independent
// checks: the Chung-Yau integral (q >= 2) and the horocyclic solution of the
// transformed heat equation.

namespace hkzeta {

struct TreeHeatValue {
  int q = 1;
  double t = 0.0;
  int r = 0;
  double value = 0.0;
  int truncation_index = 0;  // last j included in the correction sum
  double tail_bound = 0.0;   // certified bound on the omitted terms
};

TreeHeatValue tree_heat_kernel(int q, double t, int r, double tol = 1e-14);

/// dK/dt by termwise analytic differentiation of the series.
double tree_heat_kernel_dt(int q, double t, int r, double tol = 1e-14);

/// Chung-Yau integral formula by adaptive quadrature; q >= 2. Throws
/// QuadratureError if the tolerance cannot be met.
double tree_heat_kernel_cy(int q, double t, int r, double tol = 1e-12);

/// Residual of the radial heat equation at r:
///   r = 0:  (q+1) K(0) - (q+1) K(1) + dK(0)/dt
///   r > 0:  (q+1) K(r) - q K(r+1) - K(r-1) + dK(r)/dt
double tree_heat_residual(int q, double t, int r, double tol = 1e-14);

/// f(t, n) = q^{-n/2} e^{-(q+1)t} I_|n|(2 sqrt(q) t) for n in Z.
double horocycle_solution(int q, double t, int n);

/// Analytic df/dt of horocycle_solution.
double horocycle_solution_dt(int q, double t, int n);

/// (q+1) f(n) - q f(n+1) - f(n-1) + df(n)/dt.
double horocycle_residual(int q, double t, int n);

/// Number of vertices at distance r from a vertex of the (q+1)-regular tree.
double tree_sphere_size(int q, int r);

}  // namespace hkzeta

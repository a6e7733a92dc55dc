#include "hkzeta/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace hkzeta {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadResult integrate_gk15(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol,
                          int max_subdivisions) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  out.evaluations = 15;
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int subdivisions = 0;
  while (error > std::max(abs_tol, rel_tol * std::abs(value)) &&
         subdivisions < max_subdivisions) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = value;
  out.error = error;
  out.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
  return out;
}

QuadResult integrate_gk15_or_throw(const std::function<double(double)>& f,
                                   double a, double b, double abs_tol,
                                   double rel_tol, const char* context) {
  QuadResult r = integrate_gk15(f, a, b, abs_tol, rel_tol);
  if (!r.converged) {
    throw QuadratureError(std::string(context) +
                              ": adaptive quadrature did not converge "
                              "(achieved error " +
                              std::to_string(r.error) + ")",
                          r.error);
  }
  return r;
}

}  // namespace hkzeta

#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace hkzeta {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;   // estimated absolute error
  int evaluations = 0;
  bool converged = false;
};

/// Thrown when an adaptive rule cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Globally adaptive 7/15-point Gauss-Kronrod rule on [a, b]. Bisects the
/// interval with the largest error estimate until the total estimate drops
/// below max(abs_tol, rel_tol * |value|). Never throws; inspect `converged`.
QuadResult integrate_gk15(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol,
                          int max_subdivisions = 4000);

/// Same as integrate_gk15 but throws QuadratureError when not converged.
QuadResult integrate_gk15_or_throw(const std::function<double(double)>& f,
                                   double a, double b, double abs_tol,
                                   double rel_tol, const char* context);

}  // namespace hkzeta

#include "hkzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hkzeta/quadrature.hpp"

namespace hkzeta {
namespace {

void check_domain(int q, double u) {
  if (!(u > 0.0 && u < 1.0 / q)) {
    throw std::domain_error("u = " + std::to_string(u) + " outside (0, 1/q) for q = " +
                            std::to_string(q));
  }
}

// log(1 - a u + q u^2) with the positivity the domain guarantees asserted.
double log_factor(double a, int q, double u) {
  const double v = 1.0 - a * u + q * u * u;
  if (!(v > 0.0)) {
    throw std::logic_error("zeta factor 1 - a u + q u^2 is not positive (a = " +
                           std::to_string(a) + ", u = " + std::to_string(u) + ")");
  }
  return std::log(v);
}

}  // namespace

ExactSeries zeta_log_series_from_counts(const CountSequence& counts, int M) {
  if (M < 1) throw std::invalid_argument("zeta series order M >= 1");
  if (static_cast<int>(counts.size()) <= M) {
    throw std::invalid_argument("zeta series: need counts up to m = " + std::to_string(M));
  }
  ExactSeries s(M);
  for (int m = 1; m <= M; ++m) s[m] = Rational(counts[m], m);
  return s;
}

ExactSeries euler_product_series(const CountSequence& primes, int M) {
  if (M < 1) throw std::invalid_argument("Euler product order M >= 1");
  ExactSeries product(M);
  product[0] = 1;
  for (int k = 1; k <= M && k < static_cast<int>(primes.size()); ++k) {
    const BigInt& p = primes[k];
    if (p == 0) continue;
    if (p < 0) throw std::domain_error("negative prime-geodesic count");
    // (1 - u^k)^{-p} = sum_j C(p + j - 1, j) u^{kj}
    ExactSeries factor(M);
    BigInt binom = 1;
    for (int j = 0; k * j <= M; ++j) {
      if (j > 0) binom = binom * (p + j - 1) / j;
      factor[k * j] = Rational(binom);
    }
    product = product * factor;
  }
  return product;
}

RealSeries ihara_determinant_series(const SpectralData& sd, int M) {
  if (M < 1) throw std::invalid_argument("determinant series order M >= 1");
  const int q = sd.q;
  const auto n = sd.eigenvalues.size();
  std::vector<long double> power_sums(M + 1, 0.0L);
  for (Eigen::Index j = 0; j < n; ++j) {
    const long double a = q + 1.0L - sd.eigenvalues[j];
    // p_m = alpha^m + beta^m: p_0 = 2, p_1 = a, p_m = a p_{m-1} - q p_{m-2}.
    long double prev = 2.0L, cur = a;
    power_sums[1] += cur;
    for (int m = 2; m <= M; ++m) {
      const long double next = a * cur - q * prev;
      prev = cur;
      cur = next;
      power_sums[m] += cur;
    }
  }
  RealSeries s(M);
  for (int m = 1; m <= M; ++m) {
    const long double parity = m % 2 == 0 ? static_cast<long double>(n) * (q - 1) : 0.0L;
    s[m] = (power_sums[m] + parity) / m;
  }
  return s;
}

CountRecovery recover_counts(const RealSeries& log_series) {
  CountRecovery out;
  out.counts.assign(log_series.order() + 1, 0);
  for (int m = 1; m <= log_series.order(); ++m) {
    const long double scaled = m * log_series[m];
    const long double rounded = std::round(scaled);
    out.max_deviation =
        std::max(out.max_deviation, static_cast<double>(std::abs(scaled - rounded)));
    out.counts[m] = BigInt(static_cast<long long>(rounded));
  }
  return out;
}

SpectralMeasure SpectralMeasure::atomic_at(const SpectralData& sd, Vertex x0) {
  SpectralMeasure mu;
  mu.kind = Kind::atomic;
  mu.q = sd.q;
  for (Eigen::Index j = 0; j < sd.eigenvalues.size(); ++j) {
    mu.points.push_back(sd.eigenvalues[j]);
    const double psi = sd.eigenvectors(x0, j);
    mu.weights.push_back(psi * psi);
  }
  return mu;
}

double kesten_mckay_density(int q, double lambda) {
  if (q < 1) throw std::invalid_argument("kesten_mckay_density: q >= 1");
  const double a = q + 1.0 - lambda;
  const double disc = 4.0 * q - a * a;
  if (disc <= 0.0) return 0.0;
  return (q + 1.0) * std::sqrt(disc) /
         (2.0 * std::numbers::pi * ((q + 1.0) * (q + 1.0) - a * a));
}

SpectralMeasure kesten_tree_measure(int q) {
  if (q < 1) throw std::invalid_argument("kesten_tree_measure: q >= 1");
  SpectralMeasure mu;
  mu.kind = SpectralMeasure::Kind::tree_density;
  mu.q = q;
  return mu;
}

namespace {

// int g(q+1-lambda) d mu for the tree density, with lambda = q+1 - 2 sqrt(q) cos th:
//   d mu = (q+1) 4q sin^2 th / (2 pi ((q+1)^2 - 4q cos^2 th)) d th,  th in [0, pi].
double tree_integral(int q, const std::function<double(double)>& g, double tol) {
  const double qq = q;
  const double root = 2.0 * std::sqrt(qq);
  auto integrand = [&](double th) {
    const double s = std::sin(th);
    // (q+1)^2 - 4q cos^2 th written without cancellation.
    const double w = (qq + 1.0) * 4.0 * qq * s * s /
                     (2.0 * std::numbers::pi * ((qq - 1.0) * (qq - 1.0) + 4.0 * qq * s * s));
    return w * g(root * std::cos(th));
  };
  return integrate_gk15_or_throw(integrand, 0.0, std::numbers::pi, tol, 1e-15,
                                 "tree spectral integral")
      .value;
}

}  // namespace

double spectral_moment(const SpectralMeasure& mu, int k, double tol) {
  if (k < 0) throw std::invalid_argument("spectral_moment: k >= 0");
  if (mu.kind == SpectralMeasure::Kind::atomic) {
    long double sum = 0.0L;
    for (std::size_t j = 0; j < mu.points.size(); ++j) {
      sum += mu.weights[j] * std::pow(static_cast<long double>(mu.q + 1.0 - mu.points[j]), k);
    }
    return static_cast<double>(sum);
  }
  return tree_integral(mu.q, [k](double a) { return std::pow(a, k); }, tol);
}

BigInt tree_closed_walks(int q, int k) {
  if (q < 1 || k < 0) throw std::invalid_argument("tree_closed_walks: q >= 1, k >= 0");
  // walks[r]: walks of the current length ending at distance r from the start.
  std::vector<BigInt> walks(k + 2);
  walks[0] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(k + 2);
    next[1] += (q + 1) * walks[0];
    for (int r = 1; r <= k; ++r) {
      next[r - 1] += walks[r];
      next[r + 1] += q * walks[r];
    }
    walks = std::move(next);
  }
  return walks[0];
}

double zeta_spectral(const SpectralMeasure& mu, int q, double u, double tol) {
  if (mu.q != q) throw std::invalid_argument("zeta_spectral: measure built for another q");
  check_domain(q, u);
  double integral = 0.0;
  if (mu.kind == SpectralMeasure::Kind::atomic) {
    long double sum = 0.0L;
    for (std::size_t j = 0; j < mu.points.size(); ++j) {
      sum += mu.weights[j] * log_factor(q + 1.0 - mu.points[j], q, u);
    }
    integral = static_cast<double>(sum);
  } else {
    integral = tree_integral(q, [&](double a) { return log_factor(a, q, u); }, tol);
  }
  return std::pow(1.0 - u * u, 0.5 * (q - 1)) * std::exp(integral);
}

double diagonal_g_transform_expected(int q, const CountSequence& closed_at_vertex,
                                     double u) {
  long double sum = 1.0L / u - (q - 1.0L) * u / (1.0L - u * u);
  long double power = 1.0L;  // u^{m-1}
  for (std::size_t m = 1; m < closed_at_vertex.size(); ++m) {
    sum += closed_at_vertex[m].convert_to<long double>() * power;
    power *= u;
  }
  return static_cast<double>(sum);
}

TwoVariableZeta::TwoVariableZeta(const Graph& g, Vertex x0, Vertex x, int M)
    : q_(g.require_regular()), x0_(x0), x_(x), series_(M), spectral_() {
  if (x == x0) {
    throw std::invalid_argument(
        "two-variable zeta is exposed only off the diagonal (x != x0)");
  }
  if (M < 1) throw std::invalid_argument("two-variable zeta order M >= 1");
  const VertexTable b = b_coefficients(g, x0, M);
  for (int m = 1; m <= M; ++m) series_[m] = Rational(b[m].at(x), m);
  spectral_ = spectral_decomposition(g);
}

double TwoVariableZeta::evaluate_series(double u) const {
  return static_cast<double>(series_.evaluate<long double>(u));
}

double TwoVariableZeta::evaluate_spectral(double u) const {
  check_domain(q_, u);
  long double sum = 0.0L;
  for (Eigen::Index j = 0; j < spectral_.eigenvalues.size(); ++j) {
    sum -= spectral_.eigenvectors(x_, j) * spectral_.eigenvectors(x0_, j) *
           log_factor(q_ + 1.0 - spectral_.eigenvalues[j], q_, u);
  }
  return static_cast<double>(sum);
}

}  // namespace hkzeta

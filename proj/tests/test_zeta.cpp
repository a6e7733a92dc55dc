#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hkzeta/counting.hpp"
#include "hkzeta/zeta.hpp"

using namespace hkzeta;

namespace {

const std::vector<const char*> kBuiltins{"k4", "c5", "c8", "cube", "k33", "petersen"};

// N_m from exhaustive enumeration over all base vertices.
CountSequence enumerated_totals(const Graph& g, int M) {
  CountSequence n(M + 1);
  for (Vertex x0 = 0; x0 < g.num_vertices(); ++x0)
    for (int m = 0; m <= M; ++m) n[m] += enumerate_closed_geodesics(g, x0, m).size();
  return n;
}

double log_series_value(const CountSequence& counts, double u) {
  double s = 0.0, p = 1.0;
  for (std::size_t m = 1; m < counts.size(); ++m) {
    p *= u;
    s += counts[m].convert_to<double>() * p / m;
  }
  return s;
}

}  // namespace

TEST_CASE("power series arithmetic") {
  RealSeries s(std::vector<long double>{1.0L, 0.5L, -0.25L, 2.0L, 0.125L, 1.0L});
  const RealSeries back = s.log().exp();
  for (int i = 0; i <= 5; ++i) CHECK(static_cast<double>(back[i]) == doctest::Approx(double(s[i])));
  ExactSeries e(std::vector<Rational>{1, Rational(1, 3), Rational(-2, 7), 5, 0, Rational(1, 2)});
  CHECK(e.log().exp() == e);
  const ExactSeries d = e.derivative();
  CHECK(d.order() == 4);
  CHECK(d[0] == Rational(1, 3));
  CHECK(d[4] == Rational(5, 2));
  const ExactSeries prod = e * e.truncated(3);
  CHECK(prod.order() == 3);
  CHECK(prod[1] == Rational(2, 3));
  CHECK((e - e) == ExactSeries(5));
  CHECK_THROWS_AS(ExactSeries(std::vector<Rational>{2, 1}).log(), std::domain_error);
  CHECK_THROWS_AS(ExactSeries(std::vector<Rational>{1, 1}).exp(), std::domain_error);
  CHECK(e.evaluate<double>(0.0) == 1.0);
}

TEST_CASE("log series from counts") {
  const ExactSeries tree = zeta_log_series_from_counts(CountSequence(9, 0), 8);
  CHECK(tree == ExactSeries(8));
  CHECK(tree.exp()[0] == 1);

  const CountSequence c5 = closed_geodesics_total(cycle_graph(5), 12);
  const ExactSeries s = zeta_log_series_from_counts(c5, 12);
  // -2 log(1 - u^5) = 2u^5 + u^10 + ...
  for (int m = 1; m <= 12; ++m) {
    CHECK(s[m] == (m == 5 ? Rational(2) : m == 10 ? Rational(1) : Rational(0)));
  }
  const CountSequence k4 = enumerated_totals(complete_graph(4), 8);
  const ExactSeries sk = zeta_log_series_from_counts(closed_geodesics_total(complete_graph(4), 8), 8);
  for (int m = 3; m <= 8; ++m) CHECK(sk[m] == Rational(k4[m], m));
  CHECK_THROWS_AS(zeta_log_series_from_counts(CountSequence(3, 0), 5), std::invalid_argument);
}

TEST_CASE("Euler product") {
  CHECK(euler_product_series(CountSequence(11, 0), 10) == [] {
    ExactSeries one(10);
    one[0] = 1;
    return one;
  }());
  CountSequence primes(16, 0);
  primes[5] = 2;
  const ExactSeries c5 = euler_product_series(primes, 15);
  // (1 - u^5)^{-2} = sum (j + 1) u^{5j}
  for (int m = 0; m <= 15; ++m) CHECK(c5[m] == (m % 5 == 0 ? m / 5 + 1 : 0));

  for (const char* name : kBuiltins) {
    CAPTURE(name);
    const CountSequence total = closed_geodesics_total(builtin_graph(name), 12);
    const ExactSeries log_series = zeta_log_series_from_counts(total, 12);
    const ExactSeries euler = euler_product_series(prime_geodesic_counts(total, 12), 12);
    CHECK(log_series.exp() == euler);
    for (int m = 0; m <= 12; ++m) CHECK(denominator(euler[m]) == 1);
  }
}

TEST_CASE("determinant formula") {
  // Cycles through the closed-form eigenvalues 2 - 2 cos(2 pi j / n).
  for (int n : {5, 8, 11}) {
    SpectralData sd;
    sd.q = 1;
    sd.eigenvalues.resize(n);
    for (int j = 0; j < n; ++j) sd.eigenvalues[j] = 2 - 2 * std::cos(2 * std::numbers::pi * j / n);
    const CountRecovery rec = recover_counts(ihara_determinant_series(sd, 3 * n));
    CHECK(rec.max_deviation <= 1e-9);
    for (int m = 1; m <= 3 * n; ++m) CHECK(rec.counts[m] == (m % n == 0 ? 2 * n : 0));
  }
  const CountRecovery k4 = recover_counts(ihara_determinant_series(spectral_decomposition(complete_graph(4)), 12));
  CHECK(k4.counts[3] == 24);
  CHECK(k4.counts[4] == 24);
  CHECK(k4.counts[5] == 0);
  const CountRecovery p = recover_counts(ihara_determinant_series(spectral_decomposition(petersen_graph()), 12));
  CHECK(p.counts[5] == 120);

  for (const char* name : kBuiltins) {
    CAPTURE(name);
    const Graph g = builtin_graph(name);
    const CountRecovery rec = recover_counts(ihara_determinant_series(spectral_decomposition(g), 12));
    CHECK(rec.max_deviation <= 1e-6);
    const CountSequence oracle = enumerated_totals(g, 10);
    for (int m = 1; m <= 10; ++m) CHECK(rec.counts[m] == oracle[m]);
    CHECK(rec.counts == [&] {
      CountSequence t = closed_geodesics_total(g, 12);
      t[0] = 0;
      return t;
    }());
  }
}

TEST_CASE("Kesten-McKay measure") {
  for (int q : {1, 2, 3, 5}) {
    const SpectralMeasure mu = kesten_tree_measure(q);
    CHECK(spectral_moment(mu, 0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(spectral_moment(mu, 1)) <= 1e-12);
    CHECK(spectral_moment(mu, 2) == doctest::Approx(q + 1.0).epsilon(1e-13));
  }
  // Closed walks at the centre of a large enough ball are closed walks on the tree.
  for (int q : {2, 3}) {
    const Graph ball = tree_ball(q, 6);
    const CountSequence walks = diagonal(path_counts(ball, 0, 12), 0);
    const SpectralMeasure mu = kesten_tree_measure(q);
    for (int k = 0; k <= 12; ++k) {
      CHECK(tree_closed_walks(q, k) == walks[k]);
      CHECK(std::round(spectral_moment(mu, k)) == walks[k].convert_to<double>());
    }
  }
  // The density integrates to 1 in the lambda variable as well.
  const int q = 2;
  const double lo = q + 1 - 2 * std::sqrt(2.0), hi = q + 1 + 2 * std::sqrt(2.0);
  double mass = 0.0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const double lambda = lo + (hi - lo) * (i + 0.5) / N;
    mass += kesten_mckay_density(q, lambda) * (hi - lo) / N;
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(kesten_mckay_density(q, lo - 0.1) == 0.0);
}

TEST_CASE("atomic spectral measure") {
  for (const char* name : kBuiltins) {
    const Graph g = builtin_graph(name);
    const SpectralMeasure mu = SpectralMeasure::atomic_at(spectral_decomposition(g), 0);
    double total = 0.0;
    for (double w : mu.weights) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
    const CountSequence a = diagonal(path_counts(g, 0, 8), 0);
    for (int k = 0; k <= 8; ++k) CHECK(spectral_moment(mu, k) == doctest::Approx(a[k].convert_to<double>()));
  }
}

TEST_CASE("spectral zeta") {
  for (int q : {2, 3}) {
    for (double u : {0.05, 0.1, 0.2}) {
      CHECK(std::abs(zeta_spectral(kesten_tree_measure(q), q, u) - 1.0) <= 1e-7);
    }
  }
  const Graph k4 = complete_graph(4);
  const SpectralMeasure mu = SpectralMeasure::atomic_at(spectral_decomposition(k4), 0);
  CountSequence n0(13);
  for (int m = 1; m <= 12; ++m) n0[m] = enumerate_closed_geodesics(k4, 0, m).size();
  CHECK(std::abs(zeta_spectral(mu, 2, 0.1) - std::exp(-log_series_value(n0, 0.1))) <= 1e-8);
  CHECK(zeta_spectral(mu, 2, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(zeta_spectral(mu, 2, 0.5), std::domain_error);
  CHECK_THROWS_AS(zeta_spectral(mu, 2, 0.0), std::domain_error);
  CHECK_THROWS_AS(zeta_spectral(mu, 3, 0.1), std::invalid_argument);
}

TEST_CASE("Ihara zeta is the n-th power of the vertex zeta") {
  for (const char* name : kBuiltins) {
    const Graph g = builtin_graph(name);
    const CountSequence total = closed_geodesics_total(g, 16);
    const CountSequence n0 = closed_geodesics_at_vertex(g, 0, 16);
    for (int m = 1; m <= 16; ++m) CHECK(total[m] == g.num_vertices() * n0[m]);
  }
}

TEST_CASE("two-variable zeta") {
  const Graph k4 = complete_graph(4);
  const TwoVariableZeta z(k4, 0, 1, 60);
  CHECK(z.series()[0] == 0);
  CHECK(z.series()[1] == 1);
  CHECK(std::abs(z.evaluate_series(0.05) - z.evaluate_spectral(0.05)) <= 1e-8);
  CHECK(std::abs(z.evaluate_series(1e-8)) <= 1e-7);
  CHECK(std::abs(z.evaluate_spectral(1e-8)) <= 1e-7);
  for (const char* name : kBuiltins) {
    const Graph g = builtin_graph(name);
    for (Vertex x = 1; x < g.num_vertices(); ++x) {
      const TwoVariableZeta zx(g, 0, x, 80);
      for (double u : {0.02, 0.05, 0.1}) {
        CHECK(std::abs(zx.evaluate_series(u) - zx.evaluate_spectral(u)) <= 1e-8);
      }
    }
  }
  CHECK_THROWS_AS(TwoVariableZeta(k4, 2, 2, 10), std::invalid_argument);
}

TEST_CASE("diagonal transform expectation") {
  // Tree: no closed geodesics.
  const double u = 0.2;
  CHECK(diagonal_g_transform_expected(2, CountSequence(30, 0), u) ==
        doctest::Approx(1 / u - u / (1 - u * u)));
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "dmimage/constructions.hpp"
#include "dmimage/spectral.hpp"
#include "support/oracles.hpp"

using namespace dmimage;

namespace {

void check_against_oracle(const Graph& g, double tol = 1e-9) {
  DistanceMatrix d = distance_matrix(g);
  SpectralReport r = perron(d);
  oracle::DenseEig e = oracle::dense_top_eig(d);
  CHECK(r.lambda == doctest::Approx(e.lambda).epsilon(tol));
  CHECK(r.alignment == doctest::Approx(e.alignment).epsilon(tol));
  for (std::size_t i = 0; i < r.v.size(); ++i) CHECK(std::abs(r.v[i] - e.v[i]) < 1e-7);
}

}  // namespace

TEST_CASE("perron on complete graphs and short paths") {
  for (int n = 2; n <= 9; ++n) {
    SpectralReport r = perron(distance_matrix(complete(n)));
    CHECK(r.lambda == doctest::Approx(n - 1));
    CHECK(r.alignment == doctest::Approx(1.0));
    for (double x : r.v) CHECK(x == doctest::Approx(1 / std::sqrt(n)));
  }
  SpectralReport p2 = perron(distance_matrix(path(2)));
  CHECK(p2.lambda == doctest::Approx(1.0));
  CHECK(p2.alignment == doctest::Approx(1.0));

  // path(3): eigenvector (1, r, 1) with r = (sqrt(3) - 1), eigenvalue 1 + sqrt(3).
  SpectralReport p3 = perron(distance_matrix(path(3)));
  CHECK(p3.lambda == doctest::Approx(1 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(p3.alignment == doctest::Approx(0.99051765).epsilon(1e-8));
  check_against_oracle(path(3));
}

TEST_CASE("perron matches the dense eigensolver") {
  check_against_oracle(comet(9, 3));
  check_against_oracle(counterexample(7));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) check_against_oracle(oracle::random_connected_graph(rng, 2, 20, 0.3));
}

TEST_CASE("perron residual and row-sum bracketing") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_connected_graph(rng, 2, 25, 0.25);
    DistanceMatrix d = distance_matrix(g);
    PerronOptions opts;
    SpectralReport r = perron(d, opts);
    CHECK(r.residual <= 10 * opts.tol * r.lambda);
    long lo = std::numeric_limits<long>::max(), hi = 0;
    for (int i = 0; i < d.order(); ++i) {
      auto row = d.row(i);
      long s = std::accumulate(row.begin(), row.end(), 0L);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    CHECK(r.lambda >= lo - 1e-9);
    CHECK(r.lambda <= hi + 1e-9);
    double norm = 0;
    for (double x : r.v) {
      CHECK(x > 0);
      norm += x * x;
    }
    CHECK(norm == doctest::Approx(1.0));
    CHECK(r.alignment > 0);
    CHECK(r.alignment <= 1 + 1e-12);
  }
}

TEST_CASE("perron errors") {
  CHECK_THROWS_AS(perron(distance_matrix(empty(1))), SpectralError);
  PerronOptions tight;
  tight.max_iter = 1;
  CHECK_THROWS_AS(perron(distance_matrix(path(30)), tight), SpectralError);
}

TEST_CASE("alignment_bound_check") {
  AlignmentCheck k5 = alignment_bound_check(complete(5));
  CHECK(k5.passed);
  CHECK(k5.diameter == 1);
  CHECK(k5.report.alignment == doctest::Approx(1.0));

  AlignmentCheck c5 = alignment_bound_check(cycle(5));
  CHECK(c5.passed);
  CHECK(c5.diameter == 2);
  CHECK(c5.bound == doctest::Approx(diameter2_alignment_floor()));
  CHECK(c5.report.alignment == doctest::Approx(1.0));

  AlignmentCheck cm = alignment_bound_check(comet(9, 3));
  CHECK(cm.passed);
  CHECK(cm.bound == doctest::Approx(alignment_floor()));
  CHECK(cm.report.alignment > alignment_floor());
  CHECK(cm.report.alignment < 1);
  CHECK(cm.report.alignment == doctest::Approx(0.97572583).epsilon(1e-8));

  CHECK(alignment_floor() == doctest::Approx(0.70710678));
  CHECK(diameter2_alignment_floor() == doctest::Approx(0.94280904));
}

TEST_CASE("alignment bound on counterexamples") {
  for (int n = 7; n <= 20; ++n) CHECK(alignment_bound_check(counterexample(n)).passed);
}

TEST_CASE("lambdaA_exact") {
  CHECK(lambdaA_exact(1).squared == 1);
  CHECK(lambdaA_exact(3).squared == 126);
  CHECK(lambdaA_exact(10).squared == 38500);
  CHECK(lambdaA_exact(10).value == doctest::Approx(std::sqrt(38500.0)));
  // Sum over j of m^2 j^2 by direct addition.
  for (int m = 1; m <= 40; ++m) {
    BigInt s = 0;
    for (int j = 1; j <= m; ++j) s += BigInt(m) * m * j * j;
    CHECK(lambdaA_exact(m).squared == s);
  }
}

TEST_CASE("comet_analysis") {
  CometReport c2 = comet_analysis(2);
  CHECK(c2.clique_constancy_spread < 1e-9);
  CHECK(c2.lambda_lower == doctest::Approx(std::sqrt(20.0)));
  CHECK(c2.lambda_upper == doctest::Approx(std::sqrt(20.0) + 4 + 6));
  CHECK(c2.lambda_in_sandwich);
  CHECK(c2.lambda == doctest::Approx(oracle::dense_top_eig(distance_matrix(comet(4, 2))).lambda));

  CometReport c4 = comet_analysis(4);
  CometReport c16 = comet_analysis(16);
  CHECK(c4.alignment > c16.alignment);
  CHECK(c16.lambda_in_sandwich);
  CHECK(c16.clique_constancy_spread < 1e-8);
  CHECK(c16.gap_min > 0);
  CHECK(c16.gap_min <= c16.gap_max);
  CHECK(c16.gap_window_lower < c16.gap_window_upper);

  oracle::DenseEig e = oracle::dense_top_eig(distance_matrix(comet(64, 8)));
  CometReport c8 = comet_analysis(8);
  CHECK(c8.alignment == doctest::Approx(e.alignment).epsilon(1e-9));
  CHECK(c8.lambda == doctest::Approx(e.lambda).epsilon(1e-9));

  CHECK_THROWS(comet_analysis(1));
}

#include <doctest.h>

#include <random>

#include "dmimage/constructions.hpp"
#include "dmimage/enumeration.hpp"
#include "support/oracles.hpp"

using namespace dmimage;

namespace {

bool unsolvable(const Graph& g) {
  return !ones_in_image(IntMatrix::from(distance_matrix(g)), true).solvable;
}

Rational sum(const RationalVector& x) {
  Rational s;
  for (const auto& q : x) s += q;
  return s;
}

void check_sum_zero_witness(const Graph& g) {
  IntMatrix d = dtilde(g);
  SolveReport r = solve_with_sum(d, ones_vector(d.rows()), Rational(0));
  REQUIRE(r.solvable);
  CHECK(sum(*r.particular) == 0);
  for (const auto& y : multiply(d, *r.particular)) CHECK(y == 1);
}

}  // namespace

TEST_CASE("family_H") {
  Graph h3 = family_H(3);
  CHECK(h3.order() == 6);
  CHECK(h3 == join(empty(3), complete(3)));
  check_sum_zero_witness(h3);
  CHECK(family_H(4).order() == 8);
  check_sum_zero_witness(family_H(4));
  CHECK_THROWS_AS(family_H(2), PreconditionError);
}

TEST_CASE("family_H block form") {
  const int k = 5;
  IntMatrix d = dtilde(family_H(k));
  for (int i = 0; i < 2 * k; ++i)
    for (int j = 0; j < 2 * k; ++j) {
      long expected;
      if (i == j) expected = 0;
      else if (i < k && j < k) expected = ((i - j + k) % k == 1 || (j - i + k) % k == 1) ? 2 : 1;
      else expected = 1;  // J blocks and the J - I block
      CHECK(d(i, j) == expected);
    }
}

TEST_CASE("family_H_prime") {
  Graph h = family_H_prime(3);
  CHECK(h.order() == 7);
  check_sum_zero_witness(h);
  CHECK(family_H_prime(4).order() == 9);
  check_sum_zero_witness(family_H_prime(4));

  const int k = 5;
  IntMatrix d = dtilde(family_H_prime(k));
  const int apex = 2 * k;
  for (int j = 0; j <= apex; ++j) {
    const long expected = j == apex ? 0 : j == k - 1 ? 2 : 1;
    CHECK(d(apex, j) == expected);
    CHECK(d(j, apex) == expected);
  }
  CHECK_THROWS_AS(family_H_prime(2), PreconditionError);
}

TEST_CASE("counterexample") {
  CHECK(counterexample(7) == cone(family_H(3)));
  CHECK(counterexample(8) == cone(family_H_prime(3)));
  CHECK(counterexample(20) == cone(family_H_prime(9)));
  CHECK(unsolvable(counterexample(7)));
  CHECK(unsolvable(counterexample(8)));
  CHECK(rank_exact(IntMatrix::from(distance_matrix(counterexample(20)))) == 19);

  for (int n = 7; n <= 60; ++n) {
    CAPTURE(n);
    Graph g = counterexample(n);
    CHECK(g.order() == n);
    CHECK(g.connected());
    CHECK(unsolvable(g));
  }

  try {
    counterexample(6);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("no counterexample exists for n < 7") != std::string::npos);
  }
}

TEST_CASE("verify_join_criterion examples") {
  JoinVerdict a = verify_join_criterion(empty(1), family_H(3));
  CHECK(a.join_unsolvable);
  CHECK(a.h_sum_zero_solution_exists);
  REQUIRE(a.witness);
  CHECK(sum(*a.witness) == 0);

  JoinVerdict b = verify_join_criterion(empty(1), complete(3));
  CHECK_FALSE(b.join_unsolvable);
  CHECK_FALSE(b.h_sum_zero_solution_exists);
  CHECK_FALSE(b.witness);
  CHECK(b.consistent());

  // dtilde(empty(2)) = [[0,2],[2,0]] sends (1/2, 1/2) to 1, so the hypothesis
  // fails and the call is refused.
  CHECK_THROWS_AS(verify_join_criterion(empty(2), family_H(4)), PreconditionError);
  CHECK_THROWS_AS(verify_join_criterion(complete(2), complete(3)), PreconditionError);
}

TEST_CASE("join criterion over small connected h") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& h : catalog_connected(n)) CHECK(verify_join_criterion(empty(1), h).consistent());
}

TEST_CASE("product lemma") {
  Graph f1 = complete_multipartite({1, 1, 1, 4});
  Graph f2 = complete_multipartite({1, 1, 1, 1, 3});
  ProductLemmaReport r = verify_product_lemma(f1, f1);
  CHECK(r.order == 49);
  CHECK(r.kronecker_matches_distance);
  CHECK(r.product_unsolvable);
  CHECK(r.holds());
  CHECK(verify_product_lemma(f1, f2).holds());

  CHECK(kronecker_identity_holds(path(3), path(2)));
  IntMatrix grid = kronecker_distance_assembly(distance_matrix(path(3)), distance_matrix(path(2)));
  auto fw = oracle::floyd_warshall(cartesian_product(path(3), path(2)));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(grid(i, j) == fw[i][j]);

  CHECK_THROWS_AS(verify_product_lemma(path(3), f1), PreconditionError);
}

TEST_CASE("kronecker identity on random connected pairs") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    Graph a = oracle::random_connected_graph(rng, 1, 6, 0.4);
    Graph b = oracle::random_connected_graph(rng, 1, 36 / a.order(), 0.4);
    CHECK(kronecker_identity_holds(a, b));
  }
}

TEST_CASE("dominant pairs") {
  DominantPairReport c4 = detect_dominant_pairs(cycle(4));
  CHECK(c4.pairs == std::vector<Edge>{{0, 2}, {1, 3}});
  REQUIRE(c4.solvable_certificate);
  CHECK(*c4.solvable_certificate == RationalVector{Rational(1, 2), 0, Rational(1, 2), 0});
  REQUIRE(c4.singular);
  CHECK(*c4.singular);

  DominantPairReport p3 = detect_dominant_pairs(path(3));
  CHECK(p3.pairs == std::vector<Edge>{{0, 2}});
  CHECK_FALSE(p3.singular);

  CHECK(detect_dominant_pairs(complete_multipartite({1, 1, 1, 4})).pairs.empty());
  for (int n = 2; n <= 8; ++n) CHECK(detect_dominant_pairs(complete(n)).pairs.empty());

  CHECK_THROWS(detect_dominant_pairs(empty(3)));
  CHECK_THROWS(detect_dominant_pairs(empty(1)));
}

TEST_CASE("dominant pair consequences over connected graphs up to six vertices") {
  for (int n = 2; n <= 6; ++n)
    for_each_connected(n, [](const Graph& g) {
      DominantPairReport r = detect_dominant_pairs(g);
      IntMatrix d = IntMatrix::from(distance_matrix(g));
      if (!r.pairs.empty()) CHECK(ones_in_image(d, true).solvable);
      if (r.pairs.size() >= 2) CHECK(determinant_exact(d) == 0);
    });
}

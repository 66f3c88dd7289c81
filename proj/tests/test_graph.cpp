#include <doctest.h>

#include <random>

#include "dmimage/graph.hpp"
#include "dmimage/int_matrix.hpp"
#include "support/oracles.hpp"

using namespace dmimage;

namespace {

IntMatrix ones_minus_identity(std::size_t n) { return IntMatrix::ones(n, n) - IntMatrix::identity(n); }

}  // namespace

TEST_CASE("build_graph collapses duplicates and rejects bad edges") {
  Graph k3 = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 0}});
  CHECK(k3 == complete(3));
  CHECK(k3.size() == 3);

  Graph k2(2, {{0, 1}});
  CHECK(diameter(k2) == 1);

  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(0, {}), GraphError);
}

TEST_CASE("multipartite (1,1,1,4) from its edge list") {
  // (1,1,1,4): three singletons joined to each other and to a 4-set.
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
  for (int s = 0; s < 3; ++s)
    for (int v = 3; v < 7; ++v) e.emplace_back(s, v);
  CHECK(Graph(7, e) == complete_multipartite({1, 1, 1, 4}));
}

TEST_CASE("generators") {
  CHECK(complete(4).size() == 6);
  CHECK(diameter(complete(4)) == 1);
  CHECK(empty(5).size() == 0);
  CHECK(path(4).size() == 3);
  CHECK(cycle(5).size() == 5);
  CHECK(complete_multipartite({1, 1, 1, 4}).order() == 7);
  CHECK(complete_multipartite({1, 1, 1, 4}).size() == 3 + 12);

  Graph c = comet(5, 3);
  CHECK(c.order() == 8);
  CHECK(c.size() == 13);
  CHECK(c.adjacent(0, 5));
  CHECK(c.adjacent(5, 6));
  CHECK(c.adjacent(6, 7));
  CHECK_FALSE(c.adjacent(1, 5));
  CHECK(diameter(c) == 4);

  CHECK_THROWS_AS(cycle(2), GraphError);
  CHECK_THROWS_AS(comet(0, 3), GraphError);
  CHECK_THROWS_AS(comet(3, 0), GraphError);
  CHECK_THROWS_AS(complete_multipartite({2, 0}), GraphError);
  CHECK_THROWS_AS(path(0), GraphError);
}

TEST_CASE("complement") {
  CHECK(complement(complete(4)) == empty(4));
  CHECK(complement(cycle(3)) == empty(3));

  Graph c5c = complement(cycle(5));
  CHECK(c5c.size() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
  CHECK(c5c.connected());  // 2-regular and connected on 5 vertices: a 5-cycle

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 1, 9);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("join") {
  CHECK(join(path(2), path(2)) == complete(4));
  CHECK(join(empty(1), cycle(4)) == cone(cycle(4)));

  Graph h3 = join(empty(3), complete(3));
  CHECK(h3.order() == 6);
  CHECK(h3.size() == 3 + 9);
  CHECK_FALSE(h3.adjacent(0, 1));
  CHECK(h3.adjacent(3, 4));
  CHECK(h3.adjacent(0, 5));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_graph(rng, 1, 5);
    Graph h = oracle::random_graph(rng, 1, 5);
    CHECK(diameter(join(g, h)) <= 2);
  }
}

TEST_CASE("join distance matrix is the dtilde block matrix") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(rng, 1, 6);
    Graph h = oracle::random_graph(rng, 1, 6);
    const std::size_t ng = g.order(), nh = h.order();
    IntMatrix expected(ng + nh, ng + nh);
    IntMatrix dg = dtilde(g), dh = dtilde(h);
    for (std::size_t i = 0; i < ng + nh; ++i)
      for (std::size_t j = 0; j < ng + nh; ++j) {
        if (i < ng && j < ng) expected(i, j) = dg(i, j);
        else if (i >= ng && j >= ng) expected(i, j) = dh(i - ng, j - ng);
        else expected(i, j) = 1;
      }
    CHECK(IntMatrix::from(distance_matrix(join(g, h))) == expected);
  }
}

TEST_CASE("cartesian product") {
  Graph sq = cartesian_product(path(2), path(2));
  CHECK(sq.order() == 4);
  CHECK(sq.size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(sq.degree(v) == 2);

  Graph grid = cartesian_product(path(3), path(2));
  CHECK(grid.order() == 6);
  CHECK(grid.size() == 7);
  // (a, b) -> b * 3 + a
  CHECK(grid.adjacent(0, 1));
  CHECK(grid.adjacent(0, 3));
  CHECK(grid.adjacent(4, 5));
  CHECK_FALSE(grid.adjacent(0, 4));

  Graph g = cycle(5);
  CHECK(cartesian_product(empty(1), g) == g);
  CHECK(cartesian_product(g, empty(1)) == g);
}

TEST_CASE("cartesian product distances are the Kronecker assembly") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Graph a = oracle::random_connected_graph(rng, 1, 5);
    Graph b = oracle::random_connected_graph(rng, 1, 5);
    const std::size_t n = a.order(), m = b.order();
    IntMatrix da = IntMatrix::from(distance_matrix(a));
    IntMatrix db = IntMatrix::from(distance_matrix(b));
    IntMatrix assembled = kronecker(IntMatrix::ones(m, m), da) + kronecker(db, IntMatrix::ones(n, n));
    CHECK(IntMatrix::from(distance_matrix(cartesian_product(a, b))) == assembled);
  }
}

TEST_CASE("distance matrix") {
  CHECK(IntMatrix::from(distance_matrix(complete(5))) == ones_minus_identity(5));
  CHECK(IntMatrix::from(distance_matrix(path(3))) == IntMatrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(IntMatrix::from(distance_matrix(cycle(4))) ==
        IntMatrix{{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}});
  CHECK(distance_matrix(empty(1)).order() == 1);
  CHECK(distance_matrix(empty(1))(0, 0) == 0);

  CHECK(diameter(complete(5)) == 1);
  CHECK(diameter(path(4)) == 3);
}

TEST_CASE("disconnected input names two separated vertices") {
  Graph g(4, {{0, 1}, {2, 3}});
  try {
    distance_matrix(g);
    FAIL("expected DisconnectedGraphError");
  } catch (const DisconnectedGraphError& e) {
    CHECK(e.u() == 0);
    CHECK((e.v() == 2 || e.v() == 3));
  }
  CHECK_THROWS_AS(diameter(empty(2)), DisconnectedGraphError);
}

TEST_CASE("distance matrix invariants against Floyd-Warshall") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_connected_graph(rng, 1, 12, 0.3);
    DistanceMatrix d = distance_matrix(g);
    auto fw = oracle::floyd_warshall(g);
    const int n = g.order();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        REQUIRE(d(i, j) == fw[i][j]);
        CHECK(d(i, j) == d(j, i));
        CHECK((d(i, j) == 1) == g.adjacent(i, j));
        for (int k = 0; k < n; ++k) CHECK(d(i, k) <= d(i, j) + d(j, k));
      }
    for (int i = 0; i < n; ++i) CHECK(d(i, i) == 0);
  }
}

TEST_CASE("dtilde") {
  CHECK(dtilde(complete(4)) == ones_minus_identity(4));
  CHECK(dtilde(empty(2)) == IntMatrix{{0, 2}, {2, 0}});
  // Defined on disconnected graphs too.
  CHECK(dtilde(Graph(3, {{0, 1}})) == IntMatrix{{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});

  std::mt19937_64 rng(29);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    Graph g = oracle::random_connected_graph(rng, 2, 9, 0.6);
    if (diameter(g) > 2) continue;
    ++checked;
    CHECK(dtilde(g) == IntMatrix::from(distance_matrix(g)));
  }
  CHECK(checked > 50);
}

TEST_CASE("relabel") {
  Graph p = path(3);
  std::vector<int> swap02{2, 1, 0};
  CHECK(relabel(p, swap02) == p);
  std::vector<int> rot{1, 2, 0};
  Graph q = relabel(p, rot);
  CHECK(q.adjacent(1, 2));
  CHECK(q.adjacent(2, 0));
  std::vector<int> bad{0, 0, 1};
  CHECK_THROWS_AS(relabel(p, bad), GraphError);
}

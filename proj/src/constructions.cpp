#include "dmimage/constructions.hpp"

#include <string>

namespace dmimage {

Graph family_H(int k) {
  if (k < 3) throw PreconditionError("family_H: k must be >= 3, got " + std::to_string(k));
  return join(complement(cycle(k)), complete(k));
}

Graph family_H_prime(int k) {
  if (k < 3) throw PreconditionError("family_H_prime: k must be >= 3, got " + std::to_string(k));
  const Graph h = family_H(k);
  std::vector<Edge> e = h.edges();
  const int apex = 2 * k;
  for (int v = 0; v < 2 * k; ++v)
    if (v != k - 1) e.emplace_back(v, apex);
  return Graph(2 * k + 1, e);
}

Graph counterexample(int n) {
  if (n < 7)
    throw PreconditionError("counterexample: no counterexample exists for n < 7 (got n = " +
                            std::to_string(n) + ")");
  return n % 2 == 1 ? cone(family_H((n - 1) / 2)) : cone(family_H_prime(n / 2 - 1));
}

namespace {

std::string render(const RationalVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + to_string(x[i]);
  return s + ")";
}

}  // namespace

JoinVerdict verify_join_criterion(const Graph& g, const Graph& h) {
  const IntMatrix dg = dtilde(g);
  const SolveReport g_side = solve_exact(dg, ones_vector(dg.rows()));
  if (g_side.solvable)
    throw PreconditionError("verify_join_criterion: dtilde(g) x = 1 is solvable, e.g. x = " +
                            render(*g_side.particular));

  JoinVerdict out;
  const IntMatrix dj = IntMatrix::from(distance_matrix(join(g, h)));
  out.join_unsolvable = !ones_in_image(dj, true).solvable;

  const IntMatrix dh = dtilde(h);
  SolveReport h_side = solve_with_sum(dh, ones_vector(dh.rows()), Rational(0));
  out.h_sum_zero_solution_exists = h_side.solvable;
  out.witness = std::move(h_side.particular);
  return out;
}

IntMatrix kronecker_distance_assembly(const DistanceMatrix& a, const DistanceMatrix& b) {
  const auto n = static_cast<std::size_t>(a.order());
  const auto m = static_cast<std::size_t>(b.order());
  const IntMatrix ia = IntMatrix::from(a);
  const IntMatrix ib = IntMatrix::from(b);
  return kronecker(IntMatrix::ones(m, m), ia) + kronecker(ib, IntMatrix::ones(n, n));
}

bool kronecker_identity_holds(const Graph& a, const Graph& b) {
  const IntMatrix assembled = kronecker_distance_assembly(distance_matrix(a), distance_matrix(b));
  return assembled == IntMatrix::from(distance_matrix(cartesian_product(a, b)));
}

ProductLemmaReport verify_product_lemma(const Graph& a, const Graph& b) {
  const DistanceMatrix da = distance_matrix(a);
  const DistanceMatrix db = distance_matrix(b);
  if (ones_in_image_solvable(da))
    throw PreconditionError("verify_product_lemma: 1 lies in the image of the first distance matrix");
  if (ones_in_image_solvable(db))
    throw PreconditionError("verify_product_lemma: 1 lies in the image of the second distance matrix");

  ProductLemmaReport rep;
  const IntMatrix assembled = kronecker_distance_assembly(da, db);
  const IntMatrix bfs = IntMatrix::from(distance_matrix(cartesian_product(a, b)));
  rep.order = bfs.rows();
  rep.kronecker_matches_distance = assembled == bfs;
  rep.product_unsolvable = !ones_in_image(assembled, true).solvable;
  return rep;
}

DominantPairReport detect_dominant_pairs(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw PreconditionError("detect_dominant_pairs: need n >= 2");
  const DistanceMatrix d = distance_matrix(g);

  auto dominates_except = [&](int v, int w) {
    for (int x = 0; x < n; ++x)
      if (x != v && x != w && !g.adjacent(v, x)) return false;
    return true;
  };

  DominantPairReport rep;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (!g.adjacent(v, w) && dominates_except(v, w) && dominates_except(w, v))
        rep.pairs.emplace_back(v, w);
  if (rep.pairs.empty()) return rep;

  auto [v, w] = rep.pairs.front();
  RationalVector x(n);
  x[v] = Rational(1, 2);
  x[w] = Rational(1, 2);
  for (const auto& y : multiply(IntMatrix::from(d), x))
    if (y != 1) throw ConsistencyError("detect_dominant_pairs: certificate fails D x = 1");
  rep.solvable_certificate = std::move(x);

  if (rep.pairs.size() >= 2) {
    if (determinant_exact(IntMatrix::from(d)) != 0)
      throw ConsistencyError("detect_dominant_pairs: two dominant pairs but det(D) != 0");
    rep.singular = true;
  }
  return rep;
}

}  // namespace dmimage

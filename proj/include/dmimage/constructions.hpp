#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dmimage/exact_linalg.hpp"
#include "dmimage/graph.hpp"
#include "dmimage/int_matrix.hpp"

namespace dmimage {

/// A verification was asked to run outside the hypotheses of the statement
/// it checks.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// join(complement(cycle(k)), complete(k)); 2k vertices, k >= 3.
Graph family_H(int k);

/// family_H(k) plus vertex 2k adjacent to everything except vertex k - 1
/// (the last cycle-complement vertex). 2k + 1 vertices, k >= 3.
Graph family_H_prime(int k);

/// Connected n-vertex graph whose distance matrix misses 1 in its image:
/// cone(H_{(n-1)/2}) for odd n, cone(H'_{n/2-1}) for even n. Requires n >= 7.
Graph counterexample(int n);

struct JoinVerdict {
  bool join_unsolvable = false;
  bool h_sum_zero_solution_exists = false;
  /// A solution of dtilde(h) x = 1 with <x, 1> = 0, when one exists.
  std::optional<RationalVector> witness;

  bool consistent() const { return join_unsolvable == h_sum_zero_solution_exists; }
};

/// Evaluates both sides of the join criterion independently. Requires
/// dtilde(g) x = 1 to be unsolvable and throws PreconditionError (naming a
/// solution) otherwise.
JoinVerdict verify_join_criterion(const Graph& g, const Graph& h);

/// J_m (x) A + B (x) J_n for distance matrices A (n x n) and B (m x m).
IntMatrix kronecker_distance_assembly(const DistanceMatrix& a, const DistanceMatrix& b);

struct ProductLemmaReport {
  bool kronecker_matches_distance = false;
  bool product_unsolvable = false;
  std::size_t order = 0;

  bool holds() const { return kronecker_matches_distance && product_unsolvable; }
};

/// Requires 1 outside the image of both distance matrices (PreconditionError
/// otherwise).
ProductLemmaReport verify_product_lemma(const Graph& a, const Graph& b);

/// Same assembly-versus-BFS comparison with no solvability hypothesis.
bool kronecker_identity_holds(const Graph& a, const Graph& b);

struct DominantPairReport {
  /// Non-adjacent (v, w), v < w, each adjacent to every other vertex.
  std::vector<Edge> pairs;
  /// 1/2 on the first pair, 0 elsewhere; D x = 1 has been checked.
  std::optional<RationalVector> solvable_certificate;
  /// Known (and true) only when two or more pairs exist.
  std::optional<bool> singular;
};

DominantPairReport detect_dominant_pairs(const Graph& g);

}  // namespace dmimage

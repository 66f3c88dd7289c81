#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmimage/graph.hpp"

namespace dmimage {

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Labeled graphs on n vertices are indexed by adjacency masks: bit k is the
// k-th pair (i, j), i < j, in lexicographic order (0,1), (0,2), ..., (0,n-1),
// (1,2), ...
inline constexpr int kMaxMaskOrder = 11;

Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

/// Streams every labeled connected graph on n <= 7 vertices once, in
/// ascending mask order.
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n);
  std::optional<Graph> next();

 private:
  int n_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
};

inline constexpr int kCatalogMaxOrder = 7;

std::vector<Graph> catalog_connected(int n);
/// Calls fn(graph) for every connected labeled graph on n vertices. With
/// threads > 1 fn runs concurrently on disjoint mask ranges.
void for_each_connected(int n, const std::function<void(const Graph&)>& fn, unsigned threads = 1);
std::uint64_t count_connected(int n);

inline constexpr int kIsomorphismMaxOrder = 10;

/// Backtracking search for an adjacency-preserving bijection, pruned by
/// degree. Both graphs must have at most 10 vertices.
bool isomorphic(const Graph& g, const Graph& h);

/// Relabeling whose mask (read with pair 0 as the most significant bit) is
/// lexicographically smallest over all n! permutations.
Graph canonical_form(const Graph& g);

struct EnumerationSummary {
  int n = 0;
  std::uint64_t labeled_connected = 0;
  std::uint64_t labeled_failing = 0;
  std::uint64_t unlabeled_failing = 0;
  /// graph6 of the canonical form of each failing class, sorted.
  std::vector<std::string> witnesses;
};

struct EnumerationBudget {
  std::optional<std::chrono::duration<double>> time_limit;
  std::uint64_t max_failing = 50'000'000;
};

struct EnumerationOptions {
  /// Required for n = 8.
  bool extended = false;
  EnumerationBudget budget;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Receives the sorted masks of every labeled failing graph when non-null.
  std::vector<std::uint64_t>* failing_masks = nullptr;
};

/// Raised when a budget runs out. Carries the tallies reached so far.
class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  EnumerationBudgetExceeded(const std::string& what, std::uint64_t masks_done,
                            std::uint64_t masks_total, std::uint64_t labeled_connected,
                            std::uint64_t labeled_failing);
  std::uint64_t masks_done;
  std::uint64_t masks_total;
  std::uint64_t labeled_connected;
  std::uint64_t labeled_failing;
};

inline constexpr int kEnumerationMaxOrder = 8;

/// Exhaustive count of connected graphs on n vertices whose distance matrix
/// misses 1 in its image, labeled and up to isomorphism.
EnumerationSummary enumerate_failing(int n, const EnumerationOptions& opts = {});

}  // namespace dmimage

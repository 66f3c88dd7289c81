#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmimage {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by operations that need a connected graph. Names one vertex on
/// each side of the cut.
class DisconnectedGraphError : public GraphError {
 public:
  DisconnectedGraphError(int u, int v);
  int u() const { return u_; }
  int v() const { return v_; }

 private:
  int u_;
  int v_;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
  /// and out-of-range endpoints throw GraphError.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph(n, edges);
}

// Generators.
Graph complete(int n);
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
/// Joins k independent sets of the given sizes; vertices are numbered part
/// by part.
Graph complete_multipartite(std::span<const int> part_sizes);
inline Graph complete_multipartite(std::initializer_list<int> parts) {
  return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}
/// Clique on vertices 0..m1-1 and a path on m1..m1+m2-1; the path endpoint
/// m1 is attached to clique vertex 0.
Graph comet(int m1, int m2);

Graph complement(const Graph& g);
/// Disjoint union plus every cross edge. g's vertices come first.
Graph join(const Graph& g, const Graph& h);
Graph cone(const Graph& g);
/// Vertex (a, b) with a in g and b in h gets index b * |g| + a.
Graph cartesian_product(const Graph& g, const Graph& h);
/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Symmetric matrix of shortest-path lengths of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<std::int32_t> entries);

  int order() const { return n_; }
  std::int32_t operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::span<const std::int32_t> row(int i) const {
    return {d_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::span<const std::int32_t> data() const { return d_; }
  std::int32_t max_entry() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_;
  std::vector<std::int32_t> d_;
};

/// All-pairs BFS. Throws DisconnectedGraphError.
DistanceMatrix distance_matrix(const Graph& g);
int diameter(const Graph& g);

}  // namespace dmimage

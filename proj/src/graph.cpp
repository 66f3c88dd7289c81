#include "dmimage/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace dmimage {

DisconnectedGraphError::DisconnectedGraphError(int u, int v)
    : GraphError("graph is disconnected: vertices " + std::to_string(u) +
                 " and " + std::to_string(v) + " lie in different components"),
      u_(u),
      v_(v) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw GraphError("graph needs at least one vertex, got n = " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u) * n + v] = 1;
    adj_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  nbrs_.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (adjacent(u, v)) nbrs_[u].push_back(v);
  for (const auto& l : nbrs_) edge_count_ += l.size();
  edge_count_ /= 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : nbrs_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n_;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph empty(int n) {
  require(n >= 1, "empty graph needs n >= 1");
  return Graph(n, std::span<const Edge>{});
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, e);
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  require(!part_sizes.empty(), "complete multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "part sizes must be >= 1");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph comet(int m1, int m2) {
  require(m1 >= 1 && m2 >= 1, "comet needs m1 >= 1 and m2 >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < m1; ++u)
    for (int v = u + 1; v < m1; ++v) e.emplace_back(u, v);
  e.emplace_back(0, m1);
  for (int k = 0; k + 1 < m2; ++k) e.emplace_back(m1 + k, m1 + k + 1);
  return Graph(m1 + m2, e);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + ng, v + ng);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.order(); ++v) e.emplace_back(u, ng + v);
  return Graph(ng + h.order(), e);
}

Graph cone(const Graph& g) { return join(empty(1), g); }

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  auto idx = [ng](int a, int b) { return b * ng + a; };
  std::vector<Edge> e;
  for (int b = 0; b < nh; ++b)
    for (auto [a1, a2] : g.edges()) e.emplace_back(idx(a1, b), idx(a2, b));
  for (int a = 0; a < ng; ++a)
    for (auto [b1, b2] : h.edges()) e.emplace_back(idx(a, b1), idx(a, b2));
  return Graph(ng * nh, e);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  require(static_cast<int>(perm.size()) == g.order(), "permutation length must equal the vertex count");
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < g.order(); ++i)
    require(check[i] == i, "relabel argument is not a permutation");
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

DistanceMatrix::DistanceMatrix(int n, std::vector<std::int32_t> entries)
    : n_(n), d_(std::move(entries)) {
  if (n < 1 || d_.size() != static_cast<std::size_t>(n) * n)
    throw GraphError("distance matrix entries do not match dimension");
}

std::int32_t DistanceMatrix::max_entry() const {
  return *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  // Distances are at most n - 1.
  static_assert(sizeof(std::int32_t) == 4);
  if (n > std::numeric_limits<std::int32_t>::max())
    throw GraphError("graph too large for 32-bit distances");
  std::vector<std::int32_t> d(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    std::int32_t* row = d.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int v : g.neighbors(u))
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
    }
    if (tail != n) {
      int other = static_cast<int>(std::find(row, row + n, -1) - row);
      throw DisconnectedGraphError(s, other);
    }
  }
  return DistanceMatrix(n, std::move(d));
}

int diameter(const Graph& g) { return distance_matrix(g).max_entry(); }

}  // namespace dmimage

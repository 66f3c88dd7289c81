#include "dmimage/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "dmimage/graph6.hpp"
#include "fraction_free.hpp"

namespace dmimage {

namespace {

using Rows = std::array<std::uint16_t, kMaxMaskOrder>;

struct PairTable {
  std::vector<std::pair<int, int>> pairs;
  explicit PairTable(int n) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
};

void require_mask_order(int n) {
  if (n < 1 || n > kMaxMaskOrder)
    throw EnumerationError("mask-indexed graphs need 1 <= n <= " + std::to_string(kMaxMaskOrder));
}

Rows rows_from_mask(const PairTable& t, std::uint64_t mask) {
  Rows rows{};
  while (mask) {
    const int k = std::countr_zero(mask);
    mask &= mask - 1;
    auto [i, j] = t.pairs[k];
    rows[i] |= static_cast<std::uint16_t>(1u << j);
    rows[j] |= static_cast<std::uint16_t>(1u << i);
  }
  return rows;
}

bool connected_rows(const Rows& rows, int n) {
  const unsigned all = (1u << n) - 1;
  unsigned reach = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (unsigned f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~reach;
    reach |= next;
  }
  return reach == all;
}

// Assumes connectivity.
void distances_rows(const Rows& rows, int n, std::int32_t* d) {
  for (int s = 0; s < n; ++s) {
    std::int32_t* row = d + s * n;
    row[s] = 0;
    unsigned seen = 1u << s, frontier = seen;
    for (std::int32_t level = 1; frontier; ++level) {
      unsigned next = 0;
      for (unsigned f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
      next &= ~seen;
      for (unsigned b = next; b; b &= b - 1) row[std::countr_zero(b)] = level;
      seen |= next;
      frontier = next;
    }
  }
}

constexpr std::uint64_t kFilterPrime = 2147483647;  // 2^31 - 1

// Rank of an n x n matrix modulo kFilterPrime is n. Fraction-free updates,
// so no inverses are needed.
bool full_rank_mod_filter_prime(const std::int32_t* d, int n) {
  std::array<std::uint64_t, kMaxMaskOrder * kMaxMaskOrder> a;
  for (int k = 0; k < n * n; ++k) a[k] = static_cast<std::uint64_t>(d[k]);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return false;
    if (p != c)
      for (int j = c; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
    const std::uint64_t piv = a[c * n + c];
    for (int i = c + 1; i < n; ++i) {
      const std::uint64_t neg = kFilterPrime - a[i * n + c];
      if (neg == kFilterPrime) continue;
      for (int j = c + 1; j < n; ++j)
        a[i * n + j] = (piv * a[i * n + j] + neg * a[c * n + j]) % kFilterPrime;
    }
  }
  return true;
}

// Exact verdict on whether 1 lies in the image of the distance matrix.
bool ones_in_image_mask(const Rows& rows, int n) {
  std::array<std::int32_t, kMaxMaskOrder * kMaxMaskOrder> d{};
  distances_rows(rows, n, d.data());
  if (full_rank_mod_filter_prime(d.data(), n)) return true;
  return detail::ones_in_image_words(d.data(), n);
}

std::uint64_t mask_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

// Runs body(begin, end) over [0, total) in chunks pulled by `threads`
// workers. body returns false to stop early.
template <class Body>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk, unsigned threads, Body&& body) {
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t b = next.fetch_add(chunk);
      if (b >= total) return;
      if (!body(b, std::min(total, b + chunk))) stop = true;
    }
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

unsigned resolve_threads(unsigned threads) {
  return threads ? threads : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  require_mask_order(n);
  const PairTable t(n);
  std::vector<Edge> e;
  for (std::size_t k = 0; k < t.pairs.size(); ++k)
    if ((mask >> k) & 1) e.push_back(t.pairs[k]);
  return Graph(n, e);
}

std::uint64_t mask_of(const Graph& g) {
  require_mask_order(g.order());
  const PairTable t(g.order());
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < t.pairs.size(); ++k)
    if (g.adjacent(t.pairs[k].first, t.pairs[k].second)) mask |= std::uint64_t{1} << k;
  return mask;
}

ConnectedGraphStream::ConnectedGraphStream(int n) : n_(n) {
  if (n < 1 || n > kCatalogMaxOrder)
    throw EnumerationError("catalog_connected: n must lie in 1.." + std::to_string(kCatalogMaxOrder));
  end_ = mask_count(n);
}

std::optional<Graph> ConnectedGraphStream::next() {
  const PairTable t(n_);
  for (; mask_ < end_; ++mask_)
    if (connected_rows(rows_from_mask(t, mask_), n_)) return graph_from_mask(n_, mask_++);
  return std::nullopt;
}

std::vector<Graph> catalog_connected(int n) {
  std::vector<Graph> out;
  ConnectedGraphStream s(n);
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

void for_each_connected(int n, const std::function<void(const Graph&)>& fn, unsigned threads) {
  if (n < 1 || n > kCatalogMaxOrder)
    throw EnumerationError("for_each_connected: n must lie in 1.." + std::to_string(kCatalogMaxOrder));
  const PairTable t(n);
  parallel_chunks(mask_count(n), 1 << 14, resolve_threads(threads), [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t m = b; m < e; ++m)
      if (connected_rows(rows_from_mask(t, m), n)) fn(graph_from_mask(n, m));
    return true;
  });
}

std::uint64_t count_connected(int n) {
  require_mask_order(n);
  const PairTable t(n);
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < mask_count(n); ++m) count += connected_rows(rows_from_mask(t, m), n);
  return count;
}

namespace {

Rows rows_of(const Graph& g) {
  Rows r{};
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u)) r[u] |= static_cast<std::uint16_t>(1u << v);
  return r;
}

bool match(const Rows& rg, const Rows& rh, const std::vector<int>& order, std::vector<int>& image,
           std::vector<char>& used, std::size_t depth, int n) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  const int dv = std::popcount(static_cast<unsigned>(rg[v]));
  for (int u = 0; u < n; ++u) {
    if (used[u] || std::popcount(static_cast<unsigned>(rh[u])) != dv) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const int w = order[k];
      ok = (((rg[v] >> w) & 1) == ((rh[u] >> image[w]) & 1));
    }
    if (!ok) continue;
    image[v] = u;
    used[u] = 1;
    if (match(rg, rh, order, image, used, depth + 1, n)) return true;
    used[u] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder)
    throw EnumerationError("isomorphic: graphs are limited to " + std::to_string(kIsomorphismMaxOrder) +
                           " vertices");
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const int n = g.order();
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::vector<int> sg = dg, sh = dh;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;

  // Visit vertices in BFS order from a maximum-degree vertex so each new
  // vertex has mapped neighbors to check against.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (start < 0 || dg[v] > dg[start])) start = v;
    seen[start] = 1;
    std::size_t head = order.size();
    order.push_back(start);
    for (; head < order.size(); ++head)
      for (int w : g.neighbors(order[head]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  return match(rows_of(g), rows_of(h), order, image, used, 0, n);
}

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kIsomorphismMaxOrder)
    throw EnumerationError("canonical_form: graphs are limited to " + std::to_string(kIsomorphismMaxOrder) +
                           " vertices");
  const Rows rows = rows_of(g);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best = sigma;
  std::uint64_t best_key = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key = (key << 1) | ((rows[sigma[i]] >> sigma[j]) & 1u);
    if (key < best_key) {
      best_key = key;
      best = sigma;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  // New label i goes to old vertex best[i].
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[best[i]] = i;
  return relabel(g, perm);
}

EnumerationBudgetExceeded::EnumerationBudgetExceeded(const std::string& what, std::uint64_t done,
                                                     std::uint64_t total, std::uint64_t connected,
                                                     std::uint64_t failing)
    : std::runtime_error(what),
      masks_done(done),
      masks_total(total),
      labeled_connected(connected),
      labeled_failing(failing) {}

namespace {

// Isomorphism-invariant key: sorted degrees, then the sorted multiset of
// sorted distance rows.
std::vector<std::int32_t> invariant_key(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix d = distance_matrix(g);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end());
  std::vector<std::vector<std::int32_t>> rows;
  for (int v = 0; v < n; ++v) {
    auto r = d.row(v);
    rows.emplace_back(r.begin(), r.end());
    std::sort(rows.back().begin(), rows.back().end());
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::int32_t> key(deg.begin(), deg.end());
  for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
  return key;
}

}  // namespace

EnumerationSummary enumerate_failing(int n, const EnumerationOptions& opts) {
  if (n < 1 || n > kEnumerationMaxOrder)
    throw EnumerationError("enumerate_failing: n must lie in 1.." + std::to_string(kEnumerationMaxOrder));
  if (n == kEnumerationMaxOrder && !opts.extended)
    throw EnumerationError("enumerate_failing: n = 8 (2^28 masks) requires the extended flag");

  const PairTable t(n);
  const std::uint64_t total = mask_count(n);
  const auto start = std::chrono::steady_clock::now();

  std::atomic<std::uint64_t> connected{0}, failing_count{0}, done{0};
  std::atomic<bool> over_time{false}, over_count{false};
  std::mutex mu;
  std::vector<std::uint64_t> failing;

  parallel_chunks(total, 1 << 16, resolve_threads(opts.threads), [&](std::uint64_t b, std::uint64_t e) {
    if (opts.budget.time_limit &&
        std::chrono::steady_clock::now() - start > *opts.budget.time_limit) {
      over_time = true;
      return false;
    }
    std::uint64_t local_connected = 0;
    std::vector<std::uint64_t> local;
    for (std::uint64_t m = b; m < e; ++m) {
      const Rows rows = rows_from_mask(t, m);
      if (!connected_rows(rows, n)) continue;
      ++local_connected;
      if (!ones_in_image_mask(rows, n)) local.push_back(m);
    }
    connected += local_connected;
    done += e - b;
    if (failing_count.fetch_add(local.size()) + local.size() > opts.budget.max_failing) {
      over_count = true;
      return false;
    }
    std::lock_guard lock(mu);
    failing.insert(failing.end(), local.begin(), local.end());
    return true;
  });

  if (over_time || over_count)
    throw EnumerationBudgetExceeded(
        over_time ? "enumerate_failing: time limit exceeded" : "enumerate_failing: failing-graph cap exceeded",
        done.load(), total, connected.load(), failing_count.load());

  std::sort(failing.begin(), failing.end());

  std::map<std::vector<std::int32_t>, std::vector<Graph>> classes;
  std::size_t class_count = 0;
  for (std::uint64_t m : failing) {
    Graph g = graph_from_mask(n, m);
    auto& bucket = classes[invariant_key(g)];
    const bool known = std::any_of(bucket.begin(), bucket.end(), [&](const Graph& r) { return isomorphic(g, r); });
    if (!known) {
      bucket.push_back(std::move(g));
      ++class_count;
    }
  }

  EnumerationSummary s;
  s.n = n;
  s.labeled_connected = connected.load();
  s.labeled_failing = failing.size();
  s.unlabeled_failing = class_count;
  for (const auto& [key, reps] : classes)
    for (const auto& r : reps) s.witnesses.push_back(graph6_encode(canonical_form(r)));
  std::sort(s.witnesses.begin(), s.witnesses.end());
  if (opts.failing_masks) *opts.failing_masks = std::move(failing);
  return s;
}

}  // namespace dmimage

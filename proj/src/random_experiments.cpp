#include "dmimage/random_experiments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "dmimage/exact_linalg.hpp"

namespace dmimage {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL));
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void ErConfig::validate() const {
  if (n < 1) throw std::invalid_argument("ER config: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("ER config: p must lie in (0, 1)");
  if (trials < 1) throw std::invalid_argument("ER config: trials must be >= 1");
}

Graph sample_er(int n, double p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_er: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("sample_er: p must lie in (0, 1)");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) e.emplace_back(i, j);
  return Graph(n, e);
}

double entropy_reference(double p) { return p * std::log(p) + (1.0 - p) * std::log1p(-p); }

std::array<std::uint64_t, 2> singularity_primes(std::uint64_t seed) {
  Rng rng(splitmix64(seed ^ 0x5EEDF00DCAFEULL));
  const std::uint64_t p = random_prime(rng, 30);
  std::uint64_t q = p;
  while (q == p) q = random_prime(rng, 30);
  return {p, q};
}

namespace {

template <class Trial>
std::vector<TrialRecord> run_trials(const ErConfig& cfg, unsigned threads, Trial&& trial) {
  std::vector<TrialRecord> records(cfg.trials);
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng = trial_stream(cfg.seed, i);
      records[i] = trial(i, sample_er(cfg.n, cfg.p, rng));
    }
  };
  if (workers <= 1) {
    work(0, cfg.trials);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = w * chunk;
      const std::uint64_t e = std::min(cfg.trials, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }
  return records;
}

TrialRecord basic_record(std::uint64_t i, const Graph& g) {
  TrialRecord r;
  r.index = i;
  r.edges = g.size();
  r.connected = g.connected();
  if (r.connected) r.diameter = diameter(g);
  return r;
}

TrialSummary summarize(const ErConfig& cfg, const std::vector<TrialRecord>& records) {
  TrialSummary s;
  s.trials = cfg.trials;
  s.entropy_reference = entropy_reference(cfg.p);
  for (const auto& r : records) {
    if (!r.connected) {
      ++s.disconnected;
      continue;
    }
    if (r.diameter >= 3) ++s.diam_ge3;
    if (r.singular.value_or(false)) ++s.singular;
  }
  if (s.connected() > 0)
    s.singular_rate = static_cast<double>(s.singular) / static_cast<double>(s.connected());
  if (s.singular > 0) s.log_rate_over_n = std::log(s.singular_rate) / cfg.n;
  return s;
}

}  // namespace

TrialSummary estimate_diam_ge3(const ErConfig& cfg, const ExperimentOptions& opts) {
  cfg.validate();
  auto records = run_trials(cfg, opts.threads, basic_record);
  TrialSummary s = summarize(cfg, records);
  if (opts.records) *opts.records = std::move(records);
  return s;
}

TrialSummary estimate_singularity(const ErConfig& cfg, const ExperimentOptions& opts) {
  cfg.validate();
  const auto primes = singularity_primes(cfg.seed);
  auto records = run_trials(cfg, opts.threads, [&](std::uint64_t i, const Graph& g) {
    TrialRecord r;
    r.index = i;
    r.edges = g.size();
    r.connected = g.connected();
    if (r.connected) {
      const DistanceMatrix d = distance_matrix(g);
      r.diameter = d.max_entry();
      r.singular = singularity_check(d, primes).singular;
    }
    return r;
  });
  TrialSummary s = summarize(cfg, records);
  if (opts.records) *opts.records = std::move(records);
  return s;
}

}  // namespace dmimage

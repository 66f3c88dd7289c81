#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "dmimage/graph.hpp"

namespace dmimage {

// Trial i of a run with seed s draws from std::mt19937_64 seeded with
// splitmix64(s + (i + 1) * 0x9E3779B97F4A7C15). Both generators are fully
// specified, so streams are identical on every platform, and trials can be
// split across threads without changing any result.
inline constexpr std::string_view kRngName = "mt19937_64+splitmix64";

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
Rng trial_stream(std::uint64_t seed, std::uint64_t trial);
/// 53-bit uniform double in [0, 1).
double uniform01(Rng& rng);

struct ErConfig {
  int n = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless n >= 1, 0 < p < 1, trials >= 1.
  void validate() const;
};

/// G(n, p). Pairs (i, j), i < j, consume one draw each in lexicographic order.
Graph sample_er(int n, double p, Rng& rng);

struct TrialRecord {
  std::uint64_t index = 0;
  std::size_t edges = 0;
  bool connected = false;
  /// -1 when disconnected.
  int diameter = -1;
  /// Only set by the singularity experiment, for connected samples.
  std::optional<bool> singular;
};

struct TrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t disconnected = 0;
  /// Connected samples with diameter >= 3.
  std::uint64_t diam_ge3 = 0;
  std::uint64_t singular = 0;
  /// singular / connected.
  double singular_rate = 0.0;
  /// log(singular_rate) / n, present when singular > 0.
  std::optional<double> log_rate_over_n;
  /// p log p + (1 - p) log(1 - p).
  double entropy_reference = 0.0;

  std::uint64_t connected() const { return trials - disconnected; }
  /// Disconnected samples count as diameter >= 3 events.
  double diam_ge3_rate() const {
    return trials ? static_cast<double>(diam_ge3 + disconnected) / static_cast<double>(trials) : 0.0;
  }
  friend bool operator==(const TrialSummary&, const TrialSummary&) = default;
};

double entropy_reference(double p);

struct ExperimentOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Filled with one record per trial, in trial order, when non-null.
  std::vector<TrialRecord>* records = nullptr;
};

TrialSummary estimate_diam_ge3(const ErConfig& cfg, const ExperimentOptions& opts = {});

/// The two moduli used by the singularity filter for a given seed.
std::array<std::uint64_t, 2> singularity_primes(std::uint64_t seed);

/// Connected samples are classified by rank modulo two seed-derived primes,
/// with an exact determinant only when both ranks are deficient.
TrialSummary estimate_singularity(const ErConfig& cfg, const ExperimentOptions& opts = {});

}  // namespace dmimage

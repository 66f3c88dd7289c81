#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dmimage/exact_linalg.hpp"
#include "dmimage/graph.hpp"

namespace dmimage {

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PerronOptions {
  double tol = 1e-12;
  std::size_t max_iter = 1'000'000;
};

/// Perron eigenpair of a distance matrix.
struct SpectralReport {
  double lambda = 0.0;
  /// Entrywise positive, unit Euclidean norm.
  std::vector<double> v;
  /// <v, 1> / sqrt(n).
  double alignment = 0.0;
  /// max |D v - lambda v|.
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Power iteration from the all-ones vector with a Rayleigh-quotient
/// eigenvalue. Stops once successive normalized iterates differ by less
/// than tol in max norm or the residual drops below tol * lambda.
/// Throws SpectralError for n = 1 or when max_iter is exhausted.
SpectralReport perron(const DistanceMatrix& d, const PerronOptions& opts = {});

inline constexpr double kAlignmentSlack = 1e-9;
/// 1/sqrt(2), the general lower bound on the alignment.
double alignment_floor();
/// (4/3)/sqrt(2), the lower bound for diameter-2 graphs.
double diameter2_alignment_floor();

struct AlignmentCheck {
  bool passed = false;
  int diameter = 0;
  /// The bound that was enforced, before subtracting the slack.
  double bound = 0.0;
  SpectralReport report;
};

AlignmentCheck alignment_bound_check(const Graph& g, const PerronOptions& opts = {});

struct LambdaA {
  /// m^3 (m+1) (2m+1) / 6, always an integer.
  BigInt squared;
  double value = 0.0;
};

/// Top eigenvalue of the clique/tail comparison matrix used to bracket the
/// comet's Perron root.
LambdaA lambdaA_exact(int m);

struct CometReport {
  int m = 0;
  double lambda = 0.0;
  double alignment = 0.0;
  /// max - min of v over the clique vertices not touching the tail.
  double clique_constancy_spread = 0.0;
  double lambda_lower = 0.0;
  double lambda_upper = 0.0;
  /// Consecutive differences along the tail with v scaled so a clique entry
  /// is 1, and the asymptotic window they are expected to approach.
  double gap_min = 0.0;
  double gap_max = 0.0;
  double gap_window_lower = 0.0;
  double gap_window_upper = 0.0;
  bool lambda_in_sandwich = false;
  SpectralReport spectral;
};

/// Analyses comet(m^2, m). Requires m >= 2.
CometReport comet_analysis(int m, const PerronOptions& opts = {});

}  // namespace dmimage

#include "dmimage/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dmimage {

namespace {

void matvec(const DistanceMatrix& d, const std::vector<double>& x, std::vector<double>& y) {
  const int n = d.order();
  for (int i = 0; i < n; ++i) {
    auto row = d.row(i);
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

}  // namespace

SpectralReport perron(const DistanceMatrix& d, const PerronOptions& opts) {
  const int n = d.order();
  if (n < 2) throw SpectralError("perron: need at least two vertices (D = (0) has no positive eigenvector)");
  if (!(opts.tol > 0.0)) throw SpectralError("perron: tolerance must be positive");

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  SpectralReport rep;

  auto rayleigh = [&] {
    matvec(d, v, w);
    rep.lambda = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
    rep.residual = 0.0;
    for (int i = 0; i < n; ++i) rep.residual = std::max(rep.residual, std::abs(w[i] - rep.lambda * v[i]));
  };

  rayleigh();
  bool converged = rep.residual <= opts.tol * rep.lambda;
  while (!converged) {
    if (rep.iterations >= opts.max_iter)
      throw SpectralError("perron: no convergence within " + std::to_string(opts.max_iter) +
                          " iterations (residual " + std::to_string(rep.residual) + ")");
    const double scale = 1.0 / norm2(w);
    double diff = 0.0;
    for (int i = 0; i < n; ++i) {
      const double next = w[i] * scale;
      diff = std::max(diff, std::abs(next - v[i]));
      v[i] = next;
    }
    ++rep.iterations;
    rayleigh();
    converged = diff < opts.tol || rep.residual <= opts.tol * rep.lambda;
  }

  rep.alignment = std::accumulate(v.begin(), v.end(), 0.0) / std::sqrt(static_cast<double>(n));
  rep.v = std::move(v);
  return rep;
}

double alignment_floor() { return 1.0 / std::sqrt(2.0); }
double diameter2_alignment_floor() { return 4.0 / 3.0 / std::sqrt(2.0); }

AlignmentCheck alignment_bound_check(const Graph& g, const PerronOptions& opts) {
  const DistanceMatrix d = distance_matrix(g);
  AlignmentCheck out;
  out.report = perron(d, opts);
  out.diameter = d.max_entry();
  out.bound = out.diameter == 2 ? diameter2_alignment_floor() : alignment_floor();
  out.passed = out.report.alignment >= alignment_floor() - kAlignmentSlack &&
               out.report.alignment >= out.bound - kAlignmentSlack;
  return out;
}

LambdaA lambdaA_exact(int m) {
  if (m < 1) throw SpectralError("lambdaA_exact: m must be >= 1");
  const BigInt mm = m;
  LambdaA out;
  out.squared = mm * mm * mm * (mm + 1) * (2 * mm + 1) / 6;
  out.value = std::sqrt(out.squared.get_d());
  return out;
}

CometReport comet_analysis(int m, const PerronOptions& opts) {
  if (m < 2) throw SpectralError("comet_analysis: m must be >= 2");
  const int clique = m * m;
  const Graph g = comet(clique, m);
  CometReport rep;
  rep.m = m;
  rep.spectral = perron(distance_matrix(g), opts);
  const auto& v = rep.spectral.v;
  rep.lambda = rep.spectral.lambda;
  rep.alignment = rep.spectral.alignment;

  // Vertex 0 carries the tail; vertices 1..m^2-1 are interchangeable.
  auto [lo, hi] = std::minmax_element(v.begin() + 1, v.begin() + clique);
  rep.clique_constancy_spread = *hi - *lo;

  const LambdaA a = lambdaA_exact(m);
  rep.lambda_lower = a.value;
  rep.lambda_upper = a.value + static_cast<double>(m) * m + static_cast<double>(m) * (m + 1);
  rep.lambda_in_sandwich = rep.lambda_lower <= rep.lambda && rep.lambda <= rep.lambda_upper;

  const double unit = v[1];
  rep.gap_min = INFINITY;
  rep.gap_max = -INFINITY;
  for (int k = 0; k < m; ++k) {
    const double prev = k == 0 ? v[0] : v[clique + k - 1];
    const double gap = (v[clique + k] - prev) / unit;
    rep.gap_min = std::min(rep.gap_min, gap);
    rep.gap_max = std::max(rep.gap_max, gap);
  }
  rep.gap_window_lower = std::sqrt(1.0 / (3.0 * m));
  rep.gap_window_upper = std::sqrt(3.0 / m);
  return rep;
}

}  // namespace dmimage

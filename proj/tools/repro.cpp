#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>

#include "cli_support.hpp"
#include "dmimage/graph6.hpp"

namespace dmimage::cli {

namespace {

bool ones_missing(const Graph& g) {
  return !ones_in_image(IntMatrix::from(distance_matrix(g)), true).solvable;
}

std::string join_counts(const std::vector<std::uint64_t>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

EnumerationOptions enum_opts(unsigned threads) {
  EnumerationOptions o;
  o.threads = threads;
  return o;
}

// Smallest alignment seen across concurrent callbacks, with its witness.
struct MinTracker {
  std::mutex mu;
  double value = 2.0;
  std::string witness;
  void offer(double a, const Graph& g) {
    std::lock_guard lock(mu);
    if (a < value) {
      value = a;
      witness = graph6_encode(g);
    }
  }
};

Outcome oeis_prefix(unsigned threads) {
  std::vector<std::uint64_t> counts;
  Json per_n = Json::array();
  for (int n = 1; n <= 7; ++n) {
    EnumerationSummary s = enumerate_failing(n, enum_opts(threads));
    counts.push_back(s.unlabeled_failing);
    per_n.push_back(to_json(s));
    log(LogLevel::debug, "n = " + std::to_string(n) + ": " + std::to_string(s.unlabeled_failing));
  }
  const std::string prefix = join_counts(counts);
  log(LogLevel::info, prefix);
  return {Json{{"prefix", prefix}, {"expected", "1,0,0,0,0,0,2"}, {"per_n", per_n}},
          prefix == "1,0,0,0,0,0,2"};
}

Outcome seven_vertex_witnesses(unsigned threads) {
  EnumerationSummary s = enumerate_failing(7, enum_opts(threads));
  const Graph left = complete_multipartite({1, 1, 1, 4});
  const Graph right = complete_multipartite({1, 1, 1, 1, 3});
  Json matches = Json::array();
  bool ok = s.witnesses.size() == 2;
  int left_hits = 0, right_hits = 0;
  for (const auto& w : s.witnesses) {
    Graph g = graph6_decode(w);
    const bool l = isomorphic(g, left), r = isomorphic(g, right);
    left_hits += l;
    right_hits += r;
    matches.push_back({{"witness", w},
                       {"matches", l ? "complete_multipartite(1,1,1,4)" : r ? "complete_multipartite(1,1,1,1,3)" : "none"},
                       {"ones_in_image", !ones_missing(g)}});
    ok = ok && (l != r) && ones_missing(g);
  }
  ok = ok && left_hits == 1 && right_hits == 1;
  return {Json{{"witnesses", matches}, {"labeled_failing", s.labeled_failing}}, ok};
}

Outcome counterexamples(unsigned threads) {
  Json bad = Json::array();
  for (int n = 7; n <= 40; ++n) {
    Graph g = counterexample(n);
    if (g.order() != n || !g.connected() || !ones_missing(g)) bad.push_back(n);
  }
  Json small = Json::object();
  bool none_small = true;
  for (int n = 2; n <= 6; ++n) {
    const auto f = enumerate_failing(n, enum_opts(threads)).labeled_failing;
    small[std::to_string(n)] = f;
    none_small = none_small && f == 0;
  }
  return {Json{{"range", {7, 40}}, {"failures", bad}, {"failing_below_7", small}}, bad.empty() && none_small};
}

Outcome join_iff(unsigned threads) {
  std::atomic<std::uint64_t> checked{0}, unsolvable{0};
  std::mutex mu;
  Json exceptions = Json::array();
  for (int n = 1; n <= 6; ++n)
    for_each_connected(n, [&](const Graph& h) {
      JoinVerdict v = verify_join_criterion(empty(1), h);
      ++checked;
      unsolvable += v.join_unsolvable;
      if (!v.consistent()) {
        std::lock_guard lock(mu);
        exceptions.push_back(graph6_encode(h));
      }
    }, threads);
  return {Json{{"checked", checked.load()}, {"join_unsolvable", unsolvable.load()}, {"exceptions", exceptions}},
          exceptions.empty()};
}

Outcome product(unsigned) {
  const Graph left = complete_multipartite({1, 1, 1, 4});
  const Graph right = complete_multipartite({1, 1, 1, 1, 3});
  ProductLemmaReport a = verify_product_lemma(left, left);
  ProductLemmaReport b = verify_product_lemma(left, right);
  return {Json{{"k1114_squared", to_json(a)}, {"k1114_times_k11113", to_json(b)}}, a.holds() && b.holds()};
}

Outcome dominant_pairs(unsigned threads) {
  std::atomic<std::uint64_t> with_pair{0}, with_two{0};
  std::mutex mu;
  Json exceptions = Json::array();
  for (int n = 2; n <= 7; ++n)
    for_each_connected(n, [&](const Graph& g) {
      try {
        DominantPairReport r = detect_dominant_pairs(g);
        with_pair += !r.pairs.empty();
        with_two += r.pairs.size() >= 2;
      } catch (const ConsistencyError&) {
        std::lock_guard lock(mu);
        exceptions.push_back(graph6_encode(g));
      }
    }, threads);
  return {Json{{"graphs_with_pair", with_pair.load()},
               {"graphs_with_two_or_more", with_two.load()},
               {"exceptions", exceptions}},
          exceptions.empty()};
}

Outcome alignment_bound(unsigned threads) {
  MinTracker exhaustive;
  std::atomic<std::uint64_t> failures{0};
  for (int n = 2; n <= 7; ++n)
    for_each_connected(n, [&](const Graph& g) {
      AlignmentCheck c = alignment_bound_check(g);
      failures += !c.passed;
      exhaustive.offer(c.report.alignment, g);
    }, threads);

  MinTracker cx;
  for (int n = 7; n <= 40; ++n) {
    AlignmentCheck c = alignment_bound_check(counterexample(n));
    failures += !c.passed;
    cx.offer(c.report.alignment, counterexample(n));
  }

  // 1000 connected draws of ER(20, 0.3) with seed 1.
  MinTracker er;
  std::uint64_t skipped = 0;
  for (std::uint64_t i = 0, kept = 0; kept < 1000; ++i) {
    Rng rng = trial_stream(1, i);
    Graph g = sample_er(20, 0.3, rng);
    if (!g.connected()) {
      ++skipped;
      continue;
    }
    ++kept;
    AlignmentCheck c = alignment_bound_check(g);
    failures += !c.passed;
    er.offer(c.report.alignment, g);
  }
  return {Json{{"floor", alignment_floor()},
               {"slack", kAlignmentSlack},
               {"failures", failures.load()},
               {"min_exhaustive", {{"alignment", exhaustive.value}, {"graph6", exhaustive.witness}}},
               {"min_counterexample", {{"alignment", cx.value}, {"graph6", cx.witness}}},
               {"min_er_20_0.3", {{"alignment", er.value}, {"graph6", er.witness}, {"seed", 1}, {"disconnected_skipped", skipped}}}},
          failures == 0};
}

Outcome diameter2_bound(unsigned threads) {
  MinTracker min;
  std::atomic<std::uint64_t> checked{0}, failures{0};
  for (int n = 3; n <= 7; ++n)
    for_each_connected(n, [&](const Graph& g) {
      if (diameter(g) != 2) return;
      AlignmentCheck c = alignment_bound_check(g);
      ++checked;
      failures += !c.passed;
      min.offer(c.report.alignment, g);
    }, threads);
  return {Json{{"bound", diameter2_alignment_floor()},
               {"checked", checked.load()},
               {"failures", failures.load()},
               {"min", {{"alignment", min.value}, {"graph6", min.witness}}}},
          failures == 0};
}

Outcome comet_limit(unsigned) {
  Json rows = Json::array();
  bool ok = true;
  double prev = 2.0;
  for (int m : {2, 4, 8, 16, 32}) {
    CometReport r = comet_analysis(m);
    ok = ok && r.alignment < prev && r.alignment > alignment_floor() && r.lambda_in_sandwich &&
         r.clique_constancy_spread <= 1e-8;
    prev = r.alignment;
    Json row = to_json(r);
    row["distance_to_limit"] = r.alignment - alignment_floor();
    rows.push_back(std::move(row));
  }
  return {Json{{"limit", alignment_floor()}, {"comets", rows}}, ok};
}

Outcome er_singularity(unsigned threads) {
  const ErConfig cfg{40, 0.5, 500, 7};
  ExperimentOptions opts;
  opts.threads = threads;
  TrialSummary sing = estimate_singularity(cfg, opts);
  TrialSummary diam = estimate_diam_ge3(cfg, opts);
  return {Json{{"config", {{"n", cfg.n}, {"p", cfg.p}, {"trials", cfg.trials}, {"seed", cfg.seed}, {"rng", kRngName}}},
               {"singularity", to_json(sing)},
               {"diameter", to_json(diam)}},
          sing.singular == 0};
}

}  // namespace

Outcome run_recipe(const std::string& name, unsigned threads) {
  if (name == "oeis-prefix") return oeis_prefix(threads);
  if (name == "seven-vertex-witnesses") return seven_vertex_witnesses(threads);
  if (name == "counterexamples") return counterexamples(threads);
  if (name == "join-iff") return join_iff(threads);
  if (name == "product") return product(threads);
  if (name == "dominant-pairs") return dominant_pairs(threads);
  if (name == "alignment-bound") return alignment_bound(threads);
  if (name == "diameter2-bound") return diameter2_bound(threads);
  if (name == "comet-limit") return comet_limit(threads);
  if (name == "er-singularity") return er_singularity(threads);
  throw UsageError("unknown recipe '" + name + "'");
}

}  // namespace dmimage::cli

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli_support.hpp"
#include "dmimage/graph6.hpp"

namespace dmimage::cli {

Graph load_graph(const std::string& arg) {
  std::string text;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  } else {
    text = arg;
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw UsageError("graph input '" + arg + "' is empty");
  if (text[first] == '{') return graph_from_json(Json::parse(text));
  auto graphs = graph6_decode_lines(text);
  if (graphs.size() != 1)
    throw UsageError("graph input '" + arg + "' holds " + std::to_string(graphs.size()) + " graphs, expected 1");
  return graphs.front();
}

namespace {

struct Globals {
  unsigned threads = 0;
  std::string output;
  std::string log_level = "info";
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw UsageError("cannot write '" + g.output + "'");
  out << text << '\n';
}

void emit(const Globals& g, const Json& j) { emit(g, j.dump(2)); }

Json graph_echo(const std::string& arg, const Graph& g) {
  return Json{{"source", arg}, {"graph6", graph6_encode(g)}, {"n", g.order()}, {"m", g.size()}};
}

// solve ---------------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::string sum;
};

int run_solve(const Globals& glob, const SolveArgs& a) {
  Graph g = load_graph(a.graph);
  IntMatrix d = IntMatrix::from(distance_matrix(g));
  Json input = graph_echo(a.graph, g);
  SolveReport r;
  if (a.sum.empty()) {
    r = ones_in_image(d, true);
  } else {
    const Rational s = parse_rational(a.sum);
    input["sum"] = to_string(s);
    r = solve_with_sum(d, ones_vector(d.rows()), s);
  }
  emit(glob, envelope("solve", std::move(input), to_json(r)));
  return kExitOk;
}

// construct -----------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int n = 0;
  int m2 = 0;
  std::vector<int> parts;
  std::string format = "graph6";
};

Graph build_kind(const ConstructArgs& a) {
  auto need_n = [&] {
    if (a.n < 1) throw UsageError("--kind " + a.kind + " needs --n >= 1");
  };
  if (a.kind == "counterexample") return need_n(), counterexample(a.n);
  if (a.kind == "H") return need_n(), family_H(a.n);
  if (a.kind == "Hprime") return need_n(), family_H_prime(a.n);
  if (a.kind == "complete") return need_n(), complete(a.n);
  if (a.kind == "empty") return need_n(), empty(a.n);
  if (a.kind == "path") return need_n(), path(a.n);
  if (a.kind == "cycle") return need_n(), cycle(a.n);
  if (a.kind == "star") return need_n(), star(a.n);
  if (a.kind == "comet") {
    // --n m alone gives the m^2 + m vertex comet; --m2 overrides the tail.
    need_n();
    return a.m2 > 0 ? comet(a.n, a.m2) : comet(a.n * a.n, a.n);
  }
  if (a.kind == "multipartite") {
    if (a.parts.empty()) throw UsageError("--kind multipartite needs --parts");
    return complete_multipartite(a.parts);
  }
  throw UsageError("unknown --kind '" + a.kind + "'");
}

int run_construct(const Globals& glob, const ConstructArgs& a) {
  Graph g = build_kind(a);
  if (a.format == "graph6") {
    emit(glob, graph6_encode(g));
  } else {
    Json input{{"kind", a.kind}, {"n", a.n}};
    if (a.m2) input["m2"] = a.m2;
    if (!a.parts.empty()) input["parts"] = a.parts;
    Json result = graph_to_json(g);
    result["graph6"] = graph6_encode(g);
    emit(glob, envelope("construct", std::move(input), std::move(result)));
  }
  return kExitOk;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::string g, h, graph;
};

int run_verify(const Globals& glob, const VerifyArgs& a) {
  if (a.theorem == "join" || a.theorem == "product") {
    if (a.g.empty() || a.h.empty()) throw UsageError("--theorem " + a.theorem + " needs --g and --h");
    Graph g = load_graph(a.g), h = load_graph(a.h);
    Json input{{"theorem", a.theorem}, {"g", graph_echo(a.g, g)}, {"h", graph_echo(a.h, h)}};
    if (a.theorem == "join") {
      JoinVerdict v = verify_join_criterion(g, h);
      emit(glob, envelope("verify", std::move(input), to_json(v)));
      return v.consistent() ? kExitOk : kExitVerificationFailed;
    }
    ProductLemmaReport r = verify_product_lemma(g, h);
    emit(glob, envelope("verify", std::move(input), to_json(r)));
    return r.holds() ? kExitOk : kExitVerificationFailed;
  }
  if (a.theorem == "dominant-pairs") {
    if (a.graph.empty()) throw UsageError("--theorem dominant-pairs needs --graph");
    Graph g = load_graph(a.graph);
    Json input{{"theorem", a.theorem}, {"graph", graph_echo(a.graph, g)}};
    try {
      emit(glob, envelope("verify", std::move(input), to_json(detect_dominant_pairs(g))));
    } catch (const ConsistencyError& e) {
      emit(glob, envelope("verify", std::move(input), Json{{"error", e.what()}, {"witness", graph6_encode(g)}}));
      return kExitVerificationFailed;
    }
    return kExitOk;
  }
  throw UsageError("unknown --theorem '" + a.theorem + "'");
}

// spectral ------------------------------------------------------------------

struct SpectralArgs {
  std::string graph;
  int comet = 0;
  double tol = 1e-12;
  std::size_t max_iter = 1'000'000;
};

int run_spectral(const Globals& glob, const SpectralArgs& a) {
  PerronOptions opts{a.tol, a.max_iter};
  if (a.comet > 0) {
    CometReport r = comet_analysis(a.comet, opts);
    Json input{{"comet", a.comet}, {"tol", a.tol}, {"max_iter", a.max_iter}};
    emit(glob, envelope("spectral", std::move(input), to_json(r)));
    return r.lambda_in_sandwich && r.clique_constancy_spread <= 1e-8 ? kExitOk : kExitVerificationFailed;
  }
  if (a.graph.empty()) throw UsageError("spectral needs --graph or --comet");
  Graph g = load_graph(a.graph);
  AlignmentCheck c = alignment_bound_check(g, opts);
  Json input{{"graph", graph_echo(a.graph, g)}, {"tol", a.tol}, {"max_iter", a.max_iter}};
  emit(glob, envelope("spectral", std::move(input), to_json(c)));
  return c.passed ? kExitOk : kExitVerificationFailed;
}

// er ------------------------------------------------------------------------

struct ErArgs {
  ErConfig cfg;
  std::string experiment = "diam";
  std::string csv;
};

void write_csv(const std::string& path, const std::vector<TrialRecord>& records) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << "trial,edges,connected,diameter,singular\n";
  for (const auto& r : records)
    out << r.index << ',' << r.edges << ',' << r.connected << ',' << r.diameter << ','
        << (r.singular ? (*r.singular ? "1" : "0") : "") << '\n';
}

int run_er(const Globals& glob, const ErArgs& a) {
  try {
    a.cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<TrialRecord> records;
  ExperimentOptions opts;
  opts.threads = glob.threads;
  if (!a.csv.empty()) opts.records = &records;
  TrialSummary s;
  if (a.experiment == "diam") s = estimate_diam_ge3(a.cfg, opts);
  else if (a.experiment == "singularity") s = estimate_singularity(a.cfg, opts);
  else throw UsageError("unknown --experiment '" + a.experiment + "'");
  if (!a.csv.empty()) write_csv(a.csv, records);
  Json input{{"experiment", a.experiment}, {"n", a.cfg.n},     {"p", a.cfg.p},
             {"trials", a.cfg.trials},     {"seed", a.cfg.seed}, {"rng", kRngName}};
  emit(glob, envelope("er", std::move(input), to_json(s)));
  return kExitOk;
}

// enumerate -----------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  bool extended = false;
  std::string witnesses;
  double time_limit = 0;
};

int run_enumerate(const Globals& glob, const EnumerateArgs& a) {
  EnumerationOptions opts;
  opts.extended = a.extended;
  opts.threads = glob.threads;
  if (a.time_limit > 0) opts.budget.time_limit = std::chrono::duration<double>(a.time_limit);
  Json input{{"n", a.n}, {"extended", a.extended}};
  EnumerationSummary s;
  try {
    s = enumerate_failing(a.n, opts);
  } catch (const EnumerationError& e) {
    throw UsageError(e.what());
  } catch (const EnumerationBudgetExceeded& e) {
    emit(glob, envelope("enumerate", std::move(input),
                        Json{{"error", e.what()},
                             {"partial", {{"masks_done", e.masks_done},
                                          {"masks_total", e.masks_total},
                                          {"labeled_connected", e.labeled_connected},
                                          {"labeled_failing", e.labeled_failing}}}}));
    return kExitVerificationFailed;
  }
  if (!a.witnesses.empty()) {
    std::ofstream out(a.witnesses);
    if (!out) throw UsageError("cannot write '" + a.witnesses + "'");
    for (const auto& w : s.witnesses) out << w << '\n';
  }
  emit(glob, envelope("enumerate", std::move(input), to_json(s)));
  return kExitOk;
}

// repro ---------------------------------------------------------------------

int run_repro(const Globals& glob, const std::string& recipe) {
  Outcome o = run_recipe(recipe, glob.threads);
  Json result = std::move(o.report);
  result["verified"] = o.verified;
  emit(glob, envelope("repro", Json{{"recipe", recipe}}, std::move(result)));
  return o.verified ? kExitOk : kExitVerificationFailed;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Distance-matrix image tools: exact solves, constructions, spectra, random graphs, enumeration"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Globals glob;
  app.add_option("--threads", glob.threads, "worker threads (0 = all cores)");
  app.add_option("-o,--output", glob.output, "write the report to this file instead of stdout");
  app.add_option("--log-level", glob.log_level, "quiet, info or debug")
      ->check(CLI::IsMember({"quiet", "info", "debug"}));

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "decide whether D x = 1 has a solution");
  s->add_option("--graph", solve.graph, "graph6 or JSON file, or an inline graph6 string")->required();
  s->add_option("--sum", solve.sum, "also require <x, 1> = SUM (rational p/q)");

  ConstructArgs cons;
  auto* c = app.add_subcommand("construct", "build a named graph");
  c->add_option("--kind", cons.kind, "graph family")
      ->required()
      ->check(CLI::IsMember(
          {"counterexample", "H", "Hprime", "comet", "complete", "empty", "path", "cycle", "star", "multipartite"}));
  c->add_option("--n", cons.n, "size parameter (k for H/Hprime, m for comet)");
  c->add_option("--m2", cons.m2, "comet tail length; with it --n is the clique size");
  c->add_option("--parts", cons.parts, "part sizes for multipartite")->delimiter(',');
  c->add_option("--out", cons.format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check a structural statement on given graphs");
  v->set_help_flag("--help", "print this help and exit");
  v->add_option("--theorem", ver.theorem, "join, product or dominant-pairs")
      ->required()
      ->check(CLI::IsMember({"join", "product", "dominant-pairs"}));
  v->add_option("--g", ver.g, "first graph (join: G, product: A)");
  v->add_option("--h", ver.h, "second graph (join: H, product: B)");
  v->add_option("--graph", ver.graph, "graph for dominant-pairs");

  SpectralArgs spec;
  auto* sp = app.add_subcommand("spectral", "Perron pair and alignment bounds");
  auto* sp_graph = sp->add_option("--graph", spec.graph, "graph file or inline graph6");
  sp->add_option("--comet", spec.comet, "analyse comet(m^2, m)")->check(CLI::Range(2, 1 << 12))->excludes(sp_graph);
  sp->add_option("--tol", spec.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  sp->add_option("--max-iter", spec.max_iter, "iteration cap");

  ErArgs er;
  auto* e = app.add_subcommand("er", "Monte Carlo on Erdos-Renyi graphs");
  e->add_option("--n", er.cfg.n, "vertices")->required();
  e->add_option("--p", er.cfg.p, "edge probability")->required();
  e->add_option("--trials", er.cfg.trials, "samples")->required();
  e->add_option("--seed", er.cfg.seed, "base seed")->required();
  e->add_option("--experiment", er.experiment, "diam or singularity")
      ->check(CLI::IsMember({"diam", "singularity"}));
  e->add_option("--csv", er.csv, "per-trial records");

  EnumerateArgs en;
  auto* n = app.add_subcommand("enumerate", "count connected graphs with 1 outside im(D)");
  n->add_option("--n", en.n, "vertices (1..8)")->required();
  n->add_flag("--extended", en.extended, "allow n = 8");
  n->add_option("--witnesses", en.witnesses, "write graph6 witnesses here");
  n->add_option("--time-limit", en.time_limit, "seconds before giving up with partial tallies");

  std::string recipe;
  auto* r = app.add_subcommand("repro", "run a named reproduction recipe");
  r->add_option("recipe", recipe, "recipe name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kRecipes), std::end(kRecipes))));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  static const std::map<std::string, LogLevel> levels{
      {"quiet", LogLevel::quiet}, {"info", LogLevel::info}, {"debug", LogLevel::debug}};
  g_log_level = levels.at(glob.log_level);

  try {
    if (*s) return run_solve(glob, solve);
    if (*c) return run_construct(glob, cons);
    if (*v) return run_verify(glob, ver);
    if (*sp) return run_spectral(glob, spec);
    if (*e) return run_er(glob, er);
    if (*n) return run_enumerate(glob, en);
    return run_repro(glob, recipe);
  } catch (const UsageError& ex) {
    log(LogLevel::quiet, ex.what());
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    // Malformed graphs, bad rationals, violated preconditions.
    log(LogLevel::quiet, ex.what());
    return kExitUsage;
  } catch (const Json::exception& ex) {
    log(LogLevel::quiet, std::string("bad JSON input: ") + ex.what());
    return kExitUsage;
  } catch (const std::exception& ex) {
    log(LogLevel::quiet, std::string("verification failed: ") + ex.what());
    return kExitVerificationFailed;
  }
}

}  // namespace
}  // namespace dmimage::cli

int main(int argc, char** argv) { return dmimage::cli::dispatch(argc, argv); }

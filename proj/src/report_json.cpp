#include "dmimage/report_json.hpp"

namespace dmimage {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw GraphError("graph JSON needs an integer field \"n\"");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphError("graph JSON field \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw GraphError("graph JSON edges must be [u, v] integer pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Graph(j["n"].get<int>(), edges);
}

Json to_json(const RationalVector& x) {
  Json out = Json::array();
  for (const auto& q : x) out.push_back(to_string(q));
  return out;
}

Json to_json(const SolveReport& r) {
  Json kernel = Json::array();
  for (const auto& k : r.kernel_basis) kernel.push_back(to_json(k));
  return Json{{"solvable", r.solvable},
              {"rank", r.rank},
              {"aug_rank", r.aug_rank},
              {"particular", r.particular ? to_json(*r.particular) : Json(nullptr)},
              {"kernel_basis", std::move(kernel)}};
}

Json to_json(const SpectralReport& r, bool include_vector) {
  Json out{{"lambda", r.lambda},
           {"alignment", r.alignment},
           {"residual", r.residual},
           {"iterations", r.iterations}};
  if (include_vector) out["v"] = r.v;
  return out;
}

Json to_json(const AlignmentCheck& r) {
  return Json{{"passed", r.passed},
              {"diameter", r.diameter},
              {"bound", r.bound},
              {"slack", kAlignmentSlack},
              {"spectral", to_json(r.report)}};
}

Json to_json(const CometReport& r) {
  return Json{{"m", r.m},
              {"n", r.m * r.m + r.m},
              {"lambda", r.lambda},
              {"alignment", r.alignment},
              {"clique_constancy_spread", r.clique_constancy_spread},
              {"lambda_lower", r.lambda_lower},
              {"lambda_upper", r.lambda_upper},
              {"lambda_in_sandwich", r.lambda_in_sandwich},
              {"gap_stats", {{"min", r.gap_min}, {"max", r.gap_max}}},
              {"gap_window", {{"lower", r.gap_window_lower}, {"upper", r.gap_window_upper}}},
              {"spectral", to_json(r.spectral, false)}};
}

Json to_json(const TrialSummary& s) {
  return Json{{"trials", s.trials},
              {"disconnected", s.disconnected},
              {"diam_ge3", s.diam_ge3},
              {"diam_ge3_rate", s.diam_ge3_rate()},
              {"singular", s.singular},
              {"singular_rate", s.singular_rate},
              {"log_rate_over_n", s.log_rate_over_n ? Json(*s.log_rate_over_n) : Json(nullptr)},
              {"entropy_reference", s.entropy_reference}};
}

Json to_json(const EnumerationSummary& s) {
  return Json{{"n", s.n},
              {"labeled_connected", s.labeled_connected},
              {"labeled_failing", s.labeled_failing},
              {"unlabeled_failing", s.unlabeled_failing},
              {"witnesses", s.witnesses}};
}

Json to_json(const JoinVerdict& v) {
  return Json{{"join_unsolvable", v.join_unsolvable},
              {"h_sum_zero_solution_exists", v.h_sum_zero_solution_exists},
              {"consistent", v.consistent()},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

Json to_json(const ProductLemmaReport& r) {
  return Json{{"order", r.order},
              {"kronecker_matches_distance", r.kronecker_matches_distance},
              {"product_unsolvable", r.product_unsolvable},
              {"holds", r.holds()}};
}

Json to_json(const DominantPairReport& r) {
  Json pairs = Json::array();
  for (auto [v, w] : r.pairs) pairs.push_back({v, w});
  return Json{{"pairs", std::move(pairs)},
              {"solvable_certificate", r.solvable_certificate ? to_json(*r.solvable_certificate) : Json(nullptr)},
              {"singular", r.singular ? Json(*r.singular) : Json("unknown")}};
}

Json envelope(std::string_view command, Json input, Json result) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

}  // namespace dmimage

#pragma once

#include <json.hpp>

#include <string>

#include "dmimage/constructions.hpp"
#include "dmimage/enumeration.hpp"
#include "dmimage/exact_linalg.hpp"
#include "dmimage/graph.hpp"
#include "dmimage/random_experiments.hpp"
#include "dmimage/spectral.hpp"

namespace dmimage {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "dmimage";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// {"n": N, "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
/// Throws GraphError on schema violations.
Graph graph_from_json(const Json& j);

Json to_json(const RationalVector& x);
Json to_json(const SolveReport& r);
Json to_json(const SpectralReport& r, bool include_vector = true);
Json to_json(const AlignmentCheck& r);
Json to_json(const CometReport& r);
Json to_json(const TrialSummary& s);
Json to_json(const EnumerationSummary& s);
Json to_json(const JoinVerdict& v);
Json to_json(const ProductLemmaReport& r);
Json to_json(const DominantPairReport& r);

/// Wraps a payload with the tool name, version, subcommand and input echo.
Json envelope(std::string_view command, Json input, Json result);

}  // namespace dmimage

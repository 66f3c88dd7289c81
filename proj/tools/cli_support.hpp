#pragma once

#include <iostream>
#include <string>
#include <string_view>

#include "dmimage/report_json.hpp"

namespace dmimage::cli {

enum class LogLevel { quiet, info, debug };

inline LogLevel g_log_level = LogLevel::info;

inline void log(LogLevel level, std::string_view msg) {
  if (level <= g_log_level) std::cerr << "[dmimage] " << msg << '\n';
}

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Raised for bad user input that the argument parser cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a graph from a file (graph6, or JSON {"n", "edges"} when the file
/// starts with '{'). An argument naming no file is decoded as inline graph6.
Graph load_graph(const std::string& arg);

struct Outcome {
  Json report;
  bool verified = true;
};

/// Named reproduction recipes. Each is deterministic in its inputs.
Outcome run_recipe(const std::string& name, unsigned threads);

inline const char* const kRecipes[] = {
    "oeis-prefix", "seven-vertex-witnesses", "counterexamples", "join-iff", "product",
    "dominant-pairs", "alignment-bound", "diameter2-bound", "comet-limit", "er-singularity",
};

}  // namespace dmimage::cli

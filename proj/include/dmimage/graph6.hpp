#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmimage/graph.hpp"

namespace dmimage {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// graph6: size field, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte + 63.
std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" header. Throws Graph6Error.
Graph graph6_decode(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> graph6_decode_lines(std::string_view text);

}  // namespace dmimage

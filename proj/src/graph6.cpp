#include "dmimage/graph6.hpp"

#include <cstdint>

namespace dmimage {

namespace {

constexpr int kBias = 63;
constexpr char kWide = '~';

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kWide);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  } else {
    out.push_back(kWide);
    out.push_back(kWide);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < kBias || v > 126)
    throw Graph6Error("graph6: byte " + std::to_string(v) + " outside 63..126");
  return v - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_sextets = [&](int count) {
    if (pos + count > text.size()) throw Graph6Error("graph6: truncated size field");
    for (int k = 0; k < count; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
  };
  if (text[0] != kWide) {
    read_sextets(1);
  } else if (text.size() > 1 && text[1] == kWide) {
    pos = 2;
    read_sextets(6);
  } else {
    pos = 1;
    read_sextets(3);
  }
  if (n == 0) throw Graph6Error("graph6: zero-vertex graphs are not supported");
  if (n > 100000) throw Graph6Error("graph6: vertex count " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Graph6Error("graph6: expected " + std::to_string(bytes) + " data bytes for n = " +
                      std::to_string(n) + ", found " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  const int nn = static_cast<int>(n);
  for (int j = 1; j < nn; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k)
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1)
      throw Graph6Error("graph6: nonzero padding bits");
  for (std::size_t b = pos; b < text.size(); ++b) sextet(text[b]);
  return Graph(nn, edges);
}

std::vector<Graph> graph6_decode_lines(std::string_view text) {
  std::vector<Graph> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) out.push_back(graph6_decode(line));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

}  // namespace dmimage

#pragma once

// graph6 encoding (the nauty/networkx convention):
//   N(n) size prefix, then the upper triangle of the adjacency matrix in
//   column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
//   per byte, each byte offset by 63.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_lab/graph.hpp"

namespace spectral_lab {

class Graph6Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

}  // namespace detail

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  detail::append_size(out, static_cast<std::uint64_t>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline std::string encode_graph6(const BipartiteGraph& g) { return encode_graph6(g.to_graph()); }

inline Graph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw Graph6Error("graph6: character outside [63,126]");

  std::size_t pos = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size())
      throw Graph6Error("graph6: truncated size prefix");
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    return v;
  };

  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 100000) throw Graph6Error("graph6: graph too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) throw Graph6Error("graph6: body length does not match vertex count");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < body * 6; ++k)
    if (((text[pos + k / 6] - 63) >> (5 - k % 6)) & 1)
      throw Graph6Error("graph6: nonzero padding bits");
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace spectral_lab

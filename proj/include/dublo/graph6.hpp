// Copyright 2026 The dublo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUBLO_GRAPH6_HPP
#define DUBLO_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dublo/error.hpp"
#include "dublo/graph.hpp"

namespace dublo {

namespace detail {

inline int graph6_value(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw ParseError("graph6: byte outside 63..126");
  return v;
}

}  // namespace detail

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted.
inline Graph parse_graph6(std::string_view rec,
                          std::size_t size_cap = default_size_cap()) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (rec.substr(0, kHeader.size()) == kHeader) rec.remove_prefix(kHeader.size());
  while (!rec.empty() && (rec.back() == '\n' || rec.back() == '\r' ||
                          rec.back() == ' ' || rec.back() == '\t'))
    rec.remove_suffix(1);
  if (rec.empty()) throw ParseError("graph6: empty record");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > rec.size()) throw ParseError("graph6: truncated size header");
    std::size_t v = 0;
    for (std::size_t i = 0; i < count; ++i)
      v = (v << 6) | static_cast<std::size_t>(detail::graph6_value(rec[pos++]));
    return v;
  };
  if (rec[0] != '~') {
    n = take(1);
  } else if (rec.size() > 1 && rec[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > size_cap)
    throw ValidationError("graph6: " + std::to_string(n) +
                          " vertices exceeds the size cap of " +
                          std::to_string(size_cap));

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (rec.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) +
                     " adjacency bytes, found " + std::to_string(rec.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = detail::graph6_value(rec[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (bytes > 0) {
    const std::size_t pad = bytes * 6 - bits;
    const int last = detail::graph6_value(rec[pos + bytes - 1]);
    if (pad > 0 && (last & ((1 << pad) - 1)) != 0)
      throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

}  // namespace dublo

#endif  // DUBLO_GRAPH6_HPP

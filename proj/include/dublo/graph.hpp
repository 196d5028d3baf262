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

#ifndef DUBLO_GRAPH_HPP
#define DUBLO_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dublo/error.hpp"

namespace dublo {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite, simple, connected, undirected graph on dense vertex indices
/// 0..n-1. Immutable after construction. External labels (from an edge list
/// or a generator) are kept alongside for reporting.
class Graph {
 public:
  /// Builds from an edge list. Duplicate edges are collapsed; self-loops and
  /// disconnected inputs throw ValidationError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {}) {
    if (n == 0) throw ValidationError("graph has no vertices");
    Graph g;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw ValidationError("edge endpoint out of range");
      if (u == v)
        throw ValidationError("self-loop at vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      g.num_edges_ += nb.size();
    }
    g.num_edges_ /= 2;
    if (!labels.empty() && labels.size() != n)
      throw ValidationError("label count does not match vertex count");
    g.labels_ = std::move(labels);
    if (!g.connected()) throw ValidationError("graph is disconnected");
    return g;
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Label for reporting; the decimal index when no labels were supplied.
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
  }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Vertex> find_label(std::string_view name) const {
    if (labels_.empty()) {
      Vertex v = 0;
      for (char c : name) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<Vertex>(c - '0');
      }
      if (name.empty() || v >= order()) return std::nullopt;
      return v;
    }
    for (Vertex v = 0; v < order(); ++v)
      if (labels_[v] == name) return v;
    return std::nullopt;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  Graph() = default;

  bool connected() const {
    std::vector<char> seen(order(), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
    }
    return count == order();
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

/// Parses a whitespace-separated edge list. '#' starts a comment. Endpoints
/// are arbitrary tokens mapped to dense indices in first-appearance order.
inline Graph parse_edge_list(std::string_view text,
                             std::size_t size_cap = default_size_cap()) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& tok) {
    auto [it, inserted] = index.try_emplace(tok, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(tok);
    return it->second;
  };
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string a, b, extra;
    if (!(in >> a)) continue;
    if (!(in >> b) || (in >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected exactly two endpoints");
    if (a == b)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": self-loop at '" + a + "'");
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw ParseError("edge list is empty");
  if (labels.size() > size_cap)
    throw ValidationError("graph has " + std::to_string(labels.size()) +
                          " vertices, above the size cap of " +
                          std::to_string(size_cap));
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

/// Writes one "u v" line per edge, using vertex labels.
inline std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

/// Removes one edge; nullopt when the result would be disconnected.
inline std::optional<Graph> remove_edge(const Graph& g, Edge e) {
  if (e.first >= g.order() || e.second >= g.order() || !g.has_edge(e.first, e.second))
    throw ValidationError("remove_edge: not an edge");
  std::vector<Edge> kept;
  for (const auto& uv : g.edges())
    if (uv != e && uv != Edge{e.second, e.first}) kept.push_back(uv);
  try {
    return Graph::from_edges(g.order(), kept);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

/// Deletes vertex v and relabels the rest densely; nullopt when the result
/// is empty or disconnected.
inline std::optional<Graph> remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw ValidationError("remove_vertex: vertex out of range");
  if (g.order() <= 1) return std::nullopt;
  auto shift = [v](Vertex u) { return u > v ? u - 1 : u; };
  std::vector<Edge> kept;
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) kept.emplace_back(shift(a), shift(b));
  try {
    return Graph::from_edges(g.order() - 1, kept);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

}  // namespace dublo

#endif  // DUBLO_GRAPH_HPP

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

#ifndef DUBLO_ENUMERATE_HPP
#define DUBLO_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dublo/error.hpp"
#include "dublo/graph.hpp"

namespace dublo {

inline constexpr std::size_t kTreeEnumerationCap = 14;
inline constexpr std::size_t kGraphEnumerationCap = 6;

namespace detail {

inline std::string ahu(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[v])
    if (w != parent) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

/// Canonical string of an unlabeled tree: AHU encoding rooted at the center
/// (the smaller of the two encodings for a bicentral tree).
inline std::string tree_code(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  if (n == 1) return "()";
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    std::vector<Vertex> next;
    left -= layer.size();
    for (Vertex v : layer)
      for (Vertex w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto code = ahu(adj, c, c);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace detail

/// All unlabeled trees on n vertices, one representative each, built by
/// hanging a leaf on every vertex of every tree on n - 1 vertices.
inline std::vector<Graph> all_trees(std::size_t n) {
  if (n == 0 || n > kTreeEnumerationCap) throw ValidationError("tree enumeration needs 1 <= n <= 14");
  std::vector<std::vector<std::vector<Vertex>>> level{{{}}};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<std::string, std::vector<std::vector<Vertex>>> seen;
    for (const auto& t : level)
      for (Vertex v = 0; v < t.size(); ++v) {
        auto u = t;
        u.emplace_back();
        const Vertex leaf = static_cast<Vertex>(u.size() - 1);
        u[v].push_back(leaf);
        u[leaf].push_back(v);
        seen.emplace(detail::tree_code(u), std::move(u));
      }
    level.clear();
    for (auto& [code, t] : seen) level.push_back(std::move(t));
  }
  std::vector<Graph> out;
  for (const auto& t : level) {
    std::vector<Edge> e;
    for (Vertex v = 0; v < t.size(); ++v)
      for (Vertex w : t[v])
        if (v < w) e.emplace_back(v, w);
    out.push_back(Graph::from_edges(t.size(), e));
  }
  return out;
}

/// All connected unlabeled graphs on n vertices (n <= 6), by canonical
/// minimum adjacency bitmask over all vertex permutations.
inline std::vector<Graph> all_connected_graphs(std::size_t n) {
  if (n == 0 || n > kGraphEnumerationCap)
    throw ValidationError("graph enumeration needs 1 <= n <= 6");
  std::vector<Edge> slots;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    slot_of[slots[s].first][slots[s].second] = static_cast<int>(s);
    slot_of[slots[s].second][slots[s].first] = static_cast<int>(s);
  }

  auto connected = [&](std::uint32_t mask) {
    std::uint32_t reach = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) {
          const auto [a, b] = slots[s];
          if ((frontier >> a & 1) && !(reach >> b & 1)) next |= 1u << b;
          if ((frontier >> b & 1) && !(reach >> a & 1)) next |= 1u << a;
        }
      reach |= next;
      frontier = next;
    }
    return reach == (1u << n) - 1;
  };

  std::set<std::uint32_t> canon;
  const std::uint32_t total = 1u << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!connected(mask)) continue;
    std::uint32_t best = mask;
    for (const auto& q : perms) {
      std::uint32_t img = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) img |= 1u << slot_of[q[slots[s].first]][q[slots[s].second]];
      best = std::min(best, img);
    }
    canon.insert(best);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : canon) {
    std::vector<Edge> e;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) e.push_back(slots[s]);
    out.push_back(Graph::from_edges(n, e));
  }
  return out;
}

/// G(n, p) conditioned on connectivity: resampled until connected.
template <class Rng>
Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
  if (n == 0) throw ValidationError("random graph needs n >= 1");
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (coin(rng)) e.emplace_back(i, j);
    try {
      return Graph::from_edges(n, e);
    } catch (const ValidationError&) {
    }
  }
}

/// Uniform random labeled tree via a Pruefer sequence.
template <class Rng>
Graph random_tree(Rng& rng, std::size_t n) {
  if (n == 0) throw ValidationError("random tree needs n >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  std::vector<Edge> e;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    e.emplace_back(leaf, c);
    --deg[leaf];
    --deg[c];
  }
  Vertex a = 0;
  while (deg[a] != 1) ++a;
  Vertex b = a + 1;
  while (deg[b] != 1) ++b;
  e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

}  // namespace dublo

#endif  // DUBLO_ENUMERATE_HPP

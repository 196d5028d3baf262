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

#ifndef DUBLO_SYMMETRY_HPP
#define DUBLO_SYMMETRY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "dublo/distance.hpp"
#include "dublo/error.hpp"
#include "dublo/graph.hpp"
#include "dublo/measure.hpp"

namespace dublo {

/// sigma[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline constexpr std::size_t kSymmetrySizeCap = 256;
/// Enumerating the group explicitly stops above this many elements (K_8 has
/// 40320; K_9 and Hoffman-Singleton are refused).
inline constexpr std::size_t kMaxListedGroupOrder = 100'000;

struct OrbitPartition {
  std::vector<std::size_t> orbit_of;
  /// Orbits are ordered by their smallest vertex; each is sorted.
  std::vector<std::vector<Vertex>> orbits;
  std::uint64_t group_order = 1;

  std::size_t size() const { return orbits.size(); }
};

namespace detail {

/// Color refinement on the complete graph colored by hop distance: a vertex's
/// color is its previous color plus the multiset of (distance, color) pairs
/// to every other vertex. Automorphisms fixing `individualized` pointwise
/// preserve the final colors.
inline std::vector<std::size_t> refine_colors(const DistanceTable& dt,
                                              std::span<const Vertex> individualized = {}) {
  const std::size_t n = dt.order();
  std::vector<std::size_t> color(n, 0);
  for (std::size_t i = 0; i < individualized.size(); ++i)
    color[individualized[i]] = i + 1;
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.reserve(n + 1);
      for (Vertex w = 0; w < n; ++w)
        s.push_back(static_cast<std::size_t>(dt(v, w)) * (n + 2) + color[w]);
      std::sort(s.begin(), s.end());
      s.push_back(color[v]);
      std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (ids.size() == classes) return color;
    classes = ids.size();
  }
}

}  // namespace detail

/// Backtracking search over distance-preserving vertex maps. Candidates are
/// restricted to the refined color class and to neighbours of an already
/// mapped neighbour's image.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g)
      : g_(g), dt_(g), color_(detail::refine_colors(dt_)) {
    if (g.order() > kSymmetrySizeCap)
      throw ValidationError("automorphisms: graph exceeds " +
                            std::to_string(kSymmetrySizeCap) + " vertices");
  }

  const Graph& graph() const { return g_; }
  const DistanceTable& distances() const { return dt_; }
  const std::vector<std::size_t>& colors() const { return color_; }

  /// Visits every automorphism extending the forced pairs (u -> w). The
  /// visitor returns false to stop. Returns false iff stopped early.
  bool search(std::span<const std::pair<Vertex, Vertex>> forced,
              const std::function<bool(const Permutation&)>& visit) const {
    const std::size_t n = g_.order();
    for (const auto& [u, w] : forced)
      if (color_[u] != color_[w]) return true;

    // Order: forced pre-images first, then BFS so every later vertex has an
    // already ordered neighbour.
    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, n);
    std::vector<char> placed(n, 0);
    std::queue<Vertex> q;
    auto place = [&](Vertex v) {
      placed[v] = 1;
      order.push_back(v);
      q.push(v);
    };
    for (const auto& fw : forced)
      if (!placed[fw.first]) place(fw.first);
    for (Vertex root = 0; order.size() < n; ++root) {
      if (q.empty() && !placed[root]) place(root);
      while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        for (Vertex w : g_.neighbors(u))
          if (!placed[w]) {
            parent[w] = u;
            place(w);
          }
      }
    }

    std::vector<Vertex> forced_image(n, n);
    for (const auto& [u, w] : forced) {
      if (forced_image[u] != n && forced_image[u] != w) return true;
      forced_image[u] = w;
    }

    Permutation image(n, static_cast<Vertex>(n));
    std::vector<char> used(n, 0);
    bool stopped = false;

    std::function<void(std::size_t)> extend = [&](std::size_t level) {
      if (stopped) return;
      if (level == n) {
        if (!visit(image)) stopped = true;
        return;
      }
      const Vertex u = order[level];
      auto consistent = [&](Vertex w) {
        if (used[w] || color_[w] != color_[u]) return false;
        for (std::size_t j = 0; j < level; ++j)
          if (dt_(u, order[j]) != dt_(w, image[order[j]])) return false;
        return true;
      };
      auto attempt = [&](Vertex w) {
        if (!consistent(w)) return;
        image[u] = w;
        used[w] = 1;
        extend(level + 1);
        used[w] = 0;
        image[u] = static_cast<Vertex>(n);
      };
      if (forced_image[u] != n) {
        attempt(forced_image[u]);
      } else if (parent[u] != n && image[parent[u]] != n) {
        for (Vertex w : g_.neighbors(image[parent[u]])) {
          attempt(w);
          if (stopped) return;
        }
      } else {
        for (Vertex w = 0; w < n; ++w) {
          attempt(w);
          if (stopped) return;
        }
      }
    };
    extend(0);
    return !stopped;
  }

  std::optional<Permutation> find(std::span<const std::pair<Vertex, Vertex>> forced) const {
    std::optional<Permutation> found;
    search(forced, [&](const Permutation& p) {
      found = p;
      return false;
    });
    return found;
  }

 private:
  const Graph& g_;
  DistanceTable dt_;
  std::vector<std::size_t> color_;
};

/// The full automorphism group as explicit permutations, identity first.
inline std::vector<Permutation> automorphisms(const Graph& g,
                                              std::size_t max_order = kMaxListedGroupOrder) {
  AutomorphismSearch s(g);
  std::vector<Permutation> out;
  bool overflow = false;
  s.search({}, [&](const Permutation& p) {
    if (out.size() >= max_order) {
      overflow = true;
      return false;
    }
    out.push_back(p);
    return true;
  });
  if (overflow)
    throw ValidationError("automorphisms: group has more than " +
                          std::to_string(max_order) + " elements");
  Permutation id(g.order());
  std::iota(id.begin(), id.end(), Vertex{0});
  auto it = std::find(out.begin(), out.end(), id);
  if (it != out.end()) std::iter_swap(out.begin(), it);
  return out;
}

namespace detail {

inline OrbitPartition partition_from_union_find(std::vector<std::size_t> parent) {
  const std::size_t n = parent.size();
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  OrbitPartition out;
  out.orbit_of.assign(n, 0);
  std::map<std::size_t, std::size_t> id;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, fresh] = id.try_emplace(root(v), out.orbits.size());
    if (fresh) out.orbits.emplace_back();
    out.orbits[it->second].push_back(static_cast<Vertex>(v));
    out.orbit_of[v] = it->second;
  }
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t root(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

/// Orbits of an explicitly listed group.
inline OrbitPartition orbit_partition(const Graph& g, std::span<const Permutation> auts) {
  detail::UnionFind uf(g.order());
  for (const auto& p : auts)
    for (Vertex v = 0; v < g.order(); ++v) uf.unite(v, p.at(v));
  OrbitPartition out = detail::partition_from_union_find(uf.parent);
  out.group_order = auts.size();
  return out;
}

/// Orbits and group order without listing the group: orbits by pairwise
/// existence searches, the order by the orbit-stabilizer chain
/// |G| = prod_i |orbit of b_i under the stabilizer of b_0..b_{i-1}|.
inline OrbitPartition orbit_partition(const Graph& g) {
  const std::size_t n = g.order();
  AutomorphismSearch s(g);
  detail::UnionFind uf(n);
  auto absorb = [&](detail::UnionFind& target, const Permutation& p) {
    for (Vertex v = 0; v < n; ++v) target.unite(v, p[v]);
  };

  const auto& color = s.colors();
  // Test component representatives pairwise. Representatives shift as
  // components merge, so sweep until a pass merges nothing.
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w = u + 1; w < n; ++w) {
        if (color[u] != color[w]) continue;
        const auto ru = uf.root(u), rw = uf.root(w);
        if (ru == rw || ru != u || rw != w) continue;
        const std::pair<Vertex, Vertex> f{u, w};
        if (auto p = s.find(std::span(&f, 1))) {
          absorb(uf, *p);
          changed = true;
        }
      }
  }
  OrbitPartition out = detail::partition_from_union_find(uf.parent);

  // Stabilizer chain for the order.
  std::vector<std::pair<Vertex, Vertex>> fixed;
  std::vector<Vertex> base;
  std::uint64_t order = 1;
  for (Vertex b = 0; b < n; ++b) {
    auto refined = detail::refine_colors(s.distances(), base);
    if (std::set<std::size_t>(refined.begin(), refined.end()).size() == n) break;
    detail::UnionFind level(n);
    std::uint64_t orbit = 1;
    for (Vertex w = 0; w < n; ++w) {
      if (w == b || refined[w] != refined[b] || level.root(w) == level.root(b)) continue;
      auto forced = fixed;
      forced.emplace_back(b, w);
      if (auto p = s.find(forced)) absorb(level, *p);
    }
    for (Vertex w = 0; w < n; ++w)
      if (w != b && level.root(w) == level.root(b)) ++orbit;
    order *= orbit;
    fixed.emplace_back(b, b);
    base.push_back(b);
  }
  out.group_order = order;
  return out;
}

inline bool is_vertex_transitive(const Graph& g) { return orbit_partition(g).size() == 1; }

/// mu_F(v) = sum over sigma in F of mu(sigma(v)).
template <class Scalar>
Measure<Scalar> symmetrize(const Measure<Scalar>& mu, std::span<const Permutation> subset) {
  if (subset.empty()) throw ValidationError("symmetrize: empty permutation set");
  std::vector<Scalar> out(mu.size(), Scalar(0));
  for (const auto& p : subset) {
    if (p.size() != mu.size()) throw ValidationError("symmetrize: permutation size mismatch");
    for (std::size_t v = 0; v < mu.size(); ++v) out[v] += mu[p[v]];
  }
  return Measure<Scalar>(std::move(out));
}

/// Symmetrization over the whole group, up to the factor |G|/|orbit|: each
/// vertex receives the mean weight of its orbit.
template <class Scalar>
Measure<Scalar> orbit_average(const Measure<Scalar>& mu, const OrbitPartition& orbits) {
  std::vector<Scalar> out(mu.size(), Scalar(0));
  for (const auto& orb : orbits.orbits) {
    Scalar s(0);
    for (Vertex v : orb) s += mu[v];
    s /= Scalar(static_cast<long>(orb.size()));
    for (Vertex v : orb) out[v] = s;
  }
  return Measure<Scalar>(std::move(out));
}

}  // namespace dublo

#endif  // DUBLO_SYMMETRY_HPP

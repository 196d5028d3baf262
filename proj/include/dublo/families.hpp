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

#ifndef DUBLO_FAMILIES_HPP
#define DUBLO_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dublo/distance.hpp"
#include "dublo/doubling.hpp"
#include "dublo/error.hpp"
#include "dublo/graph.hpp"
#include "dublo/measure.hpp"
#include "dublo/optimizer.hpp"
#include "dublo/spectral.hpp"
#include "dublo/symmetry.hpp"

namespace dublo {

enum class Family {
  kComplete,
  kStar,
  kCycle,
  kPath,
  kCompleteBipartite,
  kWheel,
  kFriendship,
  kCocktailParty,
  kPetersen,
  kHoffmanSingleton,
  kClebsch,
  kDn,
  kDHatN,
  kE6,
  kE7,
  kE8,
  kE6Hat,
  kE7Hat,
  kE8Hat,
  kThreeLegs,
  kDoyle,
  kGridRayTruncation,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 22> kFamilyNames{{
    {Family::kComplete, "complete"},
    {Family::kStar, "star"},
    {Family::kCycle, "cycle"},
    {Family::kPath, "path"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kWheel, "wheel"},
    {Family::kFriendship, "friendship"},
    {Family::kCocktailParty, "cocktail_party"},
    {Family::kPetersen, "petersen"},
    {Family::kHoffmanSingleton, "hoffman_singleton"},
    {Family::kClebsch, "clebsch"},
    {Family::kDn, "d_n"},
    {Family::kDHatN, "d_hat_n"},
    {Family::kE6, "e6"},
    {Family::kE7, "e7"},
    {Family::kE8, "e8"},
    {Family::kE6Hat, "e6_hat"},
    {Family::kE7Hat, "e7_hat"},
    {Family::kE8Hat, "e8_hat"},
    {Family::kThreeLegs, "three_legs"},
    {Family::kDoyle, "doyle"},
    {Family::kGridRayTruncation, "grid_ray_truncation"},
}};

inline std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  for (const auto& [fam, fname] : kFamilyNames)
    if (fname == name) return fam;
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

/// n is the main size parameter (vertex count for K_n, C_n, L_n, W_n, D_n,
/// D-hat_n; leaf count for S_n; triangle count for F_n; pair count for the
/// cocktail party; degree for Clebsch; depth for grid_ray_truncation). m is
/// the first part size of K_{m,n}.
struct FamilySpec {
  Family family = Family::kComplete;
  int n = 0;
  int m = 0;
};

namespace detail {

// Holt graph on Z_9 x Z_3, (x, y) ~ (4x +- 1, y + 1), indexed 3x + y.
inline constexpr std::pair<int, int> kDoyleEdges[] = {
    {0, 4}, {0, 8}, {0, 23}, {0, 25}, {1, 5}, {1, 6}, {1, 21}, {1, 26}, {2, 3},
    {2, 7}, {2, 22}, {2, 24}, {3, 10}, {3, 16}, {3, 17}, {4, 11}, {4, 15},
    {4, 17}, {5, 9}, {5, 15}, {5, 16}, {6, 11}, {6, 22}, {6, 23}, {7, 9},
    {7, 21}, {7, 23}, {8, 10}, {8, 21}, {8, 22}, {9, 13}, {9, 17}, {10, 14},
    {10, 15}, {11, 12}, {11, 16}, {12, 19}, {12, 25}, {12, 26}, {13, 20},
    {13, 24}, {13, 26}, {14, 18}, {14, 24}, {14, 25}, {15, 20}, {16, 18},
    {17, 19}, {18, 22}, {18, 26}, {19, 23}, {19, 24}, {20, 21}, {20, 25},
};

inline constexpr std::pair<int, int> kHoffmanSingletonEdges[] = {
    {0, 1}, {0, 2}, {0, 3}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {1, 12}, {1, 17},
    {1, 26}, {1, 27}, {1, 28}, {1, 29}, {2, 10}, {2, 11}, {2, 13}, {2, 14},
    {2, 15}, {2, 16}, {3, 4}, {3, 5}, {3, 30}, {3, 35}, {3, 40}, {3, 45},
    {4, 11}, {4, 17}, {4, 34}, {4, 39}, {4, 44}, {4, 49}, {5, 10}, {5, 12},
    {5, 33}, {5, 38}, {5, 43}, {5, 48}, {6, 18}, {6, 22}, {6, 31}, {6, 39},
    {6, 43}, {6, 47}, {7, 19}, {7, 23}, {7, 34}, {7, 37}, {7, 41}, {7, 48},
    {8, 20}, {8, 24}, {8, 33}, {8, 36}, {8, 42}, {8, 49}, {9, 21}, {9, 25},
    {9, 32}, {9, 38}, {9, 44}, {9, 46}, {10, 17}, {10, 18}, {10, 19}, {10, 20},
    {10, 21}, {11, 12}, {11, 32}, {11, 37}, {11, 42}, {11, 47}, {12, 31},
    {12, 36}, {12, 41}, {12, 46}, {13, 22}, {13, 26}, {13, 30}, {13, 36},
    {13, 44}, {13, 48}, {14, 23}, {14, 27}, {14, 31}, {14, 38}, {14, 40},
    {14, 49}, {15, 24}, {15, 28}, {15, 34}, {15, 35}, {15, 43}, {15, 46},
    {16, 25}, {16, 29}, {16, 33}, {16, 39}, {16, 41}, {16, 45}, {17, 22},
    {17, 23}, {17, 24}, {17, 25}, {18, 26}, {18, 32}, {18, 35}, {18, 41},
    {18, 49}, {19, 27}, {19, 30}, {19, 39}, {19, 42}, {19, 46}, {20, 28},
    {20, 31}, {20, 37}, {20, 44}, {20, 45}, {21, 29}, {21, 34}, {21, 36},
    {21, 40}, {21, 47}, {22, 33}, {22, 37}, {22, 40}, {22, 46}, {23, 32},
    {23, 36}, {23, 43}, {23, 45}, {24, 30}, {24, 38}, {24, 41}, {24, 47},
    {25, 31}, {25, 35}, {25, 42}, {25, 48}, {26, 34}, {26, 38}, {26, 42},
    {26, 45}, {27, 33}, {27, 35}, {27, 44}, {27, 47}, {28, 32}, {28, 39},
    {28, 40}, {28, 48}, {29, 30}, {29, 37}, {29, 43}, {29, 49}, {30, 31},
    {30, 32}, {31, 34}, {32, 33}, {33, 34}, {35, 36}, {35, 37}, {36, 39},
    {37, 38}, {38, 39}, {40, 41}, {40, 42}, {41, 44}, {42, 43}, {43, 44},
    {45, 46}, {45, 47}, {46, 49}, {47, 48}, {48, 49},
};

inline Graph graph_from_pairs(std::size_t n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> e;
  for (const auto& [a, b] : pairs) e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return Graph::from_edges(n, e);
}

/// Tree with one center and legs of the given lengths. Vertices are numbered
/// by level: the center, then every leg's first vertex, then second, ...
inline Graph spider(std::vector<int> legs) {
  std::vector<Edge> e;
  std::vector<Vertex> tip(legs.size(), 0);
  Vertex next = 1;
  const int depth = *std::max_element(legs.begin(), legs.end());
  for (int level = 1; level <= depth; ++level)
    for (std::size_t i = 0; i < legs.size(); ++i)
      if (legs[i] >= level) {
        e.emplace_back(tip[i], next);
        tip[i] = next++;
      }
  return Graph::from_edges(next, e);
}

/// Path on `len` vertices plus extra leaves hung on the listed path vertices.
inline Graph path_with_leaves(int len, std::vector<int> attach) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < len; ++i) e.emplace_back(i, i + 1);
  Vertex next = static_cast<Vertex>(len);
  for (int a : attach) e.emplace_back(static_cast<Vertex>(a), next++);
  return Graph::from_edges(next, e);
}

inline int girth(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> parent(g.order(), 0);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          const int cyc = dist[u] + dist[w] + 1;
          if (best == 0 || cyc < best) best = cyc;
        }
      }
    }
  }
  return best;
}

inline void require(bool ok, std::string_view family, const std::string& what) {
  if (!ok) throw ValidationError("self-check failed for " + std::string(family) + ": " + what);
}

inline void require_close(double got, double want, std::string_view family,
                          const std::string& what, double tol = 1e-9) {
  require(std::abs(got - want) <= tol, family,
          what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace detail

/// Closed-form radius-0 constants of the Smith graphs.
enum class SmithFamily { kPath, kCycle, kDn, kDHatN, kE6, kE7, kE8, kE6Hat, kE7Hat, kE8Hat };

inline double smith_c0_table(SmithFamily f, int n = 0) {
  using std::numbers::pi;
  switch (f) {
    case SmithFamily::kPath:
      if (n < 1) throw ValidationError("L_n needs n >= 1");
      return 1.0 + 2.0 * std::cos(pi / (n + 1));
    case SmithFamily::kDn:
      if (n < 4) throw ValidationError("D_n needs n >= 4");
      return 1.0 + 2.0 * std::cos(pi / (2.0 * (n - 1)));
    case SmithFamily::kE6: return 1.0 + 2.0 * std::cos(pi / 12);
    case SmithFamily::kE7: return 1.0 + 2.0 * std::cos(pi / 18);
    case SmithFamily::kE8: return 1.0 + 2.0 * std::cos(pi / 30);
    case SmithFamily::kCycle:
    case SmithFamily::kDHatN:
    case SmithFamily::kE6Hat:
    case SmithFamily::kE7Hat:
    case SmithFamily::kE8Hat: return 3.0;
  }
  throw ValidationError("unsupported Smith family");
}

inline std::optional<SmithFamily> smith_family_of(Family f) {
  switch (f) {
    case Family::kPath: return SmithFamily::kPath;
    case Family::kCycle: return SmithFamily::kCycle;
    case Family::kDn: return SmithFamily::kDn;
    case Family::kDHatN: return SmithFamily::kDHatN;
    case Family::kE6: return SmithFamily::kE6;
    case Family::kE7: return SmithFamily::kE7;
    case Family::kE8: return SmithFamily::kE8;
    case Family::kE6Hat:
    case Family::kThreeLegs: return SmithFamily::kE6Hat;
    case Family::kE7Hat: return SmithFamily::kE7Hat;
    case Family::kE8Hat: return SmithFamily::kE8Hat;
    default: return std::nullopt;
  }
}

namespace detail {

inline void check_params(const FamilySpec& s) {
  const auto name = family_name(s.family);
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw ValidationError(std::string(name) + ": " + what);
  };
  switch (s.family) {
    case Family::kComplete: need(s.n >= 1, "requires n >= 1"); break;
    case Family::kStar: need(s.n >= 1, "requires n >= 1"); break;
    case Family::kCycle: need(s.n >= 3, "requires n >= 3"); break;
    case Family::kPath: need(s.n >= 1, "requires n >= 1"); break;
    case Family::kCompleteBipartite: need(s.m >= 1 && s.n >= 1, "requires m, n >= 1"); break;
    case Family::kWheel: need(s.n >= 4, "requires n >= 4"); break;
    case Family::kFriendship: need(s.n >= 1, "requires n >= 1"); break;
    case Family::kCocktailParty: need(s.n >= 2, "requires n >= 2"); break;
    case Family::kClebsch: need(s.n == 5 || s.n == 10, "degree must be 5 or 10"); break;
    case Family::kDn: need(s.n >= 4, "requires n >= 4"); break;
    case Family::kDHatN: need(s.n >= 5, "requires n >= 5"); break;
    case Family::kGridRayTruncation: need(s.n >= 1, "requires depth >= 1"); break;
    default: break;
  }
}

inline Graph build(const FamilySpec& s) {
  std::vector<Edge> e;
  auto V = [](int x) { return static_cast<Vertex>(x); };
  switch (s.family) {
    case Family::kComplete:
      for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) e.emplace_back(V(i), V(j));
      return Graph::from_edges(s.n, e);
    case Family::kStar:
      for (int i = 1; i <= s.n; ++i) e.emplace_back(0, V(i));
      return Graph::from_edges(s.n + 1, e);
    case Family::kCycle:
      for (int i = 0; i < s.n; ++i) e.emplace_back(V(i), V((i + 1) % s.n));
      return Graph::from_edges(s.n, e);
    case Family::kPath:
      return path_with_leaves(s.n, {});
    case Family::kCompleteBipartite:
      for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.n; ++j) e.emplace_back(V(i), V(s.m + j));
      return Graph::from_edges(s.m + s.n, e);
    case Family::kWheel:
      for (int i = 1; i < s.n; ++i) {
        e.emplace_back(0, V(i));
        e.emplace_back(V(i), V(i % (s.n - 1) + 1));
      }
      return Graph::from_edges(s.n, e);
    case Family::kFriendship:
      for (int t = 0; t < s.n; ++t) {
        e.emplace_back(0, V(2 * t + 1));
        e.emplace_back(0, V(2 * t + 2));
        e.emplace_back(V(2 * t + 1), V(2 * t + 2));
      }
      return Graph::from_edges(2 * s.n + 1, e);
    case Family::kCocktailParty:
      // K_{2n} minus the perfect matching {2i, 2i+1}.
      for (int i = 0; i < 2 * s.n; ++i)
        for (int j = i + 1; j < 2 * s.n; ++j)
          if (j != (i ^ 1)) e.emplace_back(V(i), V(j));
      return Graph::from_edges(2 * s.n, e);
    case Family::kPetersen:
      for (int i = 0; i < 5; ++i) {
        e.emplace_back(V(i), V((i + 1) % 5));
        e.emplace_back(V(i), V(i + 5));
        e.emplace_back(V(5 + i), V(5 + (i + 2) % 5));
      }
      return Graph::from_edges(10, e);
    case Family::kHoffmanSingleton:
      return graph_from_pairs(50, kHoffmanSingletonEdges);
    case Family::kClebsch:
      // Folded 5-cube: 4-bit words adjacent at Hamming distance 1 or 4;
      // degree 10 is its complement.
      for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
          const int d = std::popcount(static_cast<unsigned>(i ^ j));
          const bool folded = d == 1 || d == 4;
          if (folded == (s.n == 5)) e.emplace_back(V(i), V(j));
        }
      return Graph::from_edges(16, e);
    case Family::kDn:
      return path_with_leaves(s.n - 1, {1});
    case Family::kDHatN:
      return path_with_leaves(s.n - 2, {1, s.n - 4});
    case Family::kE6: return path_with_leaves(5, {2});
    case Family::kE7: return path_with_leaves(6, {2});
    case Family::kE8: return path_with_leaves(7, {2});
    case Family::kE6Hat:
    case Family::kThreeLegs: return spider({2, 2, 2});
    case Family::kE7Hat: return spider({3, 3, 1});
    case Family::kE8Hat: return spider({5, 2, 1});
    case Family::kDoyle: return graph_from_pairs(27, kDoyleEdges);
    case Family::kGridRayTruncation: {
      // Lattice points (x, y, 0) with |x| + |y| <= 3m, then the ray
      // (0, 0, p) for p = 1..3m.
      const int r = 3 * s.n;
      std::vector<std::vector<int>> id(2 * r + 1, std::vector<int>(2 * r + 1, -1));
      int next = 0;
      for (int x = -r; x <= r; ++x)
        for (int y = -r; y <= r; ++y)
          if (std::abs(x) + std::abs(y) <= r) id[x + r][y + r] = next++;
      for (int x = -r; x <= r; ++x)
        for (int y = -r; y <= r; ++y) {
          const int a = id[x + r][y + r];
          if (a < 0) continue;
          if (x + 1 <= r && id[x + 1 + r][y + r] >= 0) e.emplace_back(V(a), V(id[x + 1 + r][y + r]));
          if (y + 1 <= r && id[x + r][y + 1 + r] >= 0) e.emplace_back(V(a), V(id[x + r][y + 1 + r]));
        }
      int prev = id[r][r];
      for (int p = 1; p <= r; ++p) {
        e.emplace_back(V(prev), V(next));
        prev = next++;
      }
      return Graph::from_edges(next, e);
    }
  }
  throw ValidationError("unhandled family");
}

inline void self_check(const FamilySpec& s, const Graph& g) {
  const auto name = family_name(s.family);
  const DistanceTable dt(g);
  const auto facts = structural_facts(g, dt);
  auto vertices = [&](std::size_t want) {
    require(g.order() == want, name, "vertex count " + std::to_string(g.order()) +
                                         " != " + std::to_string(want));
  };
  auto regular = [&](std::size_t k) {
    require(facts.is_regular && facts.max_degree == k, name,
            "not " + std::to_string(k) + "-regular");
  };
  auto diameter = [&](int d) {
    require(dt.diameter() == d, name, "diameter " + std::to_string(dt.diameter()) +
                                          " != " + std::to_string(d));
  };
  switch (s.family) {
    case Family::kComplete: vertices(s.n); regular(s.n - 1); break;
    case Family::kStar: vertices(s.n + 1); break;
    case Family::kCycle: vertices(s.n); regular(2); break;
    case Family::kPath: vertices(s.n); require(!facts.has_cycle, name, "has a cycle"); break;
    case Family::kCompleteBipartite: vertices(s.m + s.n); break;
    case Family::kWheel:
      vertices(s.n);
      require(g.degree(0) == static_cast<std::size_t>(s.n - 1), name, "hub degree");
      if (s.n > 4) diameter(2);
      break;
    case Family::kFriendship:
      vertices(2 * s.n + 1);
      require(g.degree(0) == static_cast<std::size_t>(2 * s.n), name, "hub degree");
      break;
    case Family::kCocktailParty:
      vertices(2 * s.n); regular(2 * s.n - 2); diameter(2); break;
    case Family::kPetersen:
      vertices(10); regular(3); diameter(2); require(girth(g) == 5, name, "girth"); break;
    case Family::kHoffmanSingleton:
      vertices(50); regular(7); diameter(2); require(girth(g) == 5, name, "girth"); break;
    case Family::kClebsch:
      vertices(16); regular(s.n); diameter(2);
      if (s.n == 5) require(girth(g) == 4, name, "girth");
      break;
    case Family::kDoyle:
      vertices(27); regular(4); diameter(3);
      require(is_vertex_transitive(g), name, "not vertex-transitive");
      break;
    case Family::kGridRayTruncation: {
      const int r = 3 * s.n;
      vertices(static_cast<std::size_t>(2 * r * r + 2 * r + 1 + r));
      break;
    }
    default: break;
  }
  if (auto smith = smith_family_of(s.family)) {
    require(!facts.has_cycle || s.family == Family::kCycle, name, "unexpected cycle");
    require_close(c0_constant(g), smith_c0_table(*smith, static_cast<int>(g.order())), name,
                  "C0");
  }
}

}  // namespace detail

/// Generates a named graph and re-validates it against its defining
/// properties. A failed self-check signals a construction bug.
inline Graph generate(const FamilySpec& s, std::size_t size_cap = default_size_cap()) {
  detail::check_params(s);
  Graph g = detail::build(s);
  if (g.order() > size_cap)
    throw ValidationError(std::string(family_name(s.family)) + ": " +
                          std::to_string(g.order()) + " vertices exceeds the size cap");
  detail::self_check(s, g);
  return g;
}

enum class Provenance { kExact, kLowerBoundOnly, kC0Only };

inline std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kExact: return "exact";
    case Provenance::kLowerBoundOnly: return "lower_bound_only";
    case Provenance::kC0Only: return "c0_only";
  }
  return "unknown";
}

struct ExpectedConstant {
  /// Exact C_G, or for lower_bound_only a proven lower bound; empty for c0_only.
  std::optional<double> c_g;
  double c0 = 0.0;
  Provenance proven = Provenance::kExact;
  std::string note;
};

inline constexpr std::array<double, 4> kThreeLegsPolynomial{1, 1, -5, -3};
inline constexpr std::array<double, 9> kE8Polynomial{1, -6, 11, -4, -10, 14, -8, 2, 0};

inline ExpectedConstant expected_constant(const FamilySpec& s) {
  detail::check_params(s);
  const double n = s.n, m = s.m;
  ExpectedConstant e;
  auto exact = [&](double c_g, double c0) {
    e.c_g = c_g;
    e.c0 = c0;
    e.proven = Provenance::kExact;
  };
  auto c0_only = [&](double c0, std::string note) {
    e.c0 = c0;
    e.proven = Provenance::kC0Only;
    e.note = std::move(note);
  };
  switch (s.family) {
    case Family::kComplete: exact(n, n); break;
    case Family::kStar: exact(1 + std::sqrt(n), 1 + std::sqrt(n)); break;
    case Family::kCycle: exact(3, 3); break;
    case Family::kPath:
      c0_only(smith_c0_table(SmithFamily::kPath, s.n), "C_G < 3, tends to 3 as n grows");
      break;
    case Family::kCompleteBipartite: exact(1 + std::sqrt(m * n), 1 + std::sqrt(m * n)); break;
    case Family::kWheel: exact(2 + std::sqrt(n), 2 + std::sqrt(n)); break;
    case Family::kFriendship: {
      const double c = 1 + 0.5 * (1 + std::sqrt(1 + 8 * n));
      exact(c, c);
      break;
    }
    case Family::kCocktailParty: exact(2 * n - 1, 2 * n - 1); break;
    case Family::kPetersen: exact(4, 4); break;
    case Family::kHoffmanSingleton: exact(8, 8); break;
    case Family::kClebsch:
      exact(n + 1, n + 1);
      e.note = "literature table lists C = 5 for the Clebsch graph; a degree-" +
               std::to_string(s.n) + " diameter-2 graph has C = " + std::to_string(s.n + 1);
      break;
    case Family::kDn:
      c0_only(smith_c0_table(SmithFamily::kDn, s.n), "C_G <= 3; exact value not known in closed form");
      break;
    case Family::kDHatN: exact(3, 3); break;
    case Family::kE6: c0_only(smith_c0_table(SmithFamily::kE6), "C_G < 3"); break;
    case Family::kE7: c0_only(smith_c0_table(SmithFamily::kE7), "C_G < 3"); break;
    case Family::kE8:
      e.c_g = poly_largest_root(kE8Polynomial);
      e.c0 = smith_c0_table(SmithFamily::kE8);
      e.proven = Provenance::kLowerBoundOnly;
      e.note = "C_G is at least the largest root of x^8-6x^7+11x^6-4x^5-10x^4+14x^3-8x^2+2x";
      break;
    case Family::kE6Hat:
    case Family::kThreeLegs:
      exact(1 + poly_largest_root(kThreeLegsPolynomial), 3);
      e.note = "C_G - 1 is the largest root of x^3+x^2-5x-3";
      break;
    case Family::kE7Hat: c0_only(3, "C_G > 3"); break;
    case Family::kE8Hat: c0_only(3, "C_G > 3"); break;
    case Family::kDoyle: exact(27.0 / 5.0, 5); break;
    case Family::kGridRayTruncation:
      throw ValidationError("grid_ray_truncation has no stated constant");
  }
  return e;
}

enum class TruncationKind { kPathN, kPathZ, kDInfinity, kGridRay };

inline TruncationKind parse_truncation_kind(std::string_view name) {
  if (name == "path_N") return TruncationKind::kPathN;
  if (name == "path_Z") return TruncationKind::kPathZ;
  if (name == "d_infinity") return TruncationKind::kDInfinity;
  if (name == "grid_ray") return TruncationKind::kGridRay;
  throw ValidationError("unknown truncation family '" + std::string(name) + "'");
}

inline std::string_view truncation_kind_name(TruncationKind k) {
  switch (k) {
    case TruncationKind::kPathN: return "path_N";
    case TruncationKind::kPathZ: return "path_Z";
    case TruncationKind::kDInfinity: return "d_infinity";
    case TruncationKind::kGridRay: return "grid_ray";
  }
  return "unknown";
}

struct TruncationRecord {
  int depth = 0;
  std::size_t vertices = 0;
  /// Empty for grid_ray truncations above the size cap.
  std::optional<double> c0;
  /// Path families: counting measure C_mu. d_infinity: C_mu of the measure
  /// 1 on the two short leaves and 2 elsewhere. grid_ray: the counting ratio
  /// |B((0,0,k), 2k+1)| / |B((0,0,k), k)| at k = depth.
  double c_counting_report = 0.0;
};

/// Finite truncations standing in for N (L_depth), Z (L_{2 depth + 1}),
/// D_infinity (D_depth) and the plane-plus-ray graph.
inline std::vector<TruncationRecord> truncation_study(TruncationKind kind,
                                                      std::span<const int> depths,
                                                      std::size_t size_cap = default_size_cap()) {
  std::vector<TruncationRecord> out;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const int d = depths[i];
    if (i > 0 && d <= depths[i - 1]) throw ValidationError("truncation depths must increase");
    TruncationRecord rec;
    rec.depth = d;
    if (kind == TruncationKind::kGridRay) {
      // Balls around (0, 0, d) only need one BFS; the cap governs c0.
      const Graph g = detail::build({Family::kGridRayTruncation, d, 0});
      rec.vertices = g.order();
      const Vertex origin = static_cast<Vertex>(g.order() - 3 * d - 1);
      const Vertex center = origin + static_cast<Vertex>(d);
      std::vector<int> dist(g.order(), -1);
      std::queue<Vertex> q;
      dist[center] = 0;
      q.push(center);
      while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            q.push(w);
          }
      }
      const auto outer = std::count_if(dist.begin(), dist.end(), [&](int x) { return x <= 2 * d + 1; });
      const auto inner = std::count_if(dist.begin(), dist.end(), [&](int x) { return x <= d; });
      rec.c_counting_report = static_cast<double>(outer) / static_cast<double>(inner);
      if (g.order() <= size_cap) rec.c0 = c0_constant(g);
      out.push_back(rec);
      continue;
    }
    FamilySpec spec;
    switch (kind) {
      case TruncationKind::kPathN: spec = {Family::kPath, d, 0}; break;
      case TruncationKind::kPathZ: spec = {Family::kPath, 2 * d + 1, 0}; break;
      case TruncationKind::kDInfinity: spec = {Family::kDn, d, 0}; break;
      default: break;
    }
    const Graph g = generate(spec, size_cap);
    const DistanceTable dt(g);
    rec.vertices = g.order();
    rec.c0 = c0_constant(g);
    if (kind == TruncationKind::kDInfinity) {
      // D_n from generate: path 0..n-2, extra leaf n-1 on vertex 1. The two
      // short leaves are vertices 0 and n-1.
      std::vector<double> w(g.order(), 2.0);
      w[0] = 1.0;
      w[g.order() - 1] = 1.0;
      rec.c_counting_report = doubling_report(dt, RealMeasure(w)).c_mu;
    } else {
      rec.c_counting_report = doubling_report(dt, counting_measure(g)).c_mu;
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace dublo

#endif  // DUBLO_FAMILIES_HPP

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

#ifndef DUBLO_CLASSIFIER_HPP
#define DUBLO_CLASSIFIER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dublo/distance.hpp"
#include "dublo/families.hpp"
#include "dublo/graph.hpp"
#include "dublo/measure.hpp"
#include "dublo/optimizer.hpp"

namespace dublo {

enum class StructuralRule { kCycle, kDegreeAbove3, kTwoBranchVertices };

struct StructuralReason {
  StructuralRule rule;
  std::string text;
};

inline std::string_view rule_code(StructuralRule r) {
  switch (r) {
    case StructuralRule::kCycle: return "i";
    case StructuralRule::kDegreeAbove3: return "ii";
    case StructuralRule::kTwoBranchVertices: return "iii";
  }
  return "?";
}

/// First of the three conditions forcing C_G^0 >= 3: a cycle, a vertex of
/// degree > 3, two vertices of degree >= 3.
inline std::optional<StructuralReason> structural_lower_bound(const Graph& g) {
  const auto f = structural_facts(g);
  if (f.has_cycle) return StructuralReason{StructuralRule::kCycle, "contains a cycle"};
  if (f.max_degree > 3)
    return StructuralReason{StructuralRule::kDegreeAbove3,
                            "vertex of degree " + std::to_string(f.max_degree) + " > 3"};
  if (f.count_deg_ge3 >= 2)
    return StructuralReason{StructuralRule::kTwoBranchVertices,
                            std::to_string(f.count_deg_ge3) + " vertices of degree >= 3"};
  return std::nullopt;
}

enum class Verdict { kLeq3Strict, kEq3, kGt3 };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kLeq3Strict: return "leq3_strict";
    case Verdict::kEq3: return "eq3";
    case Verdict::kGt3: return "gt3";
  }
  return "?";
}

struct FamilyMatch {
  SmithFamily family;
  int n = 0;
  std::string name;  // "L_7", "D_5", "E_6", "C_9", "D^_6"
};

/// Where the exact certificate puts C_G relative to 3.
enum class Position { kBelow, kEqual, kAbove, kUndetermined };

inline std::string_view position_name(Position p) {
  switch (p) {
    case Position::kBelow: return "below";
    case Position::kEqual: return "equal";
    case Position::kAbove: return "above";
    case Position::kUndetermined: return "undetermined";
  }
  return "?";
}

struct ClassificationVerdict {
  Verdict verdict = Verdict::kGt3;
  std::optional<FamilyMatch> family_match;
  std::vector<std::string> reasons;
  std::optional<OptimizationResult> numeric_cross_check;
  std::optional<Position> certified_position;
  /// Set when the cross-check ran: verdict and certificate agree.
  std::optional<bool> agrees;
};

/// Sign of C_G - 3 from an exact bracket: t_hi < 3, t_lo > 3 or t_lo = t_hi = 3.
inline Position certified_position(const Certificate& cert) {
  const Rational three(3);
  if (cert.exact && cert.t_lo == three) return Position::kEqual;
  if (cert.t_hi < three) return Position::kBelow;
  if (cert.t_lo > three) return Position::kAbove;
  return Position::kUndetermined;
}

namespace detail {

/// For a tree with one branch vertex c, the sorted lengths of the paths
/// hanging off c.
inline std::vector<int> arm_lengths(const Graph& g, Vertex c) {
  std::vector<int> arms;
  for (Vertex start : g.neighbors(c)) {
    int len = 1;
    Vertex prev = c, cur = start;
    while (g.degree(cur) == 2) {
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

inline std::size_t leaf_neighbors(const Graph& g, Vertex v) {
  std::size_t c = 0;
  for (Vertex w : g.neighbors(v)) c += g.degree(w) == 1;
  return c;
}

inline FamilyMatch match(SmithFamily f, int n, std::string name) {
  return FamilyMatch{f, n, std::move(name)};
}

}  // namespace detail

/// Recognises the six families with C_G <= 3 (paths, cycles, D_n, D^_n, E_6,
/// E_7) from degrees and tree shape; everything else is gt3. With
/// cross_check, least_doubling runs in certificate mode and its exact
/// bracket is compared against the verdict.
inline ClassificationVerdict classify_leq3(const Graph& g, double tol = 1e-9,
                                           bool cross_check = false) {
  ClassificationVerdict out;
  const auto facts = structural_facts(g);
  const int n = static_cast<int>(g.order());
  const bool tree = !facts.has_cycle;
  const auto reason = structural_lower_bound(g);

  auto set = [&](Verdict v, std::optional<FamilyMatch> m, std::string why) {
    out.verdict = v;
    out.family_match = std::move(m);
    out.reasons.push_back(std::move(why));
  };

  if (!tree) {
    if (facts.is_regular && facts.max_degree == 2) {
      set(Verdict::kEq3, detail::match(SmithFamily::kCycle, n, "C_" + std::to_string(n)),
          "cycle: C_G = 3");
    } else {
      set(Verdict::kGt3, std::nullopt,
          "(" + std::string(rule_code(reason->rule)) + ") " + reason->text +
              " and the graph is not a cycle");
    }
  } else if (facts.max_degree <= 2) {
    set(Verdict::kLeq3Strict, detail::match(SmithFamily::kPath, n, "L_" + std::to_string(n)),
        "path: C_G < 3");
  } else if (facts.max_degree == 4 && n == 5) {
    set(Verdict::kEq3, detail::match(SmithFamily::kDHatN, 5, "D^_5"),
        "star K_{1,4} = D^_5: C_G = C_G^0 = 3");
  } else if (facts.max_degree > 3) {
    set(Verdict::kGt3, std::nullopt, "(ii) " + reason->text);
  } else if (facts.count_deg_ge3 == 2) {
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 3) branch.push_back(v);
    if (detail::leaf_neighbors(g, branch[0]) == 2 && detail::leaf_neighbors(g, branch[1]) == 2) {
      set(Verdict::kEq3, detail::match(SmithFamily::kDHatN, n, "D^_" + std::to_string(n)),
          "two branch vertices each carrying two leaves: D^_n, C_G = C_G^0 = 3");
    } else {
      set(Verdict::kGt3, std::nullopt, "(iii) " + reason->text + " and the tree is not D^_n");
    }
  } else if (facts.count_deg_ge3 > 2) {
    set(Verdict::kGt3, std::nullopt, "(iii) " + reason->text);
  } else {
    Vertex c = 0;
    while (g.degree(c) != 3) ++c;
    const auto arms = detail::arm_lengths(g, c);
    const int a = arms[0], b = arms[1], l = arms[2];
    if (a == 1 && b == 1) {
      set(Verdict::kLeq3Strict, detail::match(SmithFamily::kDn, n, "D_" + std::to_string(n)),
          "D_n: C_G <= 3 structurally; strictness rests on the exact certificate");
    } else if (a == 1 && b == 2 && l == 2) {
      set(Verdict::kLeq3Strict, detail::match(SmithFamily::kE6, 6, "E_6"), "E_6: C_G < 3");
    } else if (a == 1 && b == 2 && l == 3) {
      set(Verdict::kLeq3Strict, detail::match(SmithFamily::kE7, 7, "E_7"), "E_7: C_G < 3");
    } else if (a == 1 && b == 2 && l == 4) {
      set(Verdict::kGt3, std::nullopt, "E_8: r(A) <= 2 but C_G > 3");
    } else if ((a == 2 && b == 2 && l == 2) || (a == 1 && b == 3 && l == 3) ||
               (a == 1 && b == 2 && l == 5)) {
      set(Verdict::kGt3, std::nullopt, "extended Dynkin tree: r(A) = 2 but C_G > 3");
    } else {
      set(Verdict::kGt3, std::nullopt,
          "tree with arms (" + std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(l) + ") properly contains an extended Dynkin tree: C_G^0 > 3");
    }
  }

  if (cross_check) {
    OptimizerOptions opts;
    opts.tol = tol;
    opts.certificate = true;
    out.numeric_cross_check = least_doubling(g, opts);
    const Position pos = certified_position(*out.numeric_cross_check->certificate);
    out.certified_position = pos;
    switch (out.verdict) {
      case Verdict::kLeq3Strict: out.agrees = pos == Position::kBelow; break;
      case Verdict::kEq3: out.agrees = pos == Position::kEqual; break;
      case Verdict::kGt3: out.agrees = pos == Position::kAbove; break;
    }
  }
  return out;
}

}  // namespace dublo

#endif  // DUBLO_CLASSIFIER_HPP

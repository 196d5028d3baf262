#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dublo/classifier.hpp"
#include "dublo/enumerate.hpp"
#include "dublo/families.hpp"
#include "dublo/graph6.hpp"
#include "dublo/spectral.hpp"
#include "dublo/symmetry.hpp"

namespace dublo {
namespace {

Graph fam(Family f, int n = 0, int m = 0) { return generate({f, n, m}); }

std::vector<Graph> read_g6(const std::string& name) {
  std::ifstream in(std::string(DUBLO_TEST_DATA) + "/" + name);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(parse_graph6(line));
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  // Both copies hung under one apex: some automorphism carries vertex 0 into
  // the second copy iff the (connected) graphs are isomorphic.
  std::vector<Edge> e;
  const std::size_t n = a.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (a.has_edge(u, v)) e.emplace_back(u, v);
      if (b.has_edge(u, v)) e.emplace_back(u + n, v + n);
    }
  for (Vertex v = 0; v < n; ++v) e.emplace_back(2 * n, v), e.emplace_back(2 * n, v + n);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  const auto orb = orbit_partition(Graph::from_edges(2 * n + 1, e));
  for (Vertex v = n; v < 2 * n; ++v)
    if (orb.orbit_of[v] == orb.orbit_of[0]) return true;
  return false;
}

TEST(Structural, Rules) {
  EXPECT_EQ(rule_code(structural_lower_bound(fam(Family::kComplete, 4))->rule), "i");
  EXPECT_EQ(rule_code(structural_lower_bound(fam(Family::kStar, 5))->rule), "ii");
  EXPECT_EQ(rule_code(structural_lower_bound(fam(Family::kDHatN, 7))->rule), "iii");
  EXPECT_FALSE(structural_lower_bound(fam(Family::kE8)));
  EXPECT_FALSE(structural_lower_bound(fam(Family::kPath, 9)));
}

TEST(Classify, Examples) {
  const auto k4 = classify_leq3(fam(Family::kComplete, 4));
  EXPECT_EQ(k4.verdict, Verdict::kGt3);
  EXPECT_NE(k4.reasons.front().find("(i)"), std::string::npos);
  const auto s5 = classify_leq3(fam(Family::kStar, 5));
  EXPECT_EQ(s5.verdict, Verdict::kGt3);
  EXPECT_NE(s5.reasons.front().find("(ii)"), std::string::npos);
  EXPECT_EQ(classify_leq3(fam(Family::kE7Hat)).verdict, Verdict::kGt3);
  EXPECT_EQ(classify_leq3(fam(Family::kE8)).verdict, Verdict::kGt3);
  const auto l12 = classify_leq3(fam(Family::kPath, 12));
  EXPECT_EQ(l12.verdict, Verdict::kLeq3Strict);
  EXPECT_EQ(l12.family_match->name, "L_12");
  const auto d6 = classify_leq3(fam(Family::kDHatN, 6));
  EXPECT_EQ(d6.verdict, Verdict::kEq3);
  EXPECT_EQ(d6.family_match->name, "D^_6");
  const auto c9 = classify_leq3(fam(Family::kCycle, 9));
  EXPECT_EQ(c9.verdict, Verdict::kEq3);
  EXPECT_EQ(c9.family_match->name, "C_9");
  EXPECT_EQ(classify_leq3(fam(Family::kE6)).family_match->name, "E_6");
  EXPECT_EQ(classify_leq3(fam(Family::kE7)).family_match->name, "E_7");
  EXPECT_EQ(classify_leq3(fam(Family::kDn, 5)).family_match->name, "D_5");
  EXPECT_EQ(classify_leq3(fam(Family::kStar, 4)).verdict, Verdict::kEq3);
  EXPECT_EQ(classify_leq3(fam(Family::kThreeLegs)).verdict, Verdict::kGt3);
}

TEST(Classify, CrossCheckAgrees) {
  for (const Graph& g : {fam(Family::kE7), fam(Family::kDHatN, 6), fam(Family::kCycle, 5),
                         fam(Family::kThreeLegs), fam(Family::kDn, 6)}) {
    const auto v = classify_leq3(g, 1e-9, true);
    ASSERT_TRUE(v.agrees);
    EXPECT_TRUE(*v.agrees);
    ASSERT_TRUE(v.certified_position);
  }
  EXPECT_EQ(*classify_leq3(fam(Family::kE7), 1e-9, true).certified_position, Position::kBelow);
  EXPECT_EQ(*classify_leq3(fam(Family::kCycle, 5), 1e-9, true).certified_position, Position::kEqual);
  EXPECT_EQ(*classify_leq3(fam(Family::kThreeLegs), 1e-9, true).certified_position, Position::kAbove);
}

TEST(Classify, TreeScan) {
  // L_n, D_n, E6 and E7 are the strict ones; D^_n sit at exactly 3.
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<Graph> strict{fam(Family::kPath, static_cast<int>(n))};
    if (n >= 4) strict.push_back(fam(Family::kDn, static_cast<int>(n)));
    if (n == 6) strict.push_back(fam(Family::kE6));
    if (n == 7) strict.push_back(fam(Family::kE7));
    std::vector<Graph> equal;
    if (n >= 5) equal.push_back(fam(Family::kDHatN, static_cast<int>(n)));
    std::size_t seen_strict = 0, seen_equal = 0;
    for (const Graph& t : all_trees(n)) {
      const auto v = classify_leq3(t);
      bool want_strict = false, want_equal = false;
      for (const auto& s : strict) want_strict |= isomorphic(t, s);
      for (const auto& s : equal) want_equal |= isomorphic(t, s);
      const Verdict want = want_strict ? Verdict::kLeq3Strict : want_equal ? Verdict::kEq3 : Verdict::kGt3;
      EXPECT_EQ(v.verdict, want) << "n=" << n << " " << write_graph6(t);
      seen_strict += v.verdict == Verdict::kLeq3Strict;
      seen_equal += v.verdict == Verdict::kEq3;
    }
    EXPECT_EQ(seen_strict, strict.size()) << n;
    EXPECT_EQ(seen_equal, equal.size()) << n;
  }
}

TEST(Classify, StructuralReasonImpliesC0AtLeastThree) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (const Graph& g : all_connected_graphs(n))
      if (structural_lower_bound(g)) {
        EXPECT_GE(c0_constant(g), 3.0 - 1e-9) << write_graph6(g);
      }
}

TEST(Classify, VerdictsSoundOnSmallGraphs) {
  for (const std::string file : {"connected5.g6", "connected6.g6"})
    for (const Graph& g : read_g6(file)) {
      const auto v = classify_leq3(g);
      const double c = least_doubling(g).c_g;
      switch (v.verdict) {
        case Verdict::kLeq3Strict: EXPECT_LT(c, 3.0 - 1e-6) << write_graph6(g); break;
        case Verdict::kEq3: EXPECT_NEAR(c, 3.0, 1e-6) << write_graph6(g); break;
        case Verdict::kGt3: EXPECT_GT(c, 3.0 + 1e-6) << write_graph6(g); break;
      }
    }
}

TEST(Enumerate, MatchesReferenceFiles) {
  for (std::size_t n : {5u, 6u}) {
    const auto ref = read_g6("connected" + std::to_string(n) + ".g6");
    const auto ours = all_connected_graphs(n);
    ASSERT_EQ(ours.size(), ref.size());
    // Every reference graph appears once among ours.
    std::vector<char> used(ours.size(), 0);
    for (const Graph& r : ref) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < ours.size(); ++i)
        if (isomorphic(r, ours[i])) ++hits, used[i] = 1;
      EXPECT_EQ(hits, 1u) << write_graph6(r);
    }
    for (char u : used) EXPECT_TRUE(u);
  }
}

TEST(Enumerate, TreeCounts) {
  const std::vector<std::size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  for (std::size_t n = 1; n <= 11; ++n) EXPECT_EQ(all_trees(n).size(), want[n - 1]) << n;
}

}  // namespace
}  // namespace dublo

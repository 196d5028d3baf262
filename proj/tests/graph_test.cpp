#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dublo/distance.hpp"
#include "dublo/enumerate.hpp"
#include "dublo/error.hpp"
#include "dublo/families.hpp"
#include "dublo/graph.hpp"
#include "dublo/graph6.hpp"

namespace dublo {
namespace {

Graph edges(std::size_t n, std::vector<Edge> e) { return Graph::from_edges(n, e); }

TEST(EdgeList, SingleEdge) {
  const Graph g = parse_edge_list("0 1");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(EdgeList, Triangle) {
  const Graph g = parse_edge_list("0 1\n1 2\n2 0");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(structural_facts(g).is_regular);
}

TEST(EdgeList, DisconnectedRejected) {
  EXPECT_THROW(parse_edge_list("0 1\n2 3"), ValidationError);
}

TEST(EdgeList, SelfLoopRejected) { EXPECT_THROW(parse_edge_list("0 1\n1 1"), ValidationError); }

TEST(EdgeList, EmptyRejected) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n\n"), ParseError);
}

TEST(EdgeList, WrongFieldCount) {
  EXPECT_THROW(parse_edge_list("0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("0"), ParseError);
}

TEST(EdgeList, TokensInFirstAppearanceOrder) {
  const Graph g = parse_edge_list("hub x  # comment\nhub y\n\ny z\r\n");
  ASSERT_EQ(g.order(), 4u);
  EXPECT_EQ(g.label(0), "hub");
  EXPECT_EQ(g.label(1), "x");
  EXPECT_EQ(g.label(2), "y");
  EXPECT_EQ(g.label(3), "z");
  EXPECT_EQ(*g.find_label("y"), 2u);
  EXPECT_FALSE(g.find_label("w").has_value());
  EXPECT_TRUE(g.has_edge(2, 3));
}

TEST(EdgeList, DuplicatesCollapsed) {
  const Graph g = parse_edge_list("0 1\n1 0\n0 1\n1 2");
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(EdgeList, SizeCap) {
  std::string text;
  for (int i = 0; i < 20; ++i) text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  EXPECT_THROW(parse_edge_list(text, 10), ValidationError);
  EXPECT_EQ(parse_edge_list(text, 21).order(), 21u);
}

TEST(EdgeList, WriteRoundTrip) {
  const Graph g = generate({Family::kPetersen});
  const Graph h = parse_edge_list(write_edge_list(g));
  ASSERT_EQ(h.order(), g.order());
  // Labels carry the original indices; vertex numbering follows first appearance.
  std::vector<Edge> back;
  for (const auto& [u, v] : h.edges()) {
    const Vertex a = std::stoul(h.label(u)), b = std::stoul(h.label(v));
    back.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(back.begin(), back.end());
  EXPECT_EQ(back, g.edges());
}

TEST(GraphCore, InvariantsOnConstruction) {
  EXPECT_THROW(Graph::from_edges(0, {}), ValidationError);
  EXPECT_THROW(edges(2, {{0, 2}}), ValidationError);
  const Graph single = Graph::from_edges(1, {});
  EXPECT_EQ(single.order(), 1u);
  const Graph g = edges(4, {{2, 0}, {0, 1}, {3, 0}});
  const auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.has_edge(v, u));
}

TEST(Graph6, K2) {
  const Graph g = parse_graph6("A_");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(write_graph6(g), "A_");
}

// Independent encoder: bits of the upper triangle in column order.
std::string encode_g6(std::size_t n, const std::vector<Edge>& e) {
  std::vector<int> bits;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      bits.push_back(std::any_of(e.begin(), e.end(), [&](const Edge& x) {
        return (x.first == i && x.second == j) || (x.first == j && x.second == i);
      }));
  while (bits.size() % 6) bits.push_back(0);
  std::string s(1, static_cast<char>(n + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
    s += static_cast<char>(v + 63);
  }
  return s;
}

TEST(Graph6, C5FromIndependentEncoder) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  const std::string rec = encode_g6(5, e);
  const Graph g = parse_graph6(rec);
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.num_edges(), 5u);
  const auto f = structural_facts(g);
  EXPECT_TRUE(f.is_regular);
  EXPECT_EQ(f.max_degree, 2u);
  EXPECT_EQ(write_graph6(g), rec);
}

TEST(Graph6, EmptyThreeVertexGraphDisconnected) {
  EXPECT_THROW(parse_graph6("B?"), ValidationError);
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);        // missing data byte
  EXPECT_THROW(parse_graph6("A_?"), ParseError);      // extra byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);       // nonzero padding
  EXPECT_THROW(parse_graph6("A\x7f"), ParseError);    // out-of-range byte
  EXPECT_EQ(parse_graph6(">>graph6<<A_").order(), 2u);
}

TEST(Graph6, LargeHeader) {
  // n = 64 needs the four-byte size prefix.
  const Graph g = generate({Family::kPath, 64});
  const std::string rec = write_graph6(g);
  EXPECT_EQ(rec[0], '~');
  EXPECT_EQ(parse_graph6(rec).edges(), g.edges());
  EXPECT_THROW(parse_graph6(rec, 32), ValidationError);
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> size(1, 50);
  std::uniform_real_distribution<double> dens(0.05, 0.6);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_connected_graph(rng, size(rng), dens(rng));
    const Graph h = parse_graph6(write_graph6(g));
    ASSERT_EQ(h.order(), g.order());
    ASSERT_EQ(h.edges(), g.edges());
  }
}

TEST(Distances, PathOfThree) {
  const DistanceTable dt(generate({Family::kPath, 3}));
  EXPECT_EQ(dt(0, 2), 2);
  EXPECT_EQ(dt.diameter(), 2);
  EXPECT_EQ(dt.k_max(), 1);
}

TEST(Distances, NamedDiameters) {
  EXPECT_EQ(DistanceTable(generate({Family::kPetersen})).diameter(), 2);
  EXPECT_EQ(DistanceTable(generate({Family::kDoyle})).diameter(), 3);
}

TEST(Distances, KMax) {
  // ceil((diam - 1) / 2)
  const std::vector<std::pair<int, int>> want{{1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 3}};
  for (auto [diam, k] : want) EXPECT_EQ(DistanceTable(generate({Family::kPath, diam + 1})).k_max(), k);
  EXPECT_EQ(DistanceTable(Graph::from_edges(1, {})).k_max(), 0);
}

TEST(Distances, MetricAxiomsRandom) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(1, 25);
  std::uniform_real_distribution<double> dens(0.05, 0.5);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, size(rng), dens(rng));
    const DistanceTable dt(g);
    const auto n = g.order();
    for (Vertex u = 0; u < n; ++u) {
      ASSERT_EQ(dt(u, u), 0);
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(dt(u, v), dt(v, u));
        ASSERT_EQ(dt(u, v) == 1, g.has_edge(u, v));
        for (Vertex w = 0; w < n; ++w) ASSERT_LE(dt(u, w), dt(u, v) + dt(v, w));
      }
    }
  }
}

TEST(Balls, Examples) {
  const DistanceTable c5(generate({Family::kCycle, 5}));
  EXPECT_EQ(ball(c5, 0, 1).size(), 3u);
  EXPECT_EQ(ball(c5, 0, 0), std::vector<Vertex>{0});
  const DistanceTable k6(generate({Family::kComplete, 6}));
  EXPECT_EQ(ball(k6, 2, 1).size(), 6u);
  // Three-legs: a leaf sees all but the two other leaves within 3.
  const Graph t = generate({Family::kThreeLegs});
  const DistanceTable dt(t);
  Vertex leaf = 0;
  while (t.degree(leaf) != 1) ++leaf;
  const auto b = ball(dt, leaf, 3);
  EXPECT_EQ(b.size(), 5u);
  for (Vertex w = 0; w < t.order(); ++w) {
    const bool other_leaf = w != leaf && t.degree(w) == 1;
    EXPECT_EQ(std::find(b.begin(), b.end(), w) != b.end(), !other_leaf);
  }
  EXPECT_THROW(ball(dt, 7, 1), ValidationError);
  EXPECT_THROW(ball(dt, 0, -1), ValidationError);
}

TEST(Balls, LargeRadiusIsEverything) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 12, 0.3);
    const DistanceTable dt(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_EQ(ball(dt, v, dt.diameter()).size(), g.order());
      EXPECT_EQ(ball(dt, v, dt.diameter() + 3).size(), g.order());
    }
  }
}

TEST(BallMatrix, Examples) {
  const DistanceTable p3(generate({Family::kPath, 3}));
  const auto m0 = ball_matrix(p3, 0);
  const auto m1 = ball_matrix(p3, 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m0(i, j), i == j);
      EXPECT_EQ(m1(i, j), (i > j ? i - j : j - i) <= 1);
    }
  const auto k3 = ball_matrix(DistanceTable(generate({Family::kComplete, 3})), 1);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(k3.row_sum(i), 3u);
}

TEST(BallMatrix, MonotoneAndRowSums) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 15, 0.25);
    const DistanceTable dt(g);
    const auto m1 = ball_matrix(dt, 1);
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(m1.row_sum(v), g.degree(v) + 1);
    for (int r = 0; r <= dt.diameter(); ++r) {
      const auto a = ball_matrix(dt, r), b = ball_matrix(dt, r + 1);
      for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) EXPECT_LE(a(i, j), b(i, j));
    }
    const auto full = ball_matrix(dt, dt.diameter());
    for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(full.row_sum(i), g.order());
  }
}

TEST(StructuralFacts, Examples) {
  const auto c6 = structural_facts(generate({Family::kCycle, 6}));
  EXPECT_TRUE(c6.has_cycle);
  EXPECT_TRUE(c6.is_regular);
  EXPECT_EQ(c6.max_degree, 2u);
  const auto s4 = structural_facts(generate({Family::kStar, 4}));
  EXPECT_FALSE(s4.has_cycle);
  EXPECT_EQ(s4.max_degree, 4u);
  EXPECT_EQ(s4.count_deg_ge3, 1u);
  const auto t = structural_facts(generate({Family::kThreeLegs}));
  EXPECT_FALSE(t.has_cycle);
  EXPECT_EQ(t.max_degree, 3u);
  EXPECT_EQ(t.count_deg_ge3, 1u);
  EXPECT_EQ(t.diameter, 4);
}

TEST(Removal, EdgeAndVertex) {
  const Graph c5 = generate({Family::kCycle, 5});
  const auto p = remove_edge(c5, {0, 1});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->num_edges(), 4u);
  EXPECT_FALSE(remove_edge(*p, {2, 3}).has_value());  // splits the path
  const Graph s3 = generate({Family::kStar, 3});
  EXPECT_FALSE(remove_vertex(s3, 0).has_value());
  const auto s2 = remove_vertex(s3, 1);
  ASSERT_TRUE(s2.has_value());
  EXPECT_EQ(s2->order(), 3u);
  EXPECT_THROW(remove_edge(c5, {0, 2}), ValidationError);
}

}  // namespace
}  // namespace dublo

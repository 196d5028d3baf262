#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dublo/distance.hpp"
#include "dublo/enumerate.hpp"
#include "dublo/families.hpp"
#include "dublo/spectral.hpp"
#include "dublo/verify.hpp"

namespace dublo {
namespace {

constexpr double kTol = 1e-12;

TEST(Perron, CompleteGraph) { EXPECT_NEAR(perron(generate({Family::kComplete, 5})).radius, 4.0, 1e-10); }

TEST(Perron, Star) {
  // S_4 has 5 vertices.
  const Graph s4 = generate({Family::kStar, 4});
  ASSERT_EQ(s4.order(), 5u);
  EXPECT_NEAR(perron(s4).radius, 2.0, 1e-10);
}

TEST(Perron, Path) {
  EXPECT_NEAR(perron(generate({Family::kPath, 4})).radius, 2 * std::cos(std::numbers::pi / 5), 1e-10);
  EXPECT_NEAR(perron(generate({Family::kPath, 4})).radius, 1.618034, 1e-6);
}

TEST(Perron, SingleVertexAndEdge) {
  EXPECT_NEAR(perron(Graph::from_edges(1, {})).radius, 0.0, 1e-15);
  EXPECT_NEAR(perron(generate({Family::kPath, 2})).radius, 1.0, 1e-12);
}

TEST(Perron, RejectsBadTolerance) {
  EXPECT_THROW(perron(generate({Family::kPath, 3}), 0.0), ValidationError);
  EXPECT_THROW(perron(generate({Family::kPath, 30}), 1e-12, 3), SolverError);
}

TEST(C0, Examples) {
  for (int n = 3; n <= 12; ++n) EXPECT_NEAR(c0_constant(generate({Family::kCycle, n})), 3.0, 1e-10);
  EXPECT_NEAR(c0_constant(generate({Family::kFriendship, 2})), 1 + (1 + std::sqrt(17.0)) / 2, 1e-10);
  EXPECT_NEAR(c0_constant(generate({Family::kFriendship, 2})), 3.561553, 1e-6);
  const Graph w9 = generate({Family::kWheel, 9});
  ASSERT_EQ(w9.order(), 9u);
  EXPECT_NEAR(c0_constant(w9), 5.0, 1e-10);
}

TEST(PerronMeasure, ThreeLegsRoles) {
  const Graph t = generate({Family::kThreeLegs});
  const auto mu = perron_measure(t);
  for (Vertex v = 0; v < t.order(); ++v) {
    const double want = t.degree(v) == 3 ? 3.0 : t.degree(v) == 2 ? 2.0 : 1.0;
    EXPECT_NEAR(mu[v], want, 1e-9) << "vertex " << v;
  }
}

TEST(PerronMeasure, CompleteIsUniform) {
  const auto mu = perron_measure(generate({Family::kComplete, 7}));
  for (std::size_t v = 0; v < mu.size(); ++v) EXPECT_NEAR(mu[v], 1.0, 1e-10);
}

TEST(PerronMeasure, FriendshipHubToRim) {
  for (int n = 1; n <= 5; ++n) {
    const Graph g = generate({Family::kFriendship, n});
    const auto mu = perron_measure(g);
    const double want = 4.0 * n / (1 + std::sqrt(1.0 + 8 * n));
    EXPECT_NEAR(mu[0] / mu[1], want, 1e-9) << n;
  }
}

TEST(PerronMeasure, MinEntryOneAndPositive) {
  for (const auto& e : catalog()) {
    const auto s = perron(generate(e.spec));
    EXPECT_NEAR(*std::min_element(s.eigvec.begin(), s.eigvec.end()), 1.0, 1e-15) << e.name;
    for (double x : s.eigvec) EXPECT_GT(x, 0.0);
  }
}

TEST(Spectral, CatalogInvariants) {
  for (const auto& e : catalog()) {
    const Graph g = generate(e.spec);
    const auto s = perron(g, kTol);
    const auto f = structural_facts(g);
    EXPECT_LE(s.residual, kTol) << e.name;
    if (g.order() >= 2) {
      EXPECT_GT(s.radius, 0.0);
      EXPECT_LE(s.radius, static_cast<double>(f.max_degree) + kTol);
    }
    if (f.is_regular)
      EXPECT_NEAR(s.radius, static_cast<double>(f.max_degree), kTol) << e.name;
    else
      EXPECT_LT(s.radius, static_cast<double>(f.max_degree) - 10 * kTol) << e.name;
    // Flatness of the Perron measure at radius 0.
    double lo = 1e300, hi = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) {
      double b = s.eigvec[v];
      for (Vertex w : g.neighbors(v)) b += s.eigvec[w];
      lo = std::min(lo, b / s.eigvec[v]);
      hi = std::max(hi, b / s.eigvec[v]);
    }
    EXPECT_LE(hi - lo, 10 * kTol) << e.name;
  }
}

TEST(Spectral, StrictSubgraphMonotonicity) {
  // Drop one leaf or one edge from every catalog graph that allows it.
  for (const auto& e : catalog()) {
    const Graph g = generate(e.spec);
    const double c = c0_constant(g);
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 1)
        if (auto h = remove_vertex(g, v)) {
          EXPECT_LT(c0_constant(*h), c) << e.name;
        }
    for (const auto& uv : g.edges())
      if (auto h = remove_edge(g, uv)) {
        EXPECT_LT(c0_constant(*h), c) << e.name;
        break;
      }
  }
}

TEST(Spectral, PowerIterationConvergesOnWideEigenvectors) {
  // Grid truncations: Perron entries span many decades.
  const Graph g = detail::build({Family::kGridRayTruncation, 8});
  const auto s = perron(g);
  EXPECT_LE(s.residual, kTol);
  EXPECT_GT(*std::max_element(s.eigvec.begin(), s.eigvec.end()), 1e10);
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(generate({Family::kCycle, 5})), 3);
  EXPECT_EQ(chromatic_number(generate({Family::kComplete, 4})), 4);
  EXPECT_EQ(chromatic_number(generate({Family::kPetersen})), 3);
  EXPECT_EQ(chromatic_number(generate({Family::kCycle, 6})), 2);
  EXPECT_EQ(chromatic_number(Graph::from_edges(1, {})), 1);
  EXPECT_EQ(chromatic_number(generate({Family::kWheel, 6})), 4);  // hub + odd rim
  EXPECT_EQ(chromatic_number(generate({Family::kHoffmanSingleton})), 4);
  EXPECT_THROW(chromatic_number(generate({Family::kPath, 65})), ValidationError);
}

// Exhaustive colouring oracle for small graphs.
int chromatic_oracle(const Graph& g) {
  const std::size_t n = g.order();
  for (int k = 1;; ++k) {
    std::vector<int> col(n, 0);
    for (;;) {
      bool ok = true;
      for (const auto& [u, v] : g.edges()) ok = ok && col[u] != col[v];
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
}

TEST(Chromatic, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 7, 0.5);
    EXPECT_EQ(chromatic_number(g), chromatic_oracle(g));
  }
}

TEST(Chromatic, BoundedByC0OnCatalog) {
  for (const auto& e : catalog()) {
    const Graph g = generate(e.spec);
    if (g.order() > kChromaticCap) continue;
    EXPECT_LE(chromatic_number(g), c0_constant(g) + 1e-9) << e.name;
  }
}

}  // namespace
}  // namespace dublo

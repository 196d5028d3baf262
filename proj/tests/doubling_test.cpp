#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dublo/distance.hpp"
#include "dublo/doubling.hpp"
#include "dublo/enumerate.hpp"
#include "dublo/families.hpp"
#include "dublo/measure.hpp"
#include "dublo/spectral.hpp"

namespace dublo {
namespace {

ExactMeasure exact(std::vector<long> w) {
  std::vector<Rational> q;
  for (long x : w) q.emplace_back(x);
  return ExactMeasure(q);
}

template <class Rng>
ExactMeasure random_measure(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(1, 25);
  std::vector<Rational> w(n);
  for (auto& x : w) x = Rational(d(rng), std::uniform_int_distribution<long>(1, 4)(rng));
  return ExactMeasure(w);
}

TEST(Measure, Counting) {
  const auto k2 = counting_measure(generate({Family::kPath, 2}));
  EXPECT_EQ(k2.weights(), (std::vector<double>{1, 1}));
  const auto p = counting_measure(generate({Family::kPetersen}));
  EXPECT_EQ(p.size(), 10u);
  for (double x : p.weights()) EXPECT_EQ(x, 1.0);
}

TEST(Measure, RejectsNonPositive) {
  EXPECT_THROW(RealMeasure(std::vector<double>{1, 0}), ValidationError);
  EXPECT_THROW(RealMeasure(std::vector<double>{}), ValidationError);
  EXPECT_THROW(exact({1, -2}), ValidationError);
  const DistanceTable dt(generate({Family::kPath, 3}));
  EXPECT_THROW(restricted_constant(dt, counting_measure(generate({Family::kPath, 2})), 0),
               ValidationError);
}

TEST(Measure, ParseFile) {
  const Graph g = parse_edge_list("a b\nb c\n");
  const auto mu = parse_measure("# weights\na 1/2\nb 0.25\nc 3e1\n", g);
  EXPECT_EQ(mu[0], Rational(1, 2));
  EXPECT_EQ(mu[1], Rational(1, 4));
  EXPECT_EQ(mu[2], Rational(30));
  EXPECT_THROW(parse_measure("a 1\nb 1\n", g), ParseError);          // c missing
  EXPECT_THROW(parse_measure("a 1\nb 1\nc 1\na 2\n", g), ParseError);  // a twice
  EXPECT_THROW(parse_measure("a 1\nb 1\nd 1\n", g), ParseError);     // unknown
  EXPECT_THROW(parse_measure("a 1\nb x\nc 1\n", g), ParseError);
  EXPECT_THROW(parse_measure("a 1\nb 0\nc 1\n", g), ValidationError);
}

TEST(Rationals, FormatAndParse) {
  EXPECT_EQ(format_rational(Rational(27, 5)), "27/5");
  EXPECT_EQ(format_rational(Rational(6, 2)), "3");
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
  EXPECT_EQ(parse_rational("010/03"), Rational(10, 3));
  EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
  EXPECT_THROW(parse_rational("0x10"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Restricted, CycleCountingK0) {
  const DistanceTable dt(generate({Family::kCycle, 5}));
  const auto r = restricted_constant(dt, counting_measure(generate({Family::kCycle, 5})), 0);
  EXPECT_DOUBLE_EQ(r.value, 3.0);
  EXPECT_EQ(r.witness, 0u);
}

TEST(Restricted, ThreeLegsPerronK1) {
  const Graph t = generate({Family::kThreeLegs});
  std::vector<long> w(t.order());
  for (Vertex v = 0; v < t.order(); ++v) w[v] = t.degree(v) == 3 ? 3 : t.degree(v) == 2 ? 2 : 1;
  const DistanceTable dt(t);
  const auto r = restricted_constant(dt, exact(w), 1);
  EXPECT_EQ(r.value, Rational(10, 3));
  EXPECT_EQ(t.degree(r.witness), 1u);
  const auto rep = doubling_report(dt, exact(w));
  EXPECT_EQ(rep.per_k[0].value, Rational(3));
  EXPECT_GE(rep.c_mu, Rational(10, 3));
}

TEST(Restricted, CompleteGraphTotalOverMin) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 8; ++n) {
    const Graph g = generate({Family::kComplete, n});
    const auto mu = random_measure(rng, g.order());
    Rational total(0), lo = mu[0];
    for (const auto& x : mu.weights()) {
      total += x;
      if (x < lo) lo = x;
    }
    const auto r = restricted_constant(DistanceTable(g), mu, 0);
    EXPECT_EQ(r.value, total / lo);
    EXPECT_GE(r.value, Rational(n));
  }
}

TEST(Restricted, RangeChecked) {
  const DistanceTable dt(generate({Family::kPath, 6}));
  const auto mu = counting_measure(generate({Family::kPath, 6}));
  EXPECT_NO_THROW(restricted_constant(dt, mu, 2));
  EXPECT_THROW(restricted_constant(dt, mu, 3), ValidationError);
  EXPECT_THROW(restricted_constant(dt, mu, -1), ValidationError);
}

TEST(Restricted, WitnessTieBreaksToSmallestIndex) {
  const DistanceTable dt(generate({Family::kCycle, 7}));
  const auto r = restricted_constant(dt, exact({1, 1, 1, 1, 1, 1, 1}), 1);
  EXPECT_EQ(r.witness, 0u);
}

TEST(Report, Examples) {
  const Graph k2 = generate({Family::kPath, 2});
  EXPECT_DOUBLE_EQ(doubling_report(DistanceTable(k2), counting_measure(k2)).c_mu, 2.0);
  const Graph c5 = generate({Family::kCycle, 5});
  const auto rep = doubling_report(DistanceTable(c5), exact({1, 1, 1, 1, 1}));
  ASSERT_EQ(rep.per_k.size(), 2u);
  EXPECT_EQ(rep.per_k[0].value, Rational(3));
  EXPECT_EQ(rep.per_k[1].value, Rational(5, 3));
  EXPECT_EQ(rep.c_mu, Rational(3));
  EXPECT_EQ(rep.attained_at, 0);
}

TEST(Report, Invariants) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> size(1, 12);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_connected_graph(rng, size(rng), 0.3);
    const DistanceTable dt(g);
    const auto mu = random_measure(rng, g.order());
    const auto rep = doubling_report(dt, mu);
    ASSERT_EQ(rep.k_max, dt.k_max());
    ASSERT_EQ(static_cast<int>(rep.per_k.size()), dt.k_max() + 1);
    Rational mx = rep.per_k[0].value;
    for (const auto& rk : rep.per_k) {
      if (rk.value > mx) mx = rk.value;
      ASSERT_GE(rk.value, Rational(1));
      // Witness attains the ratio exactly.
      Rational num(0), den(0);
      for (Vertex w = 0; w < g.order(); ++w) {
        if (dt(rk.witness, w) <= 2 * rk.k + 1) num += mu[w];
        if (dt(rk.witness, w) <= rk.k) den += mu[w];
      }
      ASSERT_EQ(num / den, rk.value);
    }
    ASSERT_EQ(rep.c_mu, mx);
    if (g.order() >= 2) {
      ASSERT_GE(rep.per_k[0].value, Rational(2));
      ASSERT_GE(rep.c_mu, Rational(2));
    }
    // Scale invariance.
    const auto scaled = doubling_report(dt, mu.scaled(Rational(7, 3)));
    for (std::size_t k = 0; k < rep.per_k.size(); ++k) {
      ASSERT_EQ(scaled.per_k[k].value, rep.per_k[k].value);
      ASSERT_EQ(scaled.per_k[k].witness, rep.per_k[k].witness);
    }
  }
}

TEST(Report, ConvexCombinationNeverWorse) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 10, 0.3);
    const DistanceTable dt(g);
    const auto a = random_measure(rng, g.order()), b = random_measure(rng, g.order());
    for (int k = 0; k <= dt.k_max(); ++k) {
      const Rational bound = std::max(restricted_constant(dt, a, k).value, restricted_constant(dt, b, k).value);
      ASSERT_LE(restricted_constant(dt, a + b, k).value, bound);
    }
  }
}

TEST(Report, DiameterTwoCollapse) {
  std::mt19937_64 rng(33);
  int seen = 0;
  while (seen < 200) {
    const Graph g = random_connected_graph(rng, 3 + seen % 10, 0.6);
    const DistanceTable dt(g);
    if (dt.diameter() != 2) continue;
    ++seen;
    const auto mu = random_measure(rng, g.order());
    const auto rep = doubling_report(dt, mu);
    ASSERT_EQ(rep.c_mu, rep.per_k[0].value);
  }
}

TEST(Report, LightestVertexSeesItsDegree) {
  // At a vertex of minimum weight, mu(B(u,1)) >= (1 + deg u) mu(u).
  std::mt19937_64 rng(44);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 11, 0.35);
    const auto mu = random_measure(rng, g.order());
    Vertex u = 0;
    for (Vertex v = 1; v < g.order(); ++v)
      if (mu[v] < mu[u]) u = v;
    const auto r = restricted_constant(DistanceTable(g), mu, 0);
    ASSERT_GE(r.value, Rational(1 + static_cast<long>(g.degree(u))));
  }
}

TEST(Mediant, Examples) {
  using P = std::pair<Rational, Rational>;
  const std::vector<P> a{{1, 1}, {1, 1}};
  const auto ra = mediant_max<Rational>(a);
  EXPECT_EQ(ra.max_ratio, Rational(1));
  EXPECT_TRUE(ra.all_equal);
  const std::vector<P> b{{3, 1}, {1, 2}};
  const auto rb = mediant_max<Rational>(b);
  EXPECT_EQ(rb.max_ratio, Rational(3));
  EXPECT_EQ(rb.pooled, Rational(4, 3));
  EXPECT_FALSE(rb.all_equal);
  const std::vector<P> c{{2, 1}, {4, 2}, {6, 3}};
  const auto rc = mediant_max<Rational>(c);
  EXPECT_EQ(rc.max_ratio, Rational(2));
  EXPECT_EQ(rc.pooled, Rational(2));
  EXPECT_TRUE(rc.all_equal);
}

TEST(Mediant, Errors) {
  using P = std::pair<double, double>;
  EXPECT_THROW(mediant_max<double>(std::vector<P>{}), ValidationError);
  EXPECT_THROW(mediant_max<double>(std::vector<P>{{1, 0}}), ValidationError);
  EXPECT_THROW(mediant_max<double>(std::vector<P>{{-1, 1}}), ValidationError);
}

TEST(Mediant, RandomProperty) {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<long> val(1, 40);
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::pair<Rational, Rational>> pairs;
    const bool prop = t % 3 == 0;
    const Rational r(val(rng), val(rng));
    for (int j = 0, m = 1 + t % 7; j < m; ++j) {
      const Rational b(val(rng));
      pairs.emplace_back(prop ? r * b : Rational(val(rng)), b);
    }
    const auto res = mediant_max<Rational>(pairs);
    ASSERT_LE(res.pooled, res.max_ratio);
    ASSERT_EQ(res.pooled == res.max_ratio, res.all_equal);
    if (prop) {
      ASSERT_TRUE(res.all_equal);
    }
  }
}

}  // namespace
}  // namespace dublo

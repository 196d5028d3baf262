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

#ifndef DUBLO_VERIFY_HPP
#define DUBLO_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dublo/classifier.hpp"
#include "dublo/distance.hpp"
#include "dublo/doubling.hpp"
#include "dublo/enumerate.hpp"
#include "dublo/families.hpp"
#include "dublo/measure.hpp"
#include "dublo/optimizer.hpp"
#include "dublo/spectral.hpp"
#include "dublo/symmetry.hpp"

namespace dublo {

struct VerifyConfig {
  double tol = 1e-9;
  double eig_tol = kDefaultEigenTolerance;
  std::uint64_t seed = 0x5eed2026;
};

struct VerifyRow {
  int criterion = 0;
  std::string name;
  std::string measured;
  std::string expected;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

inline std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct CatalogEntry {
  std::string name;
  FamilySpec spec;
};

/// Named graphs at representative sizes, every family except the grid ray.
inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](Family f, int n, int m = 0) {
    std::string name(family_name(f));
    if (n) name += "_" + std::to_string(n);
    if (m) name += "_" + std::to_string(m);
    out.push_back({name, {f, n, m}});
  };
  for (int n = 1; n <= 8; ++n) add(Family::kComplete, n);
  for (int n = 1; n <= 9; ++n) add(Family::kStar, n);
  for (int n = 3; n <= 12; ++n) add(Family::kCycle, n);
  for (int n = 1; n <= 12; ++n) add(Family::kPath, n);
  for (auto [m, n] : {std::pair{1, 2}, {2, 3}, {3, 3}, {2, 5}}) add(Family::kCompleteBipartite, n, m);
  for (int n = 4; n <= 10; ++n) add(Family::kWheel, n);
  for (int n = 1; n <= 5; ++n) add(Family::kFriendship, n);
  for (int n = 2; n <= 5; ++n) add(Family::kCocktailParty, n);
  add(Family::kPetersen, 0);
  add(Family::kHoffmanSingleton, 0);
  add(Family::kClebsch, 5);
  add(Family::kClebsch, 10);
  for (int n = 4; n <= 12; ++n) add(Family::kDn, n);
  for (int n = 5; n <= 12; ++n) add(Family::kDHatN, n);
  for (Family f : {Family::kE6, Family::kE7, Family::kE8, Family::kE6Hat, Family::kE7Hat,
                   Family::kE8Hat, Family::kThreeLegs, Family::kDoyle})
    add(f, 0);
  return out;
}

namespace detail {

struct Worst {
  double err = 0.0;
  std::string where;
  void see(double e, const std::string& at) {
    if (!(e <= err)) {
      err = e;
      where = at;
    }
  }
};

inline VerifyRow max_error_row(int crit, std::string name, const Worst& w, double tol,
                               std::string expected = "0") {
  VerifyRow r;
  r.criterion = crit;
  r.name = std::move(name);
  r.measured = fmt12(w.err);
  r.expected = std::move(expected);
  r.tolerance = tol;
  r.pass = w.err <= tol;
  r.note = w.where.empty() ? "" : "worst at " + w.where;
  return r;
}

inline VerifyRow count_row(int crit, std::string name, std::size_t failures, std::size_t cases,
                           std::string first_failure) {
  VerifyRow r;
  r.criterion = crit;
  r.name = std::move(name);
  r.measured = std::to_string(cases - failures) + "/" + std::to_string(cases);
  r.expected = std::to_string(cases) + "/" + std::to_string(cases);
  r.pass = failures == 0;
  r.note = first_failure;
  return r;
}

inline OptimizerOptions optimizer_options(const VerifyConfig& cfg, bool cert = false) {
  OptimizerOptions o;
  o.tol = cfg.tol;
  o.eig_tol = cfg.eig_tol;
  o.certificate = cert;
  return o;
}

inline VerifyRow closed_form_row(const VerifyConfig& cfg, std::string name, Family f,
                                 std::vector<std::pair<int, int>> params) {
  Worst w;
  for (auto [n, m] : params) {
    const FamilySpec spec{f, n, m};
    const double got = least_doubling(generate(spec), optimizer_options(cfg)).c_g;
    const double want = *expected_constant(spec).c_g;
    w.see(std::abs(got - want), name + "(n=" + std::to_string(n) +
                                    (m ? ",m=" + std::to_string(m) : std::string()) + ")");
  }
  return max_error_row(1, std::move(name), w, 1e-6);
}

inline std::vector<std::pair<int, int>> range(int lo, int hi) {
  std::vector<std::pair<int, int>> out;
  for (int n = lo; n <= hi; ++n) out.emplace_back(n, 0);
  return out;
}

template <class Rng>
ExactMeasure random_exact_measure(Rng& rng, std::size_t n, long hi = 20) {
  std::uniform_int_distribution<long> d(1, hi);
  std::vector<Rational> w(n);
  for (auto& x : w) x = Rational(d(rng));
  return ExactMeasure(std::move(w));
}

// ---- criterion 2..11 rows ------------------------------------------------

inline VerifyRow row_three_legs(const VerifyConfig& cfg) {
  const double got = least_doubling(generate({Family::kThreeLegs}), optimizer_options(cfg)).c_g;
  const double want = 1.0 + poly_largest_root(kThreeLegsPolynomial);
  VerifyRow r{2, "three_legs", fmt12(got), fmt12(want), 1e-6, std::abs(got - want) <= 1e-6,
              "1 + largest root of x^3+x^2-5x-3"};
  return r;
}

inline VerifyRow row_three_legs_decimal(const VerifyConfig& cfg) {
  const double got = least_doubling(generate({Family::kThreeLegs}), optimizer_options(cfg)).c_g;
  return {2, "three_legs_decimal", fmt12(got), "3.0861", 1e-4, std::abs(got - 3.0861) <= 1e-4, ""};
}

inline VerifyRow row_doyle(const VerifyConfig& cfg) {
  const auto res = least_doubling(generate({Family::kDoyle}), optimizer_options(cfg, true));
  const auto& c = *res.certificate;
  const bool ok = c.exact && c.t_lo == Rational(27, 5);
  return {3, "doyle", c.exact ? format_rational(c.t_lo) : "[" + format_rational(c.t_lo) + ", " +
                                                               format_rational(c.t_hi) + "]",
          "27/5", 0.0, ok, "exact certificate"};
}

inline VerifyRow row_doyle_counting(const VerifyConfig&) {
  const Graph g = generate({Family::kDoyle});
  const DistanceTable dt(g);
  const ExactMeasure counting(std::vector<Rational>(g.order(), Rational(1)));
  const auto rep = doubling_report(dt, counting);
  std::string per_k;
  for (const auto& rk : rep.per_k)
    per_k += (per_k.empty() ? "" : ", ") + std::string("k=") + std::to_string(rk.k) + ": " +
             format_rational(rk.value);
  const bool ok = rep.c_mu == Rational(27, 5) && rep.per_k.size() == 2 &&
                  rep.per_k[0].value == Rational(5) && rep.per_k[1].value == Rational(27, 5);
  return {3, "doyle_counting", format_rational(rep.c_mu), "max{27/5, 5} = 27/5", 0.0, ok, per_k};
}

inline VerifyRow row_e8(const VerifyConfig& cfg) {
  const double got = least_doubling(generate({Family::kE8}), optimizer_options(cfg)).c_g;
  const double root = poly_largest_root(kE8Polynomial);
  return {4, "e8", fmt12(got), ">= " + fmt12(root - 1e-4), 1e-4, got >= root - 1e-4,
          "largest root " + fmt12(root)};
}

inline VerifyRow row_e_strict(const VerifyConfig& cfg, Family f, std::string name) {
  const auto res = least_doubling(generate({f}), optimizer_options(cfg, true));
  const Rational bound = Rational(3) - Rational(1, 1'000'000'000);
  const bool ok = res.certificate->t_hi < bound;
  return {4, std::move(name), format_rational(res.certificate->t_hi) + " (" +
                                  fmt12(to_double(res.certificate->t_hi)) + ")",
          "< 3 - 1e-9", 1e-9, ok, "exact feasible measure at t_hi"};
}

inline VerifyRow row_smith(const VerifyConfig& cfg) {
  Worst w;
  auto check = [&](Family f, int n, SmithFamily sf, const std::string& at) {
    const Graph g = generate({f, n});
    w.see(std::abs(c0_constant(g, cfg.eig_tol) - smith_c0_table(sf, static_cast<int>(g.order()))), at);
  };
  for (int n = 1; n <= 30; ++n) check(Family::kPath, n, SmithFamily::kPath, "L_" + std::to_string(n));
  for (int n = 4; n <= 30; ++n) check(Family::kDn, n, SmithFamily::kDn, "D_" + std::to_string(n));
  for (int n = 3; n <= 30; ++n) check(Family::kCycle, n, SmithFamily::kCycle, "C_" + std::to_string(n));
  for (int n = 5; n <= 30; ++n) check(Family::kDHatN, n, SmithFamily::kDHatN, "D^_" + std::to_string(n));
  check(Family::kE6, 0, SmithFamily::kE6, "E_6");
  check(Family::kE7, 0, SmithFamily::kE7, "E_7");
  check(Family::kE8, 0, SmithFamily::kE8, "E_8");
  check(Family::kE6Hat, 0, SmithFamily::kE6Hat, "E^_6");
  check(Family::kE7Hat, 0, SmithFamily::kE7Hat, "E^_7");
  check(Family::kE8Hat, 0, SmithFamily::kE8Hat, "E^_8");
  return max_error_row(5, "smith_table", w, 1e-9);
}

inline VerifyRow row_path_threshold(const VerifyConfig& cfg) {
  std::size_t bad = 0;
  std::string first, gaps;
  for (int n = 2; n <= 12; ++n) {
    const Graph g = generate({Family::kPath, n});
    const auto res = least_doubling(g, optimizer_options(cfg));
    const double gap = res.c_g - res.lower_bound_spectral;
    const bool equal_flag = check_perron_equality(g, 1e-7, cfg.eig_tol).equal;
    const bool ok = n <= 8 ? (gap <= 1e-7 && equal_flag) : (gap > 1e-4 && !equal_flag);
    if (!ok && bad++ == 0) first = "L_" + std::to_string(n) + " gap " + fmt12(gap);
    if (n >= 8) gaps += " L_" + std::to_string(n) + ":" + fmt12(gap);
  }
  auto r = count_row(6, "path_threshold", bad, 11, first.empty() ? "gaps" + gaps : first);
  r.tolerance = 1e-7;
  return r;
}

inline VerifyRow row_diameter2(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x7);
  std::uniform_int_distribution<int> size(3, 12);
  std::uniform_real_distribution<double> dens(0.3, 0.9);
  std::size_t graphs = 0, cases = 0, bad = 0;
  std::string first;
  while (graphs < 200) {
    const Graph g = random_connected_graph(rng, size(rng), dens(rng));
    const DistanceTable dt(g);
    if (dt.diameter() != 2) continue;
    ++graphs;
    for (int j = 0; j < 5; ++j, ++cases) {
      const auto mu = random_exact_measure(rng, g.order());
      const auto rep = doubling_report(dt, mu);
      if (rep.c_mu != rep.per_k[0].value && bad++ == 0)
        first = "C_mu " + format_rational(rep.c_mu) + " vs C0_mu " + format_rational(rep.per_k[0].value);
    }
  }
  return count_row(7, "diameter2_law", bad, cases, first);
}

inline VerifyRow row_oracle(const VerifyConfig& cfg) {
  constexpr int kResolution = 200;
  std::size_t bad = 0, cases = 0;
  std::string first;
  double worst_slack = 1e300;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      ++cases;
      const auto res = least_doubling(g, optimizer_options(cfg));
      const auto bf = brute_force_cg(g, kResolution);
      const auto grid = round_to_grid(res.minimizer, kResolution);
      std::vector<double> gw(grid.begin(), grid.end());
      const double grid_err =
          std::max(0.0, doubling_report(DistanceTable(g), RealMeasure(gw)).c_mu - res.c_g);
      const double diff = std::abs(res.c_g - bf.value);
      worst_slack = std::min(worst_slack, grid_err + 1e-6 - diff);
      if (diff > grid_err + 1e-6 && bad++ == 0)
        first = "n=" + std::to_string(n) + " m=" + std::to_string(g.num_edges()) + " lp " +
                fmt12(res.c_g) + " brute " + fmt12(bf.value) + " grid error " + fmt12(grid_err);
    }
  auto r = count_row(8, "oracle_equivalence", bad, cases,
                     first.empty() ? "min slack " + fmt12(worst_slack) : first);
  r.tolerance = 1e-6;
  return r;
}

inline VerifyRow row_mediant(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x9a);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<long> val(1, 30);
  std::bernoulli_distribution proportional(0.3);
  std::size_t bad = 0;
  constexpr std::size_t kCases = 1000;
  std::string first;
  for (std::size_t c = 0; c < kCases; ++c) {
    const int m = len(rng);
    const bool equal_case = proportional(rng);
    const Rational base(val(rng), val(rng));
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int j = 0; j < m; ++j) {
      const Rational b(val(rng));
      pairs.emplace_back(equal_case ? base * b : Rational(val(rng)), b);
    }
    const auto res = mediant_max<Rational>(pairs);
    // Oracle: direct sums and pairwise ratio comparison.
    Rational sa(0), sb(0), mx = pairs[0].first / pairs[0].second;
    bool same = true;
    for (const auto& [a, b] : pairs) {
      sa += a;
      sb += b;
      if (Rational(a / b) > mx) mx = a / b;
      same = same && Rational(a / b) == Rational(pairs[0].first / pairs[0].second);
    }
    const bool ok = res.pooled == sa / sb && res.max_ratio == mx && res.all_equal == same &&
                    res.pooled <= res.max_ratio && ((res.pooled == res.max_ratio) == same);
    if (!ok && bad++ == 0) first = "case " + std::to_string(c);
  }
  return count_row(9, "mediant", bad, kCases, first);
}

/// Graphs with non-trivial automorphism groups small enough to list.
inline std::vector<Graph> symmetric_pool() {
  std::vector<Graph> pool;
  for (const auto& e : catalog())
    if (e.spec.family != Family::kHoffmanSingleton && generate(e.spec).order() >= 3) {
      Graph g = generate(e.spec);
      if (orbit_partition(g).group_order > 1 && orbit_partition(g).group_order <= 5000)
        pool.push_back(std::move(g));
    }
  return pool;
}

inline VerifyRow row_symmetrization(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x51);
  const auto pool = symmetric_pool();
  std::vector<std::vector<Permutation>> groups;
  for (const auto& g : pool) groups.push_back(automorphisms(g));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t bad = 0;
  constexpr std::size_t kCases = 500;
  std::string first;
  for (std::size_t c = 0; c < kCases; ++c) {
    const std::size_t gi = pick(rng);
    const Graph& g = pool[gi];
    const DistanceTable dt(g);
    const auto& grp = groups[gi];
    std::vector<Permutation> subset;
    std::uniform_int_distribution<std::size_t> sz(1, std::min<std::size_t>(grp.size(), 6));
    std::uniform_int_distribution<std::size_t> el(0, grp.size() - 1);
    for (std::size_t j = sz(rng); j > 0; --j) subset.push_back(grp[el(rng)]);
    const auto mu = random_exact_measure(rng, g.order());
    const auto mu_f = symmetrize(mu, std::span<const Permutation>(subset));
    for (int k = 0; k <= dt.k_max(); ++k)
      if (restricted_constant(dt, mu_f, k).value > restricted_constant(dt, mu, k).value && bad++ == 0)
        first = "case " + std::to_string(c) + " k=" + std::to_string(k);
  }
  return count_row(9, "symmetrization", bad, kCases, first);
}

inline VerifyRow row_convexity(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0xc0);
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_real_distribution<double> dens(0.15, 0.7);
  std::size_t bad = 0;
  constexpr std::size_t kCases = 500;
  std::string first;
  for (std::size_t c = 0; c < kCases; ++c) {
    const Graph g = random_connected_graph(rng, size(rng), dens(rng));
    const DistanceTable dt(g);
    const auto m1 = random_exact_measure(rng, g.order());
    const auto m2 = random_exact_measure(rng, g.order());
    const auto sum = m1 + m2;
    for (int k = 0; k <= dt.k_max(); ++k) {
      const Rational bound = std::max(restricted_constant(dt, m1, k).value,
                                      restricted_constant(dt, m2, k).value);
      if (restricted_constant(dt, sum, k).value > bound && bad++ == 0)
        first = "case " + std::to_string(c) + " k=" + std::to_string(k);
    }
  }
  return count_row(9, "convexity", bad, kCases, first);
}

inline VerifyRow row_feasibility_monotone(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0xfe);
  std::uniform_int_distribution<int> size(2, 9);
  std::uniform_real_distribution<double> dens(0.15, 0.6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t bad = 0;
  constexpr std::size_t kCases = 500;
  std::string first;
  for (std::size_t c = 0; c < kCases; ++c) {
    const Graph g = random_connected_graph(rng, size(rng), dens(rng));
    const DistanceTable dt(g);
    const double c0 = c0_constant(g, cfg.eig_tol);
    const double c_count = doubling_report(dt, counting_measure(g)).c_mu;
    // Straddle the interesting window [c0, C_counting].
    const double lo = c0 - 0.2, span = c_count - c0 + 0.4;
    double t1 = lo + span * u(rng), t2 = lo + span * u(rng);
    if (t1 > t2) std::swap(t1, t2);
    t2 = std::max(t2, t1 + 1e-6);
    const bool f1 = feasible(dt, t1, nullptr).has_value();
    const bool f2 = feasible(dt, t2, nullptr).has_value();
    if (f1 && !f2 && bad++ == 0) first = "case " + std::to_string(c) + " t=" + fmt12(t1) + "," + fmt12(t2);
  }
  return count_row(9, "feasibility_monotone", bad, kCases, first);
}

inline VerifyRow row_subgraph_monotone(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x5b);
  std::uniform_int_distribution<int> size(3, 12);
  std::uniform_real_distribution<double> dens(0.2, 0.7);
  std::bernoulli_distribution drop_vertex(0.5);
  std::size_t bad = 0, cases = 0;
  constexpr std::size_t kCases = 500;
  std::string first;
  while (cases < kCases) {
    const Graph g = random_connected_graph(rng, size(rng), dens(rng));
    std::optional<Graph> h;
    if (drop_vertex(rng)) {
      h = remove_vertex(g, std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(g.order() - 1))(rng));
    } else {
      const auto edges = g.edges();
      h = remove_edge(g, edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)]);
    }
    if (!h) continue;
    ++cases;
    const double cg = c0_constant(g, cfg.eig_tol), ch = c0_constant(*h, cfg.eig_tol);
    if (!(ch < cg) && bad++ == 0) first = "C0(H)=" + fmt12(ch) + " C0(G)=" + fmt12(cg);
  }
  return count_row(9, "subgraph_monotone", bad, cases, first);
}

inline VerifyRow row_chromatic(const VerifyConfig& cfg) {
  std::size_t bad = 0, cases = 0;
  std::string first;
  for (const auto& e : catalog()) {
    const Graph g = generate(e.spec);
    if (g.order() > kChromaticCap) continue;
    ++cases;
    const int chi = chromatic_number(g);
    const double c0 = c0_constant(g, cfg.eig_tol);
    if (chi > c0 + 1e-9 && bad++ == 0) first = e.name + " chi=" + std::to_string(chi) + " C0=" + fmt12(c0);
  }
  return count_row(9, "chromatic_bound", bad, cases, first);
}

inline VerifyRow row_truncation_paths(const VerifyConfig&) {
  std::vector<int> depths;
  for (int n = 1; n <= 64; ++n) depths.push_back(n);
  const auto recs = truncation_study(TruncationKind::kPathN, depths);
  bool ok = true;
  std::string first;
  double worst_closed = 0.0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const double c0 = *recs[i].c0;
    worst_closed = std::max(worst_closed, std::abs(c0 - smith_c0_table(SmithFamily::kPath, recs[i].depth)));
    if (c0 > 3 + 1e-9 || (i > 0 && !(c0 > *recs[i - 1].c0))) {
      if (ok) first = "n=" + std::to_string(recs[i].depth);
      ok = false;
    }
  }
  const double last = *recs.back().c0;
  ok = ok && last > 2.99 && worst_closed <= 1e-9;
  return {10, "truncation_paths", "C0(L_64)=" + fmt12(last), "increasing, > 2.99, <= 3 + 1e-9",
          1e-9, ok, first.empty() ? "closed-form deviation " + fmt12(worst_closed) : first};
}

inline VerifyRow row_grid_ray(const VerifyConfig&) {
  const std::vector<int> depths{2, 8};
  const auto recs = truncation_study(TruncationKind::kGridRay, depths);
  const double factor = recs[1].c_counting_report / recs[0].c_counting_report;
  return {10, "grid_ray_growth", fmt12(factor), ">= 2", 0.0, factor >= 2.0,
          "ratio(k=2)=" + fmt12(recs[0].c_counting_report) +
              " ratio(k=8)=" + fmt12(recs[1].c_counting_report)};
}

inline VerifyRow row_classification(const VerifyConfig& cfg) {
  std::size_t bad = 0, cases = 0;
  std::string first;
  auto run = [&](const Graph& g, const std::string& what) {
    ++cases;
    const auto v = classify_leq3(g, cfg.tol, true);
    if (!v.agrees.value_or(false) && bad++ == 0)
      first = what + ": " + std::string(verdict_name(v.verdict)) + " vs certified " +
              std::string(position_name(*v.certified_position));
  };
  for (std::size_t n = 1; n <= 9; ++n)
    for (const Graph& t : all_trees(n)) run(t, "tree n=" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) run(generate({Family::kCycle, n}), "C_" + std::to_string(n));
  return count_row(11, "classification_sweep", bad, cases, first);
}

struct RowSpec {
  int criterion;
  std::string_view name;
  std::function<VerifyRow(const VerifyConfig&)> run;
};

inline std::vector<RowSpec> row_specs() {
  auto cf = [](std::string name, Family f, std::vector<std::pair<int, int>> p) {
    return [name, f, p](const VerifyConfig& cfg) { return closed_form_row(cfg, name, f, p); };
  };
  return {
      {1, "complete", cf("complete", Family::kComplete, range(3, 8))},
      {1, "star", cf("star", Family::kStar, range(2, 9))},
      {1, "cycle", cf("cycle", Family::kCycle, range(3, 12))},
      {1, "complete_bipartite",
       cf("complete_bipartite", Family::kCompleteBipartite, {{2, 1}, {3, 2}, {3, 3}, {5, 2}})},
      {1, "wheel", cf("wheel", Family::kWheel, range(5, 10))},
      {1, "friendship", cf("friendship", Family::kFriendship, range(1, 5))},
      {1, "cocktail_party", cf("cocktail_party", Family::kCocktailParty, range(2, 5))},
      {1, "petersen", cf("petersen", Family::kPetersen, {{0, 0}})},
      {1, "hoffman_singleton", cf("hoffman_singleton", Family::kHoffmanSingleton, {{0, 0}})},
      {2, "three_legs", row_three_legs},
      {2, "three_legs_decimal", row_three_legs_decimal},
      {3, "doyle", row_doyle},
      {3, "doyle_counting", row_doyle_counting},
      {4, "e8", row_e8},
      {4, "e6_strict", [](const VerifyConfig& c) { return row_e_strict(c, Family::kE6, "e6_strict"); }},
      {4, "e7_strict", [](const VerifyConfig& c) { return row_e_strict(c, Family::kE7, "e7_strict"); }},
      {5, "smith_table", row_smith},
      {6, "path_threshold", row_path_threshold},
      {7, "diameter2_law", row_diameter2},
      {8, "oracle_equivalence", row_oracle},
      {9, "mediant", row_mediant},
      {9, "symmetrization", row_symmetrization},
      {9, "convexity", row_convexity},
      {9, "feasibility_monotone", row_feasibility_monotone},
      {9, "subgraph_monotone", row_subgraph_monotone},
      {9, "chromatic_bound", row_chromatic},
      {10, "truncation_paths", row_truncation_paths},
      {10, "grid_ray_growth", row_grid_ray},
      {11, "classification_sweep", row_classification},
  };
}

}  // namespace detail

inline std::vector<std::string> verify_row_names() {
  std::vector<std::string> out;
  for (const auto& s : detail::row_specs()) out.emplace_back(s.name);
  return out;
}

/// Runs every reproduction check, or only the named row. Row failures are
/// reported, not thrown; solver errors inside a row mark it failed.
inline std::vector<VerifyRow> run_verify(const VerifyConfig& cfg,
                                         std::optional<std::string_view> only = std::nullopt) {
  std::vector<VerifyRow> out;
  bool matched = false;
  for (const auto& s : detail::row_specs()) {
    if (only && *only != s.name) continue;
    matched = true;
    try {
      out.push_back(s.run(cfg));
    } catch (const std::exception& e) {
      out.push_back({s.criterion, std::string(s.name), "error", "", 0.0, false, e.what()});
    }
  }
  if (only && !matched) throw ValidationError("no verification row named '" + std::string(*only) + "'");
  return out;
}

}  // namespace dublo

#endif  // DUBLO_VERIFY_HPP

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

#ifndef DUBLO_OPTIMIZER_HPP
#define DUBLO_OPTIMIZER_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dublo/distance.hpp"
#include "dublo/doubling.hpp"
#include "dublo/error.hpp"
#include "dublo/graph.hpp"
#include "dublo/lp.hpp"
#include "dublo/measure.hpp"
#include "dublo/spectral.hpp"
#include "dublo/symmetry.hpp"

namespace dublo {

/// The ratio constraints mu(B(v, 2k+1)) <= t mu(B(v, k)) for every center
/// and k = 0..k_max, with the measure constant on variable classes (orbits,
/// or singletons). Counts per class are stored so any t can be plugged in.
struct BallSystem {
  struct Row {
    Vertex center = 0;
    int k = 0;
    /// outer[c] = |B(center, 2k+1) & class c|, inner[c] = |B(center, k) & class c|.
    std::vector<long> outer, inner;
  };

  std::size_t num_vars = 0;
  std::vector<std::size_t> var_of;
  std::vector<Row> rows;
  /// n * (k_max + 1): the row count before orbit reduction.
  std::size_t full_row_count = 0;

  template <class Scalar>
  Measure<Scalar> expand(const std::vector<Scalar>& class_weights) const {
    std::vector<Scalar> w;
    w.reserve(var_of.size());
    for (std::size_t c : var_of) w.push_back(class_weights.at(c));
    return Measure<Scalar>(std::move(w));
  }
};

/// With orbits, one row per (orbit representative, k); rows for other orbit
/// members coincide on orbit-constant measures. Identical rows are merged.
inline BallSystem build_ball_system(const DistanceTable& dt,
                                    const OrbitPartition* orbits = nullptr) {
  const std::size_t n = dt.order();
  BallSystem sys;
  sys.full_row_count = n * static_cast<std::size_t>(dt.k_max() + 1);
  std::vector<Vertex> centers;
  if (orbits) {
    sys.num_vars = orbits->size();
    sys.var_of = orbits->orbit_of;
    for (const auto& orb : orbits->orbits) centers.push_back(orb.front());
  } else {
    sys.num_vars = n;
    sys.var_of.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      sys.var_of[v] = v;
      centers.push_back(v);
    }
  }
  std::set<std::pair<std::vector<long>, std::vector<long>>> seen;
  for (int k = 0; k <= dt.k_max(); ++k)
    for (Vertex v : centers) {
      BallSystem::Row row;
      row.center = v;
      row.k = k;
      row.outer.assign(sys.num_vars, 0);
      row.inner.assign(sys.num_vars, 0);
      for (Vertex w = 0; w < n; ++w) {
        if (dt(v, w) <= 2 * k + 1) ++row.outer[sys.var_of[w]];
        if (dt(v, w) <= k) ++row.inner[sys.var_of[w]];
      }
      if (orbits && !seen.emplace(row.outer, row.inner).second) continue;
      sys.rows.push_back(std::move(row));
    }
  return sys;
}

/// Solves the linearized feasibility problem at t with mu >= 1 (any positive
/// solution rescales to one). Returns the class weights, or nullopt when
/// infeasible. In double mode the caller is expected to re-verify.
template <class Scalar>
std::optional<std::vector<Scalar>> solve_feasibility(const BallSystem& sys, const Scalar& t) {
  // Substituting mu = 1 + x with x >= 0:
  //   sum_c (outer_c - t inner_c) x_c <= -sum_c (outer_c - t inner_c).
  std::vector<lp::Constraint<Scalar>> rows;
  rows.reserve(sys.rows.size());
  for (const auto& r : sys.rows) {
    lp::Constraint<Scalar> c;
    c.coeffs.resize(sys.num_vars);
    Scalar total(0);
    for (std::size_t j = 0; j < sys.num_vars; ++j) {
      c.coeffs[j] = Scalar(r.outer[j]) - t * Scalar(r.inner[j]);
      total += c.coeffs[j];
    }
    c.sense = lp::Sense::kLessEqual;
    c.rhs = -total;
    rows.push_back(std::move(c));
  }
  auto sol = lp::find_nonnegative_solution<Scalar>(sys.num_vars, rows);
  if (!sol.feasible) return std::nullopt;
  for (auto& x : sol.x) x += Scalar(1);
  return sol.x;
}

inline constexpr double kReverifySlack = 1e-9;

/// A measure with mu >= 1 and mu(B(v,2k+1)) <= t mu(B(v,k)) for all v and k,
/// or nullopt. Double-mode solutions are re-checked against the exact-radius
/// report at t + 1e-9.
inline std::optional<RealMeasure> feasible(const DistanceTable& dt, double t,
                                           const OrbitPartition* orbits = nullptr) {
  if (t < 1.0) return std::nullopt;
  const BallSystem sys = build_ball_system(dt, orbits);
  auto x = solve_feasibility<double>(sys, t);
  if (!x) return std::nullopt;
  RealMeasure mu = sys.expand(*x);
  if (doubling_report(dt, mu).c_mu > t + kReverifySlack) return std::nullopt;
  return mu;
}

/// Exact-arithmetic version; no tolerance anywhere.
inline std::optional<ExactMeasure> feasible_exact(const DistanceTable& dt, const Rational& t,
                                                  const OrbitPartition* orbits = nullptr) {
  if (t < 1) return std::nullopt;
  const BallSystem sys = build_ball_system(dt, orbits);
  auto x = solve_feasibility<Rational>(sys, t);
  if (!x) return std::nullopt;
  ExactMeasure mu = sys.expand(*x);
  if (doubling_report(dt, mu).c_mu > t)
    throw SolverError("exact LP returned a point violating its own constraints");
  return mu;
}

/// Multipliers y >= 0 over the full (v, k) rows with y^T (M_outer - t M_inner) >= 0
/// entrywise and y^T M_inner 1 = 1. Pairing with any feasible mu at t' gives
/// 0 <= y^T (M_outer - t M_inner) mu <= (t' - t) y^T M_inner mu, hence C_G >= t.
inline std::optional<std::vector<Rational>> lower_bound_certificate(const DistanceTable& dt,
                                                                    const Rational& t) {
  const BallSystem sys = build_ball_system(dt, nullptr);
  const std::size_t m = sys.rows.size(), n = dt.order();
  std::vector<lp::Constraint<Rational>> cons;
  for (std::size_t w = 0; w < n; ++w) {
    lp::Constraint<Rational> c;
    c.coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      c.coeffs[i] = Rational(sys.rows[i].outer[w]) - t * Rational(sys.rows[i].inner[w]);
    c.sense = lp::Sense::kGreaterEqual;
    c.rhs = 0;
    cons.push_back(std::move(c));
  }
  lp::Constraint<Rational> norm;
  norm.coeffs.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    long s = 0;
    for (long x : sys.rows[i].inner) s += x;
    norm.coeffs[i] = Rational(s);
  }
  norm.sense = lp::Sense::kEqual;
  norm.rhs = 1;
  cons.push_back(std::move(norm));
  auto sol = lp::find_nonnegative_solution<Rational>(m, cons);
  if (!sol.feasible) return std::nullopt;
  return sol.x;
}

/// The rational with the smallest denominator in [lo, hi], 0 < lo <= hi.
inline Rational simplest_rational_between(Rational lo, Rational hi) {
  using boost::multiprecision::mpz_int;
  if (hi < lo) std::swap(lo, hi);
  auto floor_of = [](const Rational& q) {
    mpz_int num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    mpz_int f = num / den;
    if (num < 0 && f * den != num) f -= 1;
    return f;
  };
  const mpz_int fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational inv = simplest_rational_between(Rational(1) / (hi - Rational(fl)),
                                                 Rational(1) / (lo - Rational(fl)));
  return Rational(fl) + Rational(1) / inv;
}

inline constexpr std::size_t kExactConstraintCap = 2000;

struct OptimizerOptions {
  double tol = 1e-9;
  double eig_tol = kDefaultEigenTolerance;
  bool certificate = false;
  bool use_orbits = true;
  /// diam <= 2 gives C_G = 1 + r(A_G) directly.
  bool diam2_shortcut = true;
};

struct Certificate {
  Rational t_lo, t_hi;
  /// Exact weights feasible at t_hi.
  ExactMeasure minimizer{std::vector<Rational>{1}};
  /// t_hi mu(B(v,k)) - mu(B(v,2k+1)) per full (v, k) row, all >= 0.
  std::vector<Rational> slack;
  std::vector<std::pair<Vertex, int>> slack_rows;
  /// Lower-bound multipliers at t_lo, one per full (v, k) row.
  std::vector<Rational> dual;
  /// t_lo == t_hi.
  bool exact = false;
};

struct MethodNotes {
  bool orbit_reduction = false;
  std::size_t num_orbits = 0;
  std::uint64_t group_order = 1;
  bool vertex_transitive = false;
  bool diam2_shortcut = false;
  /// The Perron measure already attains C_G^0.
  bool spectral_shortcut = false;
  std::string upper_start;
  double c_perron_full = 0.0;
  double c_counting = 0.0;
  std::size_t bisection_steps = 0;
  std::size_t lp_solves = 0;
  /// Vertex-transitive graphs only: C_G agrees with the counting measure.
  std::optional<bool> counting_cross_check;
};

struct OptimizationResult {
  double c_g = 0.0;
  double t_lo = 0.0, t_hi = 0.0;
  RealMeasure minimizer{std::vector<double>{1.0}};
  double lower_bound_spectral = 0.0;
  int diameter = 0;
  MethodNotes notes;
  std::optional<Certificate> certificate;
};

namespace detail {

inline Certificate certify(const DistanceTable& dt, const OrbitPartition* orbits, double t_lo,
                           double t_hi, double tol, std::size_t& lp_solves) {
  Certificate cert;
  const Rational lo(t_lo), hi(t_hi), slop(tol);
  // A simple rational inside the bracket that passes both sides is the exact
  // value.
  const Rational guess = simplest_rational_between(lo - 2 * slop, hi + 2 * slop);
  std::optional<ExactMeasure> upper;
  std::optional<std::vector<Rational>> dual;
  ++lp_solves;
  upper = feasible_exact(dt, guess, orbits);
  if (upper) {
    ++lp_solves;
    dual = lower_bound_certificate(dt, guess);
  }
  if (upper && dual) {
    cert.t_lo = cert.t_hi = guess;
    cert.exact = true;
  } else {
    upper.reset();
    for (Rational width = slop; !upper; width *= 4) {
      if (width > Rational(1)) throw SolverError("certificate: no exact feasible point near t_hi");
      cert.t_hi = simplest_rational_between(hi, hi + width);
      ++lp_solves;
      upper = feasible_exact(dt, cert.t_hi, orbits);
    }
    dual.reset();
    for (Rational width = slop; !dual; width *= 4) {
      if (width > Rational(1)) throw SolverError("certificate: no lower-bound multipliers near t_lo");
      cert.t_lo = simplest_rational_between(lo - width, lo);
      ++lp_solves;
      dual = lower_bound_certificate(dt, cert.t_lo);
    }
  }
  cert.minimizer = upper->normalized_min();
  cert.dual = std::move(*dual);
  for (int k = 0; k <= dt.k_max(); ++k)
    for (Vertex v = 0; v < dt.order(); ++v) {
      Rational outer(0), inner(0);
      for (Vertex w = 0; w < dt.order(); ++w) {
        if (dt(v, w) <= 2 * k + 1) outer += cert.minimizer[w];
        if (dt(v, w) <= k) inner += cert.minimizer[w];
      }
      cert.slack.push_back(cert.t_hi * inner - outer);
      cert.slack_rows.emplace_back(v, k);
    }
  return cert;
}

}  // namespace detail

/// C_G = inf_mu C_mu, by bisection on t between 1 + r(A_G) and the better of
/// the Perron and counting measures, over the orbit-reduced feasibility LP.
inline OptimizationResult least_doubling(const Graph& g, const OptimizerOptions& opts = {}) {
  if (!(opts.tol > 0)) throw ValidationError("bisection tolerance must be positive");
  const DistanceTable dt(g);
  OptimizationResult res;
  res.diameter = dt.diameter();

  const SpectralResult spec = perron(g, opts.eig_tol);
  res.lower_bound_spectral = 1.0 + spec.radius;
  const RealMeasure mu0(spec.eigvec);
  const double c_mu0 = doubling_report(dt, mu0).c_mu;
  const RealMeasure counting = counting_measure(g);
  const double c_count = doubling_report(dt, counting).c_mu;
  res.notes.c_perron_full = c_mu0;
  res.notes.c_counting = c_count;

  std::optional<OrbitPartition> orbits;
  auto ensure_orbits = [&]() -> const OrbitPartition* {
    if (!opts.use_orbits) return nullptr;
    if (!orbits) {
      orbits = orbit_partition(g);
      res.notes.num_orbits = orbits->size();
      res.notes.group_order = orbits->group_order;
      res.notes.vertex_transitive = orbits->size() == 1;
      res.notes.orbit_reduction = orbits->group_order > 1;
    }
    return res.notes.orbit_reduction ? &*orbits : nullptr;
  };

  double t_lo = res.lower_bound_spectral;
  double t_hi;
  if (c_mu0 <= c_count) {
    t_hi = c_mu0;
    res.minimizer = mu0;
    res.notes.upper_start = "perron";
  } else {
    t_hi = c_count;
    res.minimizer = counting;
    res.notes.upper_start = "counting";
  }

  if (opts.diam2_shortcut && dt.diameter() <= 2) {
    res.notes.diam2_shortcut = true;
    t_hi = c_mu0;
    res.minimizer = mu0;
    res.notes.upper_start = "perron";
  } else if (t_hi - t_lo <= opts.tol) {
    res.notes.spectral_shortcut = res.notes.upper_start == "perron";
  } else {
    const OrbitPartition* orb = ensure_orbits();
    while (t_hi - t_lo > opts.tol) {
      const double mid = 0.5 * (t_lo + t_hi);
      ++res.notes.bisection_steps;
      ++res.notes.lp_solves;
      if (auto mu = feasible(dt, mid, orb)) {
        t_hi = mid;
        res.minimizer = std::move(*mu);
      } else {
        t_lo = mid;
      }
    }
  }
  ensure_orbits();
  if (res.notes.vertex_transitive)
    res.notes.counting_cross_check = std::abs(t_hi - c_count) <= 2 * opts.tol + 1e-12;
  res.t_lo = std::min(t_lo, t_hi);
  res.t_hi = t_hi;
  res.minimizer = res.minimizer.normalized_min();

  if (opts.certificate) {
    if (dt.order() * static_cast<std::size_t>(dt.k_max() + 1) > kExactConstraintCap)
      throw ValidationError("certificate mode is limited to " + std::to_string(kExactConstraintCap) +
                            " (v, k) constraints");
    const OrbitPartition* orb = res.notes.orbit_reduction && opts.use_orbits ? &*orbits : nullptr;
    res.certificate = detail::certify(dt, orb, res.t_lo, res.t_hi, opts.tol, res.notes.lp_solves);
    res.t_lo = to_double(res.certificate->t_lo);
    res.t_hi = to_double(res.certificate->t_hi);
    res.minimizer = to_real(res.certificate->minimizer);
  }
  res.c_g = res.t_hi;
  return res;
}

struct PerronEqualityCheck {
  double c0 = 0.0;
  double c_mu0_full = 0.0;
  bool equal = false;
};

/// C_G = C_G^0 holds iff the Perron measure's full constant equals its
/// radius-0 constant.
inline PerronEqualityCheck check_perron_equality(const Graph& g, double tol = 1e-9,
                                        double eig_tol = kDefaultEigenTolerance) {
  const DistanceTable dt(g);
  const SpectralResult spec = perron(g, eig_tol);
  PerronEqualityCheck out;
  out.c0 = 1.0 + spec.radius;
  out.c_mu0_full = doubling_report(dt, RealMeasure(spec.eigvec)).c_mu;
  out.equal = std::abs(out.c_mu0_full - out.c0) <= tol;
  return out;
}

inline constexpr std::size_t kBruteForceSizeCap = 5;

struct BruteForceResult {
  double value = 0.0;
  std::vector<long> weights;
};

/// Exhaustive minimum of C_mu over integer weights w_v >= 1 with
/// sum w_v = resolution. Independent of the LP path; an upper bound for C_G.
inline BruteForceResult brute_force_cg(const Graph& g, int resolution) {
  const std::size_t n = g.order();
  if (n > kBruteForceSizeCap)
    throw ValidationError("brute_force_cg: at most " + std::to_string(kBruteForceSizeCap) +
                          " vertices");
  if (resolution < static_cast<int>(n))
    throw ValidationError("brute_force_cg: resolution below vertex count");
  const DistanceTable dt(g);
  struct Mask {
    unsigned outer, inner;
  };
  std::vector<Mask> rows;
  for (int k = 0; k <= dt.k_max(); ++k)
    for (Vertex v = 0; v < n; ++v) {
      Mask m{0, 0};
      for (Vertex w = 0; w < n; ++w) {
        if (dt(v, w) <= 2 * k + 1) m.outer |= 1u << w;
        if (dt(v, w) <= k) m.inner |= 1u << w;
      }
      if (m.outer == m.inner) continue;
      if (std::none_of(rows.begin(), rows.end(), [&](const Mask& x) {
            return x.outer == m.outer && x.inner == m.inner;
          }))
        rows.push_back(m);
    }

  BruteForceResult best;
  if (rows.empty()) {
    best.value = 1.0;
    best.weights.assign(n, 1);
    return best;
  }
  // Exact integer search. A row whose inner ball is fully assigned has a
  // ratio bounded below by (assigned outer mass + one per unassigned outer
  // vertex) / inner mass, which prunes the subtree once it reaches the best.
  long best_num = 0, best_den = 0;
  std::vector<long> w(n, 0);
  auto mass = [&](unsigned s) {
    long m = 0;
    for (Vertex v = 0; v < n; ++v)
      if (s >> v & 1) m += w[v];
    return m;
  };
  auto bound_reached = [&](std::size_t assigned) {
    if (best_den == 0) return false;
    const unsigned done = (1u << assigned) - 1;
    for (const Mask& m : rows) {
      if ((m.inner & ~done) != 0) continue;
      const long num = mass(m.outer & done) + std::popcount(m.outer & ~done);
      if (num * best_den >= best_num * mass(m.inner)) return true;
    }
    return false;
  };
  auto evaluate = [&]() {
    long wn = 0, wd = 1;
    for (const Mask& m : rows) {
      const long num = mass(m.outer), den = mass(m.inner);
      if (num * wd > wn * den) {
        wn = num;
        wd = den;
      }
    }
    if (best_den == 0 || wn * best_den < best_num * wd) {
      best_num = wn;
      best_den = wd;
      best.weights = w;
    }
  };
  // Seed with the most even split so pruning starts early.
  for (std::size_t i = 0; i < n; ++i)
    w[i] = resolution / static_cast<long>(n) + (i < resolution % n ? 1 : 0);
  evaluate();
  auto recurse = [&](auto&& self, std::size_t i, long remaining) -> void {
    if (i + 1 == n) {
      w[i] = remaining;
      if (!bound_reached(n)) evaluate();
      return;
    }
    const long slots_after = static_cast<long>(n - i - 1);
    for (long x = 1; x <= remaining - slots_after; ++x) {
      w[i] = x;
      if (!bound_reached(i + 1)) self(self, i + 1, remaining - x);
    }
    w[i] = 0;
  };
  recurse(recurse, 0, resolution);
  best.value = static_cast<double>(best_num) / static_cast<double>(best_den);
  return best;
}

/// Integer weights >= 1 summing to resolution, proportional to mu (largest
/// remainder rounding). C of the result minus C_G is the lattice error of a
/// brute-force search at that resolution.
inline std::vector<long> round_to_grid(const RealMeasure& mu, int resolution) {
  const std::size_t n = mu.size();
  if (resolution < static_cast<int>(n)) throw ValidationError("round_to_grid: resolution too small");
  double total = 0.0;
  for (double x : mu.weights()) total += x;
  std::vector<long> w(n);
  std::vector<std::pair<double, std::size_t>> frac;
  long used = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const double exact = mu[v] * resolution / total;
    w[v] = std::max(1L, static_cast<long>(std::floor(exact)));
    frac.emplace_back(exact - std::floor(exact), v);
    used += w[v];
  }
  std::sort(frac.begin(), frac.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (std::size_t i = 0; used < resolution; i = (i + 1) % n, ++used) ++w[frac[i].second];
  while (used > resolution) {
    auto it = std::max_element(w.begin(), w.end());
    --*it;
    --used;
  }
  return w;
}

/// Largest real root of the polynomial with coefficients given highest
/// degree first, by a downward scan from the Cauchy bound and bisection.
inline double poly_largest_root(std::span<const double> coeffs, double floor = -1e300) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0.0) ++lead;
  if (lead + 1 >= coeffs.size())
    throw ValidationError("poly_largest_root: polynomial has no roots to find");
  const std::span<const double> c = coeffs.subspan(lead);
  auto eval = [&](double x) {
    double acc = 0.0;
    for (double a : c) acc = acc * x + a;
    return acc;
  };
  double bound = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) bound = std::max(bound, std::abs(c[i] / c[0]));
  bound += 1.0;
  const double lo_limit = std::max(-bound, floor);
  constexpr int kSteps = 200'000;
  const double step = (bound - lo_limit) / kSteps;
  double hi = bound, f_hi = eval(hi);
  for (int i = 1; i <= kSteps; ++i) {
    const double lo = bound - i * step;
    const double f_lo = eval(lo);
    if (f_lo == 0.0) return lo;
    if ((f_lo < 0) != (f_hi < 0)) {
      double a = lo, b = hi, fa = f_lo;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = eval(m);
        if (fm == 0.0) return m;
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      return 0.5 * (a + b);
    }
    hi = lo;
    f_hi = f_lo;
  }
  throw ValidationError("poly_largest_root: no sign change above the search floor");
}

}  // namespace dublo

#endif  // DUBLO_OPTIMIZER_HPP

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

#ifndef DUBLO_LP_HPP
#define DUBLO_LP_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dublo/error.hpp"
#include "dublo/measure.hpp"

/// Dense two-phase simplex, phase I only: decides whether a system of linear
/// constraints has a solution with x >= 0 and returns one. Templated on the
/// scalar so the same code runs in double and in exact GMP rationals.
namespace dublo::lp {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

template <class Scalar>
struct Constraint {
  std::vector<Scalar> coeffs;
  Sense sense = Sense::kLessEqual;
  Scalar rhs{0};
};

template <class Scalar>
struct Solution {
  bool feasible = false;
  std::vector<Scalar> x;
  std::size_t pivots = 0;
};

template <class Scalar>
struct Tolerance;

template <>
struct Tolerance<double> {
  static constexpr bool kExact = false;
  static bool positive(double x) { return x > 1e-11; }
  static bool negative(double x) { return x < -1e-11; }
  static bool feasible_objective(double obj, double scale) {
    return obj <= 1e-9 * std::max(1.0, scale);
  }
};

template <>
struct Tolerance<Rational> {
  static constexpr bool kExact = true;
  static bool positive(const Rational& x) { return x > 0; }
  static bool negative(const Rational& x) { return x < 0; }
  static bool feasible_objective(const Rational& obj, const Rational&) { return obj == 0; }
};

inline constexpr std::size_t kPivotCap = 200'000;

template <class Scalar>
Solution<Scalar> find_nonnegative_solution(std::size_t num_vars,
                                           const std::vector<Constraint<Scalar>>& rows,
                                           std::size_t pivot_cap = kPivotCap) {
  using Tol = Tolerance<Scalar>;
  const std::size_t m = rows.size();
  Solution<Scalar> out;
  if (m == 0) {
    out.feasible = true;
    out.x.assign(num_vars, Scalar(0));
    return out;
  }

  // Orient every row so its right-hand side is non-negative.
  std::vector<Sense> sense(m);
  std::vector<int> sign(m, 1);
  std::size_t slack_cols = 0, art_cols = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].coeffs.size() != num_vars)
      throw ValidationError("lp: constraint width does not match variable count");
    sense[i] = rows[i].sense;
    if (rows[i].rhs < 0) {
      sign[i] = -1;
      if (sense[i] == Sense::kLessEqual) sense[i] = Sense::kGreaterEqual;
      else if (sense[i] == Sense::kGreaterEqual) sense[i] = Sense::kLessEqual;
    }
    if (sense[i] != Sense::kEqual) ++slack_cols;
    if (sense[i] != Sense::kLessEqual) ++art_cols;
  }

  const std::size_t cols = num_vars + slack_cols + art_cols;
  const std::size_t rhs_col = cols;
  const std::size_t width = cols + 1;
  std::vector<Scalar> tab((m + 1) * width, Scalar(0));
  auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return tab[r * width + c]; };
  std::vector<std::size_t> basis(m);

  std::size_t next_slack = num_vars, next_art = num_vars + slack_cols;
  Scalar scale(0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < num_vars; ++j)
      at(i, j) = sign[i] > 0 ? rows[i].coeffs[j] : Scalar(-rows[i].coeffs[j]);
    at(i, rhs_col) = sign[i] > 0 ? rows[i].rhs : Scalar(-rows[i].rhs);
    if (at(i, rhs_col) > scale) scale = at(i, rhs_col);
    switch (sense[i]) {
      case Sense::kLessEqual:
        at(i, next_slack) = 1;
        basis[i] = next_slack++;
        break;
      case Sense::kGreaterEqual:
        at(i, next_slack++) = -1;
        at(i, next_art) = 1;
        basis[i] = next_art++;
        break;
      case Sense::kEqual:
        at(i, next_art) = 1;
        basis[i] = next_art++;
        break;
    }
  }
  const std::size_t first_art = num_vars + slack_cols;

  // Objective row: minimise the artificial sum, expressed in non-basics.
  const std::size_t obj = m;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= first_art)
      for (std::size_t c = 0; c < width; ++c)
        if (c < first_art || c == rhs_col) at(obj, c) -= at(i, c);

  for (;;) {
    // Bland's rule: first improving column, ties in the ratio test broken by
    // smallest basic index. Terminates without cycling.
    std::size_t enter = cols;
    for (std::size_t c = 0; c < first_art; ++c)
      if (Tol::negative(at(obj, c))) {
        enter = c;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Scalar best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!Tol::positive(at(i, enter))) continue;
      Scalar ratio = at(i, rhs_col) / at(i, enter);
      if (leave == m || ratio < best_ratio ||
          (!(best_ratio < ratio) && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == m)
      throw SolverError("lp: unbounded phase-I objective (numerical breakdown)");

    const Scalar piv = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const Scalar f = at(r, enter);
      if (f == 0) continue;
      for (std::size_t c = 0; c < width; ++c)
        if (at(leave, c) != 0) at(r, c) -= f * at(leave, c);
      if constexpr (!Tol::kExact) at(r, enter) = 0;
    }
    basis[leave] = enter;
    if (++out.pivots > pivot_cap)
      throw SolverError("lp: pivot cap of " + std::to_string(pivot_cap) + " exceeded");
  }

  const Scalar residual = -at(obj, rhs_col);
  out.feasible = Tol::feasible_objective(residual, scale);
  if (out.feasible) {
    out.x.assign(num_vars, Scalar(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < num_vars) {
        Scalar v = at(i, rhs_col);
        if (v < 0) v = 0;
        out.x[basis[i]] = v;
      }
  }
  return out;
}

}  // namespace dublo::lp

#endif  // DUBLO_LP_HPP

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

#ifndef DUBLO_SPECTRAL_HPP
#define DUBLO_SPECTRAL_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "dublo/error.hpp"
#include "dublo/graph.hpp"
#include "dublo/measure.hpp"

namespace dublo {

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr std::size_t kPowerIterationCap = 1'000'000;

struct SpectralResult {
  double radius = 0.0;
  /// Perron vector scaled so its smallest entry is 1.
  std::vector<double> eigvec;
  /// max_v |(A x)_v / x_v - radius|, the spread of mu(B(v,1)) / mu(v).
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Largest adjacency eigenvalue and its positive eigenvector, by power
/// iteration on A + I. The shift makes the iteration primitive on bipartite
/// graphs, where the plain adjacency matrix has -r(A) in its spectrum.
inline SpectralResult perron(const Graph& g, double tol = kDefaultEigenTolerance,
                             std::size_t max_iter = kPowerIterationCap) {
  if (!(tol > 0)) throw ValidationError("eigen tolerance must be positive");
  const std::size_t n = g.order();
  std::vector<double> x(n, 1.0), ax(n, 0.0);
  auto multiply = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (Vertex v = 0; v < n; ++v) {
      double s = 0.0;
      for (Vertex w : g.neighbors(v)) s += in[w];
      out[v] = s;
    }
  };
  SpectralResult res;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    multiply(x, ax);
    double xax = 0.0, xx = 0.0, lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      xax += x[i] * ax[i];
      xx += x[i] * x[i];
      lo = std::min(lo, x[i]);
    }
    const double lambda = xax / xx;
    // Per-vertex relative residual |(Ax)_v / x_v - lambda|. The absolute
    // one has a rounding floor of eps * max(x) / min(x), far above 1e-12 on
    // eigenvectors spanning many decades (grid truncations).
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      err = std::max(err, std::abs(ax[i] - lambda * x[i]) / x[i]);
    if (err <= tol) {
      res.radius = lambda;
      res.residual = err;
      res.iterations = it;
      for (auto& xi : x) xi /= lo;
      res.eigvec = std::move(x);
      return res;
    }
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += ax[i];
      hi = std::max(hi, x[i]);
    }
    for (auto& xi : x) xi /= hi;
  }
  char msg[128];
  std::snprintf(msg, sizeof msg, "power iteration did not reach residual %g within %zu iterations",
                tol, max_iter);
  throw SolverError(msg);
}

/// C_G^0 = 1 + r(A_G).
inline double c0_constant(const Graph& g, double tol = kDefaultEigenTolerance) {
  return 1.0 + perron(g, tol).radius;
}

/// The unique (up to scale) minimizer of the radius-0 constant.
inline RealMeasure perron_measure(const Graph& g, double tol = kDefaultEigenTolerance) {
  return RealMeasure(perron(g, tol).eigvec);
}

inline constexpr std::size_t kChromaticCap = 64;

/// Exact chromatic number by DSATUR-ordered backtracking.
inline int chromatic_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kChromaticCap)
    throw ValidationError("chromatic_number: graph exceeds " +
                          std::to_string(kChromaticCap) + " vertices");
  if (g.num_edges() == 0) return 1;

  std::vector<int> color(n, -1);
  // neighbour_colours[v] bit c set iff some neighbour of v has colour c.
  std::vector<std::uint64_t> used(n, 0);
  std::vector<std::vector<int>> count(n, std::vector<int>(kChromaticCap, 0));

  auto assign = [&](Vertex v, int c) {
    color[v] = c;
    for (Vertex w : g.neighbors(v))
      if (count[w][c]++ == 0) used[w] |= std::uint64_t{1} << c;
  };
  auto unassign = [&](Vertex v) {
    const int c = color[v];
    color[v] = -1;
    for (Vertex w : g.neighbors(v))
      if (--count[w][c] == 0) used[w] &= ~(std::uint64_t{1} << c);
  };

  std::function<bool(std::size_t, int, int)> search =
      [&](std::size_t colored, int colors_used, int k) -> bool {
    if (colored == n) return true;
    Vertex best = 0;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      const int sat = std::popcount(used[v]);
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g.degree(v);
      }
    }
    if (best_sat >= k) return false;
    const int limit = std::min(k, colors_used + 1);
    for (int c = 0; c < limit; ++c) {
      if (used[best] & (std::uint64_t{1} << c)) continue;
      assign(best, c);
      if (search(colored + 1, std::max(colors_used, c + 1), k)) return true;
      unassign(best);
    }
    return false;
  };

  for (int k = 2;; ++k) {
    std::fill(color.begin(), color.end(), -1);
    std::fill(used.begin(), used.end(), 0);
    for (auto& row : count) std::fill(row.begin(), row.end(), 0);
    if (search(0, 0, k)) return k;
  }
}

}  // namespace dublo

#endif  // DUBLO_SPECTRAL_HPP

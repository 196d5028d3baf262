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

#ifndef DUBLO_DOUBLING_HPP
#define DUBLO_DOUBLING_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dublo/distance.hpp"
#include "dublo/error.hpp"
#include "dublo/measure.hpp"

namespace dublo {

template <class Scalar>
struct RestrictedConstant {
  int k = 0;
  /// max_v mu(B(v, 2k+1)) / mu(B(v, k)).
  Scalar value{};
  /// Smallest vertex attaining value.
  Vertex witness = 0;
};

template <class Scalar>
struct DoublingReport {
  Scalar c_mu{};
  std::vector<RestrictedConstant<Scalar>> per_k;
  int k_max = 0;
  /// Radius index k whose restricted constant equals c_mu (smallest on ties).
  int attained_at = 0;
};

namespace detail {

/// (mu(B(v, outer)), mu(B(v, inner))) for one center.
template <class Scalar>
std::pair<Scalar, Scalar> ball_masses(const DistanceTable& dt, const Measure<Scalar>& mu,
                                      Vertex v, int outer, int inner) {
  Scalar num(0), den(0);
  for (Vertex w = 0; w < dt.order(); ++w) {
    const int d = dt(v, w);
    if (d <= outer) num += mu[w];
    if (d <= inner) den += mu[w];
  }
  return {num, den};
}

}  // namespace detail

template <class Scalar>
RestrictedConstant<Scalar> restricted_constant(const DistanceTable& dt,
                                               const Measure<Scalar>& mu, int k) {
  if (mu.size() != dt.order())
    throw ValidationError("measure length does not match the graph");
  if (k < 0 || k > dt.k_max())
    throw ValidationError("radius index k=" + std::to_string(k) +
                          " outside 0.." + std::to_string(dt.k_max()));
  RestrictedConstant<Scalar> out;
  out.k = k;
  for (Vertex v = 0; v < dt.order(); ++v) {
    const auto [num, den] = detail::ball_masses(dt, mu, v, 2 * k + 1, k);
    Scalar ratio = num / den;
    if (v == 0 || ratio > out.value) {
      out.value = std::move(ratio);
      out.witness = v;
    }
  }
  return out;
}

/// C_mu as the maximum of the restricted constants over k = 0..k_max; larger
/// radii make B(v, 2k+1) the whole vertex set and add nothing.
template <class Scalar>
DoublingReport<Scalar> doubling_report(const DistanceTable& dt, const Measure<Scalar>& mu) {
  DoublingReport<Scalar> rep;
  rep.k_max = dt.k_max();
  for (int k = 0; k <= rep.k_max; ++k) {
    rep.per_k.push_back(restricted_constant(dt, mu, k));
    if (k == 0 || rep.per_k.back().value > rep.c_mu) {
      rep.c_mu = rep.per_k.back().value;
      rep.attained_at = k;
    }
  }
  return rep;
}

template <class Scalar>
struct MediantResult {
  Scalar max_ratio{};
  Scalar pooled{};
  bool all_equal = true;
};

/// max_j a_j / b_j together with the pooled ratio sum(a) / sum(b), which never
/// exceeds it; all_equal reports the equality case.
template <class Scalar>
MediantResult<Scalar> mediant_max(std::span<const std::pair<Scalar, Scalar>> pairs) {
  if (pairs.empty()) throw ValidationError("mediant_max: empty list");
  MediantResult<Scalar> out;
  Scalar sum_a(0), sum_b(0);
  bool first = true;
  for (const auto& [a, b] : pairs) {
    if (!(a > 0) || !(b > 0))
      throw ValidationError("mediant_max: entries must be positive");
    Scalar r = a / b;
    if (first) {
      out.max_ratio = r;
      first = false;
    } else {
      if (a * pairs.front().second != pairs.front().first * b) out.all_equal = false;
      if (r > out.max_ratio) out.max_ratio = r;
    }
    sum_a += a;
    sum_b += b;
  }
  out.pooled = sum_a / sum_b;
  return out;
}

}  // namespace dublo

#endif  // DUBLO_DOUBLING_HPP

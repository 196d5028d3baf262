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

#ifndef DUBLO_DISTANCE_HPP
#define DUBLO_DISTANCE_HPP

#include <algorithm>
#include <cstddef>
#include <queue>
#include <vector>

#include "dublo/error.hpp"
#include "dublo/graph.hpp"

namespace dublo {

/// Dense 0/1 matrix. Row v of a ball matrix M_r marks B(v, r), so that
/// (M_r mu)_v = mu(B(v, r)).
class ZeroOneMatrix {
 public:
  ZeroOneMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool value) {
    data_[i * cols_ + j] = value ? 1 : 0;
  }
  std::size_t row_sum(std::size_t i) const {
    return static_cast<std::size_t>(
        std::count(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_, 1));
  }

  template <class Scalar>
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
    std::vector<Scalar> y(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (data_[i * cols_ + j]) y[i] += x[j];
    return y;
  }

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<unsigned char> data_;
};

/// All-pairs hop distances, by one BFS per source.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : n_(g.order()), dist_(n_ * n_, -1) {
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
      int* row = &dist_[s * n_];
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      row[s] = 0;
      while (head < tail) {
        const Vertex u = queue[head++];
        for (Vertex w : g.neighbors(u))
          if (row[w] < 0) {
            row[w] = row[u] + 1;
            queue[tail++] = w;
          }
      }
      diam_ = std::max(diam_, *std::max_element(row, row + n_));
    }
  }

  std::size_t order() const { return n_; }
  int diameter() const { return diam_; }
  int operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }

  /// Largest k in the restricted-constant range 0..ceil((diam-1)/2).
  int k_max() const { return diam_ <= 1 ? 0 : diam_ / 2; }

  /// Number of vertices at each distance 0..diam from v.
  std::vector<std::size_t> profile(Vertex v) const {
    std::vector<std::size_t> out(static_cast<std::size_t>(diam_) + 1, 0);
    for (std::size_t w = 0; w < n_; ++w) ++out[dist_[v * n_ + w]];
    return out;
  }

 private:
  std::size_t n_;
  std::vector<int> dist_;
  int diam_ = 0;
};

/// Closed ball B(v, r) in increasing vertex order.
inline std::vector<Vertex> ball(const DistanceTable& dt, Vertex v, int r) {
  if (v >= dt.order()) throw ValidationError("vertex out of range");
  if (r < 0) throw ValidationError("negative radius");
  std::vector<Vertex> out;
  for (Vertex w = 0; w < dt.order(); ++w)
    if (dt(v, w) <= r) out.push_back(w);
  return out;
}

inline ZeroOneMatrix ball_matrix(const DistanceTable& dt, int r) {
  if (r < 0) throw ValidationError("negative radius");
  ZeroOneMatrix m(dt.order(), dt.order());
  for (Vertex v = 0; v < dt.order(); ++v)
    for (Vertex w = 0; w < dt.order(); ++w) m.set(v, w, dt(v, w) <= r);
  return m;
}

struct StructuralFacts {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  bool is_regular = false;
  bool has_cycle = false;
  std::size_t count_deg_ge3 = 0;
  int diameter = 0;
};

inline StructuralFacts structural_facts(const Graph& g, const DistanceTable& dt) {
  StructuralFacts f;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    f.degrees.push_back(d);
    f.max_degree = std::max(f.max_degree, d);
    if (d >= 3) ++f.count_deg_ge3;
  }
  f.is_regular = std::all_of(f.degrees.begin(), f.degrees.end(),
                             [&](std::size_t d) { return d == f.degrees[0]; });
  f.has_cycle = g.num_edges() >= g.order();
  f.diameter = dt.diameter();
  return f;
}

inline StructuralFacts structural_facts(const Graph& g) {
  return structural_facts(g, DistanceTable(g));
}

}  // namespace dublo

#endif  // DUBLO_DISTANCE_HPP

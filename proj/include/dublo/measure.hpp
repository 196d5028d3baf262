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

#ifndef DUBLO_MEASURE_HPP
#define DUBLO_MEASURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "dublo/error.hpp"
#include "dublo/graph.hpp"

namespace dublo {

using Rational = boost::multiprecision::mpq_rational;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Accepts "p/q", integers and finite decimals ("2.5", "-1e-3"), exactly.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      if (s.find('/', slash + 1) != std::string::npos) throw ParseError("not a number: '" + s + "'");
      const Rational num = parse_rational(s.substr(0, slash)), den = parse_rational(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
      return num / den;
    }
    std::string mant = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mant = s.substr(0, e);
      exponent = std::stol(s.substr(e + 1));
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant.erase(0, 1);
    }
    std::string digits;
    long frac = 0;
    bool dot = false;
    for (char c : mant) {
      if (c == '.' && !dot) {
        dot = true;
      } else if (c >= '0' && c <= '9') {
        digits += c;
        if (dot) ++frac;
      } else {
        throw ParseError("not a number: '" + s + "'");
      }
    }
    if (digits.empty()) throw ParseError("not a number: '" + s + "'");
    // mpz_int reads a leading 0 as octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational q{boost::multiprecision::mpz_int(digits)};
    const long shift = exponent - frac;
    boost::multiprecision::mpz_int p10 = 1;
    for (long i = 0; i < std::labs(shift); ++i) p10 *= 10;
    q = shift >= 0 ? q * Rational(p10) : q / Rational(p10);
    return neg ? Rational(-q) : q;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
}

/// Strictly positive vertex weights; mu(A) is the sum over A.
template <class Scalar>
class Measure {
 public:
  explicit Measure(std::vector<Scalar> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw ValidationError("measure has no weights");
    for (const auto& x : w_)
      if (!(x > 0)) throw ValidationError("measure weights must be strictly positive");
  }

  std::size_t size() const { return w_.size(); }
  const Scalar& operator[](std::size_t v) const { return w_[v]; }
  const std::vector<Scalar>& weights() const { return w_; }

  template <class Range>
  Scalar mass(const Range& vertices) const {
    Scalar s(0);
    for (auto v : vertices) s += w_[v];
    return s;
  }

  Measure scaled(const Scalar& alpha) const {
    std::vector<Scalar> out(w_);
    for (auto& x : out) x *= alpha;
    return Measure(std::move(out));
  }

  /// Rescaled so the smallest weight is 1.
  Measure normalized_min() const {
    const Scalar lo = *std::min_element(w_.begin(), w_.end());
    std::vector<Scalar> out(w_);
    for (auto& x : out) x /= lo;
    return Measure(std::move(out));
  }

  friend Measure operator+(const Measure& a, const Measure& b) {
    if (a.size() != b.size()) throw ValidationError("measure sizes differ");
    std::vector<Scalar> out(a.w_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.w_[i];
    return Measure(std::move(out));
  }

  void check_against(const Graph& g) const {
    if (w_.size() != g.order())
      throw ValidationError("measure has " + std::to_string(w_.size()) +
                            " weights but the graph has " +
                            std::to_string(g.order()) + " vertices");
  }

 private:
  std::vector<Scalar> w_;
};

using RealMeasure = Measure<double>;
using ExactMeasure = Measure<Rational>;

inline RealMeasure counting_measure(const Graph& g) {
  return RealMeasure(std::vector<double>(g.order(), 1.0));
}

inline RealMeasure to_real(const ExactMeasure& m) {
  std::vector<double> w;
  for (const auto& x : m.weights()) w.push_back(to_double(x));
  return RealMeasure(std::move(w));
}

inline ExactMeasure to_exact(const RealMeasure& m) {
  std::vector<Rational> w;
  for (double x : m.weights()) w.emplace_back(x);
  return ExactMeasure(std::move(w));
}

/// Reads "vertex weight" lines ('#' comments). Vertices are resolved through
/// the graph's labels; every vertex must be given exactly once.
inline ExactMeasure parse_measure(std::string_view text, const Graph& g) {
  std::vector<Rational> w(g.order(), Rational(0));
  std::vector<char> seen(g.order(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream fields(line);
    std::string vtx, weight, extra;
    if (!(fields >> vtx)) continue;
    if (!(fields >> weight) || (fields >> extra))
      throw ParseError("measure line " + std::to_string(line_no) +
                       ": expected 'vertex weight'");
    const auto v = g.find_label(vtx);
    if (!v) throw ParseError("measure line " + std::to_string(line_no) +
                             ": unknown vertex '" + vtx + "'");
    if (seen[*v]) throw ParseError("measure line " + std::to_string(line_no) +
                                   ": vertex '" + vtx + "' repeated");
    seen[*v] = 1;
    w[*v] = parse_rational(weight);
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v]) throw ParseError("measure: no weight for vertex '" + g.label(v) + "'");
  return ExactMeasure(std::move(w));
}

}  // namespace dublo

#endif  // DUBLO_MEASURE_HPP

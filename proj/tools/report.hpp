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

// JSON/CSV/text rendering of library results for the command-line tool.

#ifndef DUBLO_TOOLS_REPORT_HPP
#define DUBLO_TOOLS_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "dublo/classifier.hpp"
#include "dublo/families.hpp"
#include "dublo/graph6.hpp"
#include "dublo/optimizer.hpp"
#include "dublo/spectral.hpp"
#include "dublo/verify.hpp"

namespace dublo::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "dublo/1";

/// 12 significant digits, then the shortest round-trip form of that value.
inline json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline json nums(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

inline json rationals(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(format_rational(x));
  return a;
}

inline json envelope(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

inline json graph_info(const Graph& g, int diameter) {
  json j;
  j["n"] = g.order();
  j["m"] = g.num_edges();
  j["diameter"] = diameter;
  j["graph6"] = write_graph6(g);
  return j;
}

inline json optimization(const OptimizationResult& r) {
  json j;
  j["c0"] = num(r.lower_bound_spectral);
  j["c_g"] = num(r.c_g);
  j["bracket"] = json::array({num(r.t_lo), num(r.t_hi)});
  j["minimizer"] = nums(r.minimizer.weights());
  json orb;
  orb["count"] = r.notes.num_orbits;
  orb["group_order"] = r.notes.group_order;
  orb["vertex_transitive"] = r.notes.vertex_transitive;
  orb["reduction_used"] = r.notes.orbit_reduction;
  j["orbits"] = orb;
  json sc;
  sc["diameter2"] = r.notes.diam2_shortcut;
  sc["spectral"] = r.notes.spectral_shortcut;
  sc["upper_start"] = r.notes.upper_start;
  sc["c_perron"] = num(r.notes.c_perron_full);
  sc["c_counting"] = num(r.notes.c_counting);
  j["shortcuts"] = sc;
  j["bisection_steps"] = r.notes.bisection_steps;
  j["lp_solves"] = r.notes.lp_solves;
  if (r.notes.counting_cross_check) j["counting_cross_check"] = *r.notes.counting_cross_check;
  if (r.certificate) {
    const auto& c = *r.certificate;
    json cj;
    cj["t_lo"] = format_rational(c.t_lo);
    cj["t_hi"] = format_rational(c.t_hi);
    cj["exact"] = c.exact;
    cj["minimizer"] = rationals(c.minimizer.weights());
    cj["dual"] = rationals(c.dual);
    json slack = json::array();
    for (std::size_t i = 0; i < c.slack.size(); ++i)
      slack.push_back({{"v", c.slack_rows[i].first}, {"k", c.slack_rows[i].second},
                       {"slack", format_rational(c.slack[i])}});
    cj["slack"] = slack;
    j["certificate"] = cj;
  }
  return j;
}

template <class Scalar>
json doubling(const DoublingReport<Scalar>& rep) {
  auto val = [](const Scalar& x) -> json {
    if constexpr (std::is_same_v<Scalar, Rational>)
      return format_rational(x);
    else
      return num(x);
  };
  json j;
  j["c_mu"] = val(rep.c_mu);
  j["attained_at"] = rep.attained_at;
  json per = json::array();
  for (const auto& rk : rep.per_k) per.push_back({{"k", rk.k}, {"value", val(rk.value)}, {"witness", rk.witness}});
  j["per_k"] = per;
  return j;
}

inline json spectral(const Graph& g, const SpectralResult& s) {
  json j;
  j["radius"] = num(s.radius);
  j["c0"] = num(1.0 + s.radius);
  j["eigvec"] = nums(s.eigvec);
  j["residual"] = num(s.residual);
  j["iterations"] = s.iterations;
  if (g.order() <= kChromaticCap) j["chromatic_number"] = chromatic_number(g);
  return j;
}

inline json classification(const Graph& g, const ClassificationVerdict& v) {
  json j;
  j["verdict"] = std::string(verdict_name(v.verdict));
  j["family_match"] = v.family_match ? json(v.family_match->name) : json(nullptr);
  j["reasons"] = v.reasons;
  if (auto r = structural_lower_bound(g))
    j["structural_lower_bound"] = {{"rule", std::string(rule_code(r->rule))}, {"text", r->text}};
  else
    j["structural_lower_bound"] = nullptr;
  if (v.numeric_cross_check) {
    json c;
    c["c_g"] = num(v.numeric_cross_check->c_g);
    c["t_lo"] = format_rational(v.numeric_cross_check->certificate->t_lo);
    c["t_hi"] = format_rational(v.numeric_cross_check->certificate->t_hi);
    c["position"] = std::string(position_name(*v.certified_position));
    c["agrees"] = *v.agrees;
    j["numeric_cross_check"] = c;
  }
  return j;
}

inline json expected(const ExpectedConstant& e) {
  json j;
  j["c_g"] = e.c_g ? num(*e.c_g) : json(nullptr);
  j["c0"] = num(e.c0);
  j["proven"] = std::string(provenance_name(e.proven));
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

inline json verify_row(const VerifyRow& r) {
  json j;
  j["criterion"] = r.criterion;
  j["name"] = r.name;
  j["measured"] = r.measured;
  j["expected"] = r.expected;
  j["tolerance"] = num(r.tolerance);
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json truncation(const TruncationRecord& r) {
  json j;
  j["depth"] = r.depth;
  j["vertices"] = r.vertices;
  j["c0"] = r.c0 ? num(*r.c0) : json(nullptr);
  j["c_counting_report"] = num(r.c_counting_report);
  return j;
}

/// Flat key: value lines of a JSON object (nested keys joined with '.').
inline void text_lines(const json& j, const std::string& prefix, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      text_lines(*it, key, out);
    else
      out << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
}

inline std::string as_text(const json& j) {
  std::ostringstream out;
  text_lines(j, "", out);
  return out.str();
}


inline void flatten_into(const json& j, const std::string& prefix, json& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      flatten_into(*it, key, out);
    else
      out[key] = *it;
  }
}

inline std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

/// Header plus one line per object, nested keys flattened with '.'; columns
/// from the first object.
inline std::string as_csv(const std::vector<json>& rows) {
  if (rows.empty()) return "";
  std::vector<json> flat;
  for (const auto& r : rows) {
    json f = json::object();
    flatten_into(r, "", f);
    flat.push_back(std::move(f));
  }
  std::ostringstream out;
  bool first = true;
  for (auto it = flat[0].begin(); it != flat[0].end(); ++it) {
    out << (first ? "" : ",") << it.key();
    first = false;
  }
  out << "\n";
  for (const auto& r : flat) {
    first = true;
    for (auto it = flat[0].begin(); it != flat[0].end(); ++it) {
      out << (first ? "" : ",") << (r.contains(it.key()) ? csv_cell(r[it.key()]) : "");
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace dublo::report

#endif  // DUBLO_TOOLS_REPORT_HPP

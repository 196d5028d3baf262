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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"

#include "dublo/classifier.hpp"
#include "dublo/error.hpp"
#include "dublo/families.hpp"
#include "dublo/graph.hpp"
#include "dublo/graph6.hpp"
#include "dublo/measure.hpp"
#include "dublo/optimizer.hpp"
#include "dublo/spectral.hpp"
#include "dublo/verify.hpp"

namespace {

using dublo::report::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSolver = 4;

struct RunConfig {
  double tol = 1e-9;
  double eig_tol = dublo::kDefaultEigenTolerance;
  bool certificate = false;
  std::size_t size_cap = dublo::default_size_cap();
  std::string output = "json";
  unsigned jobs = 1;

  void validate() const {
    if (!(tol > 0) || !(eig_tol > 0)) throw dublo::ValidationError("tolerances must be positive");
    if (size_cap < 2) throw dublo::ValidationError("size cap must be at least 2");
    if (jobs == 0) throw dublo::ValidationError("--jobs must be at least 1");
  }

  dublo::OptimizerOptions optimizer() const {
    dublo::OptimizerOptions o;
    o.tol = tol;
    o.eig_tol = eig_tol;
    o.certificate = certificate;
    return o;
  }
};

struct GraphSource {
  std::string input;
  std::string format;  // "", "g6", "edgelist"
  std::string family;
  int n = 0;
  int m = 0;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dublo::ValidationError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string resolve_format(const GraphSource& src) {
  if (!src.format.empty()) return src.format;
  const auto& p = src.input;
  if (p.size() > 3 && p.compare(p.size() - 3, 3, ".g6") == 0) return "g6";
  return "edgelist";
}

dublo::Graph load_graph(const GraphSource& src, const RunConfig& cfg) {
  if (!src.family.empty()) {
    if (!src.input.empty()) throw dublo::ValidationError("give either --input or --family, not both");
    return dublo::generate({dublo::parse_family(src.family), src.n, src.m}, cfg.size_cap);
  }
  if (src.input.empty()) throw dublo::ValidationError("no graph given: use --input or --family");
  const std::string text = read_all(src.input);
  if (resolve_format(src) == "g6") {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return dublo::parse_graph6(line, cfg.size_cap);
    }
    throw dublo::ParseError("graph6 input is empty");
  }
  return dublo::parse_edge_list(text, cfg.size_cap);
}

void merge(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = *it;
}

void emit(const json& j, const RunConfig& cfg, const std::vector<json>* rows = nullptr) {
  if (cfg.output == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    if (rows)
      std::cout << dublo::report::as_csv(*rows);
    else
      std::cout << dublo::report::as_csv({j});
  } else {
    if (rows)
      for (const auto& r : *rows) std::cout << dublo::report::as_text(r) << "\n";
    else
      std::cout << dublo::report::as_text(j);
  }
}

int cmd_compute(const GraphSource& src, const RunConfig& cfg, const std::string& measure_path) {
  const dublo::Graph g = load_graph(src, cfg);
  const auto res = dublo::least_doubling(g, cfg.optimizer());
  json j = dublo::report::envelope("compute");
  j["graph"] = dublo::report::graph_info(g, res.diameter);
  merge(j, dublo::report::optimization(res));
  if (!measure_path.empty()) {
    const auto mu = dublo::parse_measure(read_all(measure_path), g);
    j["measure"] = dublo::report::doubling(dublo::doubling_report(dublo::DistanceTable(g), mu));
  }
  emit(j, cfg);
  return 0;
}

int cmd_spectral(const GraphSource& src, const RunConfig& cfg) {
  const dublo::Graph g = load_graph(src, cfg);
  const auto s = dublo::perron(g, cfg.eig_tol);
  json j = dublo::report::envelope("spectral");
  j["graph"] = dublo::report::graph_info(g, dublo::DistanceTable(g).diameter());
  merge(j, dublo::report::spectral(g, s));
  emit(j, cfg);
  return 0;
}

int cmd_classify(const GraphSource& src, const RunConfig& cfg, bool cross_check) {
  const dublo::Graph g = load_graph(src, cfg);
  const auto v = dublo::classify_leq3(g, cfg.tol, cross_check);
  json j = dublo::report::envelope("classify");
  j["graph"] = dublo::report::graph_info(g, dublo::DistanceTable(g).diameter());
  merge(j, dublo::report::classification(g, v));
  emit(j, cfg);
  return 0;
}

int cmd_family(const GraphSource& src, const RunConfig& cfg) {
  if (src.family.empty()) throw dublo::ValidationError("family needs --family NAME");
  const dublo::FamilySpec spec{dublo::parse_family(src.family), src.n, src.m};
  const dublo::Graph g = dublo::generate(spec, cfg.size_cap);
  const std::string fmt = src.format.empty() ? "edgelist" : src.format;
  const std::string text = fmt == "g6" ? dublo::write_graph6(g) + "\n" : dublo::write_edge_list(g);
  json j = dublo::report::envelope("family");
  j["family"] = src.family;
  j["params"] = {{"n", src.n}, {"m", src.m}};
  j["graph"] = dublo::report::graph_info(g, dublo::DistanceTable(g).diameter());
  j["format"] = fmt;
  j["text"] = text;
  try {
    j["expected"] = dublo::report::expected(dublo::expected_constant(spec));
  } catch (const dublo::ValidationError&) {
    j["expected"] = nullptr;
  }
  if (cfg.output == "json") {
    emit(j, cfg);
  } else {
    std::cout << text;
    if (!j["expected"].is_null()) std::cout << dublo::report::as_text(j["expected"]);
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& only) {
  dublo::VerifyConfig vc;
  vc.tol = cfg.tol;
  vc.eig_tol = cfg.eig_tol;
  const auto rows = dublo::run_verify(vc, only.empty() ? std::nullopt : std::optional<std::string_view>(only));
  bool all = true;
  std::vector<json> out;
  for (const auto& r : rows) {
    all = all && r.pass;
    out.push_back(dublo::report::verify_row(r));
  }
  if (cfg.output == "text") {
    for (const auto& r : rows)
      std::cout << (r.pass ? "PASS " : "FAIL ") << "[" << r.criterion << "] " << r.name
                << ": measured " << r.measured << ", expected " << r.expected
                << (r.tolerance > 0 ? ", tol " + dublo::fmt12(r.tolerance) : std::string())
                << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
  } else {
    json j = dublo::report::envelope("verify");
    j["rows"] = out;
    j["all_pass"] = all;
    emit(j, cfg, &out);
  }
  return all ? 0 : kExitVerifyFailed;
}

json batch_row(std::size_t line, const dublo::Graph& g, const RunConfig& cfg) {
  auto opts = cfg.optimizer();
  const auto res = dublo::least_doubling(g, opts);
  const auto pe = dublo::check_perron_equality(g, cfg.tol, cfg.eig_tol);
  json r;
  r["line"] = line;
  r["graph6"] = dublo::write_graph6(g);
  r["n"] = g.order();
  r["diam"] = res.diameter;
  r["c0"] = dublo::report::num(res.lower_bound_spectral);
  r["c_g"] = dublo::report::num(res.c_g);
  r["gap"] = dublo::report::num(res.c_g - res.lower_bound_spectral);
  r["perron_attains_c0"] = pe.equal;
  return r;
}

int cmd_batch(const GraphSource& src, const RunConfig& cfg) {
  if (src.input.empty()) throw dublo::ValidationError("batch needs --input PATH|-");
  const std::string text = read_all(src.input);
  struct Item {
    std::size_t line;
    std::string record;
    std::optional<json> row;
    std::string error;
  };
  std::vector<Item> items;
  {
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line == ">>graph6<<") continue;
      items.push_back({no, line, std::nullopt, ""});
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      Item& it = items[i];
      try {
        it.row = batch_row(it.line, dublo::parse_graph6(it.record, cfg.size_cap), cfg);
      } catch (const std::exception& e) {
        it.error = e.what();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(items.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<json> rows;
  json errors = json::array();
  for (const auto& it : items) {
    if (it.row) {
      rows.push_back(*it.row);
    } else {
      errors.push_back({{"line", it.line}, {"message", it.error}});
      std::cerr << "line " << it.line << ": skipped: " << it.error << "\n";
    }
  }
  if (cfg.output == "json") {
    json j = dublo::report::envelope("batch");
    j["rows"] = rows;
    j["malformed"] = errors.size();
    j["errors"] = errors;
    emit(j, cfg);
  } else {
    emit(json::object(), cfg, &rows);
  }
  if (!errors.empty()) std::cerr << errors.size() << " malformed line(s) skipped\n";
  return 0;
}

std::vector<int> parse_depths(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dash = tok.find('-', 1);
    try {
      if (dash != std::string::npos) {
        const int lo = std::stoi(tok.substr(0, dash)), hi = std::stoi(tok.substr(dash + 1));
        for (int d = lo; d <= hi; ++d) out.push_back(d);
      } else {
        out.push_back(std::stoi(tok));
      }
    } catch (const std::logic_error&) {
      throw dublo::ParseError("bad depth list '" + spec + "'");
    }
  }
  if (out.empty()) throw dublo::ParseError("empty depth list");
  return out;
}

int cmd_truncate(const std::string& kind, const std::string& depths, const RunConfig& cfg) {
  const auto k = dublo::parse_truncation_kind(kind);
  const auto recs = dublo::truncation_study(k, parse_depths(depths), cfg.size_cap);
  std::vector<json> rows;
  for (const auto& r : recs) rows.push_back(dublo::report::truncation(r));
  json j = dublo::report::envelope("truncate");
  j["kind"] = kind;
  j["rows"] = rows;
  emit(j, cfg, &rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dublo: least doubling constants of finite graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value configuration file (flags win)");

  RunConfig cfg;
  std::optional<std::size_t> size_cap;
  app.add_option("--tol", cfg.tol, "bisection tolerance")->capture_default_str();
  app.add_option("--eig-tol", cfg.eig_tol, "eigen residual tolerance")->capture_default_str();
  app.add_flag("--certificate", cfg.certificate, "exact rational certificate");
  app.add_option("--size-cap", size_cap, "maximum vertex count (default $DUBLO_SIZE_CAP or 512)");
  app.add_option("--output", cfg.output, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "batch worker count")->capture_default_str();

  GraphSource src;
  auto add_source = [&](CLI::App* sub, bool with_family) {
    sub->add_option("--input", src.input, "graph file, or - for stdin");
    sub->add_option("--format", src.format, "g6 or edgelist")->check(CLI::IsMember({"g6", "edgelist"}));
    if (with_family) {
      sub->add_option("--family", src.family, "named family instead of --input");
      sub->add_option("--n", src.n, "family size parameter");
      sub->add_option("--m", src.m, "second family parameter");
    }
  };

  std::string measure_path, only, kind, depths;
  bool cross_check = false;
  auto* compute = app.add_subcommand("compute", "least doubling constant with method notes");
  add_source(compute, true);
  compute->add_option("--measure", measure_path, "also report C_mu of this measure");
  auto* spectral = app.add_subcommand("spectral", "spectral radius, Perron vector, C_G^0");
  add_source(spectral, true);
  auto* classify = app.add_subcommand("classify", "position of C_G relative to 3");
  add_source(classify, true);
  classify->add_flag("--cross-check", cross_check, "confirm with the exact optimizer certificate");
  auto* family = app.add_subcommand("family", "generate a named graph and its expected constant");
  add_source(family, true);
  auto* verify = app.add_subcommand("verify", "run the reproduction checks");
  verify->add_option("--only", only, "run a single row")
      ->check(CLI::IsMember(dublo::verify_row_names()));
  auto* batch = app.add_subcommand("batch", "one graph6 record per line");
  add_source(batch, false);
  auto* truncate = app.add_subcommand("truncate", "finite truncations of infinite graphs");
  truncate->add_option("--kind", kind, "path_N, path_Z, d_infinity or grid_ray")->required();
  truncate->add_option("--depths", depths, "comma list, ranges allowed (2-10,16)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (size_cap) cfg.size_cap = *size_cap;
    cfg.validate();
    if (*compute) return cmd_compute(src, cfg, measure_path);
    if (*spectral) return cmd_spectral(src, cfg);
    if (*classify) return cmd_classify(src, cfg, cross_check);
    if (*family) return cmd_family(src, cfg);
    if (*verify) return cmd_verify(cfg, only);
    if (*batch) return cmd_batch(src, cfg);
    if (*truncate) return cmd_truncate(kind, depths, cfg);
  } catch (const dublo::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const dublo::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const dublo::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// wsat: weak saturation toolkit. Subcommands: invariants, exact, bounds,
// gamma, construct, rhosat, kk-verify, table, verify-all. Every JSON output
// embeds the exact configuration (seed, caps, version) for replay; CSV
// output carries the same as a leading comment line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsat/acceptance.hpp"
#include "wsat/bounds.hpp"
#include "wsat/constructions.hpp"
#include "wsat/corpus.hpp"
#include "wsat/json_io.hpp"
#include "wsat/rhosat.hpp"
#include "wsat/wsat_engine.hpp"

#ifndef WSAT_VERSION
#define WSAT_VERSION "unversioned"
#endif

namespace {

using wsat::json;

struct GlobalConfig {
  uint64_t seed = 1;
  int workers = 1;
  std::string format = "json";  // json|csv where applicable
  long long cap_override = 0;   // from WSAT_CAP_OVERRIDE, 0 = none
};

json config_json(const GlobalConfig& g, const std::string& command,
                 const json& args) {
  json c;
  c["command"] = command;
  c["args"] = args;
  c["seed"] = g.seed;
  c["workers"] = g.workers;
  c["version"] = WSAT_VERSION;
  if (g.cap_override > 0) c["cap_override"] = g.cap_override;
  return c;
}

void emit(const GlobalConfig& g, const std::string& command, const json& args,
          const json& result, const std::string& out_path) {
  json envelope;
  envelope["config"] = config_json(g, command, args);
  envelope["result"] = result;
  if (out_path.empty()) {
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << envelope.dump(2) << "\n";
  }
}

wsat::WsatOptions engine_options(const GlobalConfig& g, bool symmetry,
                                 long long lower_bound) {
  wsat::WsatOptions o;
  o.symmetry = symmetry;
  o.workers = g.workers;
  o.seed = g.seed;
  o.lower_bound = lower_bound;
  if (g.cap_override > 0) o.level_cap = static_cast<long double>(g.cap_override);
  return o;
}

json rational_json(const wsat::Rational& v) { return v.to_string(); }

json certificate_json(const wsat::SaturationCertificate& cert) {
  json j;
  j["initial"] = wsat::hypergraph_to_json(cert.initial);
  j["steps"] = json::array();
  for (const wsat::CertStep& s : cert.steps) {
    json step;
    step["edge"] = s.edge;
    step["pattern"] = s.pattern_index;
    // Host images of the pattern's covered vertices, listed ascending.
    step["embedding"] = s.embedding;
    j["steps"].push_back(step);
  }
  return j;
}

json bound_report_json(const wsat::BoundReport& b) {
  json j;
  j["name"] = b.name;
  j["value"] = b.value.to_string();
  if (b.n >= 0) j["n"] = b.n;
  j["formula"] = b.formula;
  if (!b.witness.empty()) j["witness"] = b.witness;
  return j;
}

std::vector<wsat::BoundReport> collect_bounds(const wsat::Hypergraph& h,
                                              long long n, bool with_eta,
                                              const GlobalConfig& g) {
  std::vector<wsat::BoundReport> out;
  const int r = h.uniformity();
  for (int m = 0; m < r; ++m) {
    if (wsat::delta_m(h, m) < 1) continue;
    wsat::BoundReport b;
    b.name = "trivial_m" + std::to_string(m);
    b.value = wsat::lb_trivial(h, m, n);
    b.n = n;
    b.formula = "(delta_m - 1)/C(r,m) * C(n,m)";
    out.push_back(b);
  }
  if (wsat::delta_star(h) >= 1) {
    wsat::BoundReport b;
    b.name = "delta_star";
    b.value = wsat::lb_delta_star(h, n);
    b.n = n;
    b.formula = "(delta/r - 1/C(r+delta-1,r-1)) * C(n,r-1)";
    out.push_back(b);
  }
  if (wsat::sparseness(h) >= 2 && h.edge_count() <= 20) {
    wsat::BoundReport b;
    b.name = "gamma";
    b.value = wsat::lb_gamma(h, n);
    b.n = n;
    b.formula = "gamma_{s,H} * (C(n,s-1) - |shadow_{s-1}(H)|) + |E(H)| - 1";
    out.push_back(b);
  }
  if (with_eta && wsat::sparseness(h) >= 2) {
    wsat::EtaReport er = wsat::eta(h, -1, engine_options(g, true, 0));
    auto [lo, hi] = wsat::eta_bounds(h, n, er);
    out.push_back(lo);
    out.push_back(hi);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run_verify_all(const GlobalConfig& g, const std::string& corpus_dir,
                   const std::string& out_path) {
  json items = json::array();
  bool all_pass = true;

  wsat::AcceptanceOptions opts;
  opts.workers = g.workers;
  opts.seed = g.seed;
  wsat::run_acceptance(opts, [&](const wsat::CriterionResult& r) {
    json item;
    item["kind"] = "criterion";
    item["id"] = r.id;
    item["name"] = r.name;
    item["pass"] = r.pass;
    item["details"] = r.details;
    item["seconds"] = r.seconds;
    items.push_back(item);
    all_pass = all_pass && r.pass;
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name
              << " (" << r.details << ")\n";
  });

  if (!corpus_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      json item;
      item["kind"] = "corpus";
      item["file"] = path.filename().string();
      bool pass = true;
      std::string details;
      try {
        std::ifstream in(path);
        json doc;
        in >> doc;
        wsat::Hypergraph h = wsat::hypergraph_from_json(doc);
        if (doc.contains("expected")) {
          const json& exp = doc["expected"];
          if (exp.contains("sparseness") &&
              wsat::sparseness(h) != exp["sparseness"].get<int>()) {
            pass = false;
            details += "sparseness mismatch; ";
          }
          if (exp.contains("delta_star") &&
              wsat::delta_star(h) != exp["delta_star"].get<long long>()) {
            pass = false;
            details += "delta_star mismatch; ";
          }
          if (exp.contains("gamma")) {
            wsat::Rational expected =
                wsat::Rational::parse(exp["gamma"].get<std::string>());
            if (wsat::gamma_subgraph(h, wsat::sparseness(h)).value !=
                expected) {
              pass = false;
              details += "gamma mismatch; ";
            }
          }
          if (exp.contains("wsat")) {
            for (const auto& [key, val] : exp["wsat"].items()) {
              int n = std::stoi(key);
              wsat::Family fam({h});
              long long got =
                  wsat_exact(n, fam,
                             engine_options(g, true,
                                            wsat::best_lower_bound(h, n)))
                      .value;
              if (got != val.get<long long>()) {
                pass = false;
                details += "wsat(" + key + ") mismatch; ";
              }
            }
          }
        }
      } catch (const std::exception& e) {
        pass = false;
        details = e.what();
      }
      item["pass"] = pass;
      if (!details.empty()) item["details"] = details;
      items.push_back(item);
      all_pass = all_pass && pass;
      std::cerr << (pass ? "[PASS] " : "[FAIL] ") << path.filename().string()
                << (details.empty() ? "" : " (" + details + ")") << "\n";
    }
  }

  json result;
  result["items"] = items;
  result["all_pass"] = all_pass;
  json args;
  args["corpus"] = corpus_dir;
  emit(g, "verify-all", args, result, out_path);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak saturation toolkit"};
  app.require_subcommand(1);

  GlobalConfig g;
  if (const char* env = std::getenv("WSAT_CAP_OVERRIDE")) {
    g.cap_override = std::atoll(env);
  }
  app.add_option("--seed", g.seed, "seed recorded in outputs and used by randomized tie-shuffles");
  app.add_option("--workers", g.workers, "worker threads for partitioned scans");
  app.add_option("--format", g.format, "output format: json or csv (table)");

  std::string out_path;
  app.add_option("--out", out_path, "write the JSON envelope to this file");

  // --- invariants ---------------------------------------------------------
  auto* inv = app.add_subcommand("invariants", "basic invariants of a hypergraph");
  std::string inv_input;
  inv->add_option("--input", inv_input, "hypergraph JSON file")->required();

  // --- exact --------------------------------------------------------------
  auto* exact = app.add_subcommand("exact", "exact weak saturation number");
  int exact_n = 0;
  std::string exact_pattern;
  std::vector<std::string> exact_family;
  bool exact_no_sym = false, exact_sym = false;
  std::string exact_cert;
  exact->add_option("--n", exact_n, "host size")->required();
  exact->add_option("--pattern", exact_pattern, "pattern JSON")->required();
  exact->add_option("--family", exact_family, "additional family patterns");
  exact->add_flag("--sym", exact_sym, "symmetry reduction (default on)");
  exact->add_flag("--no-sym", exact_no_sym, "disable symmetry reduction");
  exact->add_option("--cert", exact_cert, "write the replay certificate here");

  // --- bounds -------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "lower bounds for a pattern");
  std::string bounds_pattern;
  long long bounds_n = 0;
  bool bounds_all = false;
  bounds->add_option("--pattern", bounds_pattern)->required();
  bounds->add_option("--n", bounds_n)->required();
  bounds->add_flag("--all", bounds_all, "include the eta-based bounds");

  // --- gamma --------------------------------------------------------------
  auto* gamma = app.add_subcommand("gamma", "gamma quantities of a pattern");
  std::string gamma_pattern, gamma_form = "both";
  int gamma_graph = -1;
  gamma->add_option("--pattern", gamma_pattern)->required();
  gamma->add_option("--form", gamma_form, "subgraph|shadow|both");
  gamma->add_option("--graph-m", gamma_graph, "also gamma^m for graphs");

  // --- construct ----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "extremal constructions");
  std::string c_kind, c_base, c_out_h = "construct_out.json", c_pattern;
  int c_r = 0, c_s = 0, c_k = 0, c_delta = 0, c_n = 0, c_z = -1;
  std::vector<int> c_p;
  bool c_check = false;
  construct->add_option("--kind", c_kind, "example-delta|example-s|host|shell")
      ->required();
  construct->add_option("--r", c_r);
  construct->add_option("--s", c_s);
  construct->add_option("--k", c_k);
  construct->add_option("--delta", c_delta);
  construct->add_option("--n", c_n);
  construct->add_option("--z", c_z, "kernel size for shell hosts");
  construct->add_option("--base", c_base, "base hypergraph JSON");
  construct->add_option("--p", c_p, "P as vertex list");
  construct->add_option("--write", c_out_h, "output hypergraph file");
  construct->add_option("--pattern", c_pattern, "pattern JSON (shell check)");
  construct->add_flag("--check", c_check, "run the closure check");

  // --- rhosat ---------------------------------------------------------------
  auto* rhosat = app.add_subcommand("rhosat", "optimal polymatroidal bound");
  std::string rho_pattern, rho_emit, rho_trend, rho_params;
  int rho_n = 0;
  bool rho_float = false, rho_exact = false;
  rhosat->add_option("--pattern", rho_pattern)->required();
  rhosat->add_option("--n", rho_n);
  rhosat->add_flag("--exact", rho_exact, "exact rational solver (default)");
  rhosat->add_flag("--float", rho_float, "inexact exploratory solver");
  rhosat->add_option("--emit-lp", rho_emit, "dump all LP rows as JSON");
  rhosat->add_option("--trend", rho_trend, "n range A:B for a trend table");
  rhosat->add_option("--params", rho_params,
                     "count-params JSON: check the polymatroid as a feasible "
                     "point instead of solving");

  // --- kk-verify ------------------------------------------------------------
  auto* kk = app.add_subcommand("kk-verify", "exhaustive shadow-bound check");
  int kk_n = 0, kk_r = 0, kk_m = 0;
  long long kk_e = 0;
  kk->add_option("--n", kk_n)->required();
  kk->add_option("--r", kk_r)->required();
  kk->add_option("--e", kk_e)->required();
  kk->add_option("--m", kk_m)->required();

  // --- table ----------------------------------------------------------------
  auto* table = app.add_subcommand("table", "wsat and bound table as CSV");
  std::string table_pattern;
  int table_from = 0, table_to = 0;
  bool table_rhosat = false;
  table->add_option("--pattern", table_pattern)->required();
  table->add_option("--n-from", table_from)->required();
  table->add_option("--n-to", table_to)->required();
  table->add_flag("--rhosat", table_rhosat, "include rhosat when within caps");

  // --- verify-all -----------------------------------------------------------
  auto* verify = app.add_subcommand("verify-all", "acceptance criteria plus corpus expectations");
  std::string verify_corpus;
  verify->add_option("--corpus", verify_corpus, "directory of hypergraph JSON files");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      wsat::Hypergraph h = wsat::load_hypergraph(inv_input);
      json res;
      res["n"] = h.vertex_count();
      res["r"] = h.uniformity();
      res["edge_count"] = h.edge_count();
      res["sparseness"] = wsat::sparseness(h);
      res["delta_star"] = wsat::delta_star(h);
      json deltas = json::array();
      json shadows = json::array();
      for (int m = 0; m <= h.uniformity(); ++m) {
        deltas.push_back(wsat::delta_m(h, m));
        shadows.push_back(wsat::shadow_size(h, m));
      }
      res["delta_m"] = deltas;
      res["shadow_sizes"] = shadows;
      int s = wsat::sparseness(h);
      if (s >= 2 && h.edge_count() <= 20) {
        res["gamma"] = wsat::gamma_subgraph(h, s).value.to_string();
      }
      if (h.uniformity() == 2 && !h.is_empty() &&
          static_cast<int>(h.support().size()) == h.vertex_count()) {
        res["gamma_graph_1"] = wsat::gamma_graph_m(h, 1).value.to_string();
        if (h.vertex_count() >= 3) {
          res["gamma_graph_2"] = wsat::gamma_graph_m(h, 2).value.to_string();
        }
      }
      json args;
      args["input"] = inv_input;
      emit(g, "invariants", args, res, out_path);
    } else if (*exact) {
      std::vector<wsat::Hypergraph> patterns;
      patterns.push_back(wsat::load_hypergraph(exact_pattern));
      for (const std::string& f : exact_family) {
        patterns.push_back(wsat::load_hypergraph(f));
      }
      wsat::Family fam(patterns);
      long long lb = wsat::best_lower_bound(fam, exact_n);
      wsat::WsatResult r =
          wsat_exact(exact_n, fam, engine_options(g, !exact_no_sym, lb));
      json res;
      res["value"] = r.value;
      res["witness"] = wsat::hypergraph_to_json(r.witness);
      res["lower_bound_used"] = lb;
      res["candidates_tested"] = r.candidates_tested;
      res["closures_run"] = r.closures_run;
      if (!exact_cert.empty()) {
        std::ofstream certout(exact_cert);
        certout << certificate_json(r.certificate).dump(2) << "\n";
        res["certificate_file"] = exact_cert;
      }
      json args;
      args["n"] = exact_n;
      args["pattern"] = exact_pattern;
      args["family"] = exact_family;
      args["symmetry"] = !exact_no_sym;
      emit(g, "exact", args, res, out_path);
    } else if (*bounds) {
      wsat::Hypergraph h = wsat::load_hypergraph(bounds_pattern);
      std::vector<wsat::BoundReport> reports =
          collect_bounds(h, bounds_n, bounds_all, g);
      json args;
      args["pattern"] = bounds_pattern;
      args["n"] = bounds_n;
      if (g.format == "csv") {
        std::cout << "# " << config_json(g, "bounds", args).dump() << "\n";
        std::cout << "name,value,n,formula\n";
        for (const auto& b : reports) {
          std::cout << b.name << "," << b.value.to_string() << "," << b.n
                    << "," << csv_escape(b.formula) << "\n";
        }
      } else {
        json res = json::array();
        for (const auto& b : reports) res.push_back(bound_report_json(b));
        emit(g, "bounds", args, res, out_path);
      }
    } else if (*gamma) {
      wsat::Hypergraph h = wsat::load_hypergraph(gamma_pattern);
      int s = wsat::sparseness(h);
      json res;
      res["sparseness"] = s;
      if (s >= 2) {
        if (gamma_form == "subgraph" || gamma_form == "both") {
          wsat::GammaSubgraphResult r = wsat::gamma_subgraph(h, s);
          res["gamma_subgraph"] = r.value.to_string();
          res["witness_subgraph"] = wsat::hypergraph_to_json(r.witness);
        }
        if (gamma_form == "shadow" || gamma_form == "both") {
          wsat::GammaShadowResult r = wsat::gamma_shadow(h, s);
          res["gamma_shadow"] = r.value.to_string();
          res["witness_shadow"] = r.witness;
        }
      } else {
        res["note"] = "gamma is defined only for sparseness >= 2";
      }
      if (gamma_graph >= 0 && h.uniformity() == 2) {
        wsat::GammaGraphResult r = wsat::gamma_graph_m(h, gamma_graph);
        res["gamma_graph_m"] = r.value.to_string();
        res["witness_vertices"] = r.witness;
      }
      json args;
      args["pattern"] = gamma_pattern;
      args["form"] = gamma_form;
      emit(g, "gamma", args, res, out_path);
    } else if (*construct) {
      json res;
      json args;
      args["kind"] = c_kind;
      if (c_kind == "example-delta") {
        wsat::Hypergraph base =
            wsat::Hypergraph::complete(c_r - 1 + c_delta, c_r);
        std::vector<wsat::Vertex> p(base.vertex_count());
        std::iota(p.begin(), p.end(), 0);
        wsat::ConstructionH c = wsat::build_construction_H(base, p);
        res["s"] = c.s;
        res["delta"] = c.delta;
        res["coefficient"] = c.coefficient.to_string();
        res["stages"] = c.stages.size();
        if (c.pattern_union) {
          wsat::save_hypergraph(*c.pattern_union, c_out_h);
          res["pattern_file"] = c_out_h;
        } else {
          res["note"] = "pattern union exceeds 64 vertices; family only";
        }
      } else if (c_kind == "example-s") {
        wsat::ArbitrarySparsenessBase b =
            wsat::corollary_s_arbitrary_G(c_r, c_s, c_k);
        wsat::save_hypergraph(b.g, c_out_h);
        res["delta"] = b.delta;
        res["p"] = b.p;
        res["file"] = c_out_h;
      } else if (c_kind == "host") {
        wsat::Hypergraph base = wsat::load_hypergraph(c_base);
        wsat::SaturatedHost host = wsat::build_saturated_host(base, c_p, c_n);
        wsat::save_hypergraph(host.host, c_out_h);
        res["file"] = c_out_h;
        res["edges"] = host.host.edge_count();
        res["measured_coefficient"] = host.measured_coefficient.to_string();
        res["target_coefficient"] = host.target_coefficient.to_string();
        res["cover_blocks"] = host.cover.blocks.size();
        if (c_check) {
          wsat::ClosureResult cl =
              wsat::closure(host.host, host.construction.family());
          res["closes"] =
              cl.closed == wsat::Hypergraph::complete(c_n, base.uniformity());
        }
      } else if (c_kind == "shell") {
        wsat::Hypergraph base =
            c_base.empty() ? wsat::Hypergraph::empty(c_n, c_r)
                           : wsat::load_hypergraph(c_base);
        std::optional<wsat::Hypergraph> pattern;
        if (!c_pattern.empty()) pattern = wsat::load_hypergraph(c_pattern);
        wsat::Hypergraph shell = wsat::shell_host(
            c_n, c_r, c_s, c_z, base, pattern ? &*pattern : nullptr);
        wsat::save_hypergraph(shell, c_out_h);
        res["file"] = c_out_h;
        res["edges"] = shell.edge_count();
        if (c_check && pattern) {
          wsat::ClosureResult cl =
              wsat::closure(shell, wsat::Family({*pattern}));
          res["closes"] = cl.closed == wsat::Hypergraph::complete(c_n, c_r);
        }
      } else {
        throw std::invalid_argument("construct: unknown --kind " + c_kind);
      }
      emit(g, "construct", args, res, out_path);
    } else if (*rhosat) {
      wsat::Hypergraph h = wsat::load_hypergraph(rho_pattern);
      wsat::RhosatOptions opts;
      opts.use_float = rho_float;
      json res;
      json args;
      args["pattern"] = rho_pattern;
      args["float"] = rho_float;
      if (!rho_params.empty()) {
        wsat::CountParams params = wsat::load_count_params(rho_params);
        wsat::FeasibilityReport fr =
            wsat::check_count_poly_feasible(h, rho_n, params, 200, g.seed);
        res["feasible"] = fr.feasible;
        res["rows_checked"] = fr.rows_checked;
        if (!fr.first_violation.empty()) {
          res["first_violation"] = fr.first_violation;
        }
        if (fr.bound_available) res["certified_bound"] = fr.bound.to_string();
        args["n"] = rho_n;
        args["params"] = rho_params;
      } else if (!rho_trend.empty()) {
        auto colon = rho_trend.find(':');
        int from = std::stoi(rho_trend.substr(0, colon));
        int to = std::stoi(rho_trend.substr(colon + 1));
        wsat::RhosatTrend t = wsat::rhosat_trend(h, from, to, opts);
        res["trend"] = json::array();
        for (const auto& row : t.rows) {
          json r;
          r["n"] = row.n;
          r["rhosat"] = row.value.to_string();
          r["normalized"] = row.normalized.to_string();
          res["trend"].push_back(r);
        }
        res["annotation"] = t.annotation;
        args["trend"] = rho_trend;
      } else {
        wsat::RhosatResult r = wsat::solve_rhosat(h, rho_n, opts);
        res["value"] = r.value.to_string();
        res["exact"] = r.exact;
        res["verified"] = r.verified;
        res["lp_rows"] = r.lp_rows;
        res["orbits"] = r.orbits;
        res["reduced_rows"] = r.reduced_rows;
        res["pivots"] = r.pivots;
        json support = json::object();
        for (const auto& [k, v] : r.support) support[k] = v.to_string();
        res["support"] = support;
        args["n"] = rho_n;
        if (!rho_emit.empty()) {
          wsat::SetFunctionLP lp(h, rho_n,
                                 rho_float ? opts.float_max_edges
                                           : opts.exact_max_edges);
          std::ofstream lpout(rho_emit);
          lpout << "{\"rows\":[";
          bool first = true;
          lp.for_each_row([&](const wsat::SetFunctionLP::Row& row) {
            if (!first) lpout << ",";
            first = false;
            json jr;
            jr["lhs"] = json::array();
            for (const auto& [mask, coeff] : row.terms) {
              jr["lhs"].push_back({mask, coeff});
            }
            jr["rel"] = row.rel == wsat::Rel::kLe   ? "<="
                        : row.rel == wsat::Rel::kGe ? ">="
                                                    : "=";
            jr["rhs"] = row.rhs;
            switch (row.tag) {
              case wsat::SetFunctionLP::Tag::kEmptyZero:
                jr["tag"] = "empty-zero";
                break;
              case wsat::SetFunctionLP::Tag::kSingletonCap:
                jr["tag"] = "singleton-cap";
                break;
              case wsat::SetFunctionLP::Tag::kMonotone:
                jr["tag"] = "elementary-monotone";
                break;
              case wsat::SetFunctionLP::Tag::kSubmodular:
                jr["tag"] = "elementary-submodular";
                break;
              case wsat::SetFunctionLP::Tag::kSaturation:
                jr["tag"] = "saturation";
                break;
            }
            lpout << jr.dump();
          });
          lpout << "]}\n";
          res["lp_file"] = rho_emit;
        }
      }
      emit(g, "rhosat", args, res, out_path);
    } else if (*kk) {
      wsat::KkVerifyReport rep =
          wsat::verify_kk_exhaustive(kk_n, kk_r, kk_e, kk_m, g.workers);
      json res;
      res["params"] = {{"n", kk_n}, {"r", kk_r}, {"e", kk_e}, {"m", kk_m}};
      res["bound"] = rep.bound;
      res["min_found"] = rep.min_found;
      res["witness"] = wsat::hypergraph_to_json(rep.witness);
      res["pass"] = rep.pass;
      json args = res["params"];
      emit(g, "kk-verify", args, res, out_path);
    } else if (*table) {
      wsat::Hypergraph h = wsat::load_hypergraph(table_pattern);
      json args;
      args["pattern"] = table_pattern;
      args["n_from"] = table_from;
      args["n_to"] = table_to;
      std::cout << "# " << config_json(g, "table", args).dump() << "\n";
      std::cout << "n,wsat,lb_trivial_best,lb_delta_star,lb_gamma,rhosat\n";
      for (int n = table_from; n <= table_to; ++n) {
        wsat::Family fam({h});
        long long lb = wsat::best_lower_bound(h, n);
        long long value =
            wsat_exact(n, fam, engine_options(g, true, lb)).value;
        wsat::Rational best_trivial(0);
        for (int m = 0; m < h.uniformity(); ++m) {
          if (wsat::delta_m(h, m) >= 1) {
            best_trivial =
                std::max(best_trivial, wsat::lb_trivial(h, m, n));
          }
        }
        std::string ds = wsat::delta_star(h) >= 1
                             ? wsat::lb_delta_star(h, n).to_string()
                             : "";
        std::string gam = wsat::sparseness(h) >= 2
                              ? wsat::lb_gamma(h, n).to_string()
                              : "";
        std::string rho;
        if (table_rhosat && wsat::binom(n, h.uniformity()) <= 12) {
          rho = wsat::solve_rhosat(h, n).value.to_string();
        }
        std::cout << n << "," << value << "," << best_trivial.to_string()
                  << "," << ds << "," << gam << "," << rho << "\n";
      }
    } else if (*verify) {
      return run_verify_all(g, verify_corpus, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

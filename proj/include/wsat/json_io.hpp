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

#ifndef WSAT_JSON_IO_HPP_
#define WSAT_JSON_IO_HPP_

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsat/count_polymatroid.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

using json = nlohmann::json;

// Hypergraph wire format:
//   {"n": int, "r": int, "edges": [[int, ...], ...], "label": string?}
// The file must already be in canonical form: every edge strictly ascending
// and the edge list strictly lexicographically increasing. Anything else is
// rejected, so equal hypergraphs have bit-identical files.

inline json hypergraph_to_json(const Hypergraph& h) {
  json j;
  j["n"] = h.vertex_count();
  j["r"] = h.uniformity();
  j["edges"] = json::array();
  for (const Edge& e : h.edges()) j["edges"].push_back(e);
  if (!h.label().empty()) j["label"] = h.label();
  return j;
}

inline Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") ||
      !j.contains("edges")) {
    throw std::invalid_argument(
        "hypergraph: expected {\"n\", \"r\", \"edges\"}");
  }
  int n = j.at("n").get<int>();
  int r = j.at("r").get<int>();
  std::vector<Edge> edges;
  for (const auto& je : j.at("edges")) {
    Edge e = je.get<Edge>();
    for (size_t i = 1; i < e.size(); ++i) {
      if (e[i - 1] >= e[i]) {
        throw std::invalid_argument(
            "hypergraph: edge vertices must be strictly ascending");
      }
    }
    if (!edges.empty() && !(edges.back() < e)) {
      throw std::invalid_argument(
          "hypergraph: edge list must be strictly increasing (canonical "
          "form)");
    }
    edges.push_back(std::move(e));
  }
  std::string label = j.value("label", "");
  return Hypergraph(n, r, std::move(edges), label);
}

inline Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return hypergraph_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline void save_hypergraph(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << hypergraph_to_json(h).dump(2) << "\n";
}

// CountParams wire format: {"r": 2, "a": ["-3/1", "2/1", "0/1"]} with
// rationals as "num/den" strings.

inline json count_params_to_json(const CountParams& p) {
  json j;
  j["r"] = p.r;
  j["a"] = json::array();
  for (const Rational& x : p.a) j["a"].push_back(x.to_string());
  return j;
}

inline CountParams count_params_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("a")) {
    throw std::invalid_argument("count params: expected {\"r\", \"a\"}");
  }
  int r = j.at("r").get<int>();
  std::vector<Rational> a;
  for (const auto& jx : j.at("a")) {
    a.push_back(Rational::parse(jx.get<std::string>()));
  }
  return CountParams(r, std::move(a));
}

inline CountParams load_count_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return count_params_from_json(j);
}

}  // namespace wsat

#endif  // WSAT_JSON_IO_HPP_

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

#ifndef WSAT_CORPUS_HPP_
#define WSAT_CORPUS_HPP_

#include <map>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

// Every non-empty r-uniform hypergraph without isolated vertices on up to
// max_vertices vertices, one per isomorphism class, relabelled onto its
// support. Deterministic order: by vertex count, then edge count, then edge
// list.
inline std::vector<Hypergraph> small_corpus(int r, int max_vertices) {
  std::map<std::string, Hypergraph> classes;
  long long total_edges = binom(max_vertices, r);
  for (long long e = 1; e <= total_edges; ++e) {
    HypergraphEnumerator en(max_vertices, r, e, /*iso_filter=*/true, 1e7L);
    while (auto h = en.next()) {
      Hypergraph s = h->restricted_to_support();
      classes.emplace(canonical_key(s), std::move(s));
    }
  }
  std::vector<Hypergraph> out;
  out.reserve(classes.size());
  for (auto& [key, h] : classes) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count()) {
      return a.vertex_count() < b.vertex_count();
    }
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return a.edges() < b.edges();
  });
  return out;
}

}  // namespace wsat

#endif  // WSAT_CORPUS_HPP_

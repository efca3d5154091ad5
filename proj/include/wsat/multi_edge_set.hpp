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

#ifndef WSAT_MULTI_EDGE_SET_HPP_
#define WSAT_MULTI_EDGE_SET_HPP_

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

// A subset of the edges of q * K_n^r: each edge carries a multiplicity in
// 1..q. The ground object of count matroids.
class MultiEdgeSet {
 public:
  MultiEdgeSet(int n, int r, long long q, std::map<Edge, long long> entries)
      : n_(n), r_(r), q_(q), entries_(std::move(entries)) {
    if (q < 1) throw std::invalid_argument("MultiEdgeSet: q must be >= 1");
    for (auto& [e, mult] : entries_) {
      if (mult < 1 || mult > q_) {
        throw std::invalid_argument("MultiEdgeSet: multiplicity outside 1..q");
      }
    }
    (void)underlying();  // validates edges against (n, r)
  }

  // The multiplied set G^{(q)}: every edge of g with multiplicity q.
  static MultiEdgeSet multiply(const Hypergraph& g, long long q) {
    std::map<Edge, long long> entries;
    for (const Edge& e : g.edges()) entries[e] = q;
    return MultiEdgeSet(g.vertex_count(), g.uniformity(), q,
                        std::move(entries));
  }

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  long long multiplicity_cap() const { return q_; }
  const std::map<Edge, long long>& entries() const { return entries_; }

  // The projection pi: the underlying simple hypergraph.
  Hypergraph underlying() const {
    std::vector<Edge> edges;
    edges.reserve(entries_.size());
    for (const auto& [e, mult] : entries_) edges.push_back(e);
    return Hypergraph(n_, r_, std::move(edges));
  }

  // Total number of elements, counted with multiplicity.
  long long total_size() const {
    long long t = 0;
    for (const auto& [e, mult] : entries_) t += mult;
    return t;
  }

 private:
  int n_;
  int r_;
  long long q_;
  std::map<Edge, long long> entries_;
};

}  // namespace wsat

#endif  // WSAT_MULTI_EDGE_SET_HPP_

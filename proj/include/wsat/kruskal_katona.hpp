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

#ifndef WSAT_KRUSKAL_KATONA_HPP_
#define WSAT_KRUSKAL_KATONA_HPP_

#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wsat/binom.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

// The left-compressed hypergraph with e edges: the canonical shadow
// minimizer. Recursively, with k the largest integer such that
// C(k, r) <= e and m = e - C(k, r): the complete r-graph on k vertices,
// plus (when m > 0) the edges of the left-compressed (r-1)-graph with m
// edges lifted through one extra vertex. Vertices are 0-based, so the
// lifting vertex is index k.
inline Hypergraph left_compressed(int r, long long e) {
  if (r < 1 || e < 1) {
    throw std::invalid_argument("left_compressed: need r >= 1 and e >= 1");
  }
  if (r == 1) {
    std::vector<Edge> edges;
    for (int v = 0; v < e; ++v) edges.push_back({v});
    return Hypergraph(static_cast<int>(e), 1, std::move(edges));
  }
  long long k = largest_k_with_binom_at_most(r, e);
  long long m = e - binom(k, r);
  Hypergraph base = Hypergraph::complete(static_cast<int>(k), r);
  if (m == 0) return base;
  Hypergraph rec = left_compressed(r - 1, m);
  std::vector<Edge> edges = base.edges();
  for (const Edge& u : rec.edges()) {
    Edge lifted = u;
    lifted.push_back(static_cast<int>(k));
    edges.push_back(lifted);
  }
  return Hypergraph(static_cast<int>(k) + 1, r, std::move(edges));
}

// The universal lower bound on the m-shadow size of any e-edge r-uniform
// hypergraph: the shadow size of the left-compressed hypergraph.
inline long long kk_shadow_bound(int r, long long e, int m) {
  if (m < 1 || m > r) {
    throw std::invalid_argument("kk_shadow_bound: need 1 <= m <= r");
  }
  return shadow_size(left_compressed(r, e), m);
}

struct KkVerifyReport {
  int n, r, m;
  long long e;
  long long bound;      // kk_shadow_bound(r, e, m)
  long long min_found;  // minimum shadow size over the enumeration
  Hypergraph witness;   // a hypergraph attaining min_found
  bool pass;            // min_found >= bound
};

// Exhaustively checks the shadow bound over every e-edge r-uniform
// hypergraph on [n]. The enumeration space is split across workers; the
// merged result is the (min shadow, lexicographically first witness) pair,
// independent of thread timing.
inline KkVerifyReport verify_kk_exhaustive(int n, int r, long long e, int m,
                                           int workers = 1,
                                           long double cap = 1e7L) {
  if (m < 1 || m > r) {
    throw std::invalid_argument("verify_kk_exhaustive: need 1 <= m <= r");
  }
  long long total_edges = binom(n, r);
  if (e < 1 || e > total_edges) {
    throw std::invalid_argument("verify_kk_exhaustive: e out of range");
  }
  long double size = enumeration_size(n, r, e);
  if (size > cap) {
    throw CapExceeded("verify_kk_exhaustive: about " +
                      std::to_string(static_cast<double>(size)) +
                      " hypergraphs exceed the cap");
  }

  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<Edge> all_edges;
  for_each_subset_of(ids, r, [&](const Edge& edge) {
    all_edges.push_back(edge);
  });

  const long long total = binom(total_edges, e);  // exact; cap-checked above
  struct Local {
    long long best = -1;
    long long best_rank = -1;
  };
  if (workers < 1) workers = 1;
  workers = std::min<long long>(workers, std::max<long long>(1, total));
  std::vector<Local> locals(workers);

  auto run = [&](int w) {
    long long begin = total * w / workers;
    long long end = total * (w + 1) / workers;
    if (begin >= end) return;
    std::vector<int> comb =
        combination_unrank(begin, static_cast<int>(total_edges),
                           static_cast<int>(e));
    Local& loc = locals[w];
    for (long long rank = begin; rank < end; ++rank) {
      std::vector<Edge> edges;
      edges.reserve(comb.size());
      for (int idx : comb) edges.push_back(all_edges[idx]);
      Hypergraph h(n, r, std::move(edges));
      long long s = shadow_size(h, m);
      if (loc.best == -1 || s < loc.best) {
        loc.best = s;
        loc.best_rank = rank;
      }
      if (rank + 1 < end) next_combination(comb, static_cast<int>(total_edges));
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  long long best = -1, best_rank = -1;
  for (const Local& loc : locals) {
    if (loc.best == -1) continue;
    if (best == -1 || loc.best < best ||
        (loc.best == best && loc.best_rank < best_rank)) {
      best = loc.best;
      best_rank = loc.best_rank;
    }
  }

  std::vector<int> comb = combination_unrank(
      best_rank, static_cast<int>(total_edges), static_cast<int>(e));
  std::vector<Edge> wedges;
  for (int idx : comb) wedges.push_back(all_edges[idx]);
  Hypergraph witness(n, r, std::move(wedges));

  KkVerifyReport rep;
  rep.n = n;
  rep.r = r;
  rep.e = e;
  rep.m = m;
  rep.bound = kk_shadow_bound(r, e, m);
  rep.min_found = best;
  rep.witness = witness;
  rep.pass = best >= rep.bound;
  return rep;
}

}  // namespace wsat

#endif  // WSAT_KRUSKAL_KATONA_HPP_

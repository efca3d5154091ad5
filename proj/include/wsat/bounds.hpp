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

#ifndef WSAT_BOUNDS_HPP_
#define WSAT_BOUNDS_HPP_

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wsat/hypergraph.hpp"
#include "wsat/rational.hpp"
#include "wsat/wsat_engine.hpp"

namespace wsat {

// A computed bound with its provenance; every minimization also returns a
// witness that re-evaluates to the reported value.
struct BoundReport {
  std::string name;
  Rational value;
  long long n = -1;  // -1 when not n-dependent
  std::string formula;
  std::string witness;
};

namespace detail {

inline void require_gamma_preconditions(const Hypergraph& h, int s) {
  if (h.uniformity() < 2) {
    throw std::invalid_argument("gamma: uniformity must be >= 2");
  }
  if (s < 2) throw std::invalid_argument("gamma: s must be >= 2");
  if (sparseness(h) != s) {
    throw std::invalid_argument("gamma: s must equal the sparseness of H");
  }
}

}  // namespace detail

struct GammaSubgraphResult {
  Rational value;
  Hypergraph witness;  // minimizing subgraph G
};

// gamma_{s,H} as a minimum over non-empty edge subsets G of H with strictly
// smaller (s-1)-shadow:
//   (|E(H)| - |E(G)| - 1) / (|shadow_{s-1}(H)| - |shadow_{s-1}(G)|).
// Exhaustive over 2^|E(H)| subsets; ties resolved toward the
// lexicographically least witness edge-index set.
inline GammaSubgraphResult gamma_subgraph(const Hypergraph& h, int s,
                                          int max_edges = 22) {
  detail::require_gamma_preconditions(h, s);
  const auto& edges = h.edges();
  const int m = static_cast<int>(edges.size());
  if (m > max_edges) {
    throw CapExceeded("gamma_subgraph: " + std::to_string(m) +
                      " edges exceed cap " + std::to_string(max_edges));
  }
  std::vector<uint64_t> sh = shadow_masks(h, s - 1);
  const int t = static_cast<int>(sh.size());
  if (t > 64) {
    throw CapExceeded("gamma_subgraph: shadow larger than 64 elements");
  }
  // Per-edge bitmask over shadow elements.
  std::vector<uint64_t> edge_sh(m, 0);
  for (int j = 0; j < m; ++j) {
    for_each_subset_of(edges[j], s - 1, [&](const Edge& u) {
      uint64_t um = edge_mask(u);
      int pos = static_cast<int>(
          std::lower_bound(sh.begin(), sh.end(), um) - sh.begin());
      edge_sh[j] |= uint64_t{1} << pos;
    });
  }
  std::optional<Rational> best;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    uint64_t cover = 0;
    for (uint32_t w = mask; w;) {
      int j = __builtin_ctz(w);
      w &= w - 1;
      cover |= edge_sh[j];
    }
    int sub_shadow = __builtin_popcountll(cover);
    if (sub_shadow >= t) continue;
    Rational ratio(m - __builtin_popcount(mask) - 1, t - sub_shadow);
    if (!best || ratio < *best ||
        (ratio == *best && lower_index_set(mask, best_mask))) {
      best = ratio;
      best_mask = mask;
    }
  }
  if (!best) throw std::logic_error("gamma_subgraph: no admissible subgraph");
  std::vector<Edge> witness_edges;
  for (int j = 0; j < m; ++j) {
    if ((best_mask >> j) & 1) witness_edges.push_back(edges[j]);
  }
  return {*best, Hypergraph(h.vertex_count(), h.uniformity(), witness_edges)};
}

struct GammaShadowResult {
  Rational value;
  std::vector<Edge> witness;  // minimizing shadow subset S
};

// The equivalent shadow-subset form of gamma_{s,H}: the minimum over
// non-empty S inside the (s-1)-shadow with |shadow \ S| >= C(r, s-1) of
//   (#{edges whose (s-1)-subsets meet S} - 1) / |S|.
inline GammaShadowResult gamma_shadow(const Hypergraph& h, int s,
                                      int max_shadow = 22) {
  detail::require_gamma_preconditions(h, s);
  std::vector<uint64_t> sh = shadow_masks(h, s - 1);
  const int t = static_cast<int>(sh.size());
  if (t > max_shadow) {
    throw CapExceeded("gamma_shadow: shadow size " + std::to_string(t) +
                      " exceeds cap " + std::to_string(max_shadow));
  }
  const auto& edges = h.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 64) throw CapExceeded("gamma_shadow: more than 64 edges");
  // Per-shadow-element bitmask over edges.
  std::vector<uint64_t> elem_edges(t, 0);
  for (int j = 0; j < m; ++j) {
    for_each_subset_of(edges[j], s - 1, [&](const Edge& u) {
      uint64_t um = edge_mask(u);
      int pos = static_cast<int>(
          std::lower_bound(sh.begin(), sh.end(), um) - sh.begin());
      elem_edges[pos] |= uint64_t{1} << j;
    });
  }
  const long long slack = binom(h.uniformity(), s - 1);
  std::optional<Rational> best;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << t); ++mask) {
    int size = __builtin_popcount(mask);
    if (t - size < slack) continue;
    uint64_t touched = 0;
    for (uint32_t w = mask; w;) {
      int i = __builtin_ctz(w);
      w &= w - 1;
      touched |= elem_edges[i];
    }
    Rational ratio(__builtin_popcountll(touched) - 1, size);
    if (!best || ratio < *best ||
        (ratio == *best && lower_index_set(mask, best_mask))) {
      best = ratio;
      best_mask = mask;
    }
  }
  if (!best) throw std::logic_error("gamma_shadow: no admissible subset");
  std::vector<Edge> witness;
  for (int i = 0; i < t; ++i) {
    if ((best_mask >> i) & 1) witness.push_back(mask_edge(sh[i]));
  }
  std::sort(witness.begin(), witness.end());
  return {*best, witness};
}

struct GammaGraphResult {
  Rational value;
  std::vector<Vertex> witness;  // minimizing vertex set U
};

// The graph quantity gamma^m_H: minimum over non-empty vertex sets U leaving
// at least m vertices outside of (#{edges meeting U} - 1) / |U|.
inline GammaGraphResult gamma_graph_m(const Hypergraph& h, int m) {
  if (h.uniformity() != 2) {
    throw std::invalid_argument("gamma_graph_m: graphs only (r = 2)");
  }
  if (h.is_empty()) throw std::invalid_argument("gamma_graph_m: empty graph");
  const int n = h.vertex_count();
  if (static_cast<int>(h.support().size()) != n) {
    throw std::invalid_argument("gamma_graph_m: isolated vertices present");
  }
  if (m < 0 || m >= n) {
    throw std::invalid_argument("gamma_graph_m: need 0 <= m < |V(H)|");
  }
  std::vector<uint64_t> vertex_edges(n, 0);
  const auto& edges = h.edges();
  for (size_t j = 0; j < edges.size(); ++j) {
    for (Vertex v : edges[j]) vertex_edges[v] |= uint64_t{1} << j;
  }
  std::optional<Rational> best;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (n - size < m) continue;
    uint64_t touched = 0;
    for (uint32_t w = mask; w;) {
      int v = __builtin_ctz(w);
      w &= w - 1;
      touched |= vertex_edges[v];
    }
    Rational ratio(__builtin_popcountll(touched) - 1, size);
    if (!best || ratio < *best ||
        (ratio == *best && lower_index_set(mask, best_mask))) {
      best = ratio;
      best_mask = mask;
    }
  }
  GammaGraphResult res;
  res.value = *best;
  for (int v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1) res.witness.push_back(v);
  }
  return res;
}

// Lower bound gamma_{s,H} * (C(n, s-1) - |shadow_{s-1}(H)|) + |E(H)| - 1.
inline Rational lb_gamma(const Hypergraph& h, long long n) {
  int s = sparseness(h);
  if (s < 2) throw std::invalid_argument("lb_gamma: requires sparseness >= 2");
  if (n < h.vertex_count()) {
    throw std::invalid_argument("lb_gamma: n < |V(H)|");
  }
  Rational gamma = gamma_subgraph(h, s).value;
  return gamma * Rational(binom(n, s - 1) - shadow_size(h, s - 1)) +
         Rational(h.edge_count() - 1);
}

// Lower bound (delta/r - 1/C(r+delta-1, r-1)) * C(n, r-1) with
// delta = delta*(H).
inline Rational lb_delta_star(const Hypergraph& h, long long n) {
  long long delta = delta_star(h);
  if (delta < 1) throw std::invalid_argument("lb_delta_star: delta* < 1");
  if (n < h.vertex_count()) {
    throw std::invalid_argument("lb_delta_star: n < |V(H)|");
  }
  int r = h.uniformity();
  Rational coeff = Rational(delta, r) - Rational(1, binom(r + delta - 1, r - 1));
  return coeff * Rational(binom(n, r - 1));
}

// Lower bound (delta_m - 1) / C(r, m) * C(n, m).
inline Rational lb_trivial(const Hypergraph& h, int m, long long n) {
  long long dm = delta_m(h, m);
  if (dm < 1) throw std::invalid_argument("lb_trivial: delta_m < 1");
  if (n < h.vertex_count()) {
    throw std::invalid_argument("lb_trivial: n < |V(H)|");
  }
  return Rational(dm - 1, binom(h.uniformity(), m)) * Rational(binom(n, m));
}

struct GammaDeltaReport {
  Rational gamma;  // gamma_{r,H}
  Rational rhs;    // delta/r - 1/C(r+delta-1, r-1)
  bool holds = false;
};

// Exact check of gamma_{r,H} >= delta*/r - 1/C(r+delta*-1, r-1); requires
// delta* >= 2, which forces s(H) = r.
inline GammaDeltaReport verify_gamma_delta_inequality(const Hypergraph& h) {
  int r = h.uniformity();
  if (r < 2) throw std::invalid_argument("gamma-delta check: r must be >= 2");
  long long delta = delta_star(h);
  if (delta < 2) {
    throw std::invalid_argument("gamma-delta check: delta* must be >= 2");
  }
  GammaDeltaReport rep;
  rep.gamma = gamma_subgraph(h, r).value;
  rep.rhs = Rational(delta, r) - Rational(1, binom(r + delta - 1, r - 1));
  rep.holds = rep.gamma >= rep.rhs;
  return rep;
}

// ---------------------------------------------------------------------------
// eta(H): the limiting weak saturation number of the family of (s-1)-links

struct EtaReport {
  long long value = 0;
  bool exact = false;
  std::string status;
  long long n_evaluated = -1;  // last n used when computed by search
};

// For s(H) = r the value is exactly delta*(H) - 1. Otherwise the link
// family's wsat is evaluated at n = |V|max..n_cap; the sequence is
// nonincreasing and eventually constant, but no finite stopping rule
// certifies the limit, so the final value is flagged as an upper bound.
inline EtaReport eta(const Hypergraph& h, int n_cap = -1,
                     const WsatOptions& opts = {}) {
  if (h.is_empty()) throw std::invalid_argument("eta: empty hypergraph");
  const int r = h.uniformity();
  const int s = sparseness(h);
  EtaReport rep;
  if (h.edge_count() == 1) {
    // Single-edge patterns close everything from nothing.
    rep.value = 0;
    rep.exact = true;
    rep.status = "exact: single-edge pattern";
    return rep;
  }
  if (s == r) {
    rep.value = delta_star(h) - 1;
    rep.exact = true;
    rep.status = "exact: s(H) = r, eta = delta* - 1";
    return rep;
  }
  // Link family over the (s-1)-shadow, deduplicated up to isomorphism.
  std::vector<Hypergraph> links;
  std::set<std::string> seen;
  for (const Edge& u : shadow(h, s - 1)) {
    Hypergraph l = link(h, u).restricted_to_support();
    if (seen.insert(canonical_key(l)).second) links.push_back(l);
  }
  Family fam(links);
  int n0 = fam.max_pattern_vertices();
  if (n_cap < 0) n_cap = n0 + 3;
  if (n_cap < n0) throw std::invalid_argument("eta: n_cap below pattern size");
  long long prev = std::numeric_limits<long long>::max();
  for (int n = n0; n <= n_cap; ++n) {
    WsatOptions o = opts;
    o.lower_bound = 0;
    long long v = wsat_exact(n, fam, o).value;
    if (v > prev) throw std::logic_error("eta: wsat sequence increased");
    prev = v;
  }
  rep.value = prev;
  rep.exact = false;
  rep.status = "upper bound: link-family wsat at n_cap, sequence nonincreasing";
  rep.n_evaluated = n_cap;
  return rep;
}

// Lower and upper estimates from eta: eta/C(r, s-1) * C(n, s-1) below, and
// eta * C(n, s-1) as the leading term of the upper construction.
inline std::pair<BoundReport, BoundReport> eta_bounds(const Hypergraph& h,
                                                      long long n,
                                                      const EtaReport& er) {
  const int r = h.uniformity();
  const int s = sparseness(h);
  if (s < 2) throw std::invalid_argument("eta_bounds: requires s >= 2");
  if (n < h.vertex_count()) {
    throw std::invalid_argument("eta_bounds: n < |V(H)|");
  }
  BoundReport lower;
  lower.name = "eta_lower";
  lower.value = Rational(er.value, binom(r, s - 1)) * Rational(binom(n, s - 1));
  lower.n = n;
  lower.formula = "eta(H)/C(r,s-1) * C(n,s-1)";
  lower.witness = er.status;
  BoundReport upper;
  upper.name = "eta_upper";
  upper.value = Rational(er.value) * Rational(binom(n, s - 1));
  upper.n = n;
  upper.formula = "eta(H) * C(n,s-1), leading term only";
  upper.witness = er.status;
  return {lower, upper};
}

// ---------------------------------------------------------------------------
// Conjectured bound probe

struct ProbeEntry {
  std::string key;  // canonical key of the pattern
  Rational gamma;
  Rational slack;  // gamma - rhs; negative would be a counterexample
};

struct ProbeReport {
  int r = 0, s = 0, k = 0;
  long long delta = 0;
  Rational rhs;
  std::vector<ProbeEntry> entries;
  long long violations = 0;
  std::optional<Rational> min_slack;
};

// Evaluates gamma_{s,H} >= delta/C(r,s-1) - 1/C(k,s-1) over every corpus
// pattern with sparseness s and delta_{s-1} = C(k-s+1, r-s+1). A negative
// slack entry would be a counterexample to the conjectured bound.
inline ProbeReport conjecture_probe(int r, int s, int k,
                                    const std::vector<Hypergraph>& corpus) {
  if (r < 2 || s < 2 || s > r || k < r + 1) {
    throw std::invalid_argument("conjecture_probe: need r >= s >= 2, k >= r+1");
  }
  ProbeReport rep;
  rep.r = r;
  rep.s = s;
  rep.k = k;
  rep.delta = binom(k - s + 1, r - s + 1);
  rep.rhs = Rational(rep.delta, binom(r, s - 1)) - Rational(1, binom(k, s - 1));
  for (const Hypergraph& h : corpus) {
    if (h.uniformity() != r || h.is_empty()) continue;
    if (sparseness(h) != s) continue;
    if (delta_m(h, s - 1) != rep.delta) continue;
    Rational gamma;
    if (h.edge_count() <= 20) {
      gamma = gamma_subgraph(h, s).value;
    } else {
      gamma = gamma_shadow(h, s).value;
    }
    // Canonical keys are capped at 10-vertex supports; larger patterns get a
    // structural summary.
    std::string key =
        static_cast<int>(h.support().size()) <= kMaxCanonicalVertices
            ? canonical_key(h)
            : std::to_string(h.vertex_count()) + "v" +
                  std::to_string(h.edge_count()) + "e" +
                  (h.label().empty() ? "" : ":" + h.label());
    ProbeEntry entry{key, gamma, gamma - rep.rhs};
    if (entry.slack < Rational(0)) ++rep.violations;
    if (!rep.min_slack || entry.slack < *rep.min_slack) {
      rep.min_slack = entry.slack;
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Best available lower bound, used to seed the exact search

inline long long best_lower_bound(const Hypergraph& h, long long n) {
  if (h.is_empty()) return 0;
  long long best = h.edge_count() - 1 > 0 ? 1 : 0;  // wsat >= 0 trivially
  const int r = h.uniformity();
  for (int m = 0; m < r; ++m) {
    long long dm = delta_m(h, m);
    if (dm >= 1) best = std::max(best, lb_trivial(h, m, n).ceil());
  }
  if (delta_star(h) >= 1) {
    best = std::max(best, lb_delta_star(h, n).ceil());
  }
  if (sparseness(h) >= 2 && h.edge_count() <= 20) {
    best = std::max(best, lb_gamma(h, n).ceil());
  }
  return std::max<long long>(best, 0);
}

// For a family only the codegree bounds remain valid (with the minimum
// delta_m over the members); the gamma machinery is single-pattern.
inline long long best_lower_bound(const Family& fam, long long n) {
  if (fam.patterns.size() == 1) return best_lower_bound(fam.patterns[0], n);
  const int r = fam.uniformity();
  long long best = 0;
  for (int m = 0; m <= r - 1; ++m) {
    long long dm = std::numeric_limits<long long>::max();
    for (const Hypergraph& h : fam.patterns) dm = std::min(dm, delta_m(h, m));
    if (dm >= 1) {
      Rational b = Rational(dm - 1, binom(r, m)) * Rational(binom(n, m));
      best = std::max(best, b.ceil());
    }
  }
  return best;
}

}  // namespace wsat

#endif  // WSAT_BOUNDS_HPP_

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

#ifndef WSAT_HYPERGRAPH_HPP_
#define WSAT_HYPERGRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wsat/binom.hpp"
#include "wsat/combinatorics.hpp"

namespace wsat {

using Vertex = int;
using Edge = std::vector<Vertex>;  // strictly increasing vertex list

// Vertex sets fit one machine word; the whole library assumes this.
constexpr int kMaxVertices = 64;

// Thrown when a configured enumeration or brute-force cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline uint64_t edge_mask(const Edge& e) {
  uint64_t m = 0;
  for (Vertex v : e) m |= uint64_t{1} << v;
  return m;
}

inline Edge mask_edge(uint64_t m) {
  Edge e;
  while (m) {
    int v = __builtin_ctzll(m);
    e.push_back(v);
    m &= m - 1;
  }
  return e;
}

// An r-uniform hypergraph on vertex set {0, ..., n-1}. Edges are stored
// sorted and deduplicated in lexicographic order, so structurally equal
// hypergraphs compare and serialize identically. Uniformity r = 0 is allowed
// internally (the only possible edge is the empty set) so that links of
// r-subsets are representable; ordinary inputs have r >= 1.
class Hypergraph {
 public:
  Hypergraph() : n_(0), r_(1) {}

  Hypergraph(int n, int r, std::vector<Edge> edges, std::string label = "")
      : n_(n), r_(r), label_(std::move(label)) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("Hypergraph: vertex count must be in 0..64");
    }
    if (r < 0) throw std::invalid_argument("Hypergraph: negative uniformity");
    for (Edge& e : edges) {
      std::sort(e.begin(), e.end());
      if (static_cast<int>(e.size()) != r) {
        throw std::invalid_argument("Hypergraph: edge of wrong size");
      }
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw std::invalid_argument("Hypergraph: repeated vertex in edge");
      }
      if (!e.empty() && (e.front() < 0 || e.back() >= n)) {
        throw std::invalid_argument("Hypergraph: vertex out of range");
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  static Hypergraph complete(int n, int r) {
    std::vector<Edge> edges;
    if (r >= 0 && r <= n) {
      std::vector<int> ids(n);
      std::iota(ids.begin(), ids.end(), 0);
      for_each_subset_of(ids, r, [&](const Edge& e) { edges.push_back(e); });
    }
    return Hypergraph(n, r, std::move(edges));
  }

  static Hypergraph empty(int n, int r) { return Hypergraph(n, r, {}); }

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  const std::vector<Edge>& edges() const { return edges_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  bool is_empty() const { return edges_.empty(); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  std::vector<uint64_t> edge_masks() const {
    std::vector<uint64_t> m;
    m.reserve(edges_.size());
    for (const Edge& e : edges_) m.push_back(edge_mask(e));
    return m;
  }

  // Vertices covered by at least one edge, ascending.
  std::vector<Vertex> support() const {
    uint64_t m = 0;
    for (const Edge& e : edges_) m |= edge_mask(e);
    return mask_edge(m);
  }

  // Relabels the covered vertices to 0..v-1 and drops isolated ones.
  Hypergraph restricted_to_support() const {
    std::vector<Vertex> sup = support();
    std::vector<int> newid(n_, -1);
    for (size_t i = 0; i < sup.size(); ++i) newid[sup[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const Edge& e : edges_) {
      Edge f(e.size());
      for (size_t i = 0; i < e.size(); ++i) f[i] = newid[e[i]];
      edges.push_back(std::move(f));
    }
    return Hypergraph(static_cast<int>(sup.size()), r_, std::move(edges),
                      label_);
  }

  // Applies a vertex permutation (perm[old] = new) and recanonicalizes.
  Hypergraph relabel(const std::vector<int>& perm) const {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const Edge& e : edges_) {
      Edge f(e.size());
      for (size_t i = 0; i < e.size(); ++i) f[i] = perm[e[i]];
      edges.push_back(std::move(f));
    }
    return Hypergraph(n_, r_, std::move(edges), label_);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int r_;
  std::vector<Edge> edges_;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Shadows, links, codegrees

// Masks of the m-subsets of vertices contained in at least one edge, sorted
// by mask value.
inline std::vector<uint64_t> shadow_masks(const Hypergraph& g, int m) {
  if (m < 0 || m > g.uniformity()) {
    throw std::invalid_argument("shadow: m out of range 0..r");
  }
  std::vector<uint64_t> masks;
  for (const Edge& e : g.edges()) {
    for_each_subset_of(e, m, [&](const Edge& u) {
      masks.push_back(edge_mask(u));
    });
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

// All m-subsets of vertices contained in at least one edge, canonically
// ordered. shadow(G, r) is E(G); shadow(G, 0) is {{}} for non-empty G.
inline std::vector<Edge> shadow(const Hypergraph& g, int m) {
  std::vector<Edge> out;
  for (uint64_t mk : shadow_masks(g, m)) out.push_back(mask_edge(mk));
  std::sort(out.begin(), out.end());
  return out;
}

inline long long shadow_size(const Hypergraph& g, int m) {
  return static_cast<long long>(shadow_masks(g, m).size());
}

// Link hypergraph: residues e \ u over edges e containing u; uniformity
// r - |u|. u must be a set of at most r distinct vertices.
inline Hypergraph link(const Hypergraph& g, const Edge& u) {
  Edge su = u;
  std::sort(su.begin(), su.end());
  if (std::adjacent_find(su.begin(), su.end()) != su.end()) {
    throw std::invalid_argument("link: repeated vertex in u");
  }
  if (static_cast<int>(su.size()) > g.uniformity()) {
    throw std::invalid_argument("link: |u| exceeds uniformity");
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (std::includes(e.begin(), e.end(), su.begin(), su.end())) {
      Edge residue;
      std::set_difference(e.begin(), e.end(), su.begin(), su.end(),
                          std::back_inserter(residue));
      out.push_back(std::move(residue));
    }
  }
  return Hypergraph(g.vertex_count(), g.uniformity() - static_cast<int>(su.size()),
                    std::move(out));
}

// Number of edges containing u (the size of the link), without materializing.
inline long long link_size(const Hypergraph& g, const Edge& u) {
  uint64_t um = edge_mask(u);
  long long cnt = 0;
  for (const Edge& e : g.edges()) {
    if ((edge_mask(e) & um) == um) ++cnt;
  }
  return cnt;
}

// Minimum size of a non-empty link over m-subsets of vertices; -1 for an
// empty hypergraph. delta_m(H, 0) = |E(H)| and delta_m(H, r) = 1 for
// non-empty H.
inline long long delta_m(const Hypergraph& h, int m) {
  if (m < 0 || m > h.uniformity()) {
    throw std::invalid_argument("delta_m: m out of range 0..r");
  }
  if (h.is_empty()) return -1;
  std::vector<uint64_t> masks = h.edge_masks();
  long long best = -1;
  std::vector<int> ids(h.vertex_count());
  std::iota(ids.begin(), ids.end(), 0);
  for_each_subset_of(ids, m, [&](const Edge& u) {
    uint64_t um = edge_mask(u);
    long long sz = 0;
    for (uint64_t em : masks) {
      if ((em & um) == um) ++sz;
    }
    if (sz > 0 && (best == -1 || sz < best)) best = sz;
  });
  return best;
}

// Minimum positive codegree: delta_{r-1}. Zero for an empty hypergraph.
inline long long delta_star(const Hypergraph& h) {
  if (h.is_empty()) return 0;
  return delta_m(h, h.uniformity() - 1);
}

// Size of the smallest vertex subset contained in exactly one edge, computed
// as the least m with delta_m = 1; -1 for an empty hypergraph.
inline int sparseness(const Hypergraph& h) {
  if (h.is_empty()) return -1;
  for (int m = 0; m <= h.uniformity(); ++m) {
    if (delta_m(h, m) == 1) return m;
  }
  // Unreachable: every edge, as an r-subset, lies in exactly one edge.
  throw std::logic_error("sparseness: no m with delta_m = 1");
}

// f_{r,delta}(G) = delta * |shadow_{r-1}(G)| - r * |E(G)|. Also evaluated as
// the sum over shadow elements of (delta - link size); both forms must agree.
inline long long f_r_delta(const Hypergraph& g, long long delta) {
  if (delta < 1) throw std::invalid_argument("f_r_delta: delta must be >= 1");
  std::vector<uint64_t> sh = shadow_masks(g, g.uniformity() - 1);
  std::vector<uint64_t> edges = g.edge_masks();
  long long closed = delta * static_cast<long long>(sh.size()) -
                     g.uniformity() * g.edge_count();
  long long summed = 0;
  for (uint64_t um : sh) {
    long long links = 0;
    for (uint64_t em : edges) {
      if ((em & um) == um) ++links;
    }
    summed += delta - links;
  }
  if (closed != summed) throw std::logic_error("f_r_delta: forms disagree");
  return closed;
}

// Vertex-disjoint union: parts are placed on consecutive vertex blocks.
inline Hypergraph disjoint_union(const std::vector<Hypergraph>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("disjoint_union: empty part list");
  }
  int r = parts[0].uniformity();
  long long total = 0;
  for (const Hypergraph& p : parts) {
    if (p.uniformity() != r) {
      throw std::invalid_argument("disjoint_union: mixed uniformities");
    }
    total += p.vertex_count();
  }
  if (total > kMaxVertices) {
    throw CapExceeded("disjoint_union: " + std::to_string(total) +
                      " vertices exceed the 64-vertex cap");
  }
  std::vector<Edge> edges;
  int offset = 0;
  for (const Hypergraph& p : parts) {
    for (const Edge& e : p.edges()) {
      Edge f(e.size());
      for (size_t i = 0; i < e.size(); ++i) f[i] = e[i] + offset;
      edges.push_back(std::move(f));
    }
    offset += p.vertex_count();
  }
  return Hypergraph(static_cast<int>(total), r, std::move(edges));
}

// ---------------------------------------------------------------------------
// Canonical form and isomorphism (exhaustive permutation minimization)

constexpr int kMaxCanonicalVertices = 10;

// Minimal edge-mask list over all relabellings of the support. Isolated
// vertices are dropped first, so the result identifies the isomorphism class
// of the support-restricted hypergraph. Returned in canonical edge order.
inline std::vector<Edge> canonical_edges(const Hypergraph& h) {
  Hypergraph s = h.restricted_to_support();
  int v = s.vertex_count();
  if (v > kMaxCanonicalVertices) {
    throw CapExceeded("canonical_edges: support of " + std::to_string(v) +
                      " vertices exceeds the exhaustive-labelling cap of 10");
  }
  std::vector<uint64_t> base = s.edge_masks();
  std::sort(base.begin(), base.end());
  std::vector<uint64_t> best = base;
  std::vector<uint64_t> cand(base.size());
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (size_t i = 0; i < base.size(); ++i) {
      uint64_t out = 0;
      for (uint64_t m = base[i]; m;) {
        int b = __builtin_ctzll(m);
        m &= m - 1;
        out |= uint64_t{1} << perm[b];
      }
      cand[i] = out;
    }
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = cand;
  }
  std::vector<Edge> out;
  out.reserve(best.size());
  for (uint64_t m : best) out.push_back(mask_edge(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string canonical_key(const Hypergraph& h) {
  std::string key = std::to_string(h.uniformity()) + "u";
  key += std::to_string(h.restricted_to_support().vertex_count()) + "v:";
  for (const Edge& e : canonical_edges(h)) {
    for (Vertex v : e) key += static_cast<char>('a' + v);
    key += ',';
  }
  return key;
}

// Isomorphism of the support-restricted hypergraphs.
inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_edges(a) == canonical_edges(b);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of e-edge hypergraphs on [n]

inline long double enumeration_size(int n, int r, long long e) {
  long long total = binom(n, r);
  if (e > total) return 0.0L;
  long double res = 1.0L;
  for (long long i = 1; i <= e; ++i) {
    res *= static_cast<long double>(total - e + i) / static_cast<long double>(i);
  }
  return res;
}

// Yields every e-edge r-uniform hypergraph on [n] exactly once, in
// lexicographic order of edge-index sets. With iso_filter, yields one
// representative per isomorphism class (first in enumeration order).
class HypergraphEnumerator {
 public:
  HypergraphEnumerator(int n, int r, long long e, bool iso_filter = false,
                       long double cap = 1e7L)
      : n_(n), r_(r), e_(e), iso_filter_(iso_filter) {
    if (e < 0 || e > binom(n, r)) {
      throw std::invalid_argument("HypergraphEnumerator: e out of range");
    }
    long double size = enumeration_size(n, r, e);
    if (size > cap) {
      throw CapExceeded("HypergraphEnumerator: about " + std::to_string(
                            static_cast<double>(size)) +
                        " hypergraphs exceed the cap of " +
                        std::to_string(static_cast<double>(cap)));
    }
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for_each_subset_of(ids, r, [&](const Edge& edge) {
      all_edges_.push_back(edge);
    });
    comb_ = first_combination(static_cast<int>(e));
    done_ = false;
  }

  std::optional<Hypergraph> next() {
    while (!done_) {
      std::vector<Edge> edges;
      edges.reserve(comb_.size());
      for (int idx : comb_) edges.push_back(all_edges_[idx]);
      Hypergraph h(n_, r_, std::move(edges));
      if (!next_combination(comb_, static_cast<int>(all_edges_.size()))) {
        done_ = true;
      }
      if (iso_filter_) {
        if (!seen_.insert(canonical_key(h)).second) continue;
      }
      return h;
    }
    return std::nullopt;
  }

 private:
  int n_;
  int r_;
  long long e_;
  bool iso_filter_;
  bool done_ = true;
  std::vector<Edge> all_edges_;
  std::vector<int> comb_;
  std::unordered_set<std::string> seen_;
};

}  // namespace wsat

#endif  // WSAT_HYPERGRAPH_HPP_

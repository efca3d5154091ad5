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

#ifndef WSAT_COUNT_POLYMATROID_HPP_
#define WSAT_COUNT_POLYMATROID_HPP_

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsat/count_matroid.hpp"
#include "wsat/embedding.hpp"
#include "wsat/rational.hpp"

namespace wsat {

// Rational coefficient vector for the count polymatroid M(n, r, a). q is the
// least positive integer clearing all denominators; the polymatroid value of
// G is the rank of G^{(q)} in the integer count matroid with coefficients
// q*a, divided by q.
struct CountParams {
  int r;
  std::vector<Rational> a;  // size r + 1
  long long q;
  Rational p;  // a_0 + sum_{i>=1} a_i * C(r, i)

  CountParams(int r_, std::vector<Rational> a_) : r(r_), a(std::move(a_)) {
    if (r < 1) throw std::invalid_argument("CountParams: r must be >= 1");
    if (static_cast<int>(a.size()) != r + 1) {
      throw std::invalid_argument("CountParams: need r + 1 coefficients");
    }
    for (int i = 1; i <= r; ++i) {
      if (a[i] < Rational(0)) {
        throw std::invalid_argument("CountParams: a_i must be >= 0 for i >= 1");
      }
    }
    q = 1;
    for (const Rational& x : a) q = std::lcm(q, x.den());
    p = a[0];
    for (int i = 1; i <= r; ++i) p += a[i] * Rational(binom(r, i));
  }

  IntCountVector scaled() const {
    std::vector<long long> b(r + 1);
    for (int i = 0; i <= r; ++i) b[i] = a[i].num() * (q / a[i].den());
    return IntCountVector(r, std::move(b));
  }
};

inline Rational eval_L(const Hypergraph& g, const CountParams& params) {
  if (g.uniformity() != params.r) {
    throw std::invalid_argument("eval_L: uniformity mismatch");
  }
  Rational v = params.a[0];
  for (int i = 1; i <= params.r; ++i) {
    if (!params.a[i].is_zero()) {
      v += params.a[i] * Rational(shadow_size(g, i));
    }
  }
  return v;
}

// L depends only on the projection, so multiplicities never change it.
inline Rational eval_L(const MultiEdgeSet& g, const CountParams& params) {
  return eval_L(g.underlying(), params);
}

inline Rational eval_L_complete(int n, const CountParams& params) {
  Rational v = params.a[0];
  for (int i = 1; i <= params.r; ++i) {
    v += params.a[i] * Rational(binom(n, i));
  }
  return v;
}

// Exact polymatroid value rho_M(G) = rk(G^{(q)}) / q, by brute force.
inline Rational poly_rho(const Hypergraph& g, const CountParams& params,
                         CountMatroidCaps caps = {}) {
  if (g.is_empty()) return Rational(0);
  MultiEdgeSet mul = MultiEdgeSet::multiply(g, params.q);
  long long rk = count_matroid_rank_bruteforce(mul, params.scaled(), caps);
  return Rational(rk, params.q);
}

// Closed-form polymatroid rank of the complete hypergraph:
// 0 when p <= 0, otherwise min{ L_a(K_n^r), min(1, p) * C(n, r) }.
inline Rational poly_rank_formula(int n, const CountParams& params) {
  if (n < params.r) throw std::invalid_argument("poly_rank_formula: n < r");
  if (params.p <= Rational(0)) return Rational(0);
  Rational l_full = eval_L_complete(n, params);
  Rational cap = std::min(Rational(1), params.p) * Rational(binom(n, params.r));
  return std::min(l_full, cap);
}

struct WsatConditionFailure {
  Hypergraph copy;
  Edge removed;
  Rational rho_full;
  Rational rho_minus;
};

struct WsatConditionReport {
  bool applicable = false;  // p >= 1, the certificate precondition
  bool pass = false;        // deletion condition holds for every copy/edge
  Rational bound;           // L_a(K_n^r), certified when pass && applicable
  long long copies_checked = 0;
  std::optional<WsatConditionFailure> failure;
};

// Checks that the count polymatroid is weakly H-saturated on K_n^r: for
// every copy of H (one per distinct image edge set) and every edge of the
// copy, deleting the edge must not change the polymatroid value. On success
// with p >= 1 this certifies the lower bound L_a(K_n^r) on wsat(n, H).
inline WsatConditionReport verify_wsat_condition(const Hypergraph& h, int n,
                                                 const CountParams& params,
                                                 CountMatroidCaps caps = {}) {
  if (h.is_empty()) {
    throw std::invalid_argument("verify_wsat_condition: empty pattern");
  }
  if (h.uniformity() != params.r) {
    throw std::invalid_argument("verify_wsat_condition: uniformity mismatch");
  }
  if (n < h.vertex_count()) {
    throw std::invalid_argument("verify_wsat_condition: n < |V(H)|");
  }
  WsatConditionReport rep;
  rep.applicable = params.p >= Rational(1);
  rep.bound = eval_L_complete(n, params);

  EdgeUniverse universe(n, params.r);
  rep.pass = true;
  for (const std::vector<int>& image : enumerate_copies(h, universe)) {
    ++rep.copies_checked;
    std::vector<Edge> edges;
    edges.reserve(image.size());
    for (int idx : image) edges.push_back(universe.edge(idx));
    Hypergraph copy(n, params.r, edges);
    Rational rho_full = poly_rho(copy, params, caps);
    for (const Edge& e : copy.edges()) {
      std::vector<Edge> rest;
      rest.reserve(edges.size() - 1);
      for (const Edge& f : copy.edges()) {
        if (f != e) rest.push_back(f);
      }
      Rational rho_minus =
          poly_rho(Hypergraph(n, params.r, rest), params, caps);
      if (rho_minus != rho_full) {
        rep.pass = false;
        rep.failure = WsatConditionFailure{copy, e, rho_full, rho_minus};
        return rep;
      }
    }
  }
  return rep;
}

// Searches for a non-empty sub-hypergraph G of F with L_a(G) < |E(G)|; such
// a witness must exist whenever rho(F) < |E(F)|. Subsets are scanned in
// increasing bitmask order over the canonical edge list.
inline std::optional<Hypergraph> find_dependency_witness(
    const Hypergraph& f, const CountParams& params, int max_edges = 20) {
  const auto& edges = f.edges();
  const int m = static_cast<int>(edges.size());
  if (m > max_edges) {
    throw CapExceeded("find_dependency_witness: " + std::to_string(m) +
                      " edges exceed cap " + std::to_string(max_edges));
  }
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    std::vector<Edge> sub;
    for (int j = 0; j < m; ++j) {
      if ((mask >> j) & 1) sub.push_back(edges[j]);
    }
    Hypergraph g(f.vertex_count(), f.uniformity(), sub);
    if (eval_L(g, params) < Rational(g.edge_count())) return g;
  }
  return std::nullopt;
}

// Parameters realizing the general lower bound for a pattern with
// sparseness s and coefficient gamma: a_{s-1} = gamma,
// a_0 = |E(H)| - 1 - gamma * |shadow_{s-1}(H)|, all other a_i = 0.
inline CountParams gamma_params(const Hypergraph& h, int s,
                                const Rational& gamma) {
  std::vector<Rational> a(h.uniformity() + 1, Rational(0));
  a[s - 1] = gamma;
  a[0] = Rational(h.edge_count() - 1) - gamma * Rational(shadow_size(h, s - 1));
  return CountParams(h.uniformity(), std::move(a));
}

}  // namespace wsat

#endif  // WSAT_COUNT_POLYMATROID_HPP_

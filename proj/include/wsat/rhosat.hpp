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

#ifndef WSAT_RHOSAT_HPP_
#define WSAT_RHOSAT_HPP_

#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsat/count_polymatroid.hpp"
#include "wsat/embedding.hpp"
#include "wsat/simplex.hpp"

namespace wsat {

// The linear program over set functions rho on the edge subsets of K_n^r
// whose optimum is the best weakly H-saturated 1-polymatroid bound:
//
//   maximize rho(full)  subject to
//     rho(empty) = 0
//     rho({x}) <= 1                                    for every edge x
//     rho(A) <= rho(A + x)                             elementary monotone
//     rho(A+x) + rho(A+y) >= rho(A+x+y) + rho(A)       elementary submodular
//     rho(C - e) >= rho(C)         for every copy C of H and every e in C
//
// The elementary monotone/submodular rows imply the unrestricted axioms (see
// docs/notes.md), cutting the row count from 4^m-scale to m 2^{m-1}-scale.
// Saturation rows only need >=; equality follows from monotonicity. Rows are
// streamed rather than stored: one variable per subset makes materializing
// all rows wasteful at the caps.
class SetFunctionLP {
 public:
  enum class Tag { kEmptyZero, kSingletonCap, kMonotone, kSubmodular, kSaturation };

  struct Row {
    Tag tag;
    std::vector<std::pair<uint32_t, int>> terms;  // subset mask, coefficient
    Rel rel;
    long long rhs;
  };

  SetFunctionLP(const Hypergraph& h, int n, int max_edges = 16)
      : universe_(n, h.uniformity()) {
    if (h.is_empty()) {
      throw std::invalid_argument("SetFunctionLP: empty pattern");
    }
    if (max_edges > 20) max_edges = 20;  // hard cap: subset masks in 2^20
    m_ = universe_.size();
    if (m_ > max_edges) {
      throw CapExceeded("SetFunctionLP: C(n,r) = " + std::to_string(m_) +
                        " edges need 2^" + std::to_string(m_) +
                        " variables, over the cap of 2^" +
                        std::to_string(max_edges));
    }
    copies_ = enumerate_copies(h, universe_);
    pattern_edges_ = h.edge_count();
  }

  const EdgeUniverse& universe() const { return universe_; }
  int m() const { return m_; }
  uint64_t num_vars() const { return uint64_t{1} << m_; }
  const std::vector<std::vector<int>>& copies() const { return copies_; }

  long long row_count() const {
    long long monotone = m_ >= 1 ? static_cast<long long>(m_) << (m_ - 1) : 0;
    long long submodular = m_ >= 2 ? binom(m_, 2) << (m_ - 2) : 0;
    return 1 + m_ + monotone + submodular +
           static_cast<long long>(copies_.size()) * pattern_edges_;
  }

  template <typename F>
  void for_each_row(F&& fn) const {
    const uint32_t full = static_cast<uint32_t>((uint64_t{1} << m_) - 1);
    fn(Row{Tag::kEmptyZero, {{0u, 1}}, Rel::kEq, 0});
    for (int x = 0; x < m_; ++x) {
      fn(Row{Tag::kSingletonCap, {{uint32_t{1} << x, 1}}, Rel::kLe, 1});
    }
    for (int x = 0; x < m_; ++x) {
      const uint32_t xbit = uint32_t{1} << x;
      const uint32_t rest = full & ~xbit;
      uint32_t a = rest;
      while (true) {
        // rho(A) - rho(A + x) <= 0
        fn(Row{Tag::kMonotone, {{a, 1}, {a | xbit, -1}}, Rel::kLe, 0});
        if (a == 0) break;
        a = (a - 1) & rest;
      }
    }
    for (int x = 0; x < m_; ++x) {
      for (int y = x + 1; y < m_; ++y) {
        const uint32_t xbit = uint32_t{1} << x;
        const uint32_t ybit = uint32_t{1} << y;
        const uint32_t rest = full & ~(xbit | ybit);
        uint32_t a = rest;
        while (true) {
          // rho(A+x+y) + rho(A) - rho(A+x) - rho(A+y) <= 0
          fn(Row{Tag::kSubmodular,
                 {{a | xbit | ybit, 1}, {a, 1}, {a | xbit, -1}, {a | ybit, -1}},
                 Rel::kLe, 0});
          if (a == 0) break;
          a = (a - 1) & rest;
        }
      }
    }
    for (const std::vector<int>& copy : copies_) {
      uint32_t cmask = 0;
      for (int idx : copy) cmask |= uint32_t{1} << idx;
      for (int idx : copy) {
        // rho(C) - rho(C - e) <= 0; with monotonicity this is equality.
        fn(Row{Tag::kSaturation,
               {{cmask, 1}, {cmask & ~(uint32_t{1} << idx), -1}},
               Rel::kLe, 0});
      }
    }
  }

 private:
  EdgeUniverse universe_;
  int m_ = 0;
  long long pattern_edges_ = 0;
  std::vector<std::vector<int>> copies_;
};

namespace detail {

// Orbits of edge subsets under vertex permutations, via union-find driven by
// adjacent transpositions (which generate the full symmetric group).
struct SubsetOrbits {
  std::vector<int32_t> parent;      // union-find over masks
  std::vector<int32_t> orbit_of;    // mask -> orbit id
  std::vector<uint32_t> rep;        // orbit id -> minimal mask
  int count = 0;

  int32_t find(int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
};

inline SubsetOrbits compute_subset_orbits(const EdgeUniverse& u) {
  const int m = u.size();
  const uint64_t total = uint64_t{1} << m;
  SubsetOrbits o;
  o.parent.resize(total);
  for (uint64_t v = 0; v < total; ++v) o.parent[v] = static_cast<int32_t>(v);

  std::vector<std::vector<int>> tables;
  for (int i = 0; i + 1 < u.n(); ++i) {
    std::vector<int> perm(u.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    std::vector<int> table(m);
    for (int idx = 0; idx < m; ++idx) {
      Edge e = u.edge(idx);
      for (Vertex& v : e) v = perm[v];
      std::sort(e.begin(), e.end());
      table[idx] = u.index_of_edge(e);
    }
    tables.push_back(std::move(table));
  }

  auto unite = [&](int32_t a, int32_t b) {
    a = o.find(a);
    b = o.find(b);
    if (a != b) o.parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& table : tables) {
    for (uint64_t mask = 0; mask < total; ++mask) {
      uint32_t mapped = 0;
      for (uint32_t w = static_cast<uint32_t>(mask); w;) {
        int idx = __builtin_ctz(w);
        w &= w - 1;
        mapped |= uint32_t{1} << table[idx];
      }
      unite(static_cast<int32_t>(mask), static_cast<int32_t>(mapped));
    }
  }

  o.orbit_of.assign(total, -1);
  for (uint64_t mask = 0; mask < total; ++mask) {
    int32_t root = o.find(static_cast<int32_t>(mask));
    if (o.orbit_of[root] == -1) {
      o.orbit_of[root] = o.count++;
      o.rep.push_back(static_cast<uint32_t>(root));  // roots are minimal masks
    }
    o.orbit_of[mask] = o.orbit_of[root];
  }
  return o;
}

}  // namespace detail

struct RhosatOptions {
  bool use_float = false;  // inexact exploratory path, tolerance ~1e-7
  int exact_max_edges = 12;
  int float_max_edges = 16;
};

struct RhosatResult {
  Rational value;
  bool exact = true;
  bool verified = false;  // lifted solution checked against every LP row
  long long lp_rows = 0;
  int orbits = 0;
  long long reduced_rows = 0;
  long long pivots = 0;
  // Optimal set-function values on the certificate support: the full edge
  // set, every copy of the pattern, and every copy minus one edge.
  std::vector<std::pair<std::string, Rational>> support;
  // Dense optimal set function (index = subset mask), kept on the exact path
  // up to 2^16 subsets; used by the exhaustive axiom checks.
  std::vector<Rational> full_values;
};

// Exact optimum of the weakly H-saturated 1-polymatroid program on K_n^r.
//
// The program is invariant under relabelling vertices: permutations act on
// subsets of E(K_n^r) and permute the row families. Averaging any feasible
// rho over the group is feasible with the same objective, and any orbitwise
// constant feasible point lifts back, so the optimum is attained on orbit
// variables. The solver therefore reduces to one variable per subset orbit,
// solves the reduced LP with the exact simplex, lifts, and re-verifies every
// original row exactly.
inline RhosatResult solve_rhosat(const Hypergraph& h, int n,
                                 const RhosatOptions& opts = {}) {
  const int cap = opts.use_float ? opts.float_max_edges : opts.exact_max_edges;
  long long m_estimate = binom(n, h.uniformity());
  if (m_estimate > cap && !opts.use_float && m_estimate <= opts.float_max_edges) {
    throw CapExceeded(
        "solve_rhosat: exact path capped at C(n,r) <= " +
        std::to_string(opts.exact_max_edges) +
        "; request the float fallback for this size (flagged inexact)");
  }
  SetFunctionLP lp(h, n, cap);
  const int m = lp.m();

  RhosatResult res;
  res.exact = !opts.use_float;
  res.lp_rows = lp.row_count();
  if (m == 0) {
    res.value = Rational(0);
    res.verified = true;
    return res;
  }

  detail::SubsetOrbits orbits = detail::compute_subset_orbits(lp.universe());
  res.orbits = orbits.count;

  // Variable per orbit, except the empty orbit which is pinned to zero.
  const int empty_orbit = orbits.orbit_of[0];
  std::vector<int> var_of(orbits.count, -1);
  int num_vars = 0;
  for (int o = 0; o < orbits.count; ++o) {
    if (o != empty_orbit) var_of[o] = num_vars++;
  }

  // Reduce rows onto orbit variables and deduplicate.
  using Key = std::vector<long long>;
  std::map<Key, LpRow> reduced;
  std::map<int, Rational> acc;
  lp.for_each_row([&](const SetFunctionLP::Row& row) {
    if (row.tag == SetFunctionLP::Tag::kEmptyZero) return;  // substituted
    acc.clear();
    for (const auto& [mask, coeff] : row.terms) {
      int v = var_of[orbits.orbit_of[mask]];
      if (v >= 0) acc[v] += Rational(coeff);
    }
    LpRow out;
    Key key;
    for (const auto& [v, c] : acc) {
      if (c.is_zero()) continue;
      out.terms.push_back({v, c});
      key.push_back(v);
      key.push_back(c.num());
      key.push_back(c.den());
    }
    out.rel = row.rel;
    out.rhs = Rational(row.rhs);
    key.push_back(static_cast<long long>(out.rel));
    key.push_back(row.rhs);
    if (out.terms.empty()) return;  // 0 <= rhs, trivially true here
    reduced.emplace(std::move(key), std::move(out));
  });

  LpProblem problem;
  problem.num_vars = num_vars;
  for (auto& [key, row] : reduced) problem.rows.push_back(std::move(row));
  res.reduced_rows = static_cast<long long>(problem.rows.size());
  const uint32_t full_mask = static_cast<uint32_t>((uint64_t{1} << m) - 1);
  problem.objective.push_back(
      {var_of[orbits.orbit_of[full_mask]], Rational(1)});

  // Small programs go straight to the simplex. Larger ones are solved by
  // row generation: start from the per-variable caps rho(A) <= |A| (implied
  // by the full row set; see docs/notes.md), and add violated rows in
  // batches until the relaxation optimum is feasible for every reduced row.
  // A feasible optimum of a relaxation of implied-plus-subset rows is an
  // optimum of the full program.
  LpSolution sol;
  if (res.reduced_rows <= 500) {
    sol = opts.use_float ? solve_lp_float(problem) : solve_lp_exact(problem);
    res.pivots = sol.pivots;
  } else {
    LpProblem working;
    working.num_vars = num_vars;
    working.objective = problem.objective;
    for (int o = 0; o < orbits.count; ++o) {
      if (var_of[o] < 0) continue;
      working.rows.push_back(
          {{{var_of[o], Rational(1)}},
           Rel::kLe,
           Rational(__builtin_popcount(orbits.rep[o]))});
    }
    // The float path reports rounded values; tolerate its noise so the loop
    // terminates, and never add the same row twice.
    const Rational tolerance =
        opts.use_float ? Rational(1, 10000000) : Rational(0);
    std::vector<char> added(problem.rows.size(), 0);
    while (true) {
      sol = opts.use_float ? solve_lp_float(working) : solve_lp_exact(working);
      res.pivots += sol.pivots;
      if (sol.status != LpStatus::kOptimal) break;
      // Most-violated reduced rows first, up to a batch.
      std::vector<std::pair<Rational, size_t>> violated;
      for (size_t i = 0; i < problem.rows.size(); ++i) {
        if (added[i]) continue;
        const LpRow& row = problem.rows[i];
        Rational lhs(0);
        for (const LpTerm& t : row.terms) lhs += t.coeff * sol.x[t.var];
        if (lhs - row.rhs > tolerance) violated.push_back({lhs - row.rhs, i});
      }
      if (violated.empty()) break;
      std::sort(violated.begin(), violated.end(),
                [](const auto& a, const auto& b) { return b.first < a.first; });
      const size_t batch = std::min<size_t>(violated.size(), 100);
      for (size_t i = 0; i < batch; ++i) {
        working.rows.push_back(problem.rows[violated[i].second]);
        added[violated[i].second] = 1;
      }
    }
  }
  if (sol.status != LpStatus::kOptimal) {
    throw std::logic_error("solve_rhosat: LP not optimal (bounded feasible "
                           "program expected)");
  }
  res.value = sol.objective;

  // Lift to a full set function and re-check every original row.
  auto value_of = [&](uint32_t mask) -> Rational {
    int v = var_of[orbits.orbit_of[mask]];
    return v < 0 ? Rational(0) : sol.x[v];
  };
  if (!opts.use_float) {
    bool ok = true;
    lp.for_each_row([&](const SetFunctionLP::Row& row) {
      if (!ok) return;
      Rational lhs(0);
      for (const auto& [mask, coeff] : row.terms) {
        lhs += Rational(coeff) * value_of(mask);
      }
      Rational rhs(row.rhs);
      switch (row.rel) {
        case Rel::kLe: ok = lhs <= rhs; break;
        case Rel::kGe: ok = lhs >= rhs; break;
        case Rel::kEq: ok = lhs == rhs; break;
      }
    });
    if (!ok) throw std::logic_error("solve_rhosat: lifted solution infeasible");
    res.verified = true;
  }

  if (!opts.use_float && m <= 16) {
    res.full_values.resize(uint64_t{1} << m);
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
      res.full_values[mask] = value_of(static_cast<uint32_t>(mask));
    }
  }

  res.support.push_back({"full", value_of(full_mask)});
  int copy_id = 0;
  for (const std::vector<int>& copy : lp.copies()) {
    uint32_t cmask = 0;
    for (int idx : copy) cmask |= uint32_t{1} << idx;
    res.support.push_back(
        {"copy" + std::to_string(copy_id), value_of(cmask)});
    for (int idx : copy) {
      res.support.push_back(
          {"copy" + std::to_string(copy_id) + "-e" + std::to_string(idx),
           value_of(cmask & ~(uint32_t{1} << idx))});
    }
    ++copy_id;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Count polymatroid as a feasible point of the LP

struct FeasibilityReport {
  bool feasible = true;
  bool bound_available = false;  // p >= 1 and saturation rows hold
  Rational bound;                // L_a(K_n^r)
  long long rows_checked = 0;
  std::string first_violation;
};

// Verifies that the count polymatroid values satisfy sampled elementary
// rows plus every saturation row, exactly. On success with p >= 1 the value
// L_a(K_n^r) is a certified lower bound for rhosat (and hence realized by a
// feasible point of the LP).
inline FeasibilityReport check_count_poly_feasible(const Hypergraph& h, int n,
                                                   const CountParams& params,
                                                   int samples = 200,
                                                   uint64_t seed = 1,
                                                   CountMatroidCaps caps = {}) {
  EdgeUniverse universe(n, h.uniformity());
  const int m = universe.size();
  if (m > 20) throw CapExceeded("check_count_poly_feasible: C(n,r) > 20");

  std::unordered_map<uint32_t, Rational> memo;
  auto rho = [&](uint32_t mask) -> Rational {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1) edges.push_back(universe.edge(i));
    }
    Rational v = poly_rho(Hypergraph(n, h.uniformity(), edges), params, caps);
    memo.emplace(mask, v);
    return v;
  };

  FeasibilityReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.feasible) {
      rep.feasible = false;
      rep.first_violation = what;
    }
  };

  if (rho(0) != Rational(0)) fail("rho(empty) != 0");
  ++rep.rows_checked;
  for (int x = 0; x < m && rep.feasible; ++x) {
    ++rep.rows_checked;
    if (rho(uint32_t{1} << x) > Rational(1)) {
      fail("singleton cap at edge " + std::to_string(x));
    }
  }

  std::mt19937_64 rng(seed);
  const uint32_t full = static_cast<uint32_t>((uint64_t{1} << m) - 1);
  for (int t = 0; t < samples && rep.feasible; ++t) {
    uint32_t a = static_cast<uint32_t>(rng()) & full;
    int x = static_cast<int>(rng() % m);
    int y = static_cast<int>(rng() % m);
    uint32_t xbit = uint32_t{1} << x;
    uint32_t ybit = uint32_t{1} << y;
    ++rep.rows_checked;
    if (rho(a & ~xbit) > rho(a | xbit)) {
      fail("monotone row violated");
      break;
    }
    if (x == y) continue;
    uint32_t base = a & ~(xbit | ybit);
    ++rep.rows_checked;
    if (rho(base | xbit) + rho(base | ybit) <
        rho(base | xbit | ybit) + rho(base)) {
      fail("submodular row violated");
    }
  }

  bool saturation_ok = true;
  for (const std::vector<int>& copy : enumerate_copies(h, universe)) {
    if (!rep.feasible) break;
    uint32_t cmask = 0;
    for (int idx : copy) cmask |= uint32_t{1} << idx;
    Rational rc = rho(cmask);
    for (int idx : copy) {
      ++rep.rows_checked;
      if (rho(cmask & ~(uint32_t{1} << idx)) != rc) {
        saturation_ok = false;
        fail("saturation row violated at copy edge " + std::to_string(idx));
        break;
      }
    }
  }

  if (rep.feasible && saturation_ok && params.p >= Rational(1)) {
    rep.bound_available = true;
    rep.bound = eval_L_complete(n, params);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Trend table

struct RhosatTrendRow {
  int n;
  Rational value;
  Rational normalized;  // value / C(n, s-1)
};

struct RhosatTrend {
  std::vector<RhosatTrendRow> rows;
  std::string annotation;  // monotone-trend note, no limit claim
};

inline RhosatTrend rhosat_trend(const Hypergraph& h, int n_from, int n_to,
                                const RhosatOptions& opts = {}) {
  RhosatTrend out;
  const int s = sparseness(h);
  bool nondecreasing = true, nonincreasing = true;
  for (int n = n_from; n <= n_to; ++n) {
    RhosatResult r = solve_rhosat(h, n, opts);
    Rational norm = r.value / Rational(binom(n, std::max(s - 1, 0)));
    if (!out.rows.empty()) {
      nondecreasing = nondecreasing && out.rows.back().normalized <= norm;
      nonincreasing = nonincreasing && norm <= out.rows.back().normalized;
    }
    out.rows.push_back({n, r.value, norm});
  }
  if (out.rows.empty()) {
    out.annotation = "empty range";
  } else if (nondecreasing && nonincreasing) {
    out.annotation = "normalized values constant over the range";
  } else if (nondecreasing) {
    out.annotation = "normalized values nondecreasing over the range";
  } else if (nonincreasing) {
    out.annotation = "normalized values nonincreasing over the range";
  } else {
    out.annotation = "normalized values not monotone over the range";
  }
  return out;
}

}  // namespace wsat

#endif  // WSAT_RHOSAT_HPP_

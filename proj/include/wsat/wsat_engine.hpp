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

#ifndef WSAT_WSAT_ENGINE_HPP_
#define WSAT_WSAT_ENGINE_HPP_

#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "wsat/embedding.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

// A non-empty family of non-empty patterns of common uniformity.
struct Family {
  std::vector<Hypergraph> patterns;

  explicit Family(std::vector<Hypergraph> ps) : patterns(std::move(ps)) {
    if (patterns.empty()) {
      throw std::invalid_argument("Family: at least one pattern required");
    }
    for (const Hypergraph& h : patterns) {
      if (h.is_empty()) {
        throw std::invalid_argument("Family: patterns must be non-empty");
      }
      if (h.uniformity() != patterns[0].uniformity()) {
        throw std::invalid_argument("Family: mixed uniformities");
      }
    }
  }

  int uniformity() const { return patterns[0].uniformity(); }

  int max_pattern_vertices() const {
    int v = 0;
    for (const Hypergraph& h : patterns) v = std::max(v, h.vertex_count());
    return v;
  }
};

// One bootstrap step: the added edge, which pattern it completed, and the
// embedding of that pattern's covered vertices (listed ascending) into the
// host.
struct CertStep {
  Edge edge;
  int pattern_index;
  std::vector<int> embedding;
};

struct SaturationCertificate {
  Hypergraph initial;
  std::vector<CertStep> steps;
};

// Runs the bootstrap process for a fixed (n, family) pair. Greedy order is
// sound: if adding e to G creates a pattern copy and G is a subgraph of G'
// with e missing from G', the same embedding witnesses a copy in G' + e, so
// the set of eventually-addable edges never shrinks and the fixpoint is
// independent of the scan order (see docs/notes.md).
class ClosureEngine {
 public:
  ClosureEngine(int n, const Family& fam)
      : universe_(n, fam.uniformity()) {
    for (const Hypergraph& h : fam.patterns) matchers_.emplace_back(h);
  }

  const EdgeUniverse& universe() const { return universe_; }

  // Completes host in place. Records steps when steps != nullptr. scan_order,
  // when given, is a permutation of universe indices used for scanning.
  void close(HostState& host, std::vector<CertStep>* steps,
             const std::vector<int>* scan_order = nullptr) const {
    const int m = universe_.size();
    bool progress = true;
    while (progress && !host.complete()) {
      progress = false;
      for (int pos = 0; pos < m; ++pos) {
        int idx = scan_order ? (*scan_order)[pos] : pos;
        if (host.has(idx)) continue;
        for (size_t j = 0; j < matchers_.size(); ++j) {
          auto emb = matchers_[j].find_creating(host, idx);
          if (emb) {
            host.add(idx);
            if (steps) {
              steps->push_back(CertStep{universe_.edge(idx),
                                        static_cast<int>(j), *emb});
            }
            progress = true;
            break;
          }
        }
      }
    }
  }

  bool closes_to_complete(HostState host) const {
    close(host, nullptr);
    return host.complete();
  }

 private:
  EdgeUniverse universe_;
  std::vector<PatternMatcher> matchers_;
};

struct ClosureResult {
  Hypergraph closed;
  SaturationCertificate certificate;
};

inline ClosureResult closure(const Hypergraph& f, const Family& fam,
                             const std::vector<int>* scan_order = nullptr) {
  if (f.uniformity() != fam.uniformity()) {
    throw std::invalid_argument("closure: uniformity mismatch");
  }
  ClosureEngine engine(f.vertex_count(), fam);
  HostState host = HostState::from(f, engine.universe());
  ClosureResult res;
  res.certificate.initial = f;
  engine.close(host, &res.certificate.steps, scan_order);
  res.closed = host.to_hypergraph();
  return res;
}

inline bool weakly_saturated(const Hypergraph& f, const Family& fam) {
  ClosureEngine engine(f.vertex_count(), fam);
  return engine.closes_to_complete(HostState::from(f, engine.universe()));
}

// Replays a certificate step by step: every step must add a missing edge
// whose pattern embedding is injective, maps one pattern edge onto the added
// edge, and maps every other pattern edge onto a present edge. Returns true
// iff the replay is valid and ends at expected_final.
inline bool replay_certificate(const SaturationCertificate& cert,
                               const Family& fam,
                               const Hypergraph& expected_final) {
  const int n = cert.initial.vertex_count();
  EdgeUniverse universe(n, fam.uniformity());
  HostState host = HostState::from(cert.initial, universe);
  for (const CertStep& step : cert.steps) {
    int idx = universe.index_of_edge(step.edge);
    if (idx < 0 || host.has(idx)) return false;
    if (step.pattern_index < 0 ||
        step.pattern_index >= static_cast<int>(fam.patterns.size())) {
      return false;
    }
    Hypergraph pat =
        fam.patterns[step.pattern_index].restricted_to_support();
    if (static_cast<int>(step.embedding.size()) != pat.vertex_count()) {
      return false;
    }
    uint64_t used = 0;
    for (int hv : step.embedding) {
      if (hv < 0 || hv >= n || ((used >> hv) & 1)) return false;
      used |= uint64_t{1} << hv;
    }
    bool covers_new = false;
    for (const Edge& pe : pat.edges()) {
      uint64_t m = 0;
      for (Vertex x : pe) m |= uint64_t{1} << step.embedding[x];
      int img = universe.index_of_mask(m);
      if (img < 0) return false;
      if (img == idx) {
        covers_new = true;
      } else if (!host.has(img)) {
        return false;
      }
    }
    if (!covers_new) return false;
    host.add(idx);
  }
  return host.to_hypergraph() == expected_final;
}

// ---------------------------------------------------------------------------
// Exact weak saturation numbers

struct WsatOptions {
  int max_universe = 24;        // cap on C(n, r)
  long double level_cap = 1e7L; // cap on combinations per edge-count level
  bool symmetry = true;         // prune to orbit-minimal candidates
  int workers = 1;
  long long lower_bound = 0;    // caller-supplied (bounds module)
  int greedy_orders = 4;        // seeded removal orders for the upper bound
  uint64_t seed = 1;
};

struct WsatResult {
  long long value = 0;
  Hypergraph witness;
  SaturationCertificate certificate;
  long long candidates_tested = 0;
  long long closures_run = 0;
};

namespace detail {

inline std::vector<int> edge_permutation_table(const EdgeUniverse& universe,
                                               const std::vector<int>& perm) {
  std::vector<int> table(universe.size());
  for (int idx = 0; idx < universe.size(); ++idx) {
    Edge e = universe.edge(idx);
    for (Vertex& v : e) v = perm[v];
    std::sort(e.begin(), e.end());
    table[idx] = universe.index_of_edge(e);
  }
  return table;
}

// Precomputed edge-index permutations shared by all workers. Transposition
// tables give a cheap local test; for small universes the full group is also
// tabulated and used as a second stage, which reduces the scan to exactly one
// candidate per isomorphism orbit.
struct SymmetryTables {
  std::vector<std::vector<int>> transpositions;
  std::vector<std::vector<int>> full_group;  // non-identity, when tabulated

  SymmetryTables(const EdgeUniverse& universe, bool enabled) {
    if (!enabled) return;
    const int n = universe.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[j]);
        transpositions.push_back(edge_permutation_table(universe, perm));
      }
    }
    if (universe.size() <= 16 && n <= 7) {
      std::iota(perm.begin(), perm.end(), 0);
      while (std::next_permutation(perm.begin(), perm.end())) {
        full_group.push_back(edge_permutation_table(universe, perm));
      }
    }
  }
};

// Per-worker candidate pruning state. Both prunes keep the lexicographically
// least member of every orbit of closing candidates, so a level scan that
// rejects pruned candidates is still exhaustive.
class LevelScanContext {
 public:
  LevelScanContext(const EdgeUniverse& universe, const Family& fam,
                   const SymmetryTables* sym)
      : sym_(sym) {
    const int n = universe.n();
    const int r = universe.r();
    // Coverage filter: every m-subset of [n] must lie in at least
    // (min_H delta_m(H)) - 1 candidate edges. Take the first added edge
    // containing the m-subset: the copy it creates has all of its other
    // edges through the subset already present, and if no edge through the
    // subset is ever added the complete hypergraph supplies even more.
    for (int m = 1; m < r; ++m) {
      long long dm = std::numeric_limits<long long>::max();
      for (const Hypergraph& h : fam.patterns) {
        dm = std::min(dm, delta_m(h, m));
      }
      if (dm >= 2) {
        CoverageFilter f;
        f.threshold = dm - 1;
        f.num_subsets = binom(n, m);
        f.edge_subsets.resize(universe.size());
        for (int idx = 0; idx < universe.size(); ++idx) {
          for_each_subset_of(universe.edge(idx), m, [&](const Edge& u) {
            f.edge_subsets[idx].push_back(
                static_cast<int>(combination_rank(u, n)));
          });
        }
        f.count.assign(f.num_subsets, 0);
        f.version.assign(f.num_subsets, 0);
        filters_.push_back(std::move(f));
      }
    }
  }

  // True if the candidate survives coverage and symmetry pruning. The
  // coverage filter is the cheaper test and runs first.
  bool accept(const std::vector<int>& comb) {
    for (CoverageFilter& f : filters_) {
      ++f.current_version;
      long long satisfied = 0;
      for (int idx : comb) {
        for (int s : f.edge_subsets[idx]) {
          if (f.version[s] != f.current_version) {
            f.version[s] = f.current_version;
            f.count[s] = 0;
          }
          if (++f.count[s] == f.threshold) ++satisfied;
        }
      }
      if (satisfied < f.num_subsets) return false;
    }
    if (sym_) {
      for (const auto& table : sym_->transpositions) {
        if (maps_lower(table, comb)) return false;
      }
      for (const auto& table : sym_->full_group) {
        if (maps_lower(table, comb)) return false;
      }
    }
    return true;
  }

 private:
  struct CoverageFilter {
    long long threshold = 0;
    long long num_subsets = 0;
    std::vector<std::vector<int>> edge_subsets;
    std::vector<long long> count;
    std::vector<uint32_t> version;
    uint32_t current_version = 0;
  };

  bool maps_lower(const std::vector<int>& table, const std::vector<int>& comb) {
    mapped_.clear();
    for (int idx : comb) mapped_.push_back(table[idx]);
    std::sort(mapped_.begin(), mapped_.end());
    return mapped_ < comb;
  }

  const SymmetryTables* sym_;
  std::vector<CoverageFilter> filters_;
  std::vector<int> mapped_;
};

}  // namespace detail

// Greedy 1-minimal weakly saturated hypergraph: starts from K_n^r and
// removes edges whose removal keeps the closure complete. Tries a few seeded
// removal orders and keeps the smallest result; this is an upper bound for
// wsat and often attains it.
inline Hypergraph greedy_minimal_saturated(int n, const Family& fam,
                                           int orders = 4, uint64_t seed = 1) {
  ClosureEngine engine(n, fam);
  const int m = engine.universe().size();
  std::mt19937_64 rng(seed);
  std::vector<int> order(m);
  std::vector<int> best_edges;
  bool have_best = false;
  for (int t = 0; t < std::max(1, orders); ++t) {
    std::iota(order.begin(), order.end(), 0);
    if (t == 0) {
      std::reverse(order.begin(), order.end());
    } else {
      std::shuffle(order.begin(), order.end(), rng);
    }
    HostState host = HostState::make(engine.universe());
    for (int idx = 0; idx < m; ++idx) host.add(idx);
    for (int idx : order) {
      host.remove(idx);
      if (!engine.closes_to_complete(host)) host.add(idx);
    }
    std::vector<int> edges;
    for (int idx = 0; idx < m; ++idx) {
      if (host.has(idx)) edges.push_back(idx);
    }
    if (!have_best || edges.size() < best_edges.size()) {
      best_edges = edges;
      have_best = true;
    }
  }
  std::vector<Edge> out;
  for (int idx : best_edges) out.push_back(engine.universe().edge(idx));
  return Hypergraph(n, fam.uniformity(), std::move(out));
}

// Exact wsat(n, family) by pruned exhaustive search: ascending edge count k
// starting at the caller-supplied lower bound, stopping early at the greedy
// upper bound. Within a level, candidates are scanned in lexicographic order
// of edge-index sets; the reported witness is the first closing candidate in
// that order regardless of worker count.
inline WsatResult wsat_exact(int n, const Family& fam,
                             const WsatOptions& opts = {}) {
  const int r = fam.uniformity();
  if (n < fam.max_pattern_vertices()) {
    throw std::invalid_argument(
        "wsat_exact: n must be at least the largest pattern vertex count");
  }
  const long long m = binom(n, r);
  if (m > opts.max_universe) {
    throw CapExceeded("wsat_exact: C(n,r) = " + std::to_string(m) +
                      " exceeds cap " + std::to_string(opts.max_universe));
  }

  ClosureEngine engine(n, fam);
  const EdgeUniverse& universe = engine.universe();
  WsatResult result;

  Hypergraph greedy =
      greedy_minimal_saturated(n, fam, opts.greedy_orders, opts.seed);
  long long upper = greedy.edge_count();
  long long lower = std::max<long long>(0, opts.lower_bound);

  int workers = std::max(1, opts.workers);
  detail::SymmetryTables sym(universe, opts.symmetry);
  std::vector<std::unique_ptr<detail::LevelScanContext>> contexts;
  for (int w = 0; w < workers; ++w) {
    contexts.push_back(std::make_unique<detail::LevelScanContext>(
        universe, fam, opts.symmetry ? &sym : nullptr));
  }

  std::atomic<long long> tested{0}, closed{0};

  for (long long k = lower; k < upper; ++k) {
    long double level = enumeration_size(n, r, k);
    if (level > opts.level_cap) {
      throw CapExceeded("wsat_exact: level k=" + std::to_string(k) +
                        " has about " +
                        std::to_string(static_cast<double>(level)) +
                        " candidates, over the cap");
    }
    const long long total = binom(m, k);
    std::atomic<long long> best_rank{std::numeric_limits<long long>::max()};

    auto scan = [&](int w) {
      long long begin = total * w / workers;
      long long end = total * (w + 1) / workers;
      if (begin >= end) return;
      std::vector<int> comb =
          combination_unrank(begin, static_cast<int>(m), static_cast<int>(k));
      detail::LevelScanContext& ctx = *contexts[w];
      HostState host = HostState::make(universe);
      long long local_tested = 0, local_closed = 0;
      for (long long rank = begin; rank < end; ++rank) {
        if (rank >= best_rank.load(std::memory_order_relaxed)) break;
        ++local_tested;
        if (ctx.accept(comb)) {
          ++local_closed;
          HostState trial = host;
          for (int idx : comb) trial.add(idx);
          engine.close(trial, nullptr);
          if (trial.complete()) {
            long long prev = best_rank.load();
            while (rank < prev && !best_rank.compare_exchange_weak(prev, rank)) {
            }
            break;
          }
        }
        if (rank + 1 < end) next_combination(comb, static_cast<int>(m));
      }
      tested += local_tested;
      closed += local_closed;
    };

    if (workers == 1) {
      scan(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < workers; ++w) threads.emplace_back(scan, w);
      for (auto& t : threads) t.join();
    }

    long long rank = best_rank.load();
    if (rank < std::numeric_limits<long long>::max()) {
      std::vector<int> comb =
          combination_unrank(rank, static_cast<int>(m), static_cast<int>(k));
      std::vector<Edge> edges;
      for (int idx : comb) edges.push_back(universe.edge(idx));
      result.witness = Hypergraph(n, r, std::move(edges));
      result.value = k;
      result.candidates_tested = tested.load();
      result.closures_run = closed.load();
      ClosureResult cr = closure(result.witness, fam);
      result.certificate = cr.certificate;
      return result;
    }
  }

  result.value = upper;
  result.witness = greedy;
  result.candidates_tested = tested.load();
  result.closures_run = closed.load();
  result.certificate = closure(greedy, fam).certificate;
  return result;
}

// r = 1 closed form: min over the family of |E(H)|, minus one.
inline long long wsat_r1(const Family& fam) {
  if (fam.uniformity() != 1) {
    throw std::invalid_argument("wsat_r1: family must be 1-uniform");
  }
  long long best = std::numeric_limits<long long>::max();
  for (const Hypergraph& h : fam.patterns) {
    best = std::min(best, h.edge_count());
  }
  return best - 1;
}

struct FamilyVsDisjointReport {
  long long family_value = 0;
  long long disjoint_value = 0;
  long long difference = 0;
  long long upper_slack = 0;  // C(|V(disjoint union)|, r)
  bool chain_holds = false;   // family <= disjoint <= family + slack
};

// Compares wsat(n, family) with wsat(n, disjoint union of the family).
inline FamilyVsDisjointReport wsat_family_vs_disjoint(
    int n, const Family& fam, const WsatOptions& opts = {}) {
  Hypergraph un = disjoint_union(fam.patterns);
  FamilyVsDisjointReport rep;
  rep.family_value = wsat_exact(n, fam, opts).value;
  WsatOptions disjoint_opts = opts;
  // wsat(n, union) >= wsat(n, family): a union-saturated host is
  // family-saturated, so the family value is a valid starting level.
  disjoint_opts.lower_bound = std::max(opts.lower_bound, rep.family_value);
  rep.disjoint_value =
      wsat_exact(n, Family({un}), disjoint_opts).value;
  rep.difference = rep.disjoint_value - rep.family_value;
  rep.upper_slack = binom(un.vertex_count(), fam.uniformity());
  rep.chain_holds = rep.family_value <= rep.disjoint_value &&
                    rep.disjoint_value <= rep.family_value + rep.upper_slack;
  return rep;
}

}  // namespace wsat

#endif  // WSAT_WSAT_ENGINE_HPP_

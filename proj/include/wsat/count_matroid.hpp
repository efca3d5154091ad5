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

#ifndef WSAT_COUNT_MATROID_HPP_
#define WSAT_COUNT_MATROID_HPP_

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "wsat/binom.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/multi_edge_set.hpp"

namespace wsat {

// Integer coefficient vector (a_0, ..., a_r) for the edge-count function
// L_a(G) = a_0 + sum_i a_i * |shadow_i(pi(G))|. Coefficients a_i with i >= 1
// must be non-negative; that makes L_a non-decreasing and submodular, which
// is what turns it into a matroid rank bound.
struct IntCountVector {
  int r;
  std::vector<long long> a;  // size r + 1

  IntCountVector(int r_, std::vector<long long> a_) : r(r_), a(std::move(a_)) {
    if (r < 1) throw std::invalid_argument("IntCountVector: r must be >= 1");
    if (static_cast<int>(a.size()) != r + 1) {
      throw std::invalid_argument("IntCountVector: need r + 1 coefficients");
    }
    for (int i = 1; i <= r; ++i) {
      if (a[i] < 0) {
        throw std::invalid_argument(
            "IntCountVector: a_i must be >= 0 for i >= 1");
      }
    }
  }

  // p = a_0 + sum_{i>=1} a_i * C(r, i): the L-value of a single edge.
  long long p() const {
    long long v = a[0];
    for (int i = 1; i <= r; ++i) v += a[i] * binom(r, i);
    return v;
  }
};

inline long long eval_L_int(const Hypergraph& g, const IntCountVector& cv) {
  if (g.uniformity() != cv.r) {
    throw std::invalid_argument("eval_L_int: uniformity mismatch");
  }
  long long v = cv.a[0];
  for (int i = 1; i <= cv.r; ++i) {
    if (cv.a[i] != 0) v += cv.a[i] * shadow_size(g, i);
  }
  return v;
}

struct CountMatroidCaps {
  long long max_total_size = 40;  // elements counted with multiplicity
  int max_support = 20;           // |pi(A)|, bounds the 2^t subset checks
};

// Brute-force rank oracle for the count matroid M(n, r, q, a) restricted to
// a multiplied edge set A.
//
// Independence test. A subset B of A (kept as per-edge counts c_j over the
// support of A) is independent iff |C| <= L(C) for every non-empty C subset
// of B. It suffices to test, for every non-empty sub-hypergraph S of pi(B),
// the full preimage of S inside B, i.e. sum of c_j over S against L(S): if
// some C violates |C| > L(C), the full preimage C* of pi(C) inside B
// violates too, because L depends only on the projection (L(C*) = L(C))
// while |C*| >= |C|; and a violating full preimage is itself a violating
// subset. This replaces 2^|B| checks by 2^|pi(B)|. When B was independent
// and one element on edge j is added, a newly violating full preimage must
// contain the new element, so only masks containing j are rechecked.
//
// Greedy. L is non-decreasing and submodular, so the independence system is
// a matroid; every maximal independent subset of A is maximum, hence greedy
// insertion over any element order computes rk(A). The tests cross-check
// shuffled orders.
class CountMatroidOracle {
 public:
  CountMatroidOracle(const MultiEdgeSet& A, const IntCountVector& cv,
                     CountMatroidCaps caps = {})
      : cv_(cv) {
    if (A.uniformity() != cv.r) {
      throw std::invalid_argument("CountMatroidOracle: uniformity mismatch");
    }
    if (A.total_size() > caps.max_total_size) {
      throw CapExceeded("CountMatroidOracle: total multiplicity " +
                        std::to_string(A.total_size()) + " exceeds cap " +
                        std::to_string(caps.max_total_size));
    }
    for (const auto& [e, mult] : A.entries()) {
      edges_.push_back(e);
      mult_.push_back(mult);
    }
    const int t = static_cast<int>(edges_.size());
    if (t > caps.max_support) {
      throw CapExceeded("CountMatroidOracle: support size " +
                        std::to_string(t) + " exceeds cap " +
                        std::to_string(caps.max_support));
    }
    // Per-edge, per-arity lists of shadow-element bitmasks.
    subset_masks_.assign(t, std::vector<std::vector<uint64_t>>(cv.r + 1));
    for (int j = 0; j < t; ++j) {
      for (int i = 1; i <= cv.r; ++i) {
        if (cv_.a[i] == 0) continue;
        for_each_subset_of(edges_[j], i, [&](const Edge& u) {
          subset_masks_[j][i].push_back(edge_mask(u));
        });
      }
    }
  }

  int support_size() const { return static_cast<int>(edges_.size()); }

  long long L_of_mask(uint32_t mask) {
    auto it = l_memo_.find(mask);
    if (it != l_memo_.end()) return it->second;
    long long v = cv_.a[0];
    std::vector<uint64_t> scratch;
    for (int i = 1; i <= cv_.r; ++i) {
      if (cv_.a[i] == 0) continue;
      scratch.clear();
      for (uint32_t m = mask; m;) {
        int j = __builtin_ctz(m);
        m &= m - 1;
        scratch.insert(scratch.end(), subset_masks_[j][i].begin(),
                       subset_masks_[j][i].end());
      }
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()),
                    scratch.end());
      v += cv_.a[i] * static_cast<long long>(scratch.size());
    }
    l_memo_.emplace(mask, v);
    return v;
  }

  // Rank of the whole set A in canonical element order.
  long long rank() {
    std::vector<int> order;
    for (size_t j = 0; j < edges_.size(); ++j) {
      for (long long c = 0; c < mult_[j]; ++c) order.push_back(static_cast<int>(j));
    }
    return rank_with_order(order);
  }

  // Greedy rank with an explicit element order. order lists the support
  // index of each element of A (edge j appearing mult_[j] times in total).
  long long rank_with_order(const std::vector<int>& order) {
    const int t = static_cast<int>(edges_.size());
    std::vector<long long> cnt(t, 0), used(t, 0);
    uint32_t support_mask = 0;
    long long rank = 0;
    for (int j : order) {
      if (j < 0 || j >= t || used[j] >= mult_[j]) {
        throw std::invalid_argument("rank_with_order: bad element order");
      }
      ++used[j];
      ++cnt[j];
      uint32_t with = support_mask | (uint32_t{1} << j);
      if (independent_after_add(cnt, with, j)) {
        support_mask = with;
        ++rank;
      } else {
        --cnt[j];
      }
    }
    for (int j = 0; j < t; ++j) {
      if (used[j] != mult_[j]) {
        throw std::invalid_argument("rank_with_order: incomplete order");
      }
    }
    return rank;
  }

  // Full (non-incremental) independence check of a count vector; used by the
  // tests as a cross-check of the incremental path.
  bool counts_independent(const std::vector<long long>& cnt) {
    uint32_t mask = 0;
    for (size_t j = 0; j < cnt.size(); ++j) {
      if (cnt[j] > 0) mask |= uint32_t{1} << j;
    }
    for (uint32_t s = mask; s; s = (s - 1) & mask) {
      long long size = 0;
      for (uint32_t m = s; m;) {
        int j = __builtin_ctz(m);
        m &= m - 1;
        size += cnt[j];
      }
      if (size > L_of_mask(s)) return false;
    }
    return true;
  }

 private:
  // cnt was independent before edge j gained one element; checks all
  // sub-hypergraph masks containing j.
  bool independent_after_add(const std::vector<long long>& cnt,
                             uint32_t support_mask, int j) {
    const uint32_t jbit = uint32_t{1} << j;
    const uint32_t rest = support_mask & ~jbit;
    uint32_t s = rest;
    while (true) {
      uint32_t mask = s | jbit;
      long long size = 0;
      for (uint32_t m = mask; m;) {
        int idx = __builtin_ctz(m);
        m &= m - 1;
        size += cnt[idx];
      }
      if (size > L_of_mask(mask)) return false;
      if (s == 0) break;
      s = (s - 1) & rest;
    }
    return true;
  }

  IntCountVector cv_;
  std::vector<Edge> edges_;
  std::vector<long long> mult_;
  std::vector<std::vector<std::vector<uint64_t>>> subset_masks_;
  std::unordered_map<uint32_t, long long> l_memo_;
};

inline long long count_matroid_rank_bruteforce(const MultiEdgeSet& A,
                                               const IntCountVector& cv,
                                               CountMatroidCaps caps = {}) {
  if (A.entries().empty()) return 0;
  CountMatroidOracle oracle(A, cv, caps);
  return oracle.rank();
}

// Closed-form rank of M(n, r, q, a) on the full multiplied edge set:
// 0 when p <= 0, otherwise min{ L_a(K_n^r), min(q, p) * C(n, r) }.
inline long long count_matroid_rank_formula(int n, long long q,
                                            const IntCountVector& cv) {
  if (n < cv.r) throw std::invalid_argument("rank_formula: n < r");
  if (q < 1) throw std::invalid_argument("rank_formula: q must be >= 1");
  long long p = cv.p();
  if (p <= 0) return 0;
  int128 l_full = cv.a[0];
  for (int i = 1; i <= cv.r; ++i) {
    l_full += int128(cv.a[i]) * binom(n, i);
  }
  int128 cap = int128(std::min(q, p)) * binom(n, cv.r);
  int128 result = std::min(l_full, cap);
  return static_cast<long long>(result);
}

}  // namespace wsat

#endif  // WSAT_COUNT_MATROID_HPP_

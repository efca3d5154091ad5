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

#ifndef WSAT_COMBINATORICS_HPP_
#define WSAT_COMBINATORICS_HPP_

#include <cstdint>
#include <vector>

#include "wsat/binom.hpp"

namespace wsat {

// Advances c (a strictly increasing k-subset of 0..n-1) to its lexicographic
// successor; returns false when c was the last combination.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Lexicographic rank of a k-subset of 0..n-1.
inline long long combination_rank(const std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  long long rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < c[i]; ++v) rank += binom(n - 1 - v, k - 1 - i);
    prev = c[i];
  }
  return rank;
}

// Inverse of combination_rank.
inline std::vector<int> combination_unrank(long long rank, int n, int k) {
  std::vector<int> c(k);
  int v = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      long long block = binom(n - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    c[i] = v++;
  }
  return c;
}

// True if the set of positions of set bits in a precedes that of b in
// lexicographic order (e.g. {0} < {0,1} < {1}).
inline bool lower_index_set(uint64_t a, uint64_t b) {
  while (a && b) {
    int ia = __builtin_ctzll(a);
    int ib = __builtin_ctzll(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Calls fn(subset) for every m-subset of items, in lexicographic order of
// positions. subset is a vector of the chosen values.
template <typename T, typename F>
void for_each_subset_of(const std::vector<T>& items, int m, F&& fn) {
  const int n = static_cast<int>(items.size());
  if (m < 0 || m > n) return;
  std::vector<int> idx = first_combination(m);
  std::vector<T> subset(m);
  do {
    for (int i = 0; i < m; ++i) subset[i] = items[idx[i]];
    fn(subset);
  } while (next_combination(idx, n));
}

}  // namespace wsat

#endif  // WSAT_COMBINATORICS_HPP_

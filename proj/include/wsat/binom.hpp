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

#ifndef WSAT_BINOM_HPP_
#define WSAT_BINOM_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace wsat {

using int128 = __int128;

// Exact binomial coefficient. Throws std::overflow_error if the value does
// not fit in int64 (intermediate products are exact in 128 bits).
inline long long binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int128 result = 1;
  for (long long i = 1; i <= k; ++i) {
    // result * (n - k + i) is at most C(n, i) * n, which overflows 128 bits
    // only for inputs far beyond anything this library accepts.
    result = result * (n - k + i) / i;  // prefix products are C(n-k+i, i)
    if (result > std::numeric_limits<long long>::max()) {
      throw std::overflow_error("binom: value exceeds int64 range");
    }
  }
  return static_cast<long long>(result);
}

// Largest k with C(k, r) <= e. Requires r >= 1, e >= 1.
inline long long largest_k_with_binom_at_most(long long r, long long e) {
  long long k = r;  // C(r, r) = 1 <= e
  while (binom(k + 1, r) <= e) ++k;
  return k;
}

}  // namespace wsat

#endif  // WSAT_BINOM_HPP_

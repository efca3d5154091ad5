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

#include "wsat/kruskal_katona.hpp"

#include "catch_amalgamated.hpp"

using namespace wsat;

TEST_CASE("binom basics") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(60, 30) == 118264581564861424LL);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(largest_k_with_binom_at_most(2, 4) == 3);
  CHECK(largest_k_with_binom_at_most(3, 1) == 3);
  CHECK_THROWS_AS(binom(128, 64), std::overflow_error);
}

TEST_CASE("left-compressed hypergraph base cases") {
  CHECK(left_compressed(2, 3) == Hypergraph::complete(3, 2));
  CHECK(left_compressed(2, 4).edges() ==
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  CHECK(left_compressed(3, 1) == Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(left_compressed(1, 4).edge_count() == 4);
  // lcG(3, 3): complete on [3] plus lcG(2, 2) lifted through vertex 3.
  CHECK(left_compressed(3, 3).edges() ==
        std::vector<Edge>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  CHECK_THROWS_AS(left_compressed(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(left_compressed(2, 0), std::invalid_argument);
}

TEST_CASE("left-compressed hypergraph has exactly e edges") {
  for (int r = 1; r <= 4; ++r) {
    for (long long e = 1; e <= binom(12, r); ++e) {
      CHECK(left_compressed(r, e).edge_count() == e);
    }
  }
}

TEST_CASE("kk shadow bound examples and monotonicity") {
  CHECK(kk_shadow_bound(2, 3, 1) == 3);
  CHECK(kk_shadow_bound(2, 4, 1) == 4);
  for (int r = 2; r <= 3; ++r) {
    for (int m = 1; m < r; ++m) {
      CHECK(kk_shadow_bound(r, 1, m) == binom(r, m));
      for (long long e = 1; e < 20; ++e) {
        CHECK(kk_shadow_bound(r, e + 1, m) >= kk_shadow_bound(r, e, m));
      }
    }
  }
}

TEST_CASE("exhaustive kk verification") {
  KkVerifyReport rep = verify_kk_exhaustive(5, 2, 4, 1);
  CHECK(rep.min_found == 4);
  CHECK(rep.pass);
  CHECK(shadow_size(rep.witness, 1) == 4);

  rep = verify_kk_exhaustive(4, 2, 6, 1);  // only K_4 has 6 edges
  CHECK(rep.min_found == 4);
  CHECK(rep.pass);

  rep = verify_kk_exhaustive(5, 3, 3, 2);
  CHECK(rep.bound == 6);  // shadow of lcG(3, 3), computed by hand
  CHECK(rep.min_found == 6);
  CHECK(rep.pass);

  CHECK_THROWS_AS(verify_kk_exhaustive(8, 2, 14, 1, 1, /*cap=*/1e3L),
                  CapExceeded);
}

TEST_CASE("parallel kk verification merges deterministically") {
  KkVerifyReport a = verify_kk_exhaustive(6, 2, 5, 1, /*workers=*/1);
  KkVerifyReport b = verify_kk_exhaustive(6, 2, 5, 1, /*workers=*/2);
  CHECK(a.min_found == b.min_found);
  CHECK(a.witness == b.witness);
}

TEST_CASE("binomial product inequality") {
  // C(a+b, a) >= ab + 1
  for (long long a = 0; a <= 30; ++a) {
    for (long long b = 0; b <= 30; ++b) {
      CHECK(binom(a + b, a) >= a * b + 1);
    }
  }
}

TEST_CASE("binomial convexity inequality") {
  // (a + b + 1 - x) * C(x, a) >= ab + 1 for a+1 <= x <= a+b
  for (long long a = 1; a <= 12; ++a) {
    for (long long b = 1; b <= 12; ++b) {
      for (long long x = a + 1; x <= a + b; ++x) {
        CHECK((a + b + 1 - x) * binom(x, a) >= a * b + 1);
      }
    }
  }
}

TEST_CASE("f_r_delta lower bound on left-compressed hypergraphs") {
  // For a <= (r-1)(delta-1)+1 and e <= C(r+delta-1, r) - a the value
  // f_{r,delta}(lcG(r, e)) is at least a.
  for (int r = 1; r <= 3; ++r) {
    for (long long delta = 2; delta <= 4; ++delta) {
      for (long long a = 1; a <= (r - 1) * (delta - 1) + 1; ++a) {
        for (long long e = 1; e <= binom(r + delta - 1, r) - a; ++e) {
          CHECK(f_r_delta(left_compressed(r, e), delta) >= a);
        }
      }
    }
  }
}

TEST_CASE("f_r_delta lower bound over enumerated hypergraphs") {
  // Enumeration-based form of the same bound, on instances inside the cap.
  for (int r = 2; r <= 3; ++r) {
    for (long long delta = 2; delta <= 3; ++delta) {
      for (long long a = 1; a <= (r - 1) * (delta - 1) + 1; ++a) {
        long long emax = binom(r + delta - 1, r) - a;
        for (long long e = 1; e <= emax; ++e) {
          if (enumeration_size(7, r, e) > 3e5L) continue;
          HypergraphEnumerator en(7, r, e, /*iso_filter=*/false, 3e5L);
          while (auto h = en.next()) {
            CHECK(f_r_delta(*h, delta) >= a);
          }
        }
      }
    }
  }
}

TEST_CASE("shadow size lower bound via delta star") {
  // |shadow_{r-1}(H)| >= C(r + delta* - 1, r - 1) for non-empty H.
  for (int r = 2; r <= 3; ++r) {
    long long emax = r == 2 ? 6 : 4;
    for (long long e = 1; e <= emax; ++e) {
      HypergraphEnumerator en(7, r, e, /*iso_filter=*/false, 3e5L);
      while (auto h = en.next()) {
        long long d = delta_star(*h);
        CHECK(shadow_size(*h, r - 1) >= binom(r + d - 1, r - 1));
      }
    }
  }
}

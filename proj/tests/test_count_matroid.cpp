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

#include "wsat/count_matroid.hpp"

#include <random>

#include "catch_amalgamated.hpp"
#include "wsat/count_polymatroid.hpp"

using namespace wsat;

namespace {

Hypergraph k(int n) { return Hypergraph::complete(n, 2); }

Hypergraph subset_of(const Hypergraph& host, uint32_t mask) {
  std::vector<Edge> edges;
  for (size_t j = 0; j < host.edges().size(); ++j) {
    if ((mask >> j) & 1) edges.push_back(host.edges()[j]);
  }
  return Hypergraph(host.vertex_count(), host.uniformity(), std::move(edges));
}

}  // namespace

TEST_CASE("eval_L examples") {
  IntCountVector a(2, {-3, 2, 0});
  CHECK(eval_L_int(k(4), a) == 5);
  CHECK(eval_L_int(k(5), a) == 7);
  CHECK(a.p() == 1);

  CountParams p(2, {Rational(-3), Rational(2), Rational(0)});
  CHECK(eval_L(k(4), p) == Rational(5));
  // Multiplicities never change the value.
  CHECK(eval_L(MultiEdgeSet::multiply(k(4), 3), p) == eval_L(k(4), p));
}

TEST_CASE("count params derive q and p") {
  CountParams p(2, {Rational(9) - Rational(40, 3), Rational(8, 3), Rational(0)});
  CHECK(p.q == 3);
  CHECK(p.p == Rational(1));
  CHECK(p.scaled().a == std::vector<long long>{-13, 8, 0});
  CHECK_THROWS_AS(CountParams(2, {Rational(0), Rational(-1), Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("brute force rank of complete graphs") {
  IntCountVector a(2, {-3, 2, 0});
  CHECK(count_matroid_rank_bruteforce(MultiEdgeSet::multiply(k(4), 1), a) == 5);
  CHECK(count_matroid_rank_bruteforce(MultiEdgeSet::multiply(k(5), 1), a) == 7);

  // Empty set has rank 0.
  MultiEdgeSet empty(4, 2, 1, {});
  CHECK(count_matroid_rank_bruteforce(empty, a) == 0);

  // A single edge has rank 1 when p >= 1 and 0 when p <= 0.
  MultiEdgeSet one(4, 2, 1, {{{0, 1}, 1}});
  CHECK(count_matroid_rank_bruteforce(one, a) == 1);
  IntCountVector neg(2, {-5, 2, 0});
  CHECK(neg.p() == -1);
  CHECK(count_matroid_rank_bruteforce(one, neg) == 0);
}

TEST_CASE("rank formula matches examples") {
  IntCountVector a(2, {-3, 2, 0});
  CHECK(count_matroid_rank_formula(4, 1, a) == 5);
  CHECK(count_matroid_rank_formula(5, 1, a) == 7);
  IntCountVector neg(2, {-5, 2, 0});
  CHECK(count_matroid_rank_formula(5, 1, neg) == 0);
  CHECK(count_matroid_rank_formula(5, 2, neg) == 0);
}

TEST_CASE("rank formula equals brute force on a small grid") {
  // The full grid of the acceptance suite is wider; this is a smoke slice.
  for (int n = 3; n <= 4; ++n) {
    for (long long q = 1; q <= 2; ++q) {
      for (long long a1 = 0; a1 <= 2; ++a1) {
        for (long long a2 = 0; a2 <= 2; ++a2) {
          for (long long a0 = -4; a0 <= 2; ++a0) {
            IntCountVector cv(2, {a0, a1, a2});
            long long brute = count_matroid_rank_bruteforce(
                MultiEdgeSet::multiply(k(n), q), cv);
            CHECK(brute == count_matroid_rank_formula(n, q, cv));
          }
        }
      }
    }
  }
}

TEST_CASE("rank is bounded by max(0, L) on random sets") {
  std::mt19937_64 rng(7);
  IntCountVector a(2, {-2, 1, 1});
  Hypergraph host = k(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<Edge, long long> entries;
    for (const Edge& e : host.edges()) {
      long long mult = rng() % 3;  // 0, 1 or 2 copies
      if (mult > 0) entries[e] = mult;
    }
    if (entries.empty()) continue;
    MultiEdgeSet A(5, 2, 2, entries);
    long long rank = count_matroid_rank_bruteforce(A, a);
    long long l = eval_L_int(A.underlying(), a);
    CHECK(rank <= std::max<long long>(0, l));
    CHECK(rank <= A.total_size());
  }
}

TEST_CASE("greedy rank is independent of element order") {
  std::mt19937_64 rng(11);
  IntCountVector a(2, {-3, 2, 0});
  MultiEdgeSet A = MultiEdgeSet::multiply(k(4), 2);
  CountMatroidOracle oracle(A, a);
  long long canonical = oracle.rank();
  std::vector<int> order;
  for (int j = 0; j < oracle.support_size(); ++j) {
    order.push_back(j);
    order.push_back(j);
  }
  for (int trial = 0; trial < 30; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(oracle.rank_with_order(order) == canonical);
  }

  // The non-incremental independence check agrees on hand values: a simple
  // triangle is independent, its doubled version is not (L = 3 < 6).
  IntCountVector tri_a(2, {-3, 2, 0});
  Hypergraph triangle = Hypergraph::complete(3, 2);
  CountMatroidOracle tri(MultiEdgeSet::multiply(triangle, 2), tri_a);
  CHECK(tri.counts_independent({1, 1, 1}));
  CHECK(!tri.counts_independent({2, 2, 2}));
}

TEST_CASE("poly_rho examples") {
  CountParams p53(2, {Rational(9) - Rational(40, 3), Rational(8, 3), Rational(0)});
  Hypergraph k5_minus(5, 2, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                             {1, 4}, {2, 3}, {2, 4}});  // K_5 minus {3,4}
  CHECK(poly_rho(k5_minus, p53) == Rational(9));
  CHECK(poly_rho(Hypergraph::empty(5, 2), p53) == Rational(0));

  // rho never exceeds the edge count.
  CountParams simple(2, {Rational(0), Rational(1), Rational(0)});
  for (uint32_t mask = 0; mask < 64; mask += 7) {
    Hypergraph g = subset_of(k(4), mask);
    CHECK(poly_rho(g, simple) <= Rational(g.edge_count()));
  }
}

TEST_CASE("poly rank formula") {
  CountParams p(2, {Rational(-3), Rational(2), Rational(0)});
  CHECK(poly_rank_formula(5, p) == Rational(7));
  CountParams zero(2, {Rational(0), Rational(0), Rational(0)});
  CHECK(poly_rank_formula(5, zero) == Rational(0));
  CountParams p53(2, {Rational(9) - Rational(40, 3), Rational(8, 3), Rational(0)});
  CHECK(poly_rank_formula(5, p53) == Rational(9));
  // Formula agrees with brute force on the complete host.
  CHECK(poly_rank_formula(5, p53) == poly_rho(k(5), p53));
  CHECK(poly_rank_formula(4, p) == poly_rho(k(4), p));
}

TEST_CASE("weak saturation condition for cliques") {
  // Triangle, gamma = 1: a = (-1, 1, 0).
  CountParams pk3 = gamma_params(Hypergraph::complete(3, 2), 2, Rational(1));
  CHECK(pk3.a[0] == Rational(-1));
  WsatConditionReport rep = verify_wsat_condition(k(3), 5, pk3);
  CHECK(rep.applicable);
  CHECK(rep.pass);
  CHECK(rep.bound == Rational(4));
  CHECK(rep.copies_checked == 10);

  // K_4, gamma = 2: a = (-3, 2, 0).
  CountParams pk4 = gamma_params(k(4), 2, Rational(2));
  CHECK(pk4.a[0] == Rational(-3));
  rep = verify_wsat_condition(k(4), 6, pk4);
  CHECK(rep.applicable);
  CHECK(rep.pass);
  CHECK(rep.bound == Rational(9));

  // A deliberately oversized a_1 breaks the deletion condition.
  CountParams bad(2, {Rational(0), Rational(5), Rational(0)});
  rep = verify_wsat_condition(k(3), 4, bad);
  CHECK(!rep.pass);
  REQUIRE(rep.failure.has_value());
  CHECK(rep.failure->rho_full != rep.failure->rho_minus);
}

TEST_CASE("dependency witness exists whenever rho drops below the size") {
  CountParams p(2, {Rational(-3), Rational(2), Rational(0)});
  for (uint32_t mask = 1; mask < 64; ++mask) {
    Hypergraph f = subset_of(k(4), mask);
    if (poly_rho(f, p) < Rational(f.edge_count())) {
      auto witness = find_dependency_witness(f, p);
      REQUIRE(witness.has_value());
      CHECK(eval_L(*witness, p) < Rational(witness->edge_count()));
    }
  }
}

TEST_CASE("scaling a by a positive rational scales rho and keeps the pass") {
  CountParams p = gamma_params(k(4), 2, Rational(2));
  std::vector<Rational> scaled;
  for (const Rational& x : p.a) scaled.push_back(x * Rational(2, 3));
  CountParams ps(2, scaled);
  for (uint32_t mask : {0x3u, 0x7u, 0x15u, 0x3fu}) {
    Hypergraph g = subset_of(k(4), mask);
    CHECK(poly_rho(g, ps) == poly_rho(g, p) * Rational(2, 3));
  }
  CHECK(verify_wsat_condition(k(4), 6, ps).pass ==
        verify_wsat_condition(k(4), 6, p).pass);
}

TEST_CASE("polymatroid axioms hold exhaustively on a 6-edge host") {
  CountParams p = gamma_params(k(4), 2, Rational(2));
  Hypergraph host = k(4);
  std::vector<Rational> rho(64);
  for (uint32_t mask = 0; mask < 64; ++mask) {
    rho[mask] = poly_rho(subset_of(host, mask), p);
  }
  for (uint32_t a = 0; a < 64; ++a) {
    CHECK(rho[a] >= Rational(0));
    CHECK(rho[a] <= Rational(__builtin_popcount(a)));
    for (uint32_t b = 0; b < 64; ++b) {
      if ((a & b) == a) CHECK(rho[a] <= rho[b]);  // monotone on subsets
      CHECK(rho[a | b] + rho[a & b] <= rho[a] + rho[b]);
    }
  }
}

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

#include "wsat/bounds.hpp"

#include "catch_amalgamated.hpp"
#include "wsat/corpus.hpp"

using namespace wsat;

namespace {

Hypergraph kq(int n, int r = 2) { return Hypergraph::complete(n, r); }

}  // namespace

TEST_CASE("gamma subgraph form on cliques") {
  GammaSubgraphResult k5 = gamma_subgraph(kq(5), 2);
  CHECK(k5.value == Rational(8, 3));
  // Witness re-evaluates to the value: a single edge here.
  CHECK(k5.witness.edge_count() == 1);
  CHECK(Rational(kq(5).edge_count() - k5.witness.edge_count() - 1,
                 shadow_size(kq(5), 1) - shadow_size(k5.witness, 1)) ==
        k5.value);

  CHECK(gamma_subgraph(kq(4), 2).value == Rational(2));
  CHECK(gamma_subgraph(kq(3), 2).value == Rational(1));
  CHECK(gamma_subgraph(kq(4, 3), 3).value == Rational(2, 3));

  CHECK_THROWS_AS(gamma_subgraph(kq(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(gamma_subgraph(kq(3), 3), std::invalid_argument);
}

TEST_CASE("gamma shadow form matches and yields the singleton witness") {
  GammaShadowResult k5 = gamma_shadow(kq(5), 2);
  CHECK(k5.value == Rational(8, 3));
  CHECK(k5.witness == std::vector<Edge>{{0}, {1}, {2}});
  CHECK(gamma_shadow(kq(4), 2).value == Rational(2));
  CHECK(gamma_shadow(kq(4, 3), 3).value == Rational(2, 3));
}

TEST_CASE("gamma forms agree across the small corpus") {
  for (int r : {2, 3}) {
    for (const Hypergraph& h : small_corpus(r, 4)) {
      if (sparseness(h) < 2) continue;
      CHECK(gamma_subgraph(h, sparseness(h)).value ==
            gamma_shadow(h, sparseness(h)).value);
    }
  }
}

TEST_CASE("graph gamma^m values") {
  CHECK(gamma_graph_m(kq(5), 1).value == Rational(9, 4));
  CHECK(gamma_graph_m(kq(5), 2).value == Rational(8, 3));
  CHECK(gamma_graph_m(kq(3), 1).value == Rational(1));
  // gamma^1 minimizes over a superset of gamma^2's feasible sets.
  for (const Hypergraph& h : small_corpus(2, 5)) {
    if (h.vertex_count() < 3) continue;
    CHECK(gamma_graph_m(h, 1).value <= gamma_graph_m(h, 2).value);
  }
  // gamma_{2,H} equals gamma^2_H for graphs.
  for (const Hypergraph& h : small_corpus(2, 5)) {
    if (sparseness(h) != 2 || h.vertex_count() < 3) continue;
    CHECK(gamma_subgraph(h, 2).value == gamma_graph_m(h, 2).value);
  }
  CHECK_THROWS_AS(gamma_graph_m(Hypergraph(3, 2, {{0, 1}}), 1),
                  std::invalid_argument);  // isolated vertex
}

TEST_CASE("gamma lower bound values") {
  CHECK(lb_gamma(kq(3), 5) == Rational(4));  // n - 1
  CHECK(lb_gamma(kq(3), 7) == Rational(6));
  CHECK(lb_gamma(kq(4), 6) == Rational(9));  // 2n - 3
  CHECK(lb_gamma(kq(5), 7) == Rational(43, 3));
  CHECK(Rational(43, 3).ceil() == 15);
  CHECK_THROWS_AS(lb_gamma(kq(4), 3), std::invalid_argument);
}

TEST_CASE("delta star lower bound values") {
  CHECK(lb_delta_star(kq(4), 4) == Rational(5));
  CHECK(lb_delta_star(kq(3), 5) == Rational(10, 3));  // 2n/3
  // delta* = 1 makes the bound vanish.
  Hypergraph path(3, 2, {{0, 1}, {1, 2}});
  CHECK(lb_delta_star(path, 4) == Rational(0));
}

TEST_CASE("trivial lower bound values") {
  CHECK(lb_trivial(kq(4), 1, 6) == Rational(6));
  CHECK(lb_trivial(kq(4, 3), 2, 6) == Rational(5));
  Hypergraph matching(4, 2, {{0, 1}, {2, 3}});
  CHECK(lb_trivial(matching, 1, 5) == Rational(0));  // delta_1 = 1
  CHECK(lb_trivial(kq(4), 0, 6) == Rational(5));     // |E| - 1
}

TEST_CASE("gamma versus delta-star inequality") {
  GammaDeltaReport k5 = verify_gamma_delta_inequality(kq(5));
  CHECK(k5.gamma == Rational(8, 3));
  CHECK(k5.rhs == Rational(9, 5));  // 2 - 1/C(5,1)
  CHECK(k5.holds);

  GammaDeltaReport k4 = verify_gamma_delta_inequality(kq(4));
  CHECK(k4.gamma == Rational(2));
  CHECK(k4.rhs == Rational(5, 4));
  CHECK(k4.holds);

  GammaDeltaReport k43 = verify_gamma_delta_inequality(kq(4, 3));
  CHECK(k43.gamma == Rational(2, 3));
  CHECK(k43.rhs == Rational(1, 2));
  CHECK(k43.holds);

  CHECK_THROWS_AS(verify_gamma_delta_inequality(Hypergraph(3, 2, {{0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("eta for s = r patterns and single edges") {
  EtaReport k4 = eta(kq(4));
  CHECK(k4.value == 2);
  CHECK(k4.exact);

  EtaReport k3 = eta(kq(3));
  CHECK(k3.value == 1);
  CHECK(k3.exact);

  // A single edge closes everything; eta = 0.
  EtaReport single = eta(Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(single.value == 0);
  CHECK(single.exact);
}

TEST_CASE("eta by link-family search for a 3-uniform pattern with s = 2") {
  // H = {012, 013, 023}: links are a triangle (at vertex 0) and 2-edge
  // paths; the path alone already closes everything from one edge.
  Hypergraph h(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  REQUIRE(sparseness(h) == 2);
  EtaReport rep = eta(h, 6);
  CHECK(rep.value == 1);
  CHECK(!rep.exact);
  CHECK(rep.status.find("upper bound") != std::string::npos);
}

TEST_CASE("eta bounds") {
  auto [lo4, hi4] = eta_bounds(kq(4), 6, eta(kq(4)));
  CHECK(lo4.value == Rational(6));  // 2/2 * 6
  CHECK(hi4.value == Rational(12));
  auto [lo3, hi3] = eta_bounds(kq(3), 5, eta(kq(3)));
  CHECK(lo3.value == Rational(5, 2));
  CHECK(hi3.value == Rational(5));
  // s = r reduces the lower value to the trivial bound with m = r - 1.
  CHECK(lo4.value == lb_trivial(kq(4), 1, 6));
  // The eta lower bound sits below the exact value.
  CHECK(lo4.value <= Rational(wsat_exact(6, Family({kq(4)})).value));
  CHECK(lo3.value <= Rational(wsat_exact(5, Family({kq(3)})).value));
}

TEST_CASE("conjecture probe at s = r reduces to the proved inequality") {
  std::vector<Hypergraph> corpus = small_corpus(2, 5);
  ProbeReport rep = conjecture_probe(2, 2, 4, corpus);  // delta = 3
  CHECK(rep.delta == 3);
  CHECK(rep.rhs == Rational(5, 4));
  CHECK(!rep.entries.empty());  // K_4 qualifies among others
  CHECK(rep.violations == 0);
  REQUIRE(rep.min_slack.has_value());
  CHECK(*rep.min_slack >= Rational(0));

  ProbeReport empty = conjecture_probe(3, 2, 5, {});
  CHECK(empty.entries.empty());
  CHECK(!empty.min_slack.has_value());
}

TEST_CASE("clique gap against the delta-star bound shrinks, normalized") {
  // For H = K^r_{r-1+delta} the exact value is C(n,r) - C(n-delta+1,r); the
  // delta-star bound stays below it, and the gap normalized by C(n,r) is
  // nonincreasing on the pinned ranges.
  struct Case {
    int r;
    long long delta;
    int n_from, n_to;
  };
  for (const Case& c :
       {Case{2, 2, 5, 11}, Case{2, 3, 7, 13}, Case{3, 2, 7, 13}}) {
    Hypergraph h =
        Hypergraph::complete(c.r - 1 + static_cast<int>(c.delta), c.r);
    Rational prev_norm;
    bool first = true;
    for (int n = c.n_from; n <= c.n_to; ++n) {
      Rational exact(binom(n, c.r) - binom(n - c.delta + 1, c.r));
      Rational gap = exact - lb_delta_star(h, n);
      CHECK(gap >= Rational(0));
      Rational norm = gap / Rational(binom(n, c.r));
      if (!first) CHECK(norm <= prev_norm);
      prev_norm = norm;
      first = false;
    }
  }
}

TEST_CASE("best lower bound aggregates") {
  CHECK(best_lower_bound(kq(3), 5) == 4);
  CHECK(best_lower_bound(kq(4), 6) == 9);
  CHECK(best_lower_bound(kq(5), 7) == 15);  // ceil(43/3)
  Family fam({kq(3), kq(3)});
  CHECK(best_lower_bound(fam, 6) >= 2);
}

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

#include "wsat/constructions.hpp"

#include "catch_amalgamated.hpp"
#include "wsat/bounds.hpp"
#include "wsat/corpus.hpp"

using namespace wsat;

namespace {

std::vector<Vertex> all_vertices(const Hypergraph& h) {
  std::vector<Vertex> v(h.vertex_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("clique sizes") {
  CHECK(clique(4, 2).edge_count() == 6);
  CHECK(clique(5, 3).edge_count() == 10);
  CHECK(clique(3, 3).edge_count() == 1);
}

TEST_CASE("greedy cover validity and ratio") {
  CoverDesign c = greedy_cover(6, 3, 2);
  CHECK(c.valid());
  CHECK(static_cast<long long>(c.blocks.size()) >= 5);  // ceil(15/3)

  CoverDesign kt = greedy_cover(5, 2, 2);
  CHECK(kt.valid());
  CHECK(kt.blocks.size() == 10);  // k = t keeps every t-subset as a block

  CoverDesign c7 = greedy_cover(7, 3, 2);
  CHECK(c7.valid());
  CHECK(c7.ratio() >= Rational(1));

  CHECK_THROWS_AS(greedy_cover(3, 4, 2), std::invalid_argument);
}

TEST_CASE("construction pattern family from K_4") {
  // Base K_4 with P = V(G): coefficient (6-1)/C(4,1) = 5/4, which equals
  // delta/r - 1/C(r+delta-1, r-1) for r = 2, delta = 3.
  Hypergraph g = clique(4, 2);
  ConstructionH c = build_construction_H(g, all_vertices(g));
  CHECK(c.s == 2);
  CHECK(c.delta == 3);
  CHECK(c.tilde_edges == 6);
  CHECK(c.coefficient == Rational(5, 4));
  CHECK(c.coefficient == Rational(3, 2) - Rational(1, 4));
  CHECK(c.h0.vertex_count() == 8);
  CHECK(c.h0.edge_count() == 12);  // K_4 plus the mirror clique
  CHECK(c.stages.size() == 1 + 16);  // C(8,2) - 12 missing edges
  // The union exceeds the vertex cap here, so only the family is emitted.
  CHECK(!c.pattern_union.has_value());
}

TEST_CASE("construction pattern family from K_3 materializes the union") {
  Hypergraph g = clique(3, 2);
  ConstructionH c = build_construction_H(g, all_vertices(g));
  CHECK(c.s == 2);
  CHECK(c.delta == 2);
  CHECK(c.coefficient == Rational(2, 3));
  CHECK(c.coefficient == Rational(1) - Rational(1, 3));
  REQUIRE(c.pattern_union.has_value());
  CHECK(c.pattern_union->vertex_count() == 3 + 10 * 6);
  CHECK(sparseness(*c.pattern_union) == 2);
  CHECK(delta_m(*c.pattern_union, 1) == 2);
}

TEST_CASE("construction rejects P with uncovered shadow subsets") {
  // A path 0-1-2-3 with s = 2 has shadow {0..3} but P = {0, 3} is fine;
  // use a graph missing a singleton instead: vertex 3 isolated.
  Hypergraph g(4, 2, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_WITH(build_construction_H(g, {0, 1, 3}),
                    Catch::Matchers::ContainsSubstring("outside the shadow"));
}

TEST_CASE("arbitrary sparseness base hypergraph") {
  ArbitrarySparsenessBase b = corollary_s_arbitrary_G(3, 2, 4);
  CHECK(b.delta == 3);  // C(3, 2)
  CHECK(b.g.vertex_count() == 10);
  CHECK(sparseness(b.g) == 2);
  CHECK(delta_m(b.g, 1) == 3);
  CHECK(shadow_size(b.g, 1) == 10);

  ArbitrarySparsenessBase g2 = corollary_s_arbitrary_G(2, 2, 3);
  CHECK(g2.delta == 2);  // C(2, 1)
  CHECK(sparseness(g2.g) == 2);

  CHECK_THROWS_AS(corollary_s_arbitrary_G(2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(corollary_s_arbitrary_G(3, 2, 3), std::invalid_argument);
}

TEST_CASE("conjectured bound holds on the arbitrary-sparseness instances") {
  ArbitrarySparsenessBase b = corollary_s_arbitrary_G(3, 2, 4);
  ProbeReport rep = conjecture_probe(3, 2, 4, {b.g});
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.rhs == Rational(3, 3) - Rational(1, 4));
  CHECK(rep.violations == 0);

  // A larger instance: k = 5 gives delta = C(4,2) = 6 on 12 vertices.
  ArbitrarySparsenessBase b5 = corollary_s_arbitrary_G(3, 2, 5);
  CHECK(b5.delta == 6);
  ProbeReport rep5 = conjecture_probe(3, 2, 5, {b5.g});
  REQUIRE(rep5.entries.size() == 1);
  CHECK(rep5.rhs == Rational(2) - Rational(1, 5));
  CHECK(rep5.violations == 0);
}

TEST_CASE("conjecture probe sweeps the 3-uniform corpus without violations") {
  // s = 2, delta_1 = 3 patterns on up to 5 vertices (the vertex star
  // qualifies, among others); the probed inequality must never fail.
  std::vector<Hypergraph> corpus;
  for (const Hypergraph& h : small_corpus(3, 5)) corpus.push_back(h);
  ProbeReport rep = conjecture_probe(3, 2, 4, corpus);
  CHECK(!rep.entries.empty());
  CHECK(rep.violations == 0);
  REQUIRE(rep.min_slack.has_value());
  CHECK(*rep.min_slack >= Rational(0));
}

TEST_CASE("saturated host closes to the complete graph for K_3 at n = 8") {
  Hypergraph g = clique(3, 2);
  SaturatedHost host = build_saturated_host(g, all_vertices(g), 8);
  CHECK(host.cover.valid());
  ClosureResult res = closure(host.host, host.construction.family());
  CHECK(res.closed == Hypergraph::complete(8, 2));
  CHECK(replay_certificate(res.certificate, host.construction.family(),
                           res.closed));
}

TEST_CASE("saturated host closes to the complete graph for K_4 at n = 8") {
  Hypergraph g = clique(4, 2);
  SaturatedHost host = build_saturated_host(g, all_vertices(g), 8);
  ClosureResult res = closure(host.host, host.construction.family());
  CHECK(res.closed == Hypergraph::complete(8, 2));
}

TEST_CASE("saturated host edge count tracks the target coefficient") {
  Hypergraph g = clique(3, 2);
  Rational max_slack(0);
  for (int n = 8; n <= 14; ++n) {
    SaturatedHost host = build_saturated_host(g, all_vertices(g), n);
    Rational slack = Rational(host.host.edge_count()) -
                     host.target_coefficient * Rational(n);
    if (slack > max_slack) max_slack = slack;
  }
  // Lower-order fluctuation only: bounded by a small constant.
  CHECK(max_slack <= Rational(6));
  CHECK_THROWS_AS(build_saturated_host(g, all_vertices(g), 5),
                  std::invalid_argument);
}

TEST_CASE("shell host contains the prescribed edges and closes") {
  Hypergraph base = Hypergraph::empty(6, 2);
  Hypergraph shell = shell_host(6, 2, 2, 3, base);
  // Edges with at most one endpoint outside Z = {0,1,2}.
  for (const Edge& e : shell.edges()) {
    CHECK((e[0] < 3 || e[1] < 3));
  }
  CHECK(shell.edge_count() == 3 + 3 * 3);

  Hypergraph k3 = clique(3, 2);
  Hypergraph host = shell_host(6, 2, 2, 1, base, &k3);
  ClosureResult res = closure(host, Family({k3}));
  CHECK(res.closed == Hypergraph::complete(6, 2));

  CHECK_THROWS_AS(shell_host(6, 2, 2, 0, base, &k3), std::invalid_argument);
}

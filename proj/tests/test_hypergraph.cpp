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

#include "wsat/hypergraph.hpp"

#include <set>

#include "catch_amalgamated.hpp"
#include "wsat/json_io.hpp"

using namespace wsat;

namespace {

Hypergraph graph(int n, std::vector<Edge> edges) {
  return Hypergraph(n, 2, std::move(edges));
}

// Independent sparseness oracle: direct search over all vertex subsets for
// the smallest one contained in exactly one edge.
int sparseness_direct(const Hypergraph& h) {
  if (h.is_empty()) return -1;
  const int n = h.vertex_count();
  REQUIRE(n <= 16);
  int best = h.uniformity() + 1;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    long long count = 0;
    for (const Edge& e : h.edges()) {
      if ((edge_mask(e) & mask) == mask) ++count;
    }
    if (count == 1) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
  Hypergraph h = graph(4, {{3, 1}, {0, 1}, {1, 3}});
  CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 3}});
  CHECK_THROWS_AS(graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(65, 2, {}), std::invalid_argument);
  CHECK(Hypergraph::complete(5, 3).edge_count() == 10);
  CHECK(Hypergraph::complete(4, 2).edge_count() == 6);
  CHECK(Hypergraph::complete(3, 3).edge_count() == 1);
}

TEST_CASE("shadow basics") {
  CHECK(shadow(Hypergraph::complete(3, 2), 1) ==
        std::vector<Edge>{{0}, {1}, {2}});
  CHECK(shadow(Hypergraph::complete(4, 3), 2).size() == 6);
  Hypergraph single(3, 3, {{0, 1, 2}});
  CHECK(shadow(single, 2) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(shadow(single, 4), std::invalid_argument);
  CHECK_THROWS_AS(shadow(single, -1), std::invalid_argument);
  // 0-shadow of a non-empty hypergraph is the singleton {empty set}.
  CHECK(shadow(single, 0) == std::vector<Edge>{{}});
  CHECK(shadow(Hypergraph::empty(3, 2), 0).empty());
}

TEST_CASE("shadow size bounds and r-shadow identity") {
  for (int n : {4, 5}) {
    HypergraphEnumerator en(n, 2, 3);
    while (auto h = en.next()) {
      for (int m = 0; m <= 2; ++m) {
        CHECK(shadow_size(*h, m) <= binom(n, m));
      }
      CHECK(shadow(*h, 2) == h->edges());
    }
  }
}

TEST_CASE("link examples") {
  Hypergraph k4 = Hypergraph::complete(4, 2);
  Hypergraph l = link(k4, {0});
  CHECK(l.uniformity() == 1);
  CHECK(l.edges() == std::vector<Edge>{{1}, {2}, {3}});

  Hypergraph h(4, 3, {{0, 1, 2}, {0, 1, 3}});
  CHECK(link(h, {0, 1}).edges() == std::vector<Edge>{{2}, {3}});
  CHECK(link(h, {2, 3}).is_empty());
  CHECK_THROWS_AS(link(Hypergraph::complete(3, 2), {0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("delta_m and delta_star") {
  CHECK(delta_m(Hypergraph::complete(4, 2), 1) == 3);
  CHECK(delta_star(Hypergraph::complete(4, 2)) == 3);
  CHECK(delta_m(Hypergraph::empty(4, 2), 1) == -1);
  CHECK(delta_star(Hypergraph::empty(4, 2)) == 0);
  CHECK(delta_m(graph(4, {{0, 1}, {2, 3}}), 1) == 1);
  // delta_0 counts all edges.
  for (int e = 1; e <= 4; ++e) {
    HypergraphEnumerator en(4, 2, e);
    while (auto h = en.next()) CHECK(delta_m(*h, 0) == h->edge_count());
  }
}

TEST_CASE("sparseness matches paper conventions and the direct oracle") {
  CHECK(sparseness(Hypergraph(3, 3, {{0, 1, 2}})) == 0);
  CHECK(sparseness(Hypergraph::complete(3, 2)) == 2);
  CHECK(sparseness(Hypergraph::complete(4, 2)) == 2);
  CHECK(sparseness(Hypergraph::empty(5, 2)) == -1);

  // delta-chain values for the triangle: delta_0 = 3, delta_1 = 2,
  // delta_2 = 1.
  Hypergraph k3 = Hypergraph::complete(3, 2);
  CHECK(delta_m(k3, 0) == 3);
  CHECK(delta_m(k3, 1) == 2);
  CHECK(delta_m(k3, 2) == 1);

  for (int e = 1; e <= 5; ++e) {
    HypergraphEnumerator en(5, 2, e);
    while (auto h = en.next()) CHECK(sparseness(*h) == sparseness_direct(*h));
  }
  for (int e = 1; e <= 4; ++e) {
    HypergraphEnumerator en(5, 3, e);
    while (auto h = en.next()) CHECK(sparseness(*h) == sparseness_direct(*h));
  }
}

TEST_CASE("f_r_delta examples and the two-form identity") {
  CHECK(f_r_delta(Hypergraph::complete(4, 2), 3) == 0);
  CHECK(f_r_delta(graph(3, {{0, 1}, {0, 2}}), 2) == 2);
  CHECK(f_r_delta(Hypergraph::empty(4, 2), 7) == 0);
  CHECK_THROWS_AS(f_r_delta(Hypergraph::empty(4, 2), 0),
                  std::invalid_argument);
  // The closed formula and the per-shadow sum are asserted equal inside
  // f_r_delta; sweep it over enumerated hypergraphs.
  for (int n = 4; n <= 6; ++n) {
    for (int e = 1; e <= 4; ++e) {
      HypergraphEnumerator en(n, 2, e);
      while (auto h = en.next()) {
        for (long long d = 1; d <= 3; ++d) CHECK_NOTHROW(f_r_delta(*h, d));
      }
    }
  }
}

TEST_CASE("double counting identity") {
  for (int e = 1; e <= 6; ++e) {
    HypergraphEnumerator en(5, 3, e, /*iso_filter=*/true);
    while (auto h = en.next()) {
      long long sum = 0;
      for (const Edge& u : shadow(*h, 2)) sum += link_size(*h, u);
      CHECK(sum == 3 * h->edge_count());
    }
  }
}

TEST_CASE("disjoint union") {
  Hypergraph k3 = Hypergraph::complete(3, 2);
  Hypergraph u = disjoint_union({k3, k3});
  CHECK(u.vertex_count() == 6);
  CHECK(u.edge_count() == 6);
  CHECK(u.contains({3, 4}));

  Hypergraph single = disjoint_union({graph(2, {{0, 1}})});
  CHECK(single.edge_count() == 1);

  Hypergraph p = graph(3, {{0, 1}, {1, 2}});
  CHECK(disjoint_union({k3, p, k3}).edge_count() ==
        k3.edge_count() * 2 + p.edge_count());
  CHECK_THROWS_AS(disjoint_union({k3, Hypergraph::complete(4, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(disjoint_union({}), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  {
    HypergraphEnumerator en(3, 2, 3);
    int count = 0;
    while (auto h = en.next()) {
      ++count;
      CHECK(*h == Hypergraph::complete(3, 2));
    }
    CHECK(count == 1);
  }
  {
    HypergraphEnumerator en(4, 2, 2);
    int count = 0;
    while (en.next()) ++count;
    CHECK(count == 15);  // C(C(4,2), 2)
  }
  {
    // 3-edge graphs on up to 4 vertices: triangle, path, star.
    HypergraphEnumerator en(4, 2, 3, /*iso_filter=*/true);
    int count = 0;
    while (en.next()) ++count;
    CHECK(count == 3);
  }
  CHECK_THROWS_AS(HypergraphEnumerator(10, 2, 20, false, /*cap=*/1e4L),
                  CapExceeded);
}

TEST_CASE("canonical form and isomorphism") {
  Hypergraph a = graph(4, {{0, 1}, {1, 2}});
  Hypergraph b = graph(4, {{2, 3}, {1, 3}});
  CHECK(isomorphic(a, b));
  CHECK(!isomorphic(a, graph(4, {{0, 1}, {2, 3}})));
  CHECK(canonical_key(a) == canonical_key(b));
  // Isolated vertices do not affect the class.
  CHECK(isomorphic(graph(7, {{5, 6}}), graph(2, {{0, 1}})));
}

TEST_CASE("hypergraph json format round trip and strictness") {
  Hypergraph h(4, 2, {{0, 1}, {0, 2}, {1, 3}}, "demo");
  json j = hypergraph_to_json(h);
  CHECK(hypergraph_from_json(j) == h);
  CHECK(j["edges"].size() == 3);

  json bad = j;
  bad["edges"][0] = {1, 0};
  CHECK_THROWS_AS(hypergraph_from_json(bad), std::invalid_argument);

  json outoforder = j;
  std::swap(outoforder["edges"][0], outoforder["edges"][1]);
  CHECK_THROWS_AS(hypergraph_from_json(outoforder), std::invalid_argument);

  json dup = j;
  dup["edges"].push_back({1, 3});
  CHECK_THROWS_AS(hypergraph_from_json(dup), std::invalid_argument);
}

TEST_CASE("count params json round trip") {
  CountParams p(2, {Rational(9) - Rational(40, 3), Rational(8, 3), Rational(0)});
  json j = count_params_to_json(p);
  CHECK(j["a"][1] == "8/3");
  CountParams back = count_params_from_json(j);
  CHECK(back.a == p.a);
  CHECK(back.q == 3);

  Hypergraph labelled(3, 2, {{0, 1}}, "probe");
  CHECK(hypergraph_from_json(hypergraph_to_json(labelled)).label() == "probe");
}

TEST_CASE("rational arithmetic") {
  Rational a(8, 3), b(-13, 3);
  CHECK((a + b) == Rational(-5, 3));
  CHECK((a * b) == Rational(-104, 9));
  CHECK(a > b);
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(43, 3).ceil() == 15);
  CHECK(Rational(43, 3).floor() == 14);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational::parse("-13/3") == b);
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(b.to_string() == "-13/3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

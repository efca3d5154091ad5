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

#ifndef WSAT_ACCEPTANCE_HPP_
#define WSAT_ACCEPTANCE_HPP_

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wsat/bounds.hpp"
#include "wsat/constructions.hpp"
#include "wsat/corpus.hpp"
#include "wsat/count_matroid.hpp"
#include "wsat/count_polymatroid.hpp"
#include "wsat/kruskal_katona.hpp"
#include "wsat/rhosat.hpp"
#include "wsat/wsat_engine.hpp"

namespace wsat {

struct AcceptanceOptions {
  int workers = 2;
  uint64_t seed = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

namespace acceptance_detail {

inline WsatOptions engine_options(const AcceptanceOptions& opts,
                                  long long lower_bound) {
  WsatOptions w;
  w.workers = opts.workers;
  w.seed = opts.seed;
  w.lower_bound = lower_bound;
  return w;
}

// Exact search from edge count zero: acceptance compares bounds against
// these values, so they must not be seeded with the bounds under test.
inline long long wsat_value(const Hypergraph& h, int n,
                            const AcceptanceOptions& opts) {
  Family fam({h});
  return wsat_exact(n, fam, engine_options(opts, 0)).value;
}

}  // namespace acceptance_detail

// 1. wsat(n, K_{delta+1}) = (delta-1) n - C(delta, 2) for delta in {2, 3}.
inline CriterionResult criterion_clique_graphs(const AcceptanceOptions& opts) {
  CriterionResult res{1, "clique graph formula", true, "", 0};
  std::ostringstream out;
  for (long long delta : {2, 3}) {
    Hypergraph h = Hypergraph::complete(static_cast<int>(delta) + 1, 2);
    for (int n = static_cast<int>(delta) + 1; n <= 7; ++n) {
      long long expected = (delta - 1) * n - binom(delta, 2);
      long long got = acceptance_detail::wsat_value(h, n, opts);
      if (got != expected) {
        res.pass = false;
        out << " K_" << delta + 1 << "@n=" << n << ": " << got
            << " != " << expected;
      }
    }
  }
  res.details = res.pass ? "delta in {2,3}, n up to 7" : out.str();
  return res;
}

// 2. wsat(n, K_4^3) = C(n,3) - C(n-1,3) for n in 4..6.
inline CriterionResult criterion_clique_hypergraphs(
    const AcceptanceOptions& opts) {
  CriterionResult res{2, "clique hypergraph formula", true, "", 0};
  std::ostringstream out;
  Hypergraph h = Hypergraph::complete(4, 3);
  for (int n = 4; n <= 6; ++n) {
    long long expected = binom(n, 3) - binom(n - 1, 3);
    long long got = acceptance_detail::wsat_value(h, n, opts);
    if (got != expected) {
      res.pass = false;
      out << " n=" << n << ": " << got << " != " << expected;
    }
  }
  res.details = res.pass ? "K_4^3, n in 4..6" : out.str();
  return res;
}

// 3. gamma_subgraph = gamma_shadow corpus-wide; gamma^1_{K_5} = 9/4,
//    gamma^2_{K_5} = 8/3.
inline CriterionResult criterion_gamma_identities(const AcceptanceOptions&) {
  CriterionResult res{3, "gamma identities", true, "", 0};
  long long checked = 0;
  std::ostringstream out;
  for (int r : {2, 3}) {
    for (const Hypergraph& h : small_corpus(r, 5)) {
      int s = sparseness(h);
      if (s < 2) continue;
      ++checked;
      if (gamma_subgraph(h, s).value != gamma_shadow(h, s).value) {
        res.pass = false;
        out << " mismatch at " << canonical_key(h);
      }
    }
  }
  Hypergraph k5 = Hypergraph::complete(5, 2);
  if (gamma_graph_m(k5, 1).value != Rational(9, 4)) {
    res.pass = false;
    out << " gamma^1(K_5) wrong";
  }
  if (gamma_graph_m(k5, 2).value != Rational(8, 3)) {
    res.pass = false;
    out << " gamma^2(K_5) wrong";
  }
  res.details = res.pass
                    ? "two-form equality on " + std::to_string(checked) +
                          " corpus patterns; K_5 values exact"
                    : out.str();
  return res;
}

// 4. gamma_{r,H} >= delta/r - 1/C(r+delta-1, r-1) for corpus H with
//    delta* >= 2.
inline CriterionResult criterion_gamma_delta(const AcceptanceOptions&) {
  CriterionResult res{4, "gamma lower bound via delta*", true, "", 0};
  long long checked = 0;
  std::ostringstream out;
  for (int r : {2, 3}) {
    for (const Hypergraph& h : small_corpus(r, 5)) {
      if (delta_star(h) < 2) continue;
      ++checked;
      GammaDeltaReport rep = verify_gamma_delta_inequality(h);
      if (!rep.holds) {
        res.pass = false;
        out << " violated at " << canonical_key(h);
      }
    }
  }
  res.details = res.pass ? std::to_string(checked) + " patterns, 0 violations"
                         : out.str();
  return res;
}

// 5. ceil(lb_delta_star) <= ceil(lb_gamma) <= wsat on corpus pairs.
inline CriterionResult criterion_sandwich(const AcceptanceOptions& opts) {
  CriterionResult res{5, "bound sandwich against exact search", true, "", 0};
  long long pairs = 0;
  std::ostringstream out;
  for (int r : {2, 3}) {
    int n_max = r == 2 ? 7 : 6;  // C(n, r) <= 24
    for (const Hypergraph& h : small_corpus(r, 5)) {
      for (int n = std::max(h.vertex_count(), r); n <= n_max; ++n) {
        ++pairs;
        long long exact = acceptance_detail::wsat_value(h, n, opts);
        long long lb_ds = delta_star(h) >= 1 ? lb_delta_star(h, n).ceil() : 0;
        if (sparseness(h) >= 2) {
          long long lb_g = lb_gamma(h, n).ceil();
          if (!(lb_ds <= lb_g && lb_g <= exact)) {
            res.pass = false;
            out << " chain broken at " << canonical_key(h) << " n=" << n
                << ": " << lb_ds << " / " << lb_g << " / " << exact;
          }
        } else if (!(lb_ds <= exact)) {
          res.pass = false;
          out << " delta bound above exact at " << canonical_key(h)
              << " n=" << n;
        }
        for (int m = 0; m < r; ++m) {  // codegree bounds, every m
          if (delta_m(h, m) >= 1 &&
              !(lb_trivial(h, m, n) <= Rational(exact))) {
            res.pass = false;
            out << " trivial bound m=" << m << " above exact at "
                << canonical_key(h) << " n=" << n;
          }
        }
      }
    }
  }
  res.details = res.pass ? std::to_string(pairs) + " (pattern, n) pairs"
                         : out.str();
  return res;
}

// 6. Count matroid rank formula = brute force on the full parameter grid.
inline CriterionResult criterion_count_matroid(const AcceptanceOptions&) {
  CriterionResult res{6, "count matroid rank formula vs brute force", true,
                      "", 0};
  long long checked = 0;
  std::ostringstream out;
  for (int n = 3; n <= 5 && res.pass; ++n) {
    Hypergraph host = Hypergraph::complete(n, 2);
    for (long long q = 1; q <= 2; ++q) {
      for (long long a1 = 0; a1 <= 3; ++a1) {
        for (long long a2 = 0; a2 <= 3; ++a2) {
          for (long long a0 = -6; a0 <= 3; ++a0) {
            IntCountVector cv(2, {a0, a1, a2});
            long long brute = count_matroid_rank_bruteforce(
                MultiEdgeSet::multiply(host, q), cv);
            long long formula = count_matroid_rank_formula(n, q, cv);
            ++checked;
            if (brute != formula) {
              res.pass = false;
              out << " mismatch n=" << n << " q=" << q << " a=(" << a0 << ","
                  << a1 << "," << a2 << "): " << brute << " vs " << formula;
            }
          }
        }
      }
    }
  }
  res.details = res.pass ? std::to_string(checked) + " grid points"
                         : out.str();
  return res;
}

// 7. Kruskal-Katona bound over every (n <= 6, r <= 3, e <= 8, m < r).
inline CriterionResult criterion_kruskal_katona(const AcceptanceOptions& opts) {
  CriterionResult res{7, "Kruskal-Katona exhaustive verification", true, "",
                      0};
  long long cases = 0;
  std::ostringstream out;
  for (int r = 2; r <= 3; ++r) {
    for (int n = r; n <= 6; ++n) {
      long long emax = std::min<long long>(8, binom(n, r));
      for (long long e = 1; e <= emax; ++e) {
        for (int m = 1; m < r; ++m) {
          ++cases;
          KkVerifyReport rep =
              verify_kk_exhaustive(n, r, e, m, opts.workers);
          if (!rep.pass) {
            res.pass = false;
            out << " fails at n=" << n << " r=" << r << " e=" << e
                << " m=" << m;
          }
        }
      }
    }
  }
  res.details = res.pass ? std::to_string(cases) + " (n,r,e,m) cases"
                         : out.str();
  return res;
}

// 8. The explicit hosts close, and the measured coefficient at n = 12 is
//    within 0.15 of delta/r - 1/C(r+delta-1, r-1).
inline CriterionResult criterion_constructions(const AcceptanceOptions&) {
  CriterionResult res{8, "construction executability", true, "", 0};
  std::ostringstream out;
  for (int base_n : {3, 4}) {
    Hypergraph g = Hypergraph::complete(base_n, 2);
    std::vector<Vertex> p(base_n);
    std::iota(p.begin(), p.end(), 0);
    SaturatedHost host8 = build_saturated_host(g, p, 8);
    Hypergraph closed = closure(host8.host, host8.construction.family()).closed;
    if (!(closed == Hypergraph::complete(8, 2))) {
      res.pass = false;
      out << " K_" << base_n << " host at n=8 does not close";
    }
    SaturatedHost host12 = build_saturated_host(g, p, 12);
    Rational diff = host12.measured_coefficient - host12.target_coefficient;
    if (diff < Rational(0)) diff = -diff;
    if (!(diff <= Rational(15, 100))) {
      res.pass = false;
      out << " K_" << base_n << " coefficient off by "
          << diff.to_string();
    }
  }
  res.details = res.pass ? "hosts close at n=8; coefficients within 0.15 at "
                           "n=12"
                         : out.str();
  return res;
}

// 9. rhosat values for triangles and rhosat <= wsat on every small instance.
inline CriterionResult criterion_rhosat(const AcceptanceOptions& opts) {
  CriterionResult res{9, "rhosat exact values and upper sandwich", true, "",
                      0};
  std::ostringstream out;
  Hypergraph k3 = Hypergraph::complete(3, 2);
  if (solve_rhosat(k3, 4).value != Rational(3)) {
    res.pass = false;
    out << " rhosat(4, K_3) wrong";
  }
  if (solve_rhosat(k3, 5).value != Rational(4)) {
    res.pass = false;
    out << " rhosat(5, K_3) wrong";
  }
  long long pairs = 0;
  for (int r : {2, 3}) {
    for (const Hypergraph& h : small_corpus(r, 5)) {
      for (int n = std::max(h.vertex_count(), r); binom(n, r) <= 10; ++n) {
        ++pairs;
        Rational rho = solve_rhosat(h, n).value;
        long long exact = acceptance_detail::wsat_value(h, n, opts);
        if (!(rho <= Rational(exact))) {
          res.pass = false;
          out << " rhosat > wsat at " << canonical_key(h) << " n=" << n;
        }
      }
    }
  }
  res.details = res.pass ? "triangle values exact; rhosat <= wsat on " +
                               std::to_string(pairs) + " instances"
                         : out.str();
  return res;
}

// 10. Solved LP solutions and count polymatroids satisfy the unrestricted
//     axioms exhaustively on hosts with at most 6 edges.
inline CriterionResult criterion_polymatroid_axioms(const AcceptanceOptions&) {
  CriterionResult res{10, "polymatroid axioms, exhaustive", true, "", 0};
  std::ostringstream out;

  auto check_values = [&](const std::vector<Rational>& rho,
                          const std::string& what) {
    const uint32_t total = static_cast<uint32_t>(rho.size());
    for (uint32_t a = 0; a < total && res.pass; ++a) {
      if (rho[a] < Rational(0) || rho[a] > Rational(__builtin_popcount(a))) {
        res.pass = false;
        out << " bound axiom fails for " << what;
      }
      for (uint32_t b = 0; b < total; ++b) {
        if ((a & b) == a && !(rho[a] <= rho[b])) {
          res.pass = false;
          out << " monotonicity fails for " << what;
          break;
        }
        if (!(rho[a | b] + rho[a & b] <= rho[a] + rho[b])) {
          res.pass = false;
          out << " submodularity fails for " << what;
          break;
        }
      }
    }
  };

  struct LpCase {
    Hypergraph pattern;
    int n;
  };
  for (const LpCase& c : {LpCase{Hypergraph::complete(3, 2), 4},
                          LpCase{Hypergraph::complete(3, 2), 3},
                          LpCase{Hypergraph::complete(4, 3), 4}}) {
    RhosatResult r = solve_rhosat(c.pattern, c.n);
    check_values(r.full_values,
                 "LP solution n=" + std::to_string(c.n));
  }

  for (const Hypergraph& host : {Hypergraph::complete(4, 2)}) {
    for (const CountParams& params :
         {gamma_params(Hypergraph::complete(3, 2), 2, Rational(1)),
          gamma_params(Hypergraph::complete(4, 2), 2, Rational(2))}) {
      std::vector<Rational> rho(uint64_t{1} << host.edge_count());
      for (uint32_t mask = 0; mask < rho.size(); ++mask) {
        std::vector<Edge> edges;
        for (long long j = 0; j < host.edge_count(); ++j) {
          if ((mask >> j) & 1) edges.push_back(host.edges()[j]);
        }
        rho[mask] = poly_rho(
            Hypergraph(host.vertex_count(), host.uniformity(), edges), params);
      }
      check_values(rho, "count polymatroid on K_4");
    }
  }

  res.details = res.pass ? "3 LP instances and 2 count polymatroids, all "
                           "pairs checked exactly"
                         : out.str();
  return res;
}

// 11. Closure determinism over shuffled scan orders; certificates replay.
inline CriterionResult criterion_closure_determinism(
    const AcceptanceOptions& opts) {
  CriterionResult res{11, "closure determinism and certificate replay", true,
                      "", 0};
  std::ostringstream out;
  std::mt19937_64 rng(opts.seed);
  std::vector<Hypergraph> patterns;
  for (int r : {2, 3}) {
    std::vector<Hypergraph> corpus = small_corpus(r, 5);
    for (size_t i = 0; i < corpus.size(); i += corpus.size() / 5) {
      patterns.push_back(corpus[i]);
    }
  }
  int instances = 0;
  while (instances < 20) {
    const Hypergraph& h = patterns[rng() % patterns.size()];
    int n = std::max<int>(h.vertex_count(), h.uniformity() == 2 ? 6 : 5);
    EdgeUniverse u(n, h.uniformity());
    std::vector<Edge> edges;
    for (int i = 0; i < u.size(); ++i) {
      if (rng() % 3 == 0) edges.push_back(u.edge(i));
    }
    Hypergraph f(n, h.uniformity(), edges);
    Family fam({h});
    ClosureResult base = closure(f, fam);
    if (!replay_certificate(base.certificate, fam, base.closed)) {
      res.pass = false;
      out << " certificate replay failed";
      break;
    }
    std::vector<int> order(u.size());
    std::iota(order.begin(), order.end(), 0);
    for (int t = 0; t < 100; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      if (!(closure(f, fam, &order).closed == base.closed)) {
        res.pass = false;
        out << " order dependence at instance " << instances;
        break;
      }
    }
    ++instances;
    if (!res.pass) break;
  }
  res.details = res.pass ? "20 instances x 100 shuffles, identical closures"
                         : out.str();
  return res;
}

inline std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts = {},
    const std::function<void(const CriterionResult&)>& on_result = nullptr) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::function<CriterionResult(const AcceptanceOptions&)>> fns = {
      criterion_clique_graphs,      criterion_clique_hypergraphs,
      criterion_gamma_identities,   criterion_gamma_delta,
      criterion_sandwich,           criterion_count_matroid,
      criterion_kruskal_katona,     criterion_constructions,
      criterion_rhosat,             criterion_polymatroid_axioms,
      criterion_closure_determinism};
  std::vector<CriterionResult> results;
  for (auto& fn : fns) {
    auto start = Clock::now();
    CriterionResult r = fn(opts);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace wsat

#endif  // WSAT_ACCEPTANCE_HPP_

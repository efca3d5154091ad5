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

#ifndef WSAT_EMBEDDING_HPP_
#define WSAT_EMBEDDING_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "wsat/hypergraph.hpp"

namespace wsat {

// Indexes the edges of K_n^r in canonical order and maps vertex-set masks
// back to edge indices.
class EdgeUniverse {
 public:
  EdgeUniverse(int n, int r) : n_(n), r_(r) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for_each_subset_of(ids, r, [&](const Edge& e) {
      uint64_t m = edge_mask(e);
      index_.emplace(m, static_cast<int>(edges_.size()));
      edges_.push_back(e);
      masks_.push_back(m);
    });
  }

  int n() const { return n_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int idx) const { return edges_[idx]; }
  uint64_t mask(int idx) const { return masks_[idx]; }

  int index_of_mask(uint64_t m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }
  int index_of_edge(const Edge& e) const { return index_of_mask(edge_mask(e)); }

 private:
  int n_;
  int r_;
  std::vector<Edge> edges_;
  std::vector<uint64_t> masks_;
  std::unordered_map<uint64_t, int> index_;
};

// A sub-hypergraph of K_n^r as a bitset over universe edge indices, with
// per-vertex degrees maintained for embedding-search pruning.
struct HostState {
  const EdgeUniverse* universe = nullptr;
  std::vector<uint64_t> bits;
  std::vector<int> degree;
  long long edge_count = 0;

  static HostState make(const EdgeUniverse& u) {
    HostState s;
    s.universe = &u;
    s.bits.assign((u.size() + 63) / 64, 0);
    s.degree.assign(u.n(), 0);
    return s;
  }

  static HostState from(const Hypergraph& g, const EdgeUniverse& u) {
    HostState s = make(u);
    for (const Edge& e : g.edges()) {
      int idx = u.index_of_edge(e);
      if (idx < 0) throw std::invalid_argument("HostState: edge outside K_n^r");
      s.add(idx);
    }
    return s;
  }

  bool has(int idx) const {
    return (bits[idx >> 6] >> (idx & 63)) & 1;
  }
  void add(int idx) {
    if (has(idx)) return;
    bits[idx >> 6] |= uint64_t{1} << (idx & 63);
    for (Vertex v : universe->edge(idx)) ++degree[v];
    ++edge_count;
  }
  void remove(int idx) {
    if (!has(idx)) return;
    bits[idx >> 6] &= ~(uint64_t{1} << (idx & 63));
    for (Vertex v : universe->edge(idx)) --degree[v];
    --edge_count;
  }
  bool complete() const { return edge_count == universe->size(); }

  Hypergraph to_hypergraph() const {
    std::vector<Edge> edges;
    for (int i = 0; i < universe->size(); ++i) {
      if (has(i)) edges.push_back(universe->edge(i));
    }
    return Hypergraph(universe->n(), universe->r(), std::move(edges));
  }
};

// Backtracking search for a copy of a pattern that uses one designated new
// edge. The pattern is preprocessed on its support: for every choice of the
// pattern edge mapped onto the new edge, the remaining vertices are placed
// in descending-degree order, and a pattern edge is membership-checked the
// moment its last vertex is placed.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Hypergraph& pattern)
      : support_(pattern.restricted_to_support()) {
    v_ = support_.vertex_count();
    r_ = support_.uniformity();
    deg_.assign(v_, 0);
    for (const Edge& e : support_.edges()) {
      for (Vertex x : e) ++deg_[x];
    }
    const auto& edges = support_.edges();
    for (size_t u0 = 0; u0 < edges.size(); ++u0) {
      plans_.push_back(build_plan(static_cast<int>(u0)));
    }
  }

  const Hypergraph& support_pattern() const { return support_; }
  int support_size() const { return v_; }

  // Finds an injective map of the pattern's support into [n] such that some
  // pattern edge lands exactly on the universe edge new_idx and every other
  // pattern edge lands in host. Returns the map (by support vertex id).
  std::optional<std::vector<int>> find_creating(const HostState& host,
                                                int new_idx) const {
    if (host.universe->r() != r_) return std::nullopt;
    if (host.universe->n() < v_) return std::nullopt;
    const Edge& e = host.universe->edge(new_idx);
    std::vector<int> assign(v_, -1);
    for (const Plan& plan : plans_) {
      // All r! placements of the designated pattern edge onto e.
      std::vector<int> evert = e;
      std::sort(evert.begin(), evert.end());
      do {
        std::fill(assign.begin(), assign.end(), -1);
        uint64_t used = 0;
        bool ok = true;
        for (int i = 0; i < r_; ++i) {
          int pv = plan.order[i];
          int hv = evert[i];
          if (host.degree[hv] + 1 < deg_[pv]) {  // +1 for the new edge
            ok = false;
            break;
          }
          assign[pv] = hv;
          used |= uint64_t{1} << hv;
        }
        if (ok && extend(plan, host, new_idx, r_, assign, used)) {
          return assign;
        }
      } while (std::next_permutation(evert.begin(), evert.end()));
    }
    return std::nullopt;
  }

 private:
  struct Plan {
    int u0;                   // index of the designated pattern edge
    std::vector<int> order;   // vertex placement order; u0's vertices first
    // complete_at[s]: pattern edge indices whose last vertex (in order) is
    // placed at step s. The designated edge completes during seeding and is
    // skipped.
    std::vector<std::vector<int>> complete_at;
  };

  Plan build_plan(int u0) const {
    Plan plan;
    plan.u0 = u0;
    const auto& edges = support_.edges();
    std::vector<char> placed(v_, 0);
    for (Vertex x : edges[u0]) {
      plan.order.push_back(x);
      placed[x] = 1;
    }
    std::vector<int> rest;
    for (int x = 0; x < v_; ++x) {
      if (!placed[x]) rest.push_back(x);
    }
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
      if (deg_[a] != deg_[b]) return deg_[a] > deg_[b];
      return a < b;
    });
    plan.order.insert(plan.order.end(), rest.begin(), rest.end());

    std::vector<int> pos(v_);
    for (int s = 0; s < v_; ++s) pos[plan.order[s]] = s;
    plan.complete_at.assign(v_, {});
    for (size_t j = 0; j < edges.size(); ++j) {
      if (static_cast<int>(j) == u0) continue;
      int last = 0;
      for (Vertex x : edges[j]) last = std::max(last, pos[x]);
      plan.complete_at[last].push_back(static_cast<int>(j));
    }
    return plan;
  }

  bool extend(const Plan& plan, const HostState& host, int new_idx, int step,
              std::vector<int>& assign, uint64_t used) const {
    if (step == v_) return true;
    int pv = plan.order[step];
    for (int hv = 0; hv < host.universe->n(); ++hv) {
      if ((used >> hv) & 1) continue;
      // hv is outside the new edge (its vertices were all used by the seed),
      // so its degree in host + new edge is just host.degree[hv].
      if (host.degree[hv] < deg_[pv]) continue;
      assign[pv] = hv;
      bool ok = true;
      for (int j : plan.complete_at[step]) {
        uint64_t m = 0;
        for (Vertex x : support_.edges()[j]) {
          m |= uint64_t{1} << assign[x];
        }
        int idx = host.universe->index_of_mask(m);
        // new_idx is not in host, so an edge mapped onto it fails here too.
        if (idx < 0 || !host.has(idx)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(plan, host, new_idx, step + 1, assign,
                       used | (uint64_t{1} << hv))) {
        return true;
      }
      assign[pv] = -1;
    }
    return false;
  }

  Hypergraph support_;
  int v_;
  int r_;
  std::vector<int> deg_;
  std::vector<Plan> plans_;
};

// Convenience wrapper: does adding e to g create a copy of pattern? Returns
// the embedding of the pattern's support, or nullopt.
inline std::optional<std::vector<int>> creates_new_copy(const Hypergraph& g,
                                                        const Hypergraph& pattern,
                                                        const Edge& e) {
  if (pattern.is_empty()) {
    throw std::invalid_argument("creates_new_copy: empty pattern");
  }
  if (g.uniformity() != pattern.uniformity()) {
    throw std::invalid_argument("creates_new_copy: uniformity mismatch");
  }
  if (g.contains(e)) {
    throw std::invalid_argument("creates_new_copy: e already present");
  }
  EdgeUniverse u(g.vertex_count(), g.uniformity());
  int idx = u.index_of_edge(e);
  if (idx < 0) throw std::invalid_argument("creates_new_copy: bad edge");
  HostState host = HostState::from(g, u);
  PatternMatcher matcher(pattern);
  return matcher.find_creating(host, idx);
}

// All copies of h inside K_n^r, deduplicated by image edge set (the
// saturation conditions depend only on the sub-hypergraph). Each copy is a
// sorted vector of universe edge indices.
inline std::vector<std::vector<int>> enumerate_copies(const Hypergraph& h,
                                                      const EdgeUniverse& u) {
  Hypergraph s = h.restricted_to_support();
  const int v = s.vertex_count();
  const int n = u.n();
  if (s.uniformity() != u.r()) {
    throw std::invalid_argument("enumerate_copies: uniformity mismatch");
  }
  std::set<std::vector<int>> images;
  if (v > n || s.is_empty()) return {};
  std::vector<int> assign(v, -1);
  uint64_t used = 0;
  // Vertices in descending-degree order.
  std::vector<int> deg(v, 0);
  for (const Edge& e : s.edges()) {
    for (Vertex x : e) ++deg[x];
  }
  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });

  auto dfs = [&](auto&& self, int step) -> void {
    if (step == v) {
      std::vector<int> image;
      image.reserve(s.edges().size());
      for (const Edge& e : s.edges()) {
        uint64_t m = 0;
        for (Vertex x : e) m |= uint64_t{1} << assign[x];
        image.push_back(u.index_of_mask(m));
      }
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
      return;
    }
    int pv = order[step];
    for (int hv = 0; hv < n; ++hv) {
      if ((used >> hv) & 1) continue;
      assign[pv] = hv;
      used |= uint64_t{1} << hv;
      self(self, step + 1);
      used &= ~(uint64_t{1} << hv);
      assign[pv] = -1;
    }
  };
  dfs(dfs, 0);
  return std::vector<std::vector<int>>(images.begin(), images.end());
}

}  // namespace wsat

#endif  // WSAT_EMBEDDING_HPP_

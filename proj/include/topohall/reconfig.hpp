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

#pragma once

/**
 * Reconfiguration graphs: configurations are sorted id lists, edges are the
 * single-element exchanges permitted by the hosting structure (a simplicial
 * complex, a matroid, or a bipartite hypergraph). Builders enumerate the
 * configuration space exhaustively under a hard candidate cap and re-verify
 * every emitted edge against the defining predicate.
 *
 * The weak differ-in-one adjacency (ignore the hosting structure on the
 * union) is available behind an explicit flag and is never the default.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/graphs.hpp"
#include "topohall/matroid.hpp"

namespace topohall::reconfig {

using complex::Face;

inline constexpr long kCandidateCap = 2'000'000;

struct ReconfigAnalysis {
  long vertex_count = 0;
  long edge_count = 0;
  long component_count = 0;
  bool is_empty = false;       // no configurations at all
  bool is_connected = false;   // empty graphs report not connected
  std::vector<std::vector<int>> components;  // sorted ids, ordered by least id
};

class ReconfigGraph {
 public:
  // Configurations must be sorted id lists, pairwise distinct; edges refer
  // to configuration indices.
  static ReconfigGraph from_parts(std::vector<Face> configurations,
                                  std::vector<std::pair<int, int>> edges) {
    const int n = static_cast<int>(configurations.size());
    for (const auto& c : configurations) {
      if (!std::is_sorted(c.begin(), c.end()) ||
          std::adjacent_find(c.begin(), c.end()) != c.end()) {
        throw std::invalid_argument("reconfig: configuration ids must be sorted and distinct");
      }
    }
    std::vector<Face> sorted = configurations;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("reconfig: duplicate configuration");
    }
    for (auto& [u, v] : edges) {
      if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("reconfig: edge endpoint out of range");
      }
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    ReconfigGraph g;
    g.configurations_ = std::move(configurations);
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const auto& [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
  }

  const std::vector<Face>& configurations() const { return configurations_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int id) const { return adj_.at(id); }

  std::optional<int> id_of(const Face& config) const {
    for (int i = 0; i < static_cast<int>(configurations_.size()); ++i) {
      if (configurations_[i] == config) return i;
    }
    return std::nullopt;
  }

  ReconfigAnalysis analyze() const {
    ReconfigAnalysis out;
    out.vertex_count = static_cast<long>(configurations_.size());
    out.edge_count = static_cast<long>(edges_.size());
    if (configurations_.empty()) {
      out.is_empty = true;
      return out;
    }
    std::vector<int> comp(configurations_.size(), -1);
    for (int s = 0; s < static_cast<int>(configurations_.size()); ++s) {
      if (comp[s] >= 0) continue;
      const int label = static_cast<int>(out.components.size());
      std::vector<int> members;
      std::deque<int> queue{s};
      comp[s] = label;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        members.push_back(u);
        for (int v : adj_[u]) {
          if (comp[v] < 0) {
            comp[v] = label;
            queue.push_back(v);
          }
        }
      }
      std::sort(members.begin(), members.end());
      out.components.push_back(std::move(members));
    }
    out.component_count = static_cast<long>(out.components.size());
    out.is_connected = out.component_count == 1;
    return out;
  }

  // Shortest reconfiguration sequence between two configuration ids.
  std::optional<std::vector<int>> path(int s, int t) const {
    const int n = static_cast<int>(configurations_.size());
    if (s < 0 || t < 0 || s >= n || t >= n) {
      throw std::invalid_argument("reconfig path: id out of range");
    }
    std::vector<int> prev(n, -2);
    std::deque<int> queue{s};
    prev[s] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (u == t) break;
      for (int v : adj_[u]) {
        if (prev[v] == -2) {
          prev[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (prev[t] == -2) return std::nullopt;
    std::vector<int> path;
    for (int u = t; u != -1; u = prev[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Exact diameter via all-sources BFS; nullopt when disconnected or empty,
  // capacity error above the vertex cap.
  std::optional<long> diameter(long vertex_cap = 5000) const {
    const int n = static_cast<int>(configurations_.size());
    if (n == 0) return std::nullopt;
    if (n > vertex_cap) throw CapacityError("reconfig diameter: vertex count above cap");
    long diam = 0;
    for (int s = 0; s < n; ++s) {
      std::vector<long> dist(n, -1);
      std::deque<int> queue{s};
      dist[s] = 0;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adj_[u]) {
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
        }
      }
      for (long d : dist) {
        if (d < 0) return std::nullopt;
        diam = std::max(diam, d);
      }
    }
    return diam;
  }

 private:
  std::vector<Face> configurations_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Process-wide candidate cap, defaulting to kCandidateCap; the CLI --cap
// flag adjusts it. Not synchronized: set it before spawning workers.
inline long candidate_cap = kCandidateCap;

namespace detail {

inline void check_candidate_cap(unsigned long long count, const char* where) {
  if (count > static_cast<unsigned long long>(candidate_cap)) {
    throw CapacityError(std::string(where) + ": candidate count above cap");
  }
}

// Union of two sorted k-sets when it has exactly k+1 elements; nullopt
// otherwise. Linear merge, no allocations on the failure path.
inline std::optional<Face> union_if_one_larger(const Face& s, const Face& t) {
  Face u = complex::face_union(s, t);
  if (u.size() != s.size() + 1) return std::nullopt;
  return u;
}

// Generic differ-in-one builder over an explicit configuration list: edges
// join configurations whose union is one element larger and satisfies
// union_ok (or everything, under weak adjacency). Every edge is re-verified
// with fresh predicate calls before the graph is returned.
template <typename UnionOk>
ReconfigGraph build_differ_in_one(std::vector<Face> configs, UnionOk&& union_ok,
                                  bool weak_adjacency, const char* where) {
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  const int n = static_cast<int>(configs.size());
  check_candidate_cap(static_cast<unsigned long long>(n) * n, where);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto u = union_if_one_larger(configs[i], configs[j]);
      if (!u) continue;
      if (weak_adjacency || union_ok(*u)) edges.emplace_back(i, j);
    }
  }
  ReconfigGraph g = ReconfigGraph::from_parts(std::move(configs), std::move(edges));
  if (!weak_adjacency) {
    for (const auto& [a, b] : g.edges()) {
      const auto u = union_if_one_larger(g.configurations()[a], g.configurations()[b]);
      if (!u || !union_ok(*u)) throw std::logic_error(std::string(where) + ": edge re-verification failed");
    }
  }
  return g;
}

}  // namespace detail

// Vertices: faces of c using at most one vertex per class and meeting
// exactly k classes. Edges: the union of the two faces is again a face of c
// (it may use two vertices of one class).
inline ReconfigGraph rg_colorful(const complex::SimplicialComplex& c,
                                 const complex::VertexPartition& v, long k,
                                 bool weak_adjacency = false) {
  if (k < 0 || k > v.n()) throw std::invalid_argument("rg_colorful: k out of range");
  if (complex::sorted_face(v.support()) != c.ground_set()) {
    throw std::invalid_argument("rg_colorful: partition must cover the ground set");
  }
  // Enumerate partial transversals: one vertex from each class of every
  // k-subset of classes.
  const long ncls = v.n();
  std::vector<Face> configs;
  unsigned long long candidates = 0;
  auto emit_subset = [&](const std::vector<long>& subset) {
    std::vector<std::size_t> pick(subset.size(), 0);
    while (true) {
      Face f;
      for (std::size_t t = 0; t < subset.size(); ++t) {
        f.push_back(v.classes()[subset[t]][pick[t]]);
      }
      detail::check_candidate_cap(++candidates, "rg_colorful");
      f = complex::sorted_face(std::move(f));
      if (c.has_face(f)) configs.push_back(std::move(f));
      std::size_t t = subset.size();
      while (t > 0) {
        --t;
        if (++pick[t] < v.classes()[subset[t]].size()) break;
        pick[t] = 0;
        if (t == 0) return;
      }
      if (subset.empty()) return;
    }
  };
  // k-subsets of classes in lexicographic order.
  std::vector<long> subset(k);
  for (long i = 0; i < k; ++i) subset[i] = i;
  if (k == 0) {
    configs.push_back({});
  } else if (k <= ncls) {
    while (true) {
      emit_subset(subset);
      long t = k - 1;
      while (t >= 0 && subset[t] == ncls - k + t) --t;
      if (t < 0) break;
      ++subset[t];
      for (long s = t + 1; s < k; ++s) subset[s] = subset[s - 1] + 1;
    }
  }
  return detail::build_differ_in_one(
      std::move(configs), [&](const Face& u) { return c.has_face(u); }, weak_adjacency,
      "rg_colorful");
}

// Vertices: size-k faces of c that are independent in m. Edges: the union
// is a size-(k+1) face of c (independence of the union is not required).
inline ReconfigGraph rg_complex_matroid(const complex::SimplicialComplex& c,
                                        const matroid::Matroid& m, long k,
                                        bool weak_adjacency = false) {
  if (k < 0) throw std::invalid_argument("rg_complex_matroid: k < 0");
  if (c.ground_set() != m.ground()) {
    throw std::invalid_argument("rg_complex_matroid: ground sets differ");
  }
  std::vector<Face> configs;
  unsigned long long candidates = 0;
  for (const Face& f : c.faces_of_size(k)) {
    detail::check_candidate_cap(++candidates, "rg_complex_matroid");
    if (m.independent(f)) configs.push_back(f);
  }
  return detail::build_differ_in_one(
      std::move(configs), [&](const Face& u) { return c.has_face(u); }, weak_adjacency,
      "rg_complex_matroid");
}

// RG(M, N; k): common-independent-set exchange, realized on the
// independence complex of m with constraint matroid n.
inline ReconfigGraph rg_matroid_intersection(const matroid::Matroid& m,
                                             const matroid::Matroid& n, long k,
                                             bool weak_adjacency = false) {
  return rg_complex_matroid(m.independence_complex(), n, k, weak_adjacency);
}

// Vertices: size-k matchings of h, as sorted edge-id sets. Edges: the two
// matchings exchange a single hyperedge and the exchanged pair is disjoint
// outside a_side (sharing the a_side vertex is allowed).
inline ReconfigGraph rg_bipartite_matching(const graphs::Hypergraph& h, const Face& a_side,
                                           long k, bool weak_adjacency = false) {
  if (k < 0) throw std::invalid_argument("rg_bipartite_matching: k < 0");
  Face a = complex::sorted_face(a_side);
  if (!graphs::is_bipartite_with_a_side(h, a)) {
    throw std::invalid_argument("rg_bipartite_matching: every edge must meet a_side once");
  }
  const int m = h.edge_count();
  std::vector<Face> configs;
  unsigned long long candidates = 0;
  Face current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<long>(current.size()) == k) {
      detail::check_candidate_cap(++candidates, "rg_bipartite_matching");
      configs.push_back(current);
      return;
    }
    for (int e = next; e < m; ++e) {
      bool ok = true;
      for (int f : current) {
        if (!complex::face_intersection(h.edges()[e], h.edges()[f]).empty()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(e);
      self(self, e + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(configs.begin(), configs.end());
  const int n = static_cast<int>(configs.size());
  detail::check_candidate_cap(static_cast<unsigned long long>(n) * n, "rg_bipartite_matching");
  auto pair_ok = [&](const Face& s, const Face& t) {
    const Face ds = complex::face_difference(s, t);
    const Face dt = complex::face_difference(t, s);
    if (ds.size() != 1 || dt.size() != 1) return false;
    if (weak_adjacency) return true;
    const Face& e = h.edges()[ds[0]];
    const Face& f = h.edges()[dt[0]];
    const Face outside = complex::face_difference(complex::face_intersection(e, f), a);
    return outside.empty();
  };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pair_ok(configs[i], configs[j])) edges.emplace_back(i, j);
    }
  }
  ReconfigGraph g = ReconfigGraph::from_parts(std::move(configs), std::move(edges));
  for (const auto& [x, y] : g.edges()) {
    if (!pair_ok(g.configurations()[x], g.configurations()[y])) {
      throw std::logic_error("rg_bipartite_matching: edge re-verification failed");
    }
  }
  return g;
}

// Up-down walk on the (m-1)-simplices of c: two size-m faces are adjacent
// when their union is a size-(m+1) face (the common m-simplex).
inline ReconfigGraph up_down_walk(const complex::SimplicialComplex& c, long m,
                                  bool weak_adjacency = false) {
  if (m < 0) throw std::invalid_argument("up_down_walk: m < 0");
  std::vector<Face> configs = c.faces_of_size(m);
  detail::check_candidate_cap(configs.size(), "up_down_walk");
  return detail::build_differ_in_one(
      std::move(configs), [&](const Face& u) { return c.has_face(u); }, weak_adjacency,
      "up_down_walk");
}

}  // namespace topohall::reconfig

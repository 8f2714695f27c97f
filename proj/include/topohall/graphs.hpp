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
 * Graphs and multi-hypergraphs with the combinatorial parameters used by
 * the Hall-type checkers: independence and matching complexes, strong
 * domination numbers, (fractional) matching and cover numbers, hypergraph
 * links, complete-bipartite-union detection, instance generators for the
 * tight examples, and the list-coloring reductions.
 *
 * Exhaustive parameter searches are exact and capped at 20 vertices or
 * edges. Random generators draw from a seeded mt19937_64 directly (never
 * through distribution adapters), so outputs are reproducible everywhere.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/homology.hpp"
#include "topohall/lp.hpp"

namespace topohall::graphs {

using complex::Face;

class Graph {
 public:
  static Graph from_edges(std::vector<int> vertices, std::vector<std::pair<int, int>> edges) {
    vertices = complex::sorted_face(std::move(vertices));
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("graph: self-loop");
      if (u > v) std::swap(u, v);
      if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
          !std::binary_search(vertices.begin(), vertices.end(), v)) {
        throw std::invalid_argument("graph: edge endpoint outside vertex set");
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    for (const auto& [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& [v, nbrs] : g.adj_) nbrs = complex::sorted_face(std::move(nbrs));
    return g;
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const Face& neighbors(int v) const {
    static const Face kNone;
    auto it = adj_.find(v);
    return it == adj_.end() ? kNone : it->second;
  }

  bool has_edge(int u, int v) const {
    const Face& n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  long degree(int v) const { return static_cast<long>(neighbors(v).size()); }

  long max_degree() const {
    long d = 0;
    for (int v : vertices_) d = std::max(d, degree(v));
    return d;
  }

  Graph induced(const Face& w) const {
    Face ws = complex::sorted_face(w);
    for (int v : ws) {
      if (!std::binary_search(vertices_.begin(), vertices_.end(), v)) {
        throw std::invalid_argument("graph: induced vertex outside vertex set");
      }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : edges_) {
      if (std::binary_search(ws.begin(), ws.end(), u) &&
          std::binary_search(ws.begin(), ws.end(), v)) {
        edges.emplace_back(u, v);
      }
    }
    return from_edges(std::move(ws), std::move(edges));
  }

  // Connected components as sorted vertex sets, ordered by least vertex.
  std::vector<Face> components() const {
    std::map<int, int> comp;
    int next = 0;
    for (int v : vertices_) comp[v] = next++;
    std::vector<int> parent(next);
    for (int i = 0; i < next; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [u, v] : edges_) parent[find(comp[u])] = find(comp[v]);
    std::map<int, Face> groups;
    for (int v : vertices_) groups[find(comp[v])].push_back(v);
    std::vector<Face> out;
    for (auto& [root, verts] : groups) out.push_back(std::move(verts));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Graph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::vector<int> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::map<int, Face> adj_;
};

class Hypergraph {
 public:
  // Edges are a multiset kept in input order (edge id = position); each
  // edge is vertex-sorted. Parallel edges stay distinct.
  static Hypergraph from_edges(std::vector<int> vertices, std::vector<Face> edges,
                               std::optional<int> uniformity = std::nullopt) {
    vertices = complex::sorted_face(std::move(vertices));
    for (auto& e : edges) {
      e = complex::sorted_face(std::move(e));
      if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
      for (int v : e) {
        if (!std::binary_search(vertices.begin(), vertices.end(), v)) {
          throw std::invalid_argument("hypergraph: edge vertex outside vertex set");
        }
      }
      if (uniformity && static_cast<int>(e.size()) != *uniformity) {
        throw std::invalid_argument("hypergraph: edge violates declared uniformity");
      }
    }
    Hypergraph h;
    h.vertices_ = std::move(vertices);
    h.edges_ = std::move(edges);
    h.uniformity_ = uniformity;
    return h;
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Face>& edges() const { return edges_; }
  std::optional<int> uniformity() const { return uniformity_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  long max_edge_size() const {
    long r = 0;
    for (const auto& e : edges_) r = std::max(r, static_cast<long>(e.size()));
    return r;
  }

  long degree(int v) const {
    long d = 0;
    for (const auto& e : edges_) {
      if (std::binary_search(e.begin(), e.end(), v)) ++d;
    }
    return d;
  }

  long max_degree() const {
    long d = 0;
    for (int v : vertices_) d = std::max(d, degree(v));
    return d;
  }

 private:
  std::vector<int> vertices_;
  std::vector<Face> edges_;
  std::optional<int> uniformity_;
};

// I(G): maximal faces are the maximal independent sets.
inline complex::SimplicialComplex independence_complex(const Graph& g) {
  const auto& verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n > 20) throw std::invalid_argument("independence_complex: beyond the 20-vertex cap");
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int u : g.neighbors(verts[i])) {
      const int j = static_cast<int>(
          std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
      adj[i] |= std::uint32_t{1} << j;
    }
  }
  std::vector<Face> maximal;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const bool in = s & (std::uint32_t{1} << i);
      if (in && (adj[i] & s)) ok = false;          // not independent
      if (!in && !(adj[i] & s)) ok = false;        // extendable, not maximal
    }
    if (!ok) continue;
    Face f;
    for (int i = 0; i < n; ++i) {
      if (s & (std::uint32_t{1} << i)) f.push_back(verts[i]);
    }
    maximal.push_back(std::move(f));
  }
  if (maximal.empty()) maximal.push_back({});  // graph with no vertices
  return complex::SimplicialComplex::from_maximal_faces(verts, std::move(maximal));
}

// Conflict graph on edge ids: two edges adjacent when they intersect.
inline Graph line_conflict_graph(const Hypergraph& h) {
  std::vector<int> ids(h.edge_count());
  std::vector<std::pair<int, int>> conflicts;
  for (int i = 0; i < h.edge_count(); ++i) {
    ids[i] = i;
    for (int j = i + 1; j < h.edge_count(); ++j) {
      if (!complex::face_intersection(h.edges()[i], h.edges()[j]).empty()) {
        conflicts.emplace_back(i, j);
      }
    }
  }
  return Graph::from_edges(std::move(ids), std::move(conflicts));
}

// M(H) on edge ids: faces are matchings, i.e. independent sets of the
// conflict (line) graph.
inline complex::SimplicialComplex matching_complex(const Hypergraph& h) {
  return independence_complex(line_conflict_graph(h));
}

struct DominationParams {
  homology::Eta gamma_tilde;  // least size of a set strongly dominating V
  homology::Eta igamma;       // worst case over independent sets
};

// Exact strong-domination parameters by subset dynamic programming: for
// every target set S, the least |X| with N(x) covering S, minimized via a
// superset transform of coverage masks.
inline DominationParams domination_params(const Graph& g) {
  const auto& verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n > 20) throw std::invalid_argument("domination_params: beyond the 20-vertex cap");
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int u : g.neighbors(verts[i])) {
      const int j = static_cast<int>(
          std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
      adj[i] |= std::uint32_t{1} << j;
    }
  }
  const std::uint32_t total = std::uint32_t{1} << n;
  const long kInf = n + 1;
  std::vector<long> best(total, kInf);  // best[c] = min |X| with coverage c
  std::vector<std::uint32_t> cov(total, 0);
  best[0] = 0;
  for (std::uint32_t x = 1; x < total; ++x) {
    const int low = __builtin_ctz(x);
    cov[x] = cov[x & (x - 1)] | adj[low];
    best[cov[x]] = std::min(best[cov[x]], static_cast<long>(__builtin_popcount(x)));
  }
  // Superset transform: best[s] = min best[c] over c containing s.
  for (int b = 0; b < n; ++b) {
    for (std::uint32_t s = 0; s < total; ++s) {
      if (!(s & (std::uint32_t{1} << b))) {
        best[s] = std::min(best[s], best[s | (std::uint32_t{1} << b)]);
      }
    }
  }
  auto as_eta = [&](long v) {
    return v >= kInf ? homology::Eta::infinity() : homology::Eta::finite(v);
  };
  long igamma = 0;
  bool igamma_inf = false;
  std::vector<bool> indep(total, false);
  indep[0] = true;
  for (std::uint32_t s = 1; s < total; ++s) {
    const int low = __builtin_ctz(s);
    indep[s] = indep[s & (s - 1)] && !(adj[low] & s);
    if (!indep[s]) continue;
    if (best[s] >= kInf) igamma_inf = true;
    else igamma = std::max(igamma, best[s]);
  }
  DominationParams out{as_eta(best[total - 1]),
                       igamma_inf ? homology::Eta::infinity() : homology::Eta::finite(igamma)};
  return out;
}

struct MatchingNumbers {
  long nu;                     // matching number
  exactla::Rational nu_star;   // fractional matching number
  long tau;                    // vertex cover number
};

// Exact nu / nu* / tau; postconditions nu <= nu* and nu <= tau <= R nu
// (R = largest edge size) are asserted.
inline MatchingNumbers matching_numbers(const Hypergraph& h) {
  const int m = h.edge_count();
  const int n = static_cast<int>(h.vertices().size());
  if (m > 20 || n > 20) throw std::invalid_argument("matching_numbers: beyond the 20 cap");
  // nu: branch over edges with vertex-usage masks.
  std::vector<std::uint32_t> emask(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int v : h.edges()[i]) {
      const int j = static_cast<int>(
          std::lower_bound(h.vertices().begin(), h.vertices().end(), v) - h.vertices().begin());
      emask[i] |= std::uint32_t{1} << j;
    }
  }
  long nu = 0;
  auto rec = [&](auto&& self, int i, std::uint32_t used, long size) -> void {
    nu = std::max(nu, size);
    for (int j = i; j < m; ++j) {
      if (!(emask[j] & used)) self(self, j + 1, used | emask[j], size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  // tau: least vertex subset meeting every edge.
  long tau = m == 0 ? 0 : n + 1;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n) && m > 0; ++s) {
    const long size = __builtin_popcount(s);
    if (size >= tau) continue;
    bool covers = true;
    for (int i = 0; i < m && covers; ++i) {
      if (!(emask[i] & s)) covers = false;
    }
    if (covers) tau = size;
  }
  if (m == 0) tau = 0;
  // nu*: maximize sum x_e with per-vertex slack rows.
  exactla::Rational nu_star;
  if (m > 0) {
    exactla::RationalMatrix a(n, m + n);
    std::vector<exactla::Rational> b(n, exactla::Rational(1));
    for (int i = 0; i < m; ++i) {
      for (int v : h.edges()[i]) {
        const int j = static_cast<int>(
            std::lower_bound(h.vertices().begin(), h.vertices().end(), v) -
            h.vertices().begin());
        a.set(j, i, exactla::Rational(1));
      }
    }
    for (int j = 0; j < n; ++j) a.set(j, m + j, exactla::Rational(1));
    std::vector<exactla::VarSign> signs(m + n, exactla::VarSign::NonNeg);
    std::vector<exactla::Rational> c(m + n);
    for (int i = 0; i < m; ++i) c[i] = exactla::Rational(1);
    const auto opt = exactla::lp_maximize(a, b, signs, c);
    if (opt.status != exactla::LPStatus::Optimal) {
      throw std::logic_error("matching_numbers: fractional matching LP not optimal");
    }
    nu_star = opt.value;
  }
  MatchingNumbers out{nu, nu_star, tau};
  const long r = std::max<long>(1, h.max_edge_size());
  if (exactla::Rational(nu) > out.nu_star || nu > tau || tau > r * nu) {
    throw std::logic_error("matching_numbers: parameter sanity check failed");
  }
  return out;
}

// True when every edge meets a_side in exactly one vertex.
inline bool is_bipartite_with_a_side(const Hypergraph& h, const Face& a_side) {
  for (const auto& e : h.edges()) {
    if (complex::face_intersection(e, a_side).size() != 1) return false;
  }
  return true;
}

// lk_H(X) for bipartite h: B-side edge parts of the edges whose A-vertex
// lies in x, multiplicities preserved.
inline Hypergraph link(const Hypergraph& h, const Face& a_side, const Face& x) {
  Face a = complex::sorted_face(a_side);
  Face xs = complex::sorted_face(x);
  if (!complex::face_subset(xs, a)) throw std::invalid_argument("link: x must lie in a_side");
  if (!is_bipartite_with_a_side(h, a)) {
    throw std::invalid_argument("link: hypergraph is not bipartite over a_side");
  }
  std::vector<Face> edges;
  for (const auto& e : h.edges()) {
    const Face hit = complex::face_intersection(e, a);
    if (complex::face_subset(hit, xs)) edges.push_back(complex::face_difference(e, a));
  }
  std::optional<int> unif;
  if (h.uniformity()) unif = *h.uniformity() - 1;
  return Hypergraph::from_edges(complex::face_difference(h.vertices(), a), std::move(edges),
                                unif);
}

// True iff every component of g is a K_{delta,delta}; the component count
// is then forced to |V|/(2 delta).
inline bool is_disjoint_kdd_union(const Graph& g, long delta) {
  if (delta < 1) throw std::invalid_argument("is_disjoint_kdd_union: delta < 1");
  if (g.vertices().empty()) return false;
  for (const Face& comp : g.components()) {
    if (static_cast<long>(comp.size()) != 2 * delta) return false;
    const int u = comp[0];
    Face b = complex::face_intersection(g.neighbors(u), comp);
    Face a = complex::face_difference(comp, b);
    if (static_cast<long>(a.size()) != delta || static_cast<long>(b.size()) != delta) {
      return false;
    }
    for (int x : a) {
      for (int y : a) {
        if (x < y && g.has_edge(x, y)) return false;
      }
      for (int y : b) {
        if (!g.has_edge(x, y)) return false;
      }
    }
    for (int x : b) {
      for (int y : b) {
        if (x < y && g.has_edge(x, y)) return false;
      }
    }
  }
  return true;
}

struct GraphPartitionInstance {
  Graph g;
  complex::VertexPartition v;
};

struct HypergraphPartitionInstance {
  Hypergraph h;
  std::vector<Face> edge_classes;  // partition of edge ids
};

struct HypergraphASideInstance {
  Hypergraph h;
  Face a_side;
};

// K_{delta,delta} with the single class V_1 = V; vertices 0..delta-1 on one
// side, delta..2delta-1 on the other.
inline GraphPartitionInstance gen_kdd_single_class(long delta) {
  if (delta < 1) throw std::invalid_argument("gen_kdd_single_class: delta < 1");
  std::vector<int> verts;
  std::vector<std::pair<int, int>> edges;
  for (long i = 0; i < 2 * delta; ++i) verts.push_back(static_cast<int>(i));
  for (long i = 0; i < delta; ++i) {
    for (long j = delta; j < 2 * delta; ++j) {
      edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  Graph g = Graph::from_edges(verts, std::move(edges));
  auto v = complex::VertexPartition::from_classes({verts});
  return {std::move(g), std::move(v)};
}

// Two disjoint K_{delta,delta}; classes are the unions of the left sides
// and of the right sides (standard bipartitions on both components).
inline GraphPartitionInstance gen_kdd_double(long delta) {
  if (delta < 1) throw std::invalid_argument("gen_kdd_double: delta < 1");
  std::vector<int> verts;
  std::vector<std::pair<int, int>> edges;
  Face left;
  Face right;
  for (int copy = 0; copy < 2; ++copy) {
    const int base = static_cast<int>(copy * 2 * delta);
    for (long i = 0; i < delta; ++i) {
      left.push_back(base + static_cast<int>(i));
      right.push_back(base + static_cast<int>(delta + i));
    }
    for (long i = 0; i < delta; ++i) {
      for (long j = 0; j < delta; ++j) {
        edges.emplace_back(base + static_cast<int>(i), base + static_cast<int>(delta + j));
      }
    }
    for (long i = 0; i < 2 * delta; ++i) verts.push_back(base + static_cast<int>(i));
  }
  Graph g = Graph::from_edges(verts, std::move(edges));
  auto v = complex::VertexPartition::from_classes({left, right});
  return {std::move(g), std::move(v)};
}

// r x r grid hypergraph: vertex (i, j) has id i*r + j; edges are the r rows
// then the r columns; single edge class containing everything.
inline HypergraphPartitionInstance gen_grid(long r) {
  if (r < 1) throw std::invalid_argument("gen_grid: r < 1");
  std::vector<int> verts;
  for (long i = 0; i < r * r; ++i) verts.push_back(static_cast<int>(i));
  std::vector<Face> edges;
  for (long i = 0; i < r; ++i) {
    Face row;
    for (long j = 0; j < r; ++j) row.push_back(static_cast<int>(i * r + j));
    edges.push_back(std::move(row));
  }
  for (long j = 0; j < r; ++j) {
    Face col;
    for (long i = 0; i < r; ++i) col.push_back(static_cast<int>(i * r + j));
    edges.push_back(std::move(col));
  }
  Hypergraph h = Hypergraph::from_edges(verts, std::move(edges), static_cast<int>(r));
  Face all_edges;
  for (long k = 0; k < 2 * r; ++k) all_edges.push_back(static_cast<int>(k));
  return {std::move(h), {all_edges}};
}

// The 2r-vertex r-graph with 4 edges {x1,x2,x3..xr}, {x1,x2,y3..yr},
// {y1,y2,x3..xr}, {y1,y2,y3..yr} and A = {x1, y1}. Vertex ids: x_i = i-1,
// y_i = r+i-1.
inline HypergraphASideInstance gen_bipartite_counterexample(long r) {
  if (r < 2) throw std::invalid_argument("gen_bipartite_counterexample: r < 2");
  std::vector<int> verts;
  for (long i = 0; i < 2 * r; ++i) verts.push_back(static_cast<int>(i));
  auto x = [&](long i) { return static_cast<int>(i - 1); };
  auto y = [&](long i) { return static_cast<int>(r + i - 1); };
  Face tail_x;
  Face tail_y;
  for (long i = 3; i <= r; ++i) {
    tail_x.push_back(x(i));
    tail_y.push_back(y(i));
  }
  auto mk = [&](int a, int b, const Face& tail) {
    Face e{a, b};
    for (int t : tail) e.push_back(t);
    return complex::sorted_face(std::move(e));
  };
  std::vector<Face> edges{mk(x(1), x(2), tail_x), mk(x(1), x(2), tail_y),
                          mk(y(1), y(2), tail_x), mk(y(1), y(2), tail_y)};
  Hypergraph h = Hypergraph::from_edges(verts, std::move(edges), static_cast<int>(r));
  return {std::move(h), Face{x(1), y(1)}};
}

// Seeded Erdos-Renyi G(n, p) with p = p_num/p_den; vertex ids 0..n-1.
inline Graph gen_random_graph(long n, long p_num, long p_den, std::uint64_t seed) {
  if (n < 0 || p_den <= 0 || p_num < 0 || p_num > p_den) {
    throw std::invalid_argument("gen_random_graph: bad parameters");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> verts;
  for (long i = 0; i < n; ++i) verts.push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      if (static_cast<long>(rng() % static_cast<std::uint64_t>(p_den)) < p_num) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph::from_edges(std::move(verts), std::move(edges));
}

// Seeded partition of the given vertices into classes of the given sizes
// (sizes must sum to the vertex count); Fisher-Yates with direct rng draws.
inline complex::VertexPartition gen_random_partition(Face vertices, const std::vector<long>& sizes,
                                                     std::uint64_t seed) {
  Face verts = complex::sorted_face(std::move(vertices));
  long total = 0;
  for (long s : sizes) {
    if (s <= 0) throw std::invalid_argument("gen_random_partition: nonpositive class size");
    total += s;
  }
  if (total != static_cast<long>(verts.size())) {
    throw std::invalid_argument("gen_random_partition: sizes do not sum to |V|");
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = verts.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(verts[i - 1], verts[j]);
  }
  std::vector<Face> classes;
  std::size_t pos = 0;
  for (long s : sizes) {
    Face cls(verts.begin() + pos, verts.begin() + pos + s);
    classes.push_back(complex::sorted_face(std::move(cls)));
    pos += static_cast<std::size_t>(s);
  }
  return complex::VertexPartition::from_classes(std::move(classes));
}

class ListAssignment {
 public:
  static ListAssignment from_lists(std::map<int, std::vector<int>> lists) {
    for (auto& [k, l] : lists) {
      l = complex::sorted_face(std::move(l));
      if (l.empty()) throw std::invalid_argument("list assignment: empty list");
    }
    ListAssignment a;
    a.lists_ = std::move(lists);
    return a;
  }

  const std::vector<int>& at(int key) const {
    auto it = lists_.find(key);
    if (it == lists_.end()) throw std::invalid_argument("list assignment: missing key");
    return it->second;
  }

  const std::map<int, std::vector<int>>& lists() const { return lists_; }

 private:
  std::map<int, std::vector<int>>
      lists_;  // key = vertex id (vertex mode) or edge id (edge mode)
};

struct VertexListReduction {
  Graph aux;
  complex::VertexPartition classes;               // one class per original vertex
  std::vector<std::pair<int, int>> labels;        // aux id -> (vertex, color)
};

// Auxiliary graph whose independent transversals are the proper list
// vertex-colorings: one aux vertex per (v, c in L(v)), conflict edges
// between equal colors across original edges.
inline VertexListReduction vertex_list_reduction(const Graph& h, const ListAssignment& l) {
  std::vector<std::pair<int, int>> labels;
  std::map<std::pair<int, int>, int> id_of;
  std::vector<Face> classes;
  for (int v : h.vertices()) {
    Face cls;
    for (int c : l.at(v)) {
      const int id = static_cast<int>(labels.size());
      labels.emplace_back(v, c);
      id_of[{v, c}] = id;
      cls.push_back(id);
    }
    classes.push_back(std::move(cls));
  }
  std::vector<int> verts(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) verts[i] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : h.edges()) {
    for (int c : l.at(u)) {
      auto it = id_of.find({v, c});
      if (it != id_of.end()) edges.emplace_back(id_of[{u, c}], it->second);
    }
  }
  VertexListReduction out{Graph::from_edges(std::move(verts), std::move(edges)),
                          complex::VertexPartition::from_classes(std::move(classes)),
                          std::move(labels)};
  return out;
}

struct EdgeListReduction {
  Hypergraph aux;
  std::vector<Face> edge_classes;           // aux edge ids per original edge
  std::vector<std::pair<int, int>> labels;  // aux edge id -> (edge index, color)
};

// Auxiliary hypergraph whose full rainbow matchings are the proper list
// edge-colorings: aux vertex (v, c), aux edge {(v, c) : v in e} per color
// c in L(e), classes indexed by the original edges.
inline EdgeListReduction edge_list_reduction(const Hypergraph& h, const ListAssignment& l) {
  std::map<std::pair<int, int>, int> vid;
  std::vector<int> verts;
  auto vertex_id = [&](int v, int c) {
    auto it = vid.find({v, c});
    if (it != vid.end()) return it->second;
    const int id = static_cast<int>(verts.size());
    vid[{v, c}] = id;
    verts.push_back(id);
    return id;
  };
  std::vector<Face> aux_edges;
  std::vector<Face> classes;
  std::vector<std::pair<int, int>> labels;
  for (int i = 0; i < h.edge_count(); ++i) {
    Face cls;
    for (int c : l.at(i)) {
      Face ae;
      for (int v : h.edges()[i]) ae.push_back(vertex_id(v, c));
      const int id = static_cast<int>(aux_edges.size());
      aux_edges.push_back(complex::sorted_face(std::move(ae)));
      labels.emplace_back(i, c);
      cls.push_back(id);
    }
    classes.push_back(std::move(cls));
  }
  std::optional<int> unif;
  if (h.uniformity()) unif = h.uniformity();
  EdgeListReduction out{Hypergraph::from_edges(std::move(verts), std::move(aux_edges), unif),
                        std::move(classes), std::move(labels)};
  return out;
}

}  // namespace topohall::graphs

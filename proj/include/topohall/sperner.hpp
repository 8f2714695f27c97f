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

// Triangulations of the simplicial prism Delta^n x [0,1], prism-Sperner
// colorings, and the constructive odd-path lemma. Vertices carry exact
// barycentric coordinates plus a height, so the supporting face of every
// vertex, and with it the set of admissible colors, is computable. A valid
// coloring admits a graph on the colorful n-simplices whose components are
// paths and cycles; an odd number of paths joins the two base facets, and
// follow_paths extracts them while asserting every structural fact the
// argument relies on.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/rational.hpp"

namespace topohall::sperner {

using complex::Face;
using exactla::Rational;

// A triangulation vertex: barycentric coordinates over the base simplex
// (length n+1, nonnegative, summing to one) and a height in [0,1].
struct PrismVertex {
  std::vector<Rational> barycentric;
  Rational height;
};

// Per-vertex colors indexed by vertex id.
using Coloring = std::vector<int>;

namespace detail {

// Exact determinant by fraction-free forward elimination with row pivoting.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].sign() == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].sign() == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[row][c] = m[row][c] - factor * m[col][c];
    }
  }
  return det;
}

}  // namespace detail

// A triangulation of Delta^n x [0,1] into (n+1)-dimensional simplices.
// Construction validates purity, nondegeneracy, the nonbranching property
// (every n-face lies in one or two cells), boundary placement (every n-face
// in one cell lies in a facet of the prism), total volume, and the presence
// of all 2(n+1) prism extreme points.
class PrismTriangulation {
 public:
  static PrismTriangulation from_cells(long n, std::vector<PrismVertex> vertices,
                                       std::vector<Face> cells) {
    if (n < 0) throw std::invalid_argument("prism: n must be nonnegative");
    const long vcount = static_cast<long>(vertices.size());
    for (const auto& v : vertices) {
      if (static_cast<long>(v.barycentric.size()) != n + 1) {
        throw std::invalid_argument("prism: barycentric length must be n+1");
      }
      Rational sum(0);
      for (const auto& b : v.barycentric) {
        if (b.sign() < 0) throw std::invalid_argument("prism: negative barycentric coordinate");
        sum = sum + b;
      }
      if (!(sum == Rational(1))) {
        throw std::invalid_argument("prism: barycentric coordinates must sum to 1");
      }
      if (v.height.sign() < 0 || v.height > Rational(1)) {
        throw std::invalid_argument("prism: height outside [0,1]");
      }
    }
    std::vector<bool> used(static_cast<std::size_t>(vcount), false);
    for (auto& cell : cells) {
      cell = complex::sorted_face(std::move(cell));
      if (static_cast<long>(cell.size()) != n + 2) {
        throw std::invalid_argument("prism: every cell needs n+2 distinct vertices");
      }
      for (int id : cell) {
        if (id < 0 || id >= vcount) throw std::invalid_argument("prism: cell vertex out of range");
        used[static_cast<std::size_t>(id)] = true;
      }
    }
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
      throw std::invalid_argument("prism: duplicate cell");
    }
    for (long id = 0; id < vcount; ++id) {
      if (!used[static_cast<std::size_t>(id)]) {
        throw std::invalid_argument("prism: vertex not used by any cell");
      }
    }
    // Nondegeneracy and total volume: with coordinates
    // y = (b_1..b_n, height), the prism has volume 1/n!, so the cell
    // determinants must be nonzero and their absolute values sum to n+1.
    Rational total(0);
    for (const auto& cell : cells) {
      std::vector<std::vector<Rational>> m;
      for (int id : cell) {
        const auto& v = vertices[static_cast<std::size_t>(id)];
        std::vector<Rational> row{Rational(1)};
        for (long c = 1; c <= n; ++c) row.push_back(v.barycentric[static_cast<std::size_t>(c)]);
        row.push_back(v.height);
        m.push_back(std::move(row));
      }
      const Rational det = detail::determinant(std::move(m));
      if (det.sign() == 0) throw std::invalid_argument("prism: degenerate cell");
      total = total + det.abs();
    }
    if (!(total == Rational(n + 1))) {
      throw std::invalid_argument("prism: cell volumes do not fill the prism");
    }
    // Nonbranching and boundary placement.
    std::map<Face, int> face_count;
    for (const auto& cell : cells) {
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        Face f = cell;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
        ++face_count[std::move(f)];
      }
    }
    PrismTriangulation t;
    t.n_ = n;
    t.vertices_ = std::move(vertices);
    t.cells_ = std::move(cells);
    for (const auto& [f, count] : face_count) {
      if (count > 2) throw std::invalid_argument("prism: n-face shared by more than two cells");
      if (count == 1 && !t.face_in_prism_facet(f)) {
        throw std::invalid_argument("prism: boundary n-face outside every prism facet");
      }
    }
    for (long i = 0; i <= n; ++i) {
      if (t.extreme_vertex(i, 0) < 0 || t.extreme_vertex(i, 1) < 0) {
        throw std::invalid_argument("prism: missing a prism extreme point");
      }
    }
    return t;
  }

  long n() const { return n_; }
  const std::vector<PrismVertex>& vertices() const { return vertices_; }
  const std::vector<Face>& top_simplices() const { return cells_; }

  // I(supp(v)): the barycentric support, which is the admissible color set
  // for vertex id under any R-Sperner coloring.
  Face support(int id) const {
    const auto& v = vertices_.at(static_cast<std::size_t>(id));
    Face out;
    for (long i = 0; i <= n_; ++i) {
      if (v.barycentric[static_cast<std::size_t>(i)].sign() > 0) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  bool on_base(int id, int side) const {
    return vertices_.at(static_cast<std::size_t>(id)).height == Rational(side);
  }

  // Vertex id of the extreme point (x_i, side), or -1.
  int extreme_vertex(long i, int side) const {
    for (std::size_t id = 0; id < vertices_.size(); ++id) {
      const auto& v = vertices_[id];
      if (!(v.height == Rational(side))) continue;
      if (!(v.barycentric[static_cast<std::size_t>(i)] == Rational(1))) continue;
      return static_cast<int>(id);
    }
    return -1;
  }

 private:
  // True when every vertex of f has height 0, every vertex has height 1, or
  // some barycentric coordinate vanishes on all of f (a lateral facet).
  bool face_in_prism_facet(const Face& f) const {
    for (int side = 0; side <= 1; ++side) {
      bool all = true;
      for (int id : f) {
        if (!on_base(id, side)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    for (long j = 0; j <= n_; ++j) {
      bool all_zero = true;
      for (int id : f) {
        if (vertices_[static_cast<std::size_t>(id)].barycentric[static_cast<std::size_t>(j)]
                .sign() != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) return true;
    }
    return false;
  }

  long n_ = 0;
  std::vector<PrismVertex> vertices_;
  std::vector<Face> cells_;
};

// Stacks `subdivisions` prism slabs and cuts each into n+1 cells by the
// staircase rule: with bottom copy u_i and top copy w_i of the base vertices,
// the cells of a slab are {u_0..u_j, w_j..w_n} for j = 0..n. Vertex ids are
// layer*(n+1)+i for layer 0..subdivisions.
inline PrismTriangulation staircase_triangulation(long n, long subdivisions) {
  if (n < 0) throw std::invalid_argument("staircase_triangulation: n must be nonnegative");
  if (subdivisions < 1) {
    throw std::invalid_argument("staircase_triangulation: subdivisions must be positive");
  }
  std::vector<PrismVertex> vertices;
  for (long layer = 0; layer <= subdivisions; ++layer) {
    for (long i = 0; i <= n; ++i) {
      PrismVertex v;
      v.barycentric.assign(static_cast<std::size_t>(n + 1), Rational(0));
      v.barycentric[static_cast<std::size_t>(i)] = Rational(1);
      v.height = Rational(layer, subdivisions);
      vertices.push_back(std::move(v));
    }
  }
  std::vector<Face> cells;
  for (long layer = 0; layer < subdivisions; ++layer) {
    const long bottom = layer * (n + 1);
    const long top = (layer + 1) * (n + 1);
    for (long j = 0; j <= n; ++j) {
      Face cell;
      for (long i = 0; i <= j; ++i) cell.push_back(static_cast<int>(bottom + i));
      for (long i = j; i <= n; ++i) cell.push_back(static_cast<int>(top + i));
      cells.push_back(std::move(cell));
    }
  }
  return PrismTriangulation::from_cells(n, std::move(vertices), std::move(cells));
}

// Stellar subdivision at the midpoint of the edge {u, v}: every cell
// containing both endpoints splits into the two copies where one endpoint is
// replaced by the new midpoint vertex. Midpoints of diagonal edges acquire
// barycentric support of size two or more, so refined triangulations carry
// genuinely non-forced colorings.
inline PrismTriangulation refine_edge(const PrismTriangulation& t, int u, int v) {
  if (u == v) throw std::invalid_argument("refine_edge: endpoints must differ");
  const auto& verts = t.vertices();
  if (u < 0 || v < 0 || u >= static_cast<int>(verts.size()) ||
      v >= static_cast<int>(verts.size())) {
    throw std::invalid_argument("refine_edge: vertex id out of range");
  }
  bool present = false;
  for (const auto& cell : t.top_simplices()) {
    if (std::binary_search(cell.begin(), cell.end(), u) &&
        std::binary_search(cell.begin(), cell.end(), v)) {
      present = true;
      break;
    }
  }
  if (!present) throw std::invalid_argument("refine_edge: edge not used by any cell");
  std::vector<PrismVertex> vertices = verts;
  PrismVertex mid;
  const auto& a = verts[static_cast<std::size_t>(u)];
  const auto& b = verts[static_cast<std::size_t>(v)];
  const Rational half(1, 2);
  for (std::size_t i = 0; i < a.barycentric.size(); ++i) {
    mid.barycentric.push_back((a.barycentric[i] + b.barycentric[i]) * half);
  }
  mid.height = (a.height + b.height) * half;
  const int mid_id = static_cast<int>(vertices.size());
  vertices.push_back(std::move(mid));
  std::vector<Face> cells;
  for (const auto& cell : t.top_simplices()) {
    if (std::binary_search(cell.begin(), cell.end(), u) &&
        std::binary_search(cell.begin(), cell.end(), v)) {
      for (int drop : {u, v}) {
        Face split;
        for (int id : cell) {
          if (id != drop) split.push_back(id);
        }
        split.push_back(mid_id);
        cells.push_back(complex::sorted_face(std::move(split)));
      }
    } else {
      cells.push_back(cell);
    }
  }
  return PrismTriangulation::from_cells(t.n(), std::move(vertices), std::move(cells));
}

struct ColoringViolation {
  int vertex = 0;
  Face allowed;  // I(supp(vertex))
};

struct ColoringValidation {
  bool valid = true;
  std::vector<ColoringViolation> violations;
};

// A coloring is R-Sperner iff every vertex's color lies in its supporting
// face's index set; extreme points are the singleton-support case.
inline ColoringValidation validate_r_sperner(const PrismTriangulation& t,
                                             const Coloring& colors) {
  if (colors.size() != t.vertices().size()) {
    throw std::invalid_argument("validate_r_sperner: one color per vertex required");
  }
  ColoringValidation out;
  for (std::size_t id = 0; id < colors.size(); ++id) {
    const Face allowed = t.support(static_cast<int>(id));
    if (!std::binary_search(allowed.begin(), allowed.end(), colors[id])) {
      out.valid = false;
      out.violations.push_back(ColoringViolation{static_cast<int>(id), allowed});
    }
  }
  return out;
}

// Uniform valid coloring: each vertex draws from its admissible color set.
inline Coloring random_r_sperner(const PrismTriangulation& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Coloring colors;
  colors.reserve(t.vertices().size());
  for (std::size_t id = 0; id < t.vertices().size(); ++id) {
    const Face allowed = t.support(static_cast<int>(id));
    colors.push_back(allowed[static_cast<std::size_t>(rng() % allowed.size())]);
  }
  return colors;
}

// Path decomposition of the colorful-simplex graph. connecting_paths run
// from the height-0 base to the height-1 base and there is an odd number of
// them; other_paths join two colorful simplices of the same base; cycles
// avoid the boundary entirely. Every colorful simplex appears in exactly one
// sequence.
struct PathReport {
  std::vector<std::vector<Face>> connecting_paths;
  std::vector<std::vector<Face>> other_paths;
  std::vector<std::vector<Face>> cycles;
  long base0_count = 0;
  long base1_count = 0;
};

// Builds the graph on colorful n-simplices (adjacent when they share a
// cell), checks every structural invariant of the odd-path argument, and
// returns the path/cycle decomposition. Throws invalid_argument for an
// invalid coloring and logic_error if any asserted invariant fails.
inline PathReport follow_paths(const PrismTriangulation& t, const Coloring& colors) {
  const auto validation = validate_r_sperner(t, colors);
  if (!validation.valid) {
    throw std::invalid_argument("follow_paths: coloring is not R-Sperner");
  }
  const long n = t.n();
  // Colorful n-simplices, id'd in lexicographic order.
  std::map<Face, int> id_of;
  std::vector<Face> simplices;
  const auto colorful = [&](const Face& f) {
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    for (int id : f) {
      const int c = colors[static_cast<std::size_t>(id)];
      if (seen[static_cast<std::size_t>(c)]) return false;
      seen[static_cast<std::size_t>(c)] = true;
    }
    return true;
  };
  // Record, per cell, which dropped-vertex positions give colorful faces;
  // ids are assigned in lexicographic face order once the map is complete.
  std::vector<std::vector<int>> cell_drops;
  for (const auto& cell : t.top_simplices()) {
    std::vector<int> here;
    for (std::size_t drop = 0; drop < cell.size(); ++drop) {
      Face f = cell;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!colorful(f)) continue;
      id_of.try_emplace(std::move(f), -1);
      here.push_back(static_cast<int>(drop));
    }
    cell_drops.push_back(std::move(here));
  }
  {
    int next = 0;
    for (auto& [f, id] : id_of) {
      id = next++;
      simplices.push_back(f);
    }
  }
  std::vector<std::vector<int>> cell_ids;
  for (std::size_t ci = 0; ci < t.top_simplices().size(); ++ci) {
    const auto& cell = t.top_simplices()[ci];
    std::vector<int> here;
    for (int drop : cell_drops[ci]) {
      Face f = cell;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      here.push_back(id_of.at(f));
    }
    std::sort(here.begin(), here.end());
    if (here.size() != 0 && here.size() != 2) {
      throw std::logic_error("follow_paths: a cell carries other than zero or two colorful faces");
    }
    cell_ids.push_back(std::move(here));
  }
  const int total = static_cast<int>(simplices.size());
  // Classification against the prism boundary.
  std::vector<int> containing(static_cast<std::size_t>(total), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (const auto& pair : cell_ids) {
    if (pair.empty()) continue;
    ++containing[static_cast<std::size_t>(pair[0])];
    ++containing[static_cast<std::size_t>(pair[1])];
    adj[static_cast<std::size_t>(pair[0])].push_back(pair[1]);
    adj[static_cast<std::size_t>(pair[1])].push_back(pair[0]);
  }
  std::vector<bool> in_base0(static_cast<std::size_t>(total), false);
  std::vector<bool> in_base1(static_cast<std::size_t>(total), false);
  PathReport report;
  for (int s = 0; s < total; ++s) {
    const Face& f = simplices[static_cast<std::size_t>(s)];
    bool all0 = true, all1 = true;
    for (int id : f) {
      if (!t.on_base(id, 0)) all0 = false;
      if (!t.on_base(id, 1)) all1 = false;
    }
    in_base0[static_cast<std::size_t>(s)] = all0;
    in_base1[static_cast<std::size_t>(s)] = all1;
    if (all0) ++report.base0_count;
    if (all1) ++report.base1_count;
    // No colorful simplex fits inside a lateral facet: its colors would be
    // confined to n of the n+1 classes.
    for (long j = 0; j <= n; ++j) {
      bool lateral = true;
      for (int id : f) {
        if (t.vertices()[static_cast<std::size_t>(id)]
                .barycentric[static_cast<std::size_t>(j)].sign() != 0) {
          lateral = false;
          break;
        }
      }
      if (lateral) throw std::logic_error("follow_paths: colorful simplex in a lateral facet");
    }
    const int deg = static_cast<int>(adj[static_cast<std::size_t>(s)].size());
    if (containing[static_cast<std::size_t>(s)] < 1 || containing[static_cast<std::size_t>(s)] > 2 ||
        deg != containing[static_cast<std::size_t>(s)]) {
      throw std::logic_error("follow_paths: colorful simplex outside one or two cells");
    }
    if ((deg == 1) != (all0 || all1)) {
      throw std::logic_error("follow_paths: degree-1 simplices must be exactly the base ones");
    }
  }
  if (report.base0_count % 2 == 0 || report.base1_count % 2 == 0) {
    throw std::logic_error("follow_paths: a base facet has an even colorful count");
  }
  // Paths from the degree-1 vertices, then cycles among the rest.
  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  auto face_seq = [&](const std::vector<int>& ids) {
    std::vector<Face> seq;
    seq.reserve(ids.size());
    for (int id : ids) seq.push_back(simplices[static_cast<std::size_t>(id)]);
    return seq;
  };
  for (int s = 0; s < total; ++s) {
    if (visited[static_cast<std::size_t>(s)] || adj[static_cast<std::size_t>(s)].size() != 1) {
      continue;
    }
    std::vector<int> walk{s};
    visited[static_cast<std::size_t>(s)] = true;
    int prev = -1, cur = s;
    for (;;) {
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) {
          next = w;
          break;
        }
      }
      if (next < 0) break;
      walk.push_back(next);
      visited[static_cast<std::size_t>(next)] = true;
      prev = cur;
      cur = next;
      if (adj[static_cast<std::size_t>(cur)].size() == 1) break;
    }
    const int front = walk.front();
    const int back = walk.back();
    const bool connects = (in_base0[static_cast<std::size_t>(front)] &&
                           in_base1[static_cast<std::size_t>(back)]) ||
                          (in_base1[static_cast<std::size_t>(front)] &&
                           in_base0[static_cast<std::size_t>(back)]);
    if (connects) {
      if (in_base1[static_cast<std::size_t>(front)]) std::reverse(walk.begin(), walk.end());
      report.connecting_paths.push_back(face_seq(walk));
    } else {
      report.other_paths.push_back(face_seq(walk));
    }
  }
  for (int s = 0; s < total; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    std::vector<int> walk{s};
    visited[static_cast<std::size_t>(s)] = true;
    int prev = -1, cur = s;
    for (;;) {
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)]) {
        if (w != prev && !visited[static_cast<std::size_t>(w)]) {
          next = w;
          break;
        }
      }
      if (next < 0) break;
      walk.push_back(next);
      visited[static_cast<std::size_t>(next)] = true;
      prev = cur;
      cur = next;
    }
    report.cycles.push_back(face_seq(walk));
  }
  if (report.connecting_paths.size() % 2 == 0) {
    throw std::logic_error("follow_paths: even number of base-to-base paths");
  }
  return report;
}

}  // namespace topohall::sperner

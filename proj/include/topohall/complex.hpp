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
 * Abstract simplicial complexes stored by maximal faces, vertex partitions,
 * and the derived complexes built from them: induced subcomplexes, joins,
 * colorful complexes (order complexes on spanning faces), colorful nerves,
 * and Alexander duals.
 *
 * Conventions: the complex {emptyface} is a valid value (maximal face list
 * [[]]); a complex with no faces at all is invalid and rejected. Faces are
 * sorted ascending by vertex id, maximal face lists lexicographically, and
 * ground sets ascending, so every serialization is byte-reproducible. The
 * ground set may strictly contain the vertex set (union of maximal faces).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace topohall {

// Thrown when an enumeration would exceed a declared size cap; callers map
// this to the capacity exit status rather than treating it as failure.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace topohall

namespace topohall::complex {

using Face = std::vector<int>;  // vertex ids, sorted ascending

inline bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_symmetric_difference(const Face& a, const Face& b) {
  Face out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

class SimplicialComplex {
 public:
  // Canonicalizes: sorts faces and ground set, drops duplicates and faces
  // contained in other faces. An empty face list denotes the invalid void
  // value and is rejected; the complex {emptyface} is passed as {{}}.
  static SimplicialComplex from_maximal_faces(std::vector<int> ground_set,
                                              std::vector<Face> faces) {
    std::sort(ground_set.begin(), ground_set.end());
    if (std::adjacent_find(ground_set.begin(), ground_set.end()) != ground_set.end()) {
      throw std::invalid_argument("complex: duplicate ground set vertex");
    }
    if (faces.empty()) {
      throw std::invalid_argument("complex: void complex (use {{}} for the complex {emptyface})");
    }
    for (auto& f : faces) {
      f = sorted_face(std::move(f));
      for (int v : f) {
        if (!std::binary_search(ground_set.begin(), ground_set.end(), v)) {
          throw std::invalid_argument("complex: face vertex outside ground set");
        }
      }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < faces.size() && !dominated; ++j) {
        if (i != j && face_subset(faces[i], faces[j]) &&
            (faces[i].size() < faces[j].size())) {
          dominated = true;
        }
      }
      if (!dominated) maximal.push_back(faces[i]);
    }
    return SimplicialComplex(std::move(ground_set), std::move(maximal));
  }

  static SimplicialComplex empty_complex(std::vector<int> ground_set) {
    return from_maximal_faces(std::move(ground_set), {Face{}});
  }

  static SimplicialComplex full_simplex(std::vector<int> ground_set) {
    Face all = sorted_face(ground_set);
    return from_maximal_faces(std::move(ground_set), {all});
  }

  const std::vector<int>& ground_set() const { return ground_set_; }
  const std::vector<Face>& maximal_faces() const { return maximal_faces_; }

  // True for the complex {emptyface}: no vertices, only the empty face.
  bool is_empty_complex() const {
    return maximal_faces_.size() == 1 && maximal_faces_[0].empty();
  }

  int dim() const {
    int d = -1;
    for (const auto& f : maximal_faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  // Union of maximal faces; may be smaller than the ground set.
  Face vertex_set() const {
    Face out;
    for (const auto& f : maximal_faces_) out = face_union(out, f);
    return out;
  }

  bool has_face(const Face& f) const {
    for (const auto& mf : maximal_faces_) {
      if (face_subset(f, mf)) return true;
    }
    return false;
  }

  // First vertex lying in every maximal face, if any; a complex with such a
  // vertex is a cone and therefore acyclic.
  std::optional<int> cone_vertex() const {
    Face common = maximal_faces_.front();
    for (const auto& f : maximal_faces_) common = face_intersection(common, f);
    if (common.empty()) return std::nullopt;
    return common.front();
  }

  // All nonempty faces of dimension <= max_dim, grouped by dimension:
  // result[p] lists the p-faces sorted lexicographically.
  std::vector<std::vector<Face>> faces_by_dim(int max_dim) const {
    const int top = std::min(max_dim, dim());
    std::vector<std::set<Face>> seen(top >= 0 ? top + 1 : 0);
    for (const auto& mf : maximal_faces_) {
      const int s = static_cast<int>(mf.size());
      if (s == 0) continue;
      if (s <= 62) {
        enumerate_subsets_bitmask(mf, top, seen);
      } else {
        throw std::invalid_argument("complex: maximal face too large to enumerate");
      }
    }
    std::vector<std::vector<Face>> out(seen.size());
    for (std::size_t p = 0; p < seen.size(); ++p) out[p].assign(seen[p].begin(), seen[p].end());
    return out;
  }

  // All nonempty faces, sorted by (size, lex). Exponential in facet size.
  std::vector<Face> all_faces() const {
    auto by_dim = faces_by_dim(dim());
    std::vector<Face> out;
    for (auto& level : by_dim) {
      for (auto& f : level) out.push_back(std::move(f));
    }
    return out;
  }

  // Faces with exactly k vertices, sorted lexicographically; k = 0 gives
  // the empty face (present in every complex).
  std::vector<Face> faces_of_size(long k) const {
    if (k < 0) throw std::invalid_argument("faces_of_size: negative size");
    if (k == 0) return {Face{}};
    if (k > static_cast<long>(dim()) + 1) return {};
    auto by_dim = faces_by_dim(static_cast<int>(k) - 1);
    if (static_cast<long>(by_dim.size()) < k) return {};
    return std::move(by_dim[static_cast<std::size_t>(k - 1)]);
  }

  // f_p = number of p-dimensional faces, p = 0..dim; f_{-1} = 1 implicit.
  std::vector<long> f_vector() const {
    auto by_dim = faces_by_dim(dim());
    std::vector<long> out;
    out.reserve(by_dim.size());
    for (const auto& level : by_dim) out.push_back(static_cast<long>(level.size()));
    return out;
  }

  // C[X] = {faces contained in X}; ground set of the result is X.
  SimplicialComplex induced(const Face& x) const {
    Face xs = sorted_face(x);
    for (int v : xs) {
      if (!std::binary_search(ground_set_.begin(), ground_set_.end(), v)) {
        throw std::invalid_argument("induced: vertex outside ground set");
      }
    }
    std::vector<Face> faces;
    faces.reserve(maximal_faces_.size() + 1);
    for (const auto& mf : maximal_faces_) faces.push_back(face_intersection(mf, xs));
    if (faces.empty()) faces.push_back({});
    return from_maximal_faces(std::move(xs), std::move(faces));
  }

  bool operator==(const SimplicialComplex& o) const {
    return ground_set_ == o.ground_set_ && maximal_faces_ == o.maximal_faces_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  SimplicialComplex(std::vector<int> ground_set, std::vector<Face> maximal)
      : ground_set_(std::move(ground_set)), maximal_faces_(std::move(maximal)) {}

  static void enumerate_subsets_bitmask(const Face& mf, int top,
                                        std::vector<std::set<Face>>& seen) {
    const int s = static_cast<int>(mf.size());
    const int limit = std::min(s - 1, top);
    if (limit < 0) return;
    // Subsets grouped by popcount via direct enumeration; facet sizes in
    // this library are small enough for the 2^s sweep.
    const std::uint64_t full = (s == 62) ? ~std::uint64_t{0} >> 2 : ((std::uint64_t{1} << s) - 1);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      const int pc = __builtin_popcountll(mask);
      if (pc - 1 > limit) continue;
      Face f;
      f.reserve(pc);
      for (int i = 0; i < s; ++i) {
        if (mask & (std::uint64_t{1} << i)) f.push_back(mf[i]);
      }
      seen[pc - 1].insert(std::move(f));
    }
  }

  std::vector<int> ground_set_;
  std::vector<Face> maximal_faces_;  // antichain, lexicographically sorted
};

// C * D on disjoint ground sets: faces are unions of a face of each.
inline SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d) {
  Face overlap = face_intersection(c.ground_set(), d.ground_set());
  if (!overlap.empty()) throw std::invalid_argument("join: overlapping ground sets");
  std::vector<int> ground = face_union(c.ground_set(), d.ground_set());
  std::vector<Face> faces;
  faces.reserve(c.maximal_faces().size() * d.maximal_faces().size());
  for (const auto& a : c.maximal_faces()) {
    for (const auto& b : d.maximal_faces()) faces.push_back(face_union(a, b));
  }
  return SimplicialComplex::from_maximal_faces(std::move(ground), std::move(faces));
}

class VertexPartition {
 public:
  static VertexPartition from_classes(std::vector<Face> classes) {
    VertexPartition v;
    std::set<int> seen;
    for (auto& cls : classes) {
      cls = sorted_face(std::move(cls));
      if (cls.empty()) throw std::invalid_argument("partition: empty class");
      for (int x : cls) {
        if (!seen.insert(x).second) throw std::invalid_argument("partition: classes overlap");
      }
    }
    v.classes_ = std::move(classes);
    return v;
  }

  const std::vector<Face>& classes() const { return classes_; }
  int n() const { return static_cast<int>(classes_.size()); }

  // Index of the class containing v, or -1.
  int class_of(int v) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (std::binary_search(classes_[i].begin(), classes_[i].end(), v)) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  Face union_of(const std::vector<int>& idxs) const {
    Face out;
    for (int i : idxs) {
      if (i < 0 || i >= n()) throw std::invalid_argument("partition: class index out of range");
      out = face_union(out, classes_[i]);
    }
    return out;
  }

  Face support() const {
    Face out;
    for (const auto& cls : classes_) out = face_union(out, cls);
    return out;
  }

  // Partition property against a complex: union of classes = V(c).
  bool partitions(const SimplicialComplex& c) const { return support() == c.vertex_set(); }

  int classes_met(const Face& f) const {
    int k = 0;
    for (const auto& cls : classes_) {
      if (!face_intersection(cls, f).empty()) ++k;
    }
    return k;
  }

 private:
  std::vector<Face> classes_;
};

// Faces with exactly one vertex per class, enumerated as transversal tuples
// in lexicographic class order.
inline std::vector<Face> colorful_simplices(const SimplicialComplex& c,
                                            const VertexPartition& v) {
  std::vector<Face> out;
  const int n = v.n();
  if (n == 0) return out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Face f;
    f.reserve(n);
    for (int i = 0; i < n; ++i) f.push_back(v.classes()[i][idx[i]]);
    f = sorted_face(std::move(f));
    if (static_cast<int>(f.size()) == n && c.has_face(f)) out.push_back(std::move(f));
    int pos = n - 1;
    while (pos >= 0 && idx[pos] + 1 == v.classes()[pos].size()) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Order complex over a family of faces under strict inclusion. Vertex i of
// the result is vertex_faces[i]; maximal faces are the maximal chains.
struct FaceOrderComplex {
  SimplicialComplex complex;
  std::vector<Face> vertex_faces;  // sorted by (size, lex); index = vertex id
};

namespace detail {

inline std::vector<Face> maximal_chains(int n, const std::vector<std::vector<bool>>& less) {
  // Covers of the induced order; maximal chains are cover paths from a
  // minimal to a maximal element.
  std::vector<std::vector<int>> covers(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) {
        if (less[a][c] && less[c][b]) cover = false;
      }
      if (cover) covers[a].push_back(b);
    }
  }
  std::vector<bool> has_pred(n, false);
  for (int a = 0; a < n; ++a) {
    for (int b : covers[a]) has_pred[b] = true;
  }
  std::vector<Face> chains;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int x) -> void {
    stack.push_back(x);
    if (covers[x].empty()) {
      chains.push_back(sorted_face(stack));
    } else {
      for (int y : covers[x]) self(self, y);
    }
    stack.pop_back();
  };
  for (int a = 0; a < n; ++a) {
    if (!has_pred[a]) dfs(dfs, a);
  }
  return chains;
}

}  // namespace detail

inline FaceOrderComplex order_complex_of_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  const int n = static_cast<int>(faces.size());
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      less[i][j] = i != j && faces[i].size() < faces[j].size() && face_subset(faces[i], faces[j]);
    }
  }
  std::vector<int> ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i;
  std::vector<Face> chains = detail::maximal_chains(n, less);
  if (chains.empty()) chains.push_back({});
  FaceOrderComplex out{SimplicialComplex::from_maximal_faces(std::move(ground), std::move(chains)),
                       std::move(faces)};
  return out;
}

// Col(C,V;k): order complex on the faces of c that meet at least k classes.
// k = n gives Col(C,V), the complex of spanning faces.
inline FaceOrderComplex colorful_complex(const SimplicialComplex& c, const VertexPartition& v,
                                         int k) {
  if (k < 1 || k > v.n()) throw std::invalid_argument("colorful_complex: k out of range");
  std::vector<Face> qualifying;
  for (auto& f : c.all_faces()) {
    if (v.classes_met(f) >= k) qualifying.push_back(std::move(f));
  }
  return order_complex_of_faces(std::move(qualifying));
}

// Nerve of the maximal faces of c that span every class of v. Vertex i of
// the result is spanning_faces[i].
struct NerveComplex {
  SimplicialComplex complex;
  std::vector<Face> spanning_faces;  // lexicographic; index = vertex id
};

inline NerveComplex colorful_nerve(const SimplicialComplex& c, const VertexPartition& v) {
  std::vector<Face> spanning;
  for (const auto& mf : c.maximal_faces()) {
    if (v.classes_met(mf) == v.n()) spanning.push_back(mf);
  }
  const int t = static_cast<int>(spanning.size());
  std::vector<int> ground(t);
  for (int i = 0; i < t; ++i) ground[i] = i;
  // S is a nerve face iff some vertex lies in every member, so the nerve is
  // generated by the per-vertex membership sets.
  std::vector<Face> gens;
  for (int x : c.vertex_set()) {
    Face s;
    for (int i = 0; i < t; ++i) {
      if (std::binary_search(spanning[i].begin(), spanning[i].end(), x)) s.push_back(i);
    }
    if (!s.empty()) gens.push_back(std::move(s));
  }
  if (gens.empty()) gens.push_back({});
  NerveComplex out{SimplicialComplex::from_maximal_faces(std::move(ground), std::move(gens)),
                   std::move(spanning)};
  return out;
}

// Minimal non-faces of c within its ground set, sorted by (size, lex).
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
  const auto& ground = c.ground_set();
  const int n = static_cast<int>(ground.size());
  if (n > 24) throw std::invalid_argument("minimal_nonfaces: ground set too large");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // face_mask[m] = faces as bitmasks over ground positions.
  std::vector<bool> is_face(std::size_t{1} << n, false);
  is_face[0] = true;
  std::vector<int> pos_of;
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[ground[i]] = i;
  for (const auto& mf : c.maximal_faces()) {
    std::uint32_t m = 0;
    for (int x : mf) m |= std::uint32_t{1} << pos[x];
    // All submasks of m are faces.
    std::uint32_t sub = m;
    for (;;) {
      is_face[sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  std::vector<Face> out;
  for (std::uint32_t m = 1; m <= full && full != 0; ++m) {
    if (is_face[m]) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if ((m & bit) && !is_face[m ^ bit]) minimal = false;
    }
    if (!minimal) continue;
    Face f;
    for (int i = 0; i < n; ++i) {
      if (m & (std::uint32_t{1} << i)) f.push_back(ground[i]);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Alexander dual over the ground set V: faces X with V - X not a face of c.
// Maximal dual faces are the complements of minimal non-faces.
inline SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  Face ground = c.ground_set();
  if (c.has_face(ground)) {
    throw std::invalid_argument("alexander_dual: ground set is a face");
  }
  std::vector<Face> faces;
  for (const auto& nf : minimal_nonfaces(c)) faces.push_back(face_difference(ground, nf));
  if (faces.empty()) faces.push_back({});
  return SimplicialComplex::from_maximal_faces(std::move(ground), std::move(faces));
}

}  // namespace topohall::complex

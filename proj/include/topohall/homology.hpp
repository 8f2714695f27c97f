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
 * Exact rational simplicial homology. Reduced Betti numbers come from ranks
 * of boundary matrices over Q with the sorted-vertex orientation, including
 * the augmentation map to the empty face, so betti(-1) = 1 exactly for the
 * complex {emptyface}.
 *
 * The connectivity invariant eta is 2 plus the largest k such that reduced
 * homology vanishes in every dimension <= k, with eta = 0 for {emptyface}
 * and an infinity token when the complex is Q-acyclic. Cones are recognized
 * by a shared vertex of all maximal faces and short-circuit to infinity.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/rational_matrix.hpp"

namespace topohall::homology {

using complex::Face;
using complex::SimplicialComplex;

// Extended natural number for eta: either a finite value >= 0 or infinity.
class Eta {
 public:
  static Eta infinity() {
    Eta e;
    e.infinite_ = true;
    return e;
  }
  static Eta finite(long k) {
    if (k < 0) throw std::invalid_argument("Eta: negative value");
    Eta e;
    e.value_ = k;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw std::logic_error("Eta: value() on infinity");
    return value_;
  }

  bool operator==(const Eta& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  bool operator!=(const Eta& o) const { return !(*this == o); }
  bool operator<(const Eta& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }
  bool operator<=(const Eta& o) const { return *this < o || *this == o; }
  bool operator>(const Eta& o) const { return o < *this; }
  bool operator>=(const Eta& o) const { return o <= *this; }

  // Saturating comparisons against finite bounds.
  bool at_least(long k) const { return infinite_ || value_ >= k; }

  // Additivity with infinity absorbing, used by the join identity.
  Eta operator+(const Eta& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return finite(value_ + o.value_);
  }
  Eta operator+(long k) const { return infinite_ ? infinity() : finite(value_ + k); }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const Eta& e) { return os << e.to_string(); }

 private:
  bool infinite_ = false;
  long value_ = 0;
};

// Reduced Betti numbers indexed from dimension -1 to dim(c).
struct ReducedBetti {
  std::vector<long> values;  // values[p + 1] = betti_p

  long at(int p) const {
    const int i = p + 1;
    if (i < 0 || i >= static_cast<int>(values.size())) return 0;
    return values[i];
  }
  int top_dim() const { return static_cast<int>(values.size()) - 2; }
  bool all_zero() const {
    return std::all_of(values.begin(), values.end(), [](long b) { return b == 0; });
  }
  bool operator==(const ReducedBetti& o) const = default;
};

namespace detail {

// Boundary of the sorted p-face sigma: sum_i (-1)^i (sigma minus vertex i).
// Rows index (p-1)-faces via face_index; for p = 0 the single row is the
// augmentation to the empty face.
inline exactla::RationalMatrix boundary_from_lists(const std::vector<Face>& lower,
                                                   const std::vector<Face>& upper, int p) {
  using exactla::Rational;
  const int rows = p == 0 ? 1 : static_cast<int>(lower.size());
  exactla::RationalMatrix m(rows, static_cast<int>(upper.size()));
  std::map<Face, int> row_of;
  if (p > 0) {
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const Face& sigma = upper[j];
    if (p == 0) {
      m.set(0, static_cast<int>(j), Rational(1));
      continue;
    }
    Face tau(sigma.begin() + 1, sigma.end());
    int sign = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      auto it = row_of.find(tau);
      if (it == row_of.end()) throw std::logic_error("boundary: face set not downward closed");
      m.set(it->second, static_cast<int>(j), Rational(sign));
      if (i + 1 < sigma.size()) tau[i] = sigma[i];
      sign = -sign;
    }
  }
  return m;
}

// Rank of the p-th boundary map given the face lists of dimensions p-1, p.
// p = 0 and p = 1 take closed forms (augmentation rank; V minus number of
// graph components); higher maps go through exact Bareiss elimination.
inline long boundary_rank(const std::vector<Face>& lower, const std::vector<Face>& upper, int p) {
  if (upper.empty()) return 0;
  if (p == 0) return 1;
  if (p == 1) {
    std::map<int, int> comp;
    int next = 0;
    for (const Face& v : lower) comp[v[0]] = next++;
    std::vector<int> parent(next);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    long merges = 0;
    for (const Face& e : upper) {
      const int a = find(comp.at(e[0]));
      const int b = find(comp.at(e[1]));
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    }
    return merges;  // = V - components
  }
  std::map<Face, int> row_of;
  for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = static_cast<int>(i);
  std::vector<std::vector<std::int64_t>> dense(lower.size(),
                                               std::vector<std::int64_t>(upper.size(), 0));
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const Face& sigma = upper[j];
    Face tau(sigma.begin() + 1, sigma.end());
    int sign = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      dense[row_of.at(tau)][j] = sign;
      if (i + 1 < sigma.size()) tau[i] = sigma[i];
      sign = -sign;
    }
  }
  return exactla::rank_dense_int(dense);
}

}  // namespace detail

// The p-th boundary matrix: rows are (p-1)-faces, columns p-faces, both in
// lexicographic order; p = 0 is the 1 x V augmentation, p = -1 is 0 x 1.
inline exactla::RationalMatrix boundary_matrix(const SimplicialComplex& c, int p) {
  if (p < -1) throw std::invalid_argument("boundary_matrix: p < -1");
  if (p == -1) return exactla::RationalMatrix(0, 1);
  auto by_dim = c.faces_by_dim(p);
  static const std::vector<Face> kNone;
  const std::vector<Face>& upper =
      p < static_cast<int>(by_dim.size()) ? by_dim[p] : kNone;
  const std::vector<Face>& lower =
      (p >= 1 && p - 1 < static_cast<int>(by_dim.size())) ? by_dim[p - 1] : kNone;
  return detail::boundary_from_lists(lower, upper, p);
}

inline ReducedBetti reduced_betti(const SimplicialComplex& c) {
  const int d = c.dim();
  ReducedBetti out;
  out.values.assign(d + 2, 0);
  auto by_dim = c.faces_by_dim(d);
  auto faces_at = [&](int p) -> const std::vector<Face>& {
    static const std::vector<Face> kNone;
    return (p >= 0 && p < static_cast<int>(by_dim.size())) ? by_dim[p] : kNone;
  };
  // ranks[p + 1] = rank of boundary_p for p = -1..d+1.
  std::vector<long> ranks(d + 3, 0);
  for (int p = 0; p <= d; ++p) {
    ranks[p + 1] = detail::boundary_rank(faces_at(p - 1), faces_at(p), p);
  }
  for (int p = -1; p <= d; ++p) {
    const long faces = p == -1 ? 1 : static_cast<long>(faces_at(p).size());
    out.values[p + 1] = faces - ranks[p + 1] - ranks[p + 2];
    if (out.values[p + 1] < 0) throw std::logic_error("reduced_betti: negative value");
  }
  return out;
}

// eta of a complex; stops at the first nonvanishing reduced homology group.
inline Eta eta_h(const SimplicialComplex& c) {
  if (c.is_empty_complex()) return Eta::finite(0);
  if (c.cone_vertex().has_value()) return Eta::infinity();
  const int d = c.dim();
  auto by_dim = c.faces_by_dim(d);
  auto faces_at = [&](int p) -> const std::vector<Face>& {
    static const std::vector<Face> kNone;
    return (p >= 0 && p < static_cast<int>(by_dim.size())) ? by_dim[p] : kNone;
  };
  long rank_prev = 0;  // rank of boundary_p during the sweep
  for (int p = -1; p <= d; ++p) {
    const long faces = p == -1 ? 1 : static_cast<long>(faces_at(p).size());
    const long rank_next = p + 1 > d ? 0 : detail::boundary_rank(faces_at(p), faces_at(p + 1), p + 1);
    const long betti = faces - rank_prev - rank_next;
    if (betti < 0) throw std::logic_error("eta_h: negative Betti number");
    if (betti != 0) return Eta::finite(p + 1);
    rank_prev = rank_next;
  }
  return Eta::infinity();
}

// d-Leray test: reduced homology of every induced subcomplex vanishes in
// all dimensions >= d. Exponential in |V(c)|.
inline bool is_d_leray(const SimplicialComplex& c, int d) {
  if (d < 0) throw std::invalid_argument("is_d_leray: d < 0");
  const Face verts = c.vertex_set();
  const int n = static_cast<int>(verts.size());
  if (n > 20) throw std::invalid_argument("is_d_leray: vertex set too large");
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Face x;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) x.push_back(verts[i]);
    }
    const ReducedBetti b = reduced_betti(c.induced(x));
    for (int p = d; p <= b.top_dim(); ++p) {
      if (b.at(p) != 0) return false;
    }
  }
  return true;
}

}  // namespace topohall::homology

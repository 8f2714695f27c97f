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
 * Matroids as exact rank oracles: partition, uniform, and linear
 * realizations plus a transform stack of dual, truncation, restriction,
 * contraction, and direct sum. Derived notions (closure, flats, bases,
 * loops, coloops, independence complexes, eta) are all evaluated through
 * the rank oracle.
 *
 * Dual rank uses r*(X) = r(V - X) + |X| - r(V); contraction fixes the
 * lexicographically first basis B of M[A] and uses r(X u B) - |B|;
 * truncation clamps to min(k, r). Exhaustive enumerations (flats, bases)
 * refuse ground sets above 16 elements.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/homology.hpp"
#include "topohall/rational_matrix.hpp"

namespace topohall::matroid {

using complex::Face;

class Matroid {
 public:
  static Matroid partition(std::vector<Face> classes, std::vector<long> capacities = {}) {
    if (capacities.empty()) capacities.assign(classes.size(), 1);
    if (capacities.size() != classes.size()) {
      throw std::invalid_argument("matroid: capacity count mismatch");
    }
    for (long c : capacities) {
      if (c < 0) throw std::invalid_argument("matroid: negative capacity");
    }
    Face ground;
    for (auto& cls : classes) {
      cls = complex::sorted_face(std::move(cls));
      if (cls.empty()) throw std::invalid_argument("matroid: empty partition class");
      if (!complex::face_intersection(ground, cls).empty()) {
        throw std::invalid_argument("matroid: partition classes overlap");
      }
      ground = complex::face_union(ground, cls);
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Partition;
    node->ground = std::move(ground);
    node->classes = std::move(classes);
    node->capacities = std::move(capacities);
    return Matroid(std::move(node));
  }

  static Matroid uniform(Face ground, long k) {
    ground = complex::sorted_face(std::move(ground));
    if (k < 0 || k > static_cast<long>(ground.size())) {
      throw std::invalid_argument("matroid: uniform rank out of range");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Uniform;
    node->ground = std::move(ground);
    node->k = k;
    return Matroid(std::move(node));
  }

  // Column j of columns represents ground[j] (ground sorted ascending).
  static Matroid linear(Face ground, exactla::RationalMatrix columns) {
    ground = complex::sorted_face(std::move(ground));
    if (columns.cols() != static_cast<int>(ground.size())) {
      throw std::invalid_argument("matroid: one column per ground element required");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Linear;
    node->ground = std::move(ground);
    node->columns = std::make_shared<exactla::RationalMatrix>(std::move(columns));
    return Matroid(std::move(node));
  }

  Matroid dual() const {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Dual;
    node->ground = ground();
    node->inner = node_;
    return Matroid(std::move(node));
  }

  Matroid truncate(long k) const {
    if (k < 0) throw std::invalid_argument("matroid: negative truncation");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Truncate;
    node->ground = ground();
    node->inner = node_;
    node->k = k;
    return Matroid(std::move(node));
  }

  Matroid restrict_to(const Face& s) const {
    Face ss = complex::sorted_face(s);
    require_subset(ss, "restrict");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Restrict;
    node->ground = std::move(ss);
    node->inner = node_;
    return Matroid(std::move(node));
  }

  // M / A; the fixed basis of M[A] is chosen greedily in ground order.
  Matroid contract(const Face& a) const {
    Face aa = complex::sorted_face(a);
    require_subset(aa, "contract");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Contract;
    node->ground = complex::face_difference(ground(), aa);
    node->inner = node_;
    node->fixed_basis = lex_first_basis_of(aa);
    return Matroid(std::move(node));
  }

  static Matroid direct_sum(const Matroid& a, const Matroid& b) {
    if (!complex::face_intersection(a.ground(), b.ground()).empty()) {
      throw std::invalid_argument("matroid: direct sum grounds overlap");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::DirectSum;
    node->ground = complex::face_union(a.ground(), b.ground());
    node->inner = a.node_;
    node->inner2 = b.node_;
    return Matroid(std::move(node));
  }

  const Face& ground() const { return node_->ground; }

  long rank(const Face& x) const {
    Face xs = complex::sorted_face(x);
    require_subset(xs, "rank");
    return rank_of(*node_, xs);
  }
  long rank() const { return rank_of(*node_, node_->ground); }

  bool independent(const Face& x) const {
    Face xs = complex::sorted_face(x);
    return rank(xs) == static_cast<long>(xs.size());
  }

  Face closure(const Face& x) const {
    Face xs = complex::sorted_face(x);
    const long r = rank(xs);
    Face out = xs;
    for (int v : complex::face_difference(ground(), xs)) {
      if (rank(complex::face_union(xs, {v})) == r) out.push_back(v);
    }
    return complex::sorted_face(std::move(out));
  }

  bool is_flat(const Face& f) const {
    Face fs = complex::sorted_face(f);
    const long r = rank(fs);
    for (int v : complex::face_difference(ground(), fs)) {
      if (rank(complex::face_union(fs, {v})) == r) return false;
    }
    return true;
  }

  // All flats of rank <= max_rank, ordered by (size, lex).
  std::vector<Face> flats(long max_rank) const {
    check_cap("flats");
    std::vector<Face> out;
    for_each_subset([&](const Face& s) {
      if (rank(s) <= max_rank && is_flat(s)) out.push_back(s);
    });
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
  }

  std::vector<Face> bases() const {
    check_cap("bases");
    const long r = rank();
    std::vector<Face> out;
    for_each_subset([&](const Face& s) {
      if (static_cast<long>(s.size()) == r && independent(s)) out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  // (loops, coloops): dependent singletons; elements in every basis.
  std::pair<Face, Face> loops_and_coloops() const {
    Face loops;
    Face coloops;
    const long r = rank();
    for (int v : ground()) {
      if (rank({v}) == 0) loops.push_back(v);
      if (rank(complex::face_difference(ground(), {v})) == r - 1) coloops.push_back(v);
    }
    return {loops, coloops};
  }

  // Maximal faces are the bases; ground set is the matroid's ground set.
  complex::SimplicialComplex independence_complex() const {
    std::vector<Face> faces = bases();
    if (faces.empty()) faces.push_back({});
    return complex::SimplicialComplex::from_maximal_faces(ground(), std::move(faces));
  }

 private:
  enum class Kind { Partition, Uniform, Linear, Dual, Truncate, Restrict, Contract, DirectSum };

  struct Node {
    Kind kind;
    Face ground;
    // Partition
    std::vector<Face> classes;
    std::vector<long> capacities;
    // Uniform rank / truncation bound
    long k = 0;
    // Linear
    std::shared_ptr<exactla::RationalMatrix> columns;
    // Transforms
    std::shared_ptr<const Node> inner;
    std::shared_ptr<const Node> inner2;  // direct sum only
    Face fixed_basis;                    // contraction only
  };

  explicit Matroid(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool size_lex_less(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  void require_subset(const Face& x, const char* op) const {
    if (!complex::face_subset(x, ground())) {
      throw std::invalid_argument(std::string("matroid: ") + op + " argument outside ground set");
    }
  }

  void check_cap(const char* op) const {
    if (ground().size() > 16) {
      throw std::invalid_argument(std::string("matroid: ") + op +
                                  " enumeration beyond the 16-element cap");
    }
  }

  template <typename F>
  void for_each_subset(F&& f) const {
    const Face& g = ground();
    const int n = static_cast<int>(g.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      Face s;
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) s.push_back(g[i]);
      }
      f(s);
    }
  }

  Face lex_first_basis_of(const Face& a) const {
    Face basis;
    long r = 0;
    for (int v : a) {
      Face cand = complex::face_union(basis, {v});
      if (rank_of(*node_, cand) > r) {
        basis = std::move(cand);
        ++r;
      }
    }
    return basis;
  }

  // x is sorted and within node.ground.
  static long rank_of(const Node& node, const Face& x) {
    switch (node.kind) {
      case Kind::Partition: {
        long r = 0;
        for (std::size_t i = 0; i < node.classes.size(); ++i) {
          const long hit =
              static_cast<long>(complex::face_intersection(node.classes[i], x).size());
          r += std::min(hit, node.capacities[i]);
        }
        return r;
      }
      case Kind::Uniform:
        return std::min(node.k, static_cast<long>(x.size()));
      case Kind::Linear: {
        const auto& cols = *node.columns;
        exactla::RationalMatrix sub(cols.rows(), static_cast<int>(x.size()));
        for (std::size_t j = 0; j < x.size(); ++j) {
          const int src = static_cast<int>(
              std::lower_bound(node.ground.begin(), node.ground.end(), x[j]) -
              node.ground.begin());
          for (int i = 0; i < cols.rows(); ++i) {
            sub.set(i, static_cast<int>(j), cols.at(i, src));
          }
        }
        return sub.rank();
      }
      case Kind::Dual: {
        const Face rest = complex::face_difference(node.ground, x);
        return rank_of(*node.inner, rest) + static_cast<long>(x.size()) -
               rank_of(*node.inner, node.ground);
      }
      case Kind::Truncate:
        return std::min(node.k, rank_of(*node.inner, x));
      case Kind::Restrict:
        return rank_of(*node.inner, x);
      case Kind::Contract:
        return rank_of(*node.inner, complex::face_union(x, node.fixed_basis)) -
               static_cast<long>(node.fixed_basis.size());
      case Kind::DirectSum:
        return rank_of(*node.inner, complex::face_intersection(x, node.inner->ground)) +
               rank_of(*node.inner2, complex::face_intersection(x, node.inner2->ground));
    }
    throw std::logic_error("matroid: unknown node kind");
  }

  std::shared_ptr<const Node> node_;
};

// eta of the independence complex, by the closed form: r(M) without
// coloops, infinity with them.
inline homology::Eta eta_matroid(const Matroid& m) {
  const auto [loops, coloops] = m.loops_and_coloops();
  (void)loops;
  if (!coloops.empty()) return homology::Eta::infinity();
  return homology::Eta::finite(m.rank());
}

// Largest common independent set size of two matroids on the same ground
// set, by exhaustive search; the min-formula equality is a test invariant.
inline long matroid_intersection_number(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) {
    throw std::invalid_argument("matroid_intersection_number: ground sets differ");
  }
  if (a.ground().size() > 16) {
    throw std::invalid_argument("matroid_intersection_number: beyond the 16-element cap");
  }
  const Face& g = a.ground();
  const int n = static_cast<int>(g.size());
  long best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Face s;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) s.push_back(g[i]);
    }
    if (static_cast<long>(s.size()) > best && a.independent(s) && b.independent(s)) {
      best = static_cast<long>(s.size());
    }
  }
  return best;
}

// min over X of r_M(X) + r_N(V - X); equals the intersection number by the
// matroid intersection theorem and is checked against it in tests.
inline long matroid_intersection_min_formula(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) {
    throw std::invalid_argument("matroid_intersection_min_formula: ground sets differ");
  }
  if (a.ground().size() > 16) {
    throw std::invalid_argument("matroid_intersection_min_formula: beyond the 16-element cap");
  }
  const Face& g = a.ground();
  const int n = static_cast<int>(g.size());
  long best = -1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Face s;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) s.push_back(g[i]);
    }
    const long v = a.rank(s) + b.rank(complex::face_difference(g, s));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

}  // namespace topohall::matroid

namespace topohall::complex {

// Int(C, M; k): order complex on the faces of c whose matroid rank is at
// least k, i.e. the faces containing a size-k independent set.
inline FaceOrderComplex intersection_complex(const SimplicialComplex& c,
                                             const matroid::Matroid& m, int k) {
  if (sorted_face(c.ground_set()) != m.ground()) {
    throw std::invalid_argument("intersection_complex: ground sets differ");
  }
  if (k < 1 || k > m.rank()) {
    throw std::invalid_argument("intersection_complex: k out of range");
  }
  std::vector<Face> qualifying;
  for (auto& f : c.all_faces()) {
    if (m.rank(f) >= k) qualifying.push_back(std::move(f));
  }
  return order_complex_of_faces(std::move(qualifying));
}

}  // namespace topohall::complex

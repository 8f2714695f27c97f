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
 * Finite posets, their order complexes (faces = chains), and the interval
 * subdivision in(P) whose elements are the closed intervals [a, b] ordered
 * by [a1, b1] <= [a2, b2] iff a2 <= a1 <= b1 <= b2.
 */

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"

namespace topohall::complex {

class FinitePoset {
 public:
  // Builds from cover (or any generating) pairs lo < hi; the strict order is
  // the transitive closure, rejected when it has a cycle.
  static FinitePoset from_covers(std::vector<int> elements,
                                 const std::vector<std::pair<int, int>>& covers) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
      throw std::invalid_argument("poset: duplicate element");
    }
    const int n = static_cast<int>(elements.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[elements[i]] = i;
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (const auto& [lo, hi] : covers) {
      auto it_lo = pos.find(lo);
      auto it_hi = pos.find(hi);
      if (it_lo == pos.end() || it_hi == pos.end()) {
        throw std::invalid_argument("poset: cover endpoint outside element set");
      }
      if (lo == hi) throw std::invalid_argument("poset: reflexive cover");
      less[it_lo->second][it_hi->second] = true;
    }
    // Warshall closure, then the acyclicity check.
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (!less[i][k]) continue;
        for (int j = 0; j < n; ++j) {
          if (less[k][j]) less[i][j] = true;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (less[i][i]) throw std::invalid_argument("poset: order relation has a cycle");
    }
    FinitePoset p;
    p.elements_ = std::move(elements);
    p.less_ = std::move(less);
    return p;
  }

  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  // Strict order on element ids.
  bool less(int a, int b) const { return less_[index(a)][index(b)]; }
  bool leq(int a, int b) const { return a == b || less(a, b); }

  // Cover pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> cover_pairs() const {
    const int n = size();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!less_[i][j]) continue;
        bool cover = true;
        for (int k = 0; k < n && cover; ++k) {
          if (less_[i][k] && less_[k][j]) cover = false;
        }
        if (cover) out.emplace_back(elements_[i], elements_[j]);
      }
    }
    return out;
  }

  // ord(P): faces are the chains; maximal faces the maximal chains.
  SimplicialComplex order_complex() const {
    const int n = size();
    std::vector<Face> chains = detail::maximal_chains(n, less_);
    std::vector<Face> faces;
    faces.reserve(chains.size());
    for (const auto& ch : chains) {
      Face f;
      f.reserve(ch.size());
      for (int i : ch) f.push_back(elements_[i]);
      faces.push_back(sorted_face(std::move(f)));
    }
    if (faces.empty()) faces.push_back({});
    return SimplicialComplex::from_maximal_faces(elements_, std::move(faces));
  }

 private:
  int index(int e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e) throw std::invalid_argument("poset: unknown element");
    return static_cast<int>(it - elements_.begin());
  }

  std::vector<int> elements_;             // sorted ids
  std::vector<std::vector<bool>> less_;   // transitively closed strict order
};

// in(P) with its element labels: interval i of the subdivision is the pair
// intervals[i] = (a, b) with a <= b in P.
struct IntervalSubdivision {
  FinitePoset poset;
  std::vector<std::pair<int, int>> intervals;  // index = element id of poset
};

inline IntervalSubdivision interval_subdivision(const FinitePoset& p) {
  std::vector<std::pair<int, int>> intervals;
  for (int a : p.elements()) {
    for (int b : p.elements()) {
      if (p.leq(a, b)) intervals.emplace_back(a, b);
    }
  }
  std::sort(intervals.begin(), intervals.end());
  const int n = static_cast<int>(intervals.size());
  std::vector<int> ids(n);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) ids[i] = i;
  // Generating pairs of the containment order; closure is recomputed.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& [a1, b1] = intervals[i];
      const auto& [a2, b2] = intervals[j];
      if (p.leq(a2, a1) && p.leq(b1, b2) && intervals[i] != intervals[j]) {
        covers.emplace_back(i, j);
      }
    }
  }
  return IntervalSubdivision{FinitePoset::from_covers(std::move(ids), covers),
                             std::move(intervals)};
}

}  // namespace topohall::complex

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
 * Exact rational discrete geometry.
 *
 * Convex-hull membership and intersecting-partition tests run as exact
 * rational LPs with re-verified certificates. On top of them sit the Sarkaria
 * tensor transform, the reconfiguration graphs of ordered Tverberg
 * partitions, colorful Caratheodory tuples, and colorful Helly tuples (convex
 * sets realized as H-polytopes so emptiness is decidable), the Radon
 * interpolation path, and the order complexes of partial tuples behind the
 * higher connectedness statements.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/lp.hpp"
#include "topohall/poset.hpp"
#include "topohall/rational.hpp"
#include "topohall/rational_matrix.hpp"
#include "topohall/reconfig.hpp"

namespace topohall::geometry {

using complex::Face;
using exactla::Rational;
using Point = std::vector<Rational>;

// Labeled points in Q^d. Labels are distinct ints; positional accessors
// follow ascending label order.
class PointConfig {
 public:
  static PointConfig from_points(long d, std::vector<std::pair<int, Point>> labeled) {
    if (d < 0) throw std::invalid_argument("PointConfig: negative dimension");
    std::sort(labeled.begin(), labeled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    PointConfig out;
    out.d_ = d;
    for (auto& [label, pt] : labeled) {
      if (!out.labels_.empty() && out.labels_.back() == label) {
        throw std::invalid_argument("PointConfig: duplicate label");
      }
      if (static_cast<long>(pt.size()) != d) {
        throw std::invalid_argument("PointConfig: point has wrong dimension");
      }
      out.labels_.push_back(label);
      out.points_.push_back(std::move(pt));
    }
    return out;
  }

  // Labels 0..n-1 in row order.
  static PointConfig from_rows(long d, const std::vector<Point>& rows) {
    std::vector<std::pair<int, Point>> labeled;
    labeled.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      labeled.emplace_back(static_cast<int>(i), rows[i]);
    }
    return from_points(d, std::move(labeled));
  }

  long dimension() const { return d_; }
  long size() const { return static_cast<long>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  const Point& point_at(long index) const { return points_.at(static_cast<std::size_t>(index)); }

  std::optional<long> index_of(int label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<long>(it - labels_.begin());
  }

  const Point& point(int label) const {
    const auto idx = index_of(label);
    if (!idx) throw std::invalid_argument("PointConfig: unknown label");
    return points_[static_cast<std::size_t>(*idx)];
  }

 private:
  long d_ = 0;
  std::vector<int> labels_;
  std::vector<Point> points_;
};

// Assignment of every label to a part in 1..r; parts may be empty.
class OrderedPartition {
 public:
  static OrderedPartition from_assignment(long r, std::vector<std::pair<int, int>> part_of) {
    if (r < 1) throw std::invalid_argument("OrderedPartition: r must be at least 1");
    std::sort(part_of.begin(), part_of.end());
    for (std::size_t i = 0; i < part_of.size(); ++i) {
      if (i > 0 && part_of[i].first == part_of[i - 1].first) {
        throw std::invalid_argument("OrderedPartition: duplicate label");
      }
      if (part_of[i].second < 1 || part_of[i].second > r) {
        throw std::invalid_argument("OrderedPartition: part out of range");
      }
    }
    OrderedPartition out;
    out.r_ = r;
    out.assignment_ = std::move(part_of);
    return out;
  }

  static OrderedPartition from_part_lists(long r, const std::vector<std::vector<int>>& parts) {
    if (static_cast<long>(parts.size()) != r) {
      throw std::invalid_argument("OrderedPartition: wrong number of parts");
    }
    std::vector<std::pair<int, int>> part_of;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      for (int label : parts[k]) part_of.emplace_back(label, static_cast<int>(k) + 1);
    }
    return from_assignment(r, std::move(part_of));
  }

  long r() const { return r_; }
  long size() const { return static_cast<long>(assignment_.size()); }
  const std::vector<std::pair<int, int>>& assignment() const { return assignment_; }

  int part_of(int label) const {
    const auto it = std::lower_bound(assignment_.begin(), assignment_.end(),
                                     std::make_pair(label, 0));
    if (it == assignment_.end() || it->first != label) {
      throw std::invalid_argument("OrderedPartition: unknown label");
    }
    return it->second;
  }

  std::vector<std::vector<int>> parts_as_lists() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(r_));
    for (const auto& [label, part] : assignment_) {
      out[static_cast<std::size_t>(part - 1)].push_back(label);
    }
    return out;
  }

  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.r_ == b.r_ && a.assignment_ == b.assignment_;
  }

 private:
  long r_ = 1;
  std::vector<std::pair<int, int>> assignment_;
};

struct ConvexHullMembership {
  bool inside = false;
  // Convex coefficients per input point when inside.
  std::vector<Rational> coefficients;
  // When outside: separator z with z.p >= offset for every input point and
  // z.x < offset.
  std::vector<Rational> separator;
  Rational separator_offset;
};

// Exact membership of x in the convex hull of the given points; conv of an
// empty set is empty.
inline ConvexHullMembership conv_contains(const std::vector<Point>& points, const Point& x) {
  const long d = static_cast<long>(x.size());
  for (const auto& pt : points) {
    if (static_cast<long>(pt.size()) != d) {
      throw std::invalid_argument("conv_contains: dimension mismatch");
    }
  }
  const int n = static_cast<int>(points.size());
  exactla::RationalMatrix a(static_cast<int>(d) + 1, n);
  std::vector<Rational> b(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j < n; ++j) {
    a.set(0, j, Rational(1));
    for (long c = 0; c < d; ++c) a.set(static_cast<int>(c) + 1, j, points[j][c]);
  }
  b[0] = Rational(1);
  for (long c = 0; c < d; ++c) b[static_cast<std::size_t>(c) + 1] = x[c];
  std::vector<exactla::VarSign> signs(n, exactla::VarSign::NonNeg);
  const auto res = exactla::lp_feasible(exactla::LPFeasibility(a, b, signs));
  ConvexHullMembership out;
  if (res.feasible) {
    out.inside = true;
    out.coefficients = res.point;
    return out;
  }
  // Farkas y has y^T A >= 0 columnwise and y^T b < 0, so z = y[1..d] with
  // offset -y[0] satisfies z.p >= offset on every point and z.x < offset.
  out.separator.resize(static_cast<std::size_t>(d));
  for (long c = 0; c < d; ++c) out.separator[c] = res.certificate[static_cast<std::size_t>(c) + 1];
  out.separator_offset = -res.certificate[0];
  return out;
}

namespace detail {

// Common point of the hulls of the listed parts, or none. An empty part has
// an empty hull, so any empty part gives none.
inline std::optional<Point> hull_intersection_point(
    const std::vector<std::vector<const Point*>>& parts, long d) {
  for (const auto& part : parts) {
    if (part.empty()) return std::nullopt;
  }
  const int r = static_cast<int>(parts.size());
  int total = 0;
  for (const auto& part : parts) total += static_cast<int>(part.size());
  // Variables: one convex coefficient per listed point, then y free.
  const int rows = r * (1 + static_cast<int>(d));
  exactla::RationalMatrix a(rows, total + static_cast<int>(d));
  std::vector<Rational> b(static_cast<std::size_t>(rows));
  int col = 0;
  for (int k = 0; k < r; ++k) {
    b[static_cast<std::size_t>(k)] = Rational(1);
    for (const Point* pt : parts[static_cast<std::size_t>(k)]) {
      a.set(k, col, Rational(1));
      for (long c = 0; c < d; ++c) {
        a.set(r + k * static_cast<int>(d) + static_cast<int>(c), col, (*pt)[c]);
      }
      ++col;
    }
    for (long c = 0; c < d; ++c) {
      a.set(r + k * static_cast<int>(d) + static_cast<int>(c), total + static_cast<int>(c),
            Rational(-1));
    }
  }
  std::vector<exactla::VarSign> signs(static_cast<std::size_t>(total), exactla::VarSign::NonNeg);
  for (long c = 0; c < d; ++c) signs.push_back(exactla::VarSign::Free);
  const auto res = exactla::lp_feasible(exactla::LPFeasibility(a, b, signs));
  if (!res.feasible) return std::nullopt;
  Point y(static_cast<std::size_t>(d));
  for (long c = 0; c < d; ++c) y[c] = res.point[static_cast<std::size_t>(total + c)];
  return y;
}

// Part lists of config points under a 0-based assignment; entry -1 skips the
// point (used for reduced partitions).
inline std::vector<std::vector<const Point*>> parts_from_assignment(
    const PointConfig& x, const std::vector<int>& assign, long r) {
  std::vector<std::vector<const Point*>> parts(static_cast<std::size_t>(r));
  for (long i = 0; i < x.size(); ++i) {
    const int a = assign[static_cast<std::size_t>(i)];
    if (a < 0) continue;
    parts[static_cast<std::size_t>(a)].push_back(&x.point_at(i));
  }
  return parts;
}

}  // namespace detail

struct TverbergCheck {
  bool intersecting = false;
  Point common;  // a point of the common intersection when intersecting
};

// Single-LP test that the parts of p have a common hull point; any empty
// part fails.
inline TverbergCheck is_tverberg(const PointConfig& x, const OrderedPartition& p) {
  if (p.size() != x.size()) {
    throw std::invalid_argument("is_tverberg: partition does not cover the labels");
  }
  std::vector<int> assign(static_cast<std::size_t>(x.size()));
  for (long i = 0; i < x.size(); ++i) {
    assign[static_cast<std::size_t>(i)] = p.part_of(x.labels()[static_cast<std::size_t>(i)]) - 1;
  }
  const auto parts = detail::parts_from_assignment(x, assign, p.r());
  TverbergCheck out;
  if (auto y = detail::hull_intersection_point(parts, x.dimension())) {
    out.intersecting = true;
    out.common = std::move(*y);
  }
  return out;
}

// Tensor points (x_i; 1) (x) w_j in R^{(d+1)(r-1)}, row-major, with w_j the
// j-th standard basis vector for j < r and w_r = -(1, ..., 1). Outer order
// follows ascending label, inner order j = 1..r.
inline std::vector<std::vector<Point>> sarkaria_tensors(const PointConfig& x, long r) {
  if (r < 2) throw std::invalid_argument("sarkaria_tensors: r must be at least 2");
  const long d = x.dimension();
  const long dim = (d + 1) * (r - 1);
  std::vector<std::vector<Point>> out;
  out.reserve(static_cast<std::size_t>(x.size()));
  for (long i = 0; i < x.size(); ++i) {
    Point lifted = x.point_at(i);
    lifted.push_back(Rational(1));
    std::vector<Point> tensors;
    tensors.reserve(static_cast<std::size_t>(r));
    for (long j = 1; j <= r; ++j) {
      Point t(static_cast<std::size_t>(dim));
      for (long k = 0; k <= d; ++k) {
        for (long l = 0; l < r - 1; ++l) {
          const Rational w = j == r ? Rational(-1) : (l == j - 1 ? Rational(1) : Rational(0));
          t[static_cast<std::size_t>(k * (r - 1) + l)] = lifted[static_cast<std::size_t>(k)] * w;
        }
      }
      tensors.push_back(std::move(t));
    }
    out.push_back(std::move(tensors));
  }
  return out;
}

namespace detail {

// Overflow-safe candidate count for mixed-radix enumeration.
inline void check_enumeration_cap(const std::vector<long>& radixes, const char* where) {
  unsigned long long count = 1;
  for (long r : radixes) {
    if (r <= 0) return;  // empty choice set: nothing to enumerate
    count *= static_cast<unsigned long long>(r);
    reconfig::detail::check_candidate_cap(count, where);
  }
}

// Lexicographic odometer over mixed radixes; calls f on every tuple.
inline void enumerate_tuples(const std::vector<long>& radixes,
                             const std::function<void(const std::vector<int>&)>& f) {
  for (long r : radixes) {
    if (r <= 0) return;
  }
  std::vector<int> t(radixes.size(), 0);
  for (;;) {
    f(t);
    long pos = static_cast<long>(radixes.size()) - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] + 1 == radixes[static_cast<std::size_t>(pos)]) {
      t[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++t[static_cast<std::size_t>(pos)];
  }
}

// Differ-in-one adjacency over tuple vertices: vertices sharing all entries
// but one are grouped by the wildcarded tuple, and each group is accepted or
// rejected wholesale by one reduced test on the shared entries.
inline std::vector<std::pair<int, int>> bucket_edges(
    const std::vector<std::vector<int>>& vertices,
    const std::function<bool(const std::vector<int>&, std::size_t)>& reduced_ok) {
  std::map<std::vector<int>, std::vector<int>> buckets;
  for (int id = 0; id < static_cast<int>(vertices.size()); ++id) {
    std::vector<int> key = vertices[static_cast<std::size_t>(id)];
    for (std::size_t i = 0; i < key.size(); ++i) {
      const int saved = key[i];
      key[i] = -1;
      buckets[key].push_back(id);
      key[i] = saved;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [key, ids] : buckets) {
    if (ids.size() < 2) continue;
    const std::size_t wildcard =
        static_cast<std::size_t>(std::find(key.begin(), key.end(), -1) - key.begin());
    if (!reduced_ok(key, wildcard)) continue;
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        edges.emplace_back(ids[a], ids[b]);
      }
    }
  }
  return edges;
}

}  // namespace detail

// Reconfiguration graph of ordered Tverberg r-partitions of the full point
// set. Configurations encode label position i assigned to part p as the id
// i*r + (p-1). Two partitions are adjacent when they differ at one point and
// the shared partition of the remaining points is itself intersecting.
inline reconfig::ReconfigGraph rg_tverberg(const PointConfig& x, long r) {
  if (r < 1) throw std::invalid_argument("rg_tverberg: r must be at least 1");
  const long n = x.size();
  detail::check_enumeration_cap(std::vector<long>(static_cast<std::size_t>(n), r), "rg_tverberg");
  std::vector<std::vector<int>> vertices;
  detail::enumerate_tuples(
      std::vector<long>(static_cast<std::size_t>(n), r), [&](const std::vector<int>& assign) {
        std::vector<long> sizes(static_cast<std::size_t>(r), 0);
        for (int a : assign) ++sizes[static_cast<std::size_t>(a)];
        for (long s : sizes) {
          if (s == 0) return;
        }
        const auto parts = detail::parts_from_assignment(x, assign, r);
        if (detail::hull_intersection_point(parts, x.dimension())) vertices.push_back(assign);
      });
  std::vector<Face> configs;
  configs.reserve(vertices.size());
  for (const auto& assign : vertices) {
    Face f;
    f.reserve(assign.size());
    for (std::size_t i = 0; i < assign.size(); ++i) {
      f.push_back(static_cast<int>(i) * static_cast<int>(r) + assign[i]);
    }
    configs.push_back(std::move(f));
  }
  auto edges = detail::bucket_edges(vertices, [&](const std::vector<int>& key, std::size_t) {
    const auto parts = detail::parts_from_assignment(x, key, r);
    for (const auto& part : parts) {
      if (part.empty()) return false;
    }
    return detail::hull_intersection_point(parts, x.dimension()).has_value();
  });
  return reconfig::ReconfigGraph::from_parts(std::move(configs), std::move(edges));
}

namespace detail {

// Offset encoding for tuple configurations: position i choosing j maps to
// offsets[i] + j.
inline std::vector<int> tuple_offsets(const std::vector<long>& radixes) {
  std::vector<int> offsets(radixes.size() + 1, 0);
  for (std::size_t i = 0; i < radixes.size(); ++i) {
    offsets[i + 1] = offsets[i] + static_cast<int>(radixes[i]);
  }
  return offsets;
}

inline reconfig::ReconfigGraph tuple_reconfig_graph(
    const std::vector<long>& radixes, const std::function<bool(const std::vector<int>&)>& is_vertex,
    const std::function<bool(const std::vector<int>&, std::size_t)>& reduced_ok,
    const char* where) {
  check_enumeration_cap(radixes, where);
  std::vector<std::vector<int>> vertices;
  enumerate_tuples(radixes, [&](const std::vector<int>& t) {
    if (is_vertex(t)) vertices.push_back(t);
  });
  const auto offsets = tuple_offsets(radixes);
  std::vector<Face> configs;
  configs.reserve(vertices.size());
  for (const auto& t : vertices) {
    Face f;
    f.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) f.push_back(offsets[i] + t[i]);
    configs.push_back(std::move(f));
  }
  auto edges = bucket_edges(vertices, reduced_ok);
  return reconfig::ReconfigGraph::from_parts(std::move(configs), std::move(edges));
}

}  // namespace detail

// Reconfiguration graph of colorful Caratheodory tuples: one point from each
// set with x in the hull of the choices, adjacent when they differ in one
// coordinate and x lies in the hull of the shared choices.
inline reconfig::ReconfigGraph rg_colorful_caratheodory(const std::vector<std::vector<Point>>& a_sets,
                                                        const Point& x) {
  const long d = static_cast<long>(x.size());
  std::vector<long> radixes;
  radixes.reserve(a_sets.size());
  for (const auto& set : a_sets) {
    if (set.empty()) throw std::invalid_argument("rg_colorful_caratheodory: empty point set");
    for (const auto& pt : set) {
      if (static_cast<long>(pt.size()) != d) {
        throw std::invalid_argument("rg_colorful_caratheodory: dimension mismatch");
      }
    }
    radixes.push_back(static_cast<long>(set.size()));
  }
  const auto chosen_points = [&](const std::vector<int>& t, std::size_t skip) {
    std::vector<Point> pts;
    pts.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == skip) continue;
      pts.push_back(a_sets[i][static_cast<std::size_t>(t[i])]);
    }
    return pts;
  };
  return detail::tuple_reconfig_graph(
      radixes,
      [&](const std::vector<int>& t) { return conv_contains(chosen_points(t, t.size()), x).inside; },
      [&](const std::vector<int>& key, std::size_t wildcard) {
        return conv_contains(chosen_points(key, wildcard), x).inside;
      },
      "rg_colorful_caratheodory");
}

// Closed half-space {y : a.y >= b}.
struct HalfSpace {
  Point a;
  Rational b;
};

// A convex set realized as a finite intersection of closed half-spaces; the
// empty system is all of R^d.
using HPolytope = std::vector<HalfSpace>;

struct HPolytopeFamily {
  long d = 0;
  std::vector<std::vector<HPolytope>> families;
};

// True when the listed H-polytopes share a common point.
inline bool hpolytopes_intersect(const std::vector<HPolytope>& members, long d) {
  long rows = 0;
  for (const auto& member : members) {
    for (const auto& h : member) {
      if (static_cast<long>(h.a.size()) != d) {
        throw std::invalid_argument("hpolytopes_intersect: dimension mismatch");
      }
      ++rows;
    }
  }
  // a.y - s = b with y free and slack s >= 0 per half-space.
  exactla::RationalMatrix a(static_cast<int>(rows), static_cast<int>(d + rows));
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(rows));
  int row = 0;
  for (const auto& member : members) {
    for (const auto& h : member) {
      for (long c = 0; c < d; ++c) a.set(row, static_cast<int>(c), h.a[static_cast<std::size_t>(c)]);
      a.set(row, static_cast<int>(d) + row, Rational(-1));
      b.push_back(h.b);
      ++row;
    }
  }
  std::vector<exactla::VarSign> signs(static_cast<std::size_t>(d), exactla::VarSign::Free);
  signs.resize(static_cast<std::size_t>(d + rows), exactla::VarSign::NonNeg);
  return exactla::lp_feasible(exactla::LPFeasibility(a, b, signs)).feasible;
}

// Reconfiguration graph of colorful Helly tuples: one member from each
// family with empty common intersection, adjacent when they differ in one
// coordinate and the shared members already have empty intersection.
inline reconfig::ReconfigGraph rg_colorful_helly(const HPolytopeFamily& f) {
  if (f.families.empty()) throw std::invalid_argument("rg_colorful_helly: no families");
  std::vector<long> radixes;
  radixes.reserve(f.families.size());
  for (const auto& family : f.families) radixes.push_back(static_cast<long>(family.size()));
  const auto chosen_members = [&](const std::vector<int>& t, std::size_t skip) {
    std::vector<HPolytope> members;
    members.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == skip) continue;
      members.push_back(f.families[i][static_cast<std::size_t>(t[i])]);
    }
    return members;
  };
  return detail::tuple_reconfig_graph(
      radixes,
      [&](const std::vector<int>& t) {
        return !hpolytopes_intersect(chosen_members(t, t.size()), f.d);
      },
      [&](const std::vector<int>& key, std::size_t wildcard) {
        return !hpolytopes_intersect(chosen_members(key, wildcard), f.d);
      },
      "rg_colorful_helly");
}

// Half-space realization H_{i,j} = {y : (a_{i,j} - x).y >= 1} of a colorful
// Caratheodory instance; a choice of points holds x in its hull exactly when
// the matching half-spaces have empty intersection, so the two
// reconfiguration graphs coincide.
inline HPolytopeFamily caratheodory_halfspace_family(const std::vector<std::vector<Point>>& a_sets,
                                                     const Point& x) {
  HPolytopeFamily out;
  out.d = static_cast<long>(x.size());
  out.families.reserve(a_sets.size());
  for (const auto& set : a_sets) {
    std::vector<HPolytope> family;
    family.reserve(set.size());
    for (const auto& pt : set) {
      if (pt.size() != x.size()) {
        throw std::invalid_argument("caratheodory_halfspace_family: dimension mismatch");
      }
      HalfSpace h;
      h.a.resize(x.size());
      for (std::size_t c = 0; c < x.size(); ++c) h.a[c] = pt[c] - x[c];
      h.b = Rational(1);
      family.push_back(HPolytope{std::move(h)});
    }
    out.families.push_back(std::move(family));
  }
  return out;
}

namespace detail {

// Affine dependence alpha for a two-part partition: sum alpha = 0,
// sum alpha_i x_i = 0, alpha >= 0 on part 1, <= 0 on part 2, alpha nonzero.
// Exists exactly when the partition is Radon.
inline std::optional<std::vector<Rational>> radon_dependence(const PointConfig& x,
                                                             const OrderedPartition& p) {
  std::vector<Point> pts;
  std::vector<exactla::DependenceSign> signs;
  pts.reserve(static_cast<std::size_t>(x.size()));
  for (long i = 0; i < x.size(); ++i) {
    pts.push_back(x.point_at(i));
    signs.push_back(p.part_of(x.labels()[static_cast<std::size_t>(i)]) == 1
                        ? exactla::DependenceSign::NonNeg
                        : exactla::DependenceSign::NonPos);
  }
  return exactla::affine_dependence_with_signs(pts, signs);
}

// One interpolation leg between coefficient vectors alpha and beta whose
// segment never vanishes: boundary vanishings move first and last, interior
// sign changes move at their exact crossing times in (time, label) order.
inline void walk_segment(const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                         const std::vector<int>& target, std::vector<int>& cur,
                         std::vector<std::vector<int>>& seq) {
  const std::size_t n = alpha.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i].is_zero() && !beta[i].is_zero() && cur[i] != target[i]) {
      cur[i] = target[i];
      seq.push_back(cur);
    }
  }
  std::vector<std::pair<Rational, std::size_t>> events;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i].sign() * beta[i].sign() < 0) {
      events.emplace_back(alpha[i] / (alpha[i] - beta[i]), i);
    }
  }
  std::sort(events.begin(), events.end());
  for (const auto& [t, i] : events) {
    cur[i] = 3 - cur[i];
    seq.push_back(cur);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i].is_zero() && cur[i] != target[i]) {
      cur[i] = target[i];
      seq.push_back(cur);
    }
  }
  if (cur != target) {
    throw std::logic_error("radon_path: interpolation leg missed its target");
  }
}

}  // namespace detail

struct RadonPath {
  std::vector<OrderedPartition> walk;  // from p to q inclusive
  bool used_detour = false;
};

// Walk from p to q in rg_tverberg(x, 2) by linear interpolation between
// affine dependencies, with a detour through a partition pinning a zero
// coefficient when the two dependencies are antiparallel. Every emitted
// vertex and step is re-verified by LP before returning.
inline RadonPath radon_path(const PointConfig& x, const OrderedPartition& p,
                            const OrderedPartition& q) {
  const long n = x.size();
  const long d = x.dimension();
  if (p.r() != 2 || q.r() != 2) {
    throw std::invalid_argument("radon_path: partitions must have two parts");
  }
  if (p.size() != n || q.size() != n) {
    throw std::invalid_argument("radon_path: partitions must cover the labels");
  }
  for (long i = 0; i < n; ++i) {
    const int label = x.labels()[static_cast<std::size_t>(i)];
    p.part_of(label);
    q.part_of(label);
  }
  if (n < d + 3) throw std::invalid_argument("radon_path: needs at least d + 3 points");
  if (!is_tverberg(x, p).intersecting || !is_tverberg(x, q).intersecting) {
    throw std::invalid_argument("radon_path: endpoints must be Radon partitions");
  }
  RadonPath out;
  if (p == q) {
    out.walk.push_back(p);
    return out;
  }
  const auto alpha_opt = detail::radon_dependence(x, p);
  const auto beta_opt = detail::radon_dependence(x, q);
  if (!alpha_opt || !beta_opt) {
    throw std::logic_error("radon_path: no signed dependence for a verified Radon partition");
  }
  const auto& alpha = *alpha_opt;
  const auto& beta = *beta_opt;

  std::vector<int> cur(static_cast<std::size_t>(n));
  std::vector<int> target(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const int label = x.labels()[static_cast<std::size_t>(i)];
    cur[static_cast<std::size_t>(i)] = p.part_of(label);
    target[static_cast<std::size_t>(i)] = q.part_of(label);
  }
  std::vector<std::vector<int>> seq{cur};

  // Antiparallel means beta = -c alpha for some c > 0, which is exactly when
  // the direct segment vanishes somewhere in (0, 1).
  bool antiparallel = false;
  std::size_t first = 0;
  while (alpha[first].is_zero()) ++first;
  if (!beta[first].is_zero()) {
    const Rational c = -(beta[first] / alpha[first]);
    if (c.sign() > 0) {
      antiparallel = true;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (beta[i] != -(c * alpha[i])) {
          antiparallel = false;
          break;
        }
      }
    }
  }

  if (!antiparallel) {
    detail::walk_segment(alpha, beta, target, cur, seq);
  } else {
    out.used_detour = true;
    std::size_t pivot = 0;
    while (alpha[pivot].sign() <= 0) ++pivot;
    // Dependence of the other points: d+1 rows cannot have full column rank
    // on the n-1 >= d+2 remaining columns.
    exactla::RationalMatrix m(static_cast<int>(d) + 1, static_cast<int>(n) - 1);
    int col = 0;
    for (long i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) == pivot) continue;
      const Point& pt = x.point_at(i);
      for (long c = 0; c < d; ++c) m.set(static_cast<int>(c), col, pt[c]);
      m.set(static_cast<int>(d), col, Rational(1));
      ++col;
    }
    const auto gamma_small = exactla::kernel_vector(m);
    if (!gamma_small) {
      throw std::logic_error("radon_path: affinely independent excess points");
    }
    std::vector<Rational> gamma(static_cast<std::size_t>(n));
    std::vector<int> mid(static_cast<std::size_t>(n));
    col = 0;
    for (long i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) == pivot) {
        mid[static_cast<std::size_t>(i)] = 1;
        continue;
      }
      gamma[static_cast<std::size_t>(i)] = (*gamma_small)[static_cast<std::size_t>(col)];
      mid[static_cast<std::size_t>(i)] = gamma[static_cast<std::size_t>(i)].sign() >= 0 ? 1 : 2;
      ++col;
    }
    detail::walk_segment(alpha, gamma, mid, cur, seq);
    detail::walk_segment(gamma, beta, target, cur, seq);
  }

  // Independent re-verification: every vertex is Radon and every step drops
  // to a Radon partition of the remaining points.
  for (const auto& assign : seq) {
    std::vector<int> zero_based(assign.size());
    for (std::size_t i = 0; i < assign.size(); ++i) zero_based[i] = assign[i] - 1;
    if (!detail::hull_intersection_point(detail::parts_from_assignment(x, zero_based, 2), d)) {
      throw std::logic_error("radon_path: emitted vertex is not a Radon partition");
    }
  }
  for (std::size_t s = 0; s + 1 < seq.size(); ++s) {
    long moved = -1;
    for (std::size_t i = 0; i < seq[s].size(); ++i) {
      if (seq[s][i] != seq[s + 1][i]) {
        if (moved >= 0) throw std::logic_error("radon_path: step moves more than one point");
        moved = static_cast<long>(i);
      }
    }
    if (moved < 0) throw std::logic_error("radon_path: repeated vertex in walk");
    std::vector<int> reduced(seq[s].size());
    for (std::size_t i = 0; i < seq[s].size(); ++i) reduced[i] = seq[s][i] - 1;
    reduced[static_cast<std::size_t>(moved)] = -1;
    if (!detail::hull_intersection_point(detail::parts_from_assignment(x, reduced, 2), d)) {
      throw std::logic_error("radon_path: step is not a reconfiguration edge");
    }
  }

  out.walk.reserve(seq.size());
  for (const auto& assign : seq) {
    std::vector<std::pair<int, int>> part_of;
    part_of.reserve(assign.size());
    for (long i = 0; i < n; ++i) {
      part_of.emplace_back(x.labels()[static_cast<std::size_t>(i)], assign[static_cast<std::size_t>(i)]);
    }
    out.walk.push_back(OrderedPartition::from_assignment(2, std::move(part_of)));
  }
  return out;
}

namespace detail {

// Order complex of an up-closed family of partial tuples: entry 0 marks an
// absent coordinate and s <= t when every present entry of s agrees with t.
// Up-closure makes the covers exactly the one-entry extensions.
inline complex::SimplicialComplex partial_tuple_order_complex(
    const std::vector<long>& arity, const std::function<bool(const std::vector<int>&)>& qualifies,
    const char* where) {
  std::vector<long> radixes;
  radixes.reserve(arity.size());
  for (long k : arity) radixes.push_back(k + 1);
  check_enumeration_cap(radixes, where);
  std::vector<std::vector<int>> elements;
  enumerate_tuples(radixes, [&](const std::vector<int>& t) {
    if (qualifies(t)) elements.push_back(t);
  });
  const int m = static_cast<int>(elements.size());
  reconfig::detail::check_candidate_cap(static_cast<unsigned long long>(m) * m, where);
  const auto present = [](const std::vector<int>& t) {
    long c = 0;
    for (int v : t) c += v != 0;
    return c;
  };
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (present(elements[static_cast<std::size_t>(b)]) !=
          present(elements[static_cast<std::size_t>(a)]) + 1) {
        continue;
      }
      bool below = true;
      for (std::size_t i = 0; i < arity.size(); ++i) {
        const int va = elements[static_cast<std::size_t>(a)][i];
        if (va != 0 && va != elements[static_cast<std::size_t>(b)][i]) {
          below = false;
          break;
        }
      }
      if (below) covers.emplace_back(a, b);
    }
  }
  std::vector<int> ids(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) ids[static_cast<std::size_t>(i)] = i;
  return complex::FinitePoset::from_covers(ids, covers).order_complex();
}

}  // namespace detail

// Order complex of partial ordered Tverberg tuples: pairwise disjoint parts
// with a common hull point, ordered by componentwise inclusion.
inline complex::SimplicialComplex order_complex_tverberg(const PointConfig& x, long r) {
  if (r < 1) throw std::invalid_argument("order_complex_tverberg: r must be at least 1");
  return detail::partial_tuple_order_complex(
      std::vector<long>(static_cast<std::size_t>(x.size()), r),
      [&](const std::vector<int>& t) {
        std::vector<int> assign(t.size());
        std::vector<long> sizes(static_cast<std::size_t>(r), 0);
        for (std::size_t i = 0; i < t.size(); ++i) {
          assign[i] = t[i] - 1;
          if (t[i] != 0) ++sizes[static_cast<std::size_t>(t[i] - 1)];
        }
        for (long s : sizes) {
          if (s == 0) return false;
        }
        return detail::hull_intersection_point(detail::parts_from_assignment(x, assign, r),
                                               x.dimension())
            .has_value();
      },
      "order_complex_tverberg");
}

// Order complex of partial colorful Caratheodory tuples: a choice or a gap
// per set, with x in the hull of the choices.
inline complex::SimplicialComplex order_complex_caratheodory(
    const std::vector<std::vector<Point>>& a_sets, const Point& x) {
  std::vector<long> arity;
  arity.reserve(a_sets.size());
  for (const auto& set : a_sets) {
    if (set.empty()) throw std::invalid_argument("order_complex_caratheodory: empty point set");
    arity.push_back(static_cast<long>(set.size()));
  }
  return detail::partial_tuple_order_complex(
      arity,
      [&](const std::vector<int>& t) {
        std::vector<Point> chosen;
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t[i] != 0) chosen.push_back(a_sets[i][static_cast<std::size_t>(t[i] - 1)]);
        }
        return conv_contains(chosen, x).inside;
      },
      "order_complex_caratheodory");
}

// Order complex of partial colorful Helly tuples: a member or a gap per
// family, with the chosen members' intersection empty.
inline complex::SimplicialComplex order_complex_helly(const HPolytopeFamily& f) {
  std::vector<long> arity;
  arity.reserve(f.families.size());
  for (const auto& family : f.families) arity.push_back(static_cast<long>(family.size()));
  return detail::partial_tuple_order_complex(
      arity,
      [&](const std::vector<int>& t) {
        std::vector<HPolytope> chosen;
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t[i] != 0) chosen.push_back(f.families[i][static_cast<std::size_t>(t[i] - 1)]);
        }
        return !hpolytopes_intersect(chosen, f.d);
      },
      "order_complex_helly");
}

}  // namespace topohall::geometry

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

// Hypothesis checkers and oracle cross-validation. Every supported statement
// has the shape "if a family of rows each meets a lower bound, then a
// conclusion holds"; check_hall, check_complex_matroid, and check_bko
// evaluate the row families, and verify_instance pairs each hypothesis with
// an independently computed conclusion (reconfiguration connectivity,
// simplex existence, or a homology bound) and classifies the outcome. A
// hypothesis that holds while its oracle fails is a counterexample to a
// theorem and throws. extract_domination_witness runs the constructive
// procedure that turns a disconnected independent-transversal
// reconfiguration graph into a small totally dominating set.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/geometry.hpp"
#include "topohall/graphs.hpp"
#include "topohall/homology.hpp"
#include "topohall/matroid.hpp"
#include "topohall/reconfig.hpp"

namespace topohall::hallcheck {

using complex::Face;

// One hypothesis row: a measured quantity compared against a lower bound.
// The subset field names the row (class index set, flat complement, vertex,
// or {} for a global row).
struct SubsetEvaluation {
  Face subset;
  homology::Eta value;
  long required = 0;
  bool ok = false;
};

// holds is true iff failing_witness is absent; failing_witness is the first
// failing row in evaluation order, and table lists every evaluated row when
// collection is on.
struct HypothesisReport {
  std::string theorem;
  bool holds = true;
  std::optional<SubsetEvaluation> failing_witness;
  std::vector<SubsetEvaluation> table;
};

enum class Classification { Confirmed, Vacuous, TightNegative };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Confirmed: return "confirmed";
    case Classification::Vacuous: return "vacuous";
    case Classification::TightNegative: return "tight-negative";
  }
  return "unknown";
}

// Hypothesis held but the oracle refuted the conclusion. This must never
// happen for a correct implementation of a true statement; callers map it to
// a dedicated exit status and the thrown object carries a full dump of the
// offending instance.
class CounterexampleFound : public std::runtime_error {
 public:
  CounterexampleFound(std::string theorem, std::string dump)
      : std::runtime_error("counterexample to " + theorem + "\n" + dump),
        theorem_(std::move(theorem)),
        dump_(std::move(dump)) {}

  const std::string& theorem() const { return theorem_; }
  const std::string& instance_dump() const { return dump_; }

 private:
  std::string theorem_;
  std::string dump_;
};

// Union of every field a supported statement can consume; each theorem id
// reads only the fields its signature needs and rejects absent ones.
struct Instance {
  std::optional<complex::SimplicialComplex> cpx;
  std::optional<complex::VertexPartition> classes;
  std::optional<matroid::Matroid> mat;
  std::optional<matroid::Matroid> mat2;
  std::optional<graphs::Graph> graph;
  std::optional<graphs::Hypergraph> hyper;
  std::optional<Face> a_side;
  std::optional<graphs::ListAssignment> lists;
  std::optional<std::vector<Face>> edge_classes;
  std::optional<geometry::PointConfig> points;
  std::optional<std::vector<std::vector<geometry::Point>>> point_sets;
  std::optional<geometry::Point> target;
  std::optional<geometry::HPolytopeFamily> half_spaces;
  long m = 0;      // connectivity offset
  long d = 0;      // deficiency
  long k = 0;      // size threshold
  long r = 0;      // number of parts
  long delta = 0;  // degree bound
  long leray = 0;  // Leray number bound
  std::string nerve_oracle;  // "loose-walk" or "rg"; required by colorful-nerve
};

struct VerificationVerdict {
  std::string theorem;
  bool hypothesis = false;
  bool conclusion = false;
  bool oracle_ran = true;  // false when only the hypothesis side was checked
  Classification classification = Classification::Vacuous;
  HypothesisReport report;
  std::optional<reconfig::ReconfigAnalysis> analysis;  // connectivity oracles
  std::optional<homology::Eta> oracle_eta;             // homology oracles
  std::optional<homology::Eta> nerve_eta;              // nerve side computation
};

namespace detail {

inline void add_row(HypothesisReport& rep, Face subset, homology::Eta value, long required,
                    bool collect) {
  SubsetEvaluation row{std::move(subset), std::move(value), required, false};
  row.ok = row.value.at_least(required);
  if (!row.ok && rep.holds) {
    rep.holds = false;
    rep.failing_witness = row;
  }
  if (collect) rep.table.push_back(std::move(row));
}

inline homology::Eta bool_eta(bool b) { return homology::Eta::finite(b ? 1 : 0); }

inline homology::Eta count_eta(long n) { return homology::Eta::finite(n); }

// Nonempty subsets of {1..n} in lexicographic order ({1}, {1,2}, {1,2,3},
// ..., {1,3}, ..., {2}, ...); visit returns false to stop the walk.
template <typename Visit>
bool foreach_subset_lex(int n, Visit&& visit) {
  Face cur;
  auto rec = [&](auto&& self, int next) -> bool {
    for (int id = next; id <= n; ++id) {
      cur.push_back(id);
      if (!visit(static_cast<const Face&>(cur))) return false;
      if (!self(self, id + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(rec, 1);
}

inline std::vector<int> zero_based(const Face& one_based) {
  std::vector<int> out;
  out.reserve(one_based.size());
  for (int i : one_based) out.push_back(i - 1);
  return out;
}

}  // namespace detail

// Evaluates eta_h(C[V_I]) >= |I| - d + m over every nonempty I with
// |I| >= d, in lexicographic order. With collect_table off the walk stops at
// the first failure and only failing_witness is populated.
inline HypothesisReport check_hall(const complex::SimplicialComplex& c,
                                   const complex::VertexPartition& v, long m, long d,
                                   bool collect_table = true) {
  if (m < 0 || d < 0) throw std::invalid_argument("check_hall: m and d must be nonnegative");
  if (!v.partitions(c)) {
    throw std::invalid_argument("check_hall: classes must partition the vertex set");
  }
  const int n = v.n();
  if (n > 20) throw CapacityError("check_hall: more than 20 classes");
  HypothesisReport rep;
  rep.theorem = "hall(m=" + std::to_string(m) + ",d=" + std::to_string(d) + ")";
  detail::foreach_subset_lex(n, [&](const Face& i_set) {
    if (static_cast<long>(i_set.size()) < d) return true;
    const auto eta = homology::eta_h(c.induced(v.union_of(detail::zero_based(i_set))));
    detail::add_row(rep, i_set, eta, static_cast<long>(i_set.size()) - d + m, collect_table);
    return collect_table || rep.holds;
  });
  return rep;
}

// Evaluates eta_h(C[V - F]) + r(F) >= k + m_conn over every flat F of M with
// r(F) <= k - 1, with infinity saturating the sum. Rows are keyed by the
// complement X = V - F and follow the (size, lex) order of the flats.
inline HypothesisReport check_complex_matroid(const complex::SimplicialComplex& c,
                                              const matroid::Matroid& m, long k, long m_conn) {
  if (c.ground_set() != m.ground()) {
    throw std::invalid_argument("check_complex_matroid: ground sets differ");
  }
  if (k < 1 || k > m.rank()) {
    throw std::invalid_argument("check_complex_matroid: k must satisfy 1 <= k <= r(M)");
  }
  if (m_conn < 0) throw std::invalid_argument("check_complex_matroid: m_conn must be nonnegative");
  HypothesisReport rep;
  rep.theorem =
      "complex-matroid(k=" + std::to_string(k) + ",m=" + std::to_string(m_conn) + ")";
  for (const Face& f : m.flats(k - 1)) {
    const Face x = complex::face_difference(c.ground_set(), f);
    const auto value = homology::eta_h(c.induced(x)) + m.rank(f);
    detail::add_row(rep, x, value, k + m_conn, true);
  }
  return rep;
}

// Per-subset test that G[V_I] is not the disjoint union of exactly |I|
// copies of K_{delta,delta}. Degree and class-size preconditions are
// structural errors, not hypothesis failures.
inline HypothesisReport check_bko(const graphs::Graph& g, const complex::VertexPartition& v,
                                  long delta) {
  if (delta < 1) throw std::invalid_argument("check_bko: delta must be positive");
  if (g.max_degree() > delta) throw std::invalid_argument("check_bko: max degree exceeds delta");
  if (v.support() != g.vertices()) {
    throw std::invalid_argument("check_bko: classes must partition the vertex set");
  }
  for (const Face& cls : v.classes()) {
    if (static_cast<long>(cls.size()) < 2 * delta) {
      throw std::invalid_argument("check_bko: every class needs at least 2*delta vertices");
    }
  }
  const int n = v.n();
  if (n > 20) throw CapacityError("check_bko: more than 20 classes");
  HypothesisReport rep;
  rep.theorem = "bko(delta=" + std::to_string(delta) + ")";
  detail::foreach_subset_lex(n, [&](const Face& i_set) {
    const graphs::Graph h = g.induced(v.union_of(detail::zero_based(i_set)));
    const bool violation = graphs::is_disjoint_kdd_union(h, delta) &&
                           h.components().size() == i_set.size();
    detail::add_row(rep, i_set, detail::bool_eta(!violation), 1, true);
    return true;
  });
  return rep;
}

// True when c has a face picking one vertex from each of k distinct classes.
inline bool partial_colorful_simplex_exists(const complex::SimplicialComplex& c,
                                            const complex::VertexPartition& v, long k) {
  if (k < 0 || k > v.n()) {
    throw std::invalid_argument("partial_colorful_simplex_exists: size out of range");
  }
  Face cur;
  auto rec = [&](auto&& self, int idx, long chosen) -> bool {
    if (chosen == k) return true;
    if (idx >= v.n() || chosen + (v.n() - idx) < k) return false;
    for (int x : v.classes()[idx]) {
      Face next = complex::face_union(cur, Face{x});
      // Faces are closed downward, so a non-face prefix never extends.
      if (!c.has_face(next)) continue;
      cur = std::move(next);
      if (self(self, idx + 1, chosen + 1)) return true;
      cur.erase(std::find(cur.begin(), cur.end(), x));
    }
    return self(self, idx + 1, chosen);
  };
  return rec(rec, 0, 0);
}

inline bool colorful_simplex_exists(const complex::SimplicialComplex& c,
                                    const complex::VertexPartition& v) {
  return partial_colorful_simplex_exists(c, v, v.n());
}

// Loose-walk oracle: any two colorful simplices are linked by a chain of
// colorful simplices with consecutive nonempty intersections. False when no
// colorful simplex exists.
inline bool loose_walk_connected(const complex::SimplicialComplex& c,
                                 const complex::VertexPartition& v) {
  unsigned long long product = 1;
  for (const Face& cls : v.classes()) {
    product *= static_cast<unsigned long long>(cls.size());
    if (product > static_cast<unsigned long long>(reconfig::kCandidateCap)) break;
  }
  reconfig::detail::check_candidate_cap(product, "loose-walk oracle");
  const auto sims = complex::colorful_simplices(c, v);
  if (sims.empty()) return false;
  std::vector<int> parent(sims.size());
  for (std::size_t i = 0; i < sims.size(); ++i) parent[i] = static_cast<int>(i);
  auto root = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < sims.size(); ++i) {
    for (std::size_t j = i + 1; j < sims.size(); ++j) {
      if (!complex::face_intersection(sims[i], sims[j]).empty()) {
        parent[root(static_cast<int>(i))] = root(static_cast<int>(j));
      }
    }
  }
  for (std::size_t i = 1; i < sims.size(); ++i) {
    if (root(static_cast<int>(i)) != root(0)) return false;
  }
  return true;
}

namespace detail {

// Every target vertex has a neighbor in d (total domination).
inline bool totally_dominates(const graphs::Graph& g, const Face& d, const Face& targets) {
  for (int x : targets) {
    if (complex::face_intersection(g.neighbors(x), d).empty()) return false;
  }
  return true;
}

}  // namespace detail

// Result of the domination-witness extraction. Exactly one of connected,
// haxell_fallback, or a regular witness applies; classes holds the 1-based
// index set I and dominating_set the vertex set D with |D| <= 2|I|.
struct DominationWitness {
  bool connected = false;
  bool haxell_fallback = false;
  Face classes;
  Face dominating_set;
};

// Constructive converse to the independent-transversal reconfiguration
// theorem: a disconnected reconfiguration graph yields an index set I and a
// set D of at most 2|I| vertices totally dominating G[V_I]. Walks component
// representatives S, T minimizing the differing class set, then repeatedly
// covers the first undominated vertex with the neighbor set forced by the
// candidate transversals that keep both sides in their components. The
// returned witness is re-verified from scratch.
inline DominationWitness extract_domination_witness(const graphs::Graph& g,
                                                    const complex::VertexPartition& v) {
  if (v.support() != g.vertices()) {
    throw std::invalid_argument("extract_domination_witness: classes must partition the vertex set");
  }
  const int n = v.n();
  const auto rg = reconfig::rg_colorful(graphs::independence_complex(g), v, n);
  const auto analysis = rg.analyze();
  DominationWitness out;
  if (analysis.is_connected) {
    out.connected = true;
    return out;
  }

  if (analysis.is_empty) {
    // No independent transversal at all; a deficiency-style witness with
    // |D| <= 2|I| - 2 exists and brute force finds the (size, lex) first one
    // per lexicographic index set.
    out.haxell_fallback = true;
    bool found = false;
    detail::foreach_subset_lex(n, [&](const Face& i_set) {
      const Face vi = v.union_of(detail::zero_based(i_set));
      const graphs::Graph h = g.induced(vi);
      const long cap =
          std::min<long>(2 * static_cast<long>(i_set.size()) - 2, static_cast<long>(vi.size()));
      for (long size = 0; size <= cap && !found; ++size) {
        Face pick;
        auto rec = [&](auto&& self, std::size_t start) -> bool {
          if (static_cast<long>(pick.size()) == size) {
            return detail::totally_dominates(h, pick, vi);
          }
          for (std::size_t i = start; i < vi.size(); ++i) {
            pick.push_back(vi[i]);
            if (self(self, i + 1)) return true;
            pick.pop_back();
          }
          return false;
        };
        if (rec(rec, 0)) {
          out.classes = i_set;
          out.dominating_set = pick;
          found = true;
        }
      }
      return !found;
    });
    if (!found) {
      throw std::logic_error("extract_domination_witness: deficiency witness search failed");
    }
  } else {
    const auto& cfg = rg.configurations();
    std::vector<int> comp_of(cfg.size(), -1);
    for (std::size_t a = 0; a < analysis.components.size(); ++a) {
      for (int id : analysis.components[a]) comp_of[id] = static_cast<int>(a);
    }
    // 1-based indices of the classes a vertex set meets.
    auto classes_of = [&](const Face& f) {
      Face out_ids;
      for (int i = 0; i < n; ++i) {
        if (!complex::face_intersection(v.classes()[i], f).empty()) out_ids.push_back(i + 1);
      }
      return out_ids;
    };
    auto sym_diff = [](const Face& a, const Face& b) {
      return complex::face_union(complex::face_difference(a, b),
                                 complex::face_difference(b, a));
    };

    // S from the earlier component, T from the later one, minimizing
    // (|I(S delta T)|, S, T).
    int si = -1, ti = -1;
    long best_size = 0;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      for (std::size_t j = 0; j < cfg.size(); ++j) {
        if (comp_of[i] >= comp_of[j]) continue;
        const long size = static_cast<long>(classes_of(sym_diff(cfg[i], cfg[j])).size());
        if (si < 0 || size < best_size ||
            (size == best_size &&
             (cfg[i] < cfg[si] || (cfg[i] == cfg[si] && cfg[j] < cfg[ti])))) {
          si = static_cast<int>(i);
          ti = static_cast<int>(j);
          best_size = size;
        }
      }
    }
    if (si < 0) throw std::logic_error("extract_domination_witness: no cross-component pair");
    const Face s = cfg[si];
    const Face t = cfg[ti];
    const Face s_only = complex::face_difference(s, t);
    const Face t_only = complex::face_difference(t, s);
    const int comp_s = comp_of[si];
    const int comp_t = comp_of[ti];

    Face i_cur = classes_of(sym_diff(s, t));
    Face d_cur = sym_diff(s, t);
    Face r_cur = complex::face_intersection(s, t);
    Face j_classes;
    for (int i = 1; i <= n; ++i) {
      if (!std::binary_search(i_cur.begin(), i_cur.end(), i)) j_classes.push_back(i);
    }

    bool done = false;
    for (std::size_t iter = 0; iter <= g.vertices().size() && !done; ++iter) {
      const Face vi = v.union_of(detail::zero_based(i_cur));
      const graphs::Graph h = g.induced(vi);
      int x = -1;
      for (int y : vi) {
        if (complex::face_intersection(h.neighbors(y), d_cur).empty()) {
          x = y;
          break;
        }
      }
      if (x < 0) {
        out.classes = i_cur;
        out.dominating_set = d_cur;
        done = true;
        break;
      }
      // Candidate transversals of the agreeing classes: fixed where a class
      // already entered I, free elsewhere, and both completions must stay in
      // their original components.
      unsigned long long count = 1;
      for (int cls : j_classes) {
        if (std::binary_search(i_cur.begin(), i_cur.end(), cls)) continue;
        count *= static_cast<unsigned long long>(v.classes()[cls - 1].size());
        if (count > static_cast<unsigned long long>(reconfig::kCandidateCap)) break;
      }
      reconfig::detail::check_candidate_cap(count, "extract_domination_witness");
      Face best_r;
      long best_hits = 0;
      bool have = false;
      Face partial;
      auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == j_classes.size()) {
          Face candidate = partial;
          std::sort(candidate.begin(), candidate.end());
          const auto id1 = rg.id_of(complex::face_union(s_only, candidate));
          if (!id1 || comp_of[*id1] != comp_s) return;
          const auto id2 = rg.id_of(complex::face_union(t_only, candidate));
          if (!id2 || comp_of[*id2] != comp_t) return;
          const long hits =
              static_cast<long>(complex::face_intersection(g.neighbors(x), candidate).size());
          if (!have || hits < best_hits || (hits == best_hits && candidate < best_r)) {
            have = true;
            best_hits = hits;
            best_r = std::move(candidate);
          }
          return;
        }
        const int cls = j_classes[idx];
        if (std::binary_search(i_cur.begin(), i_cur.end(), cls)) {
          const Face fixed = complex::face_intersection(r_cur, v.classes()[cls - 1]);
          partial.push_back(fixed.at(0));
          self(self, idx + 1);
          partial.pop_back();
          return;
        }
        for (int y : v.classes()[cls - 1]) {
          partial.push_back(y);
          self(self, idx + 1);
          partial.pop_back();
        }
      };
      rec(rec, 0);
      if (!have) {
        throw std::logic_error("extract_domination_witness: candidate set unexpectedly empty");
      }
      const Face y_set = complex::face_intersection(g.neighbors(x), best_r);
      if (y_set.empty()) {
        throw std::logic_error(
            "extract_domination_witness: zero-neighbor transversal links the components");
      }
      i_cur = complex::face_union(i_cur, classes_of(y_set));
      d_cur = complex::face_union(d_cur, complex::face_union(Face{x}, y_set));
      r_cur = best_r;
    }
    if (!done) throw std::logic_error("extract_domination_witness: iteration did not terminate");
  }

  // Independent re-verification of the witness.
  const Face vi = v.union_of(detail::zero_based(out.classes));
  const graphs::Graph h = g.induced(vi);
  if (!complex::face_subset(out.dominating_set, vi) ||
      static_cast<long>(out.dominating_set.size()) > 2 * static_cast<long>(out.classes.size()) ||
      !detail::totally_dominates(h, out.dominating_set, vi)) {
    throw std::logic_error("extract_domination_witness: witness failed re-verification");
  }
  return out;
}

// Textual dump of every populated instance field; attached to
// CounterexampleFound so a failing run is reproducible from the message.
namespace detail {

inline void append_face(std::string& s, const Face& f) {
  s += '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f[i]);
  }
  s += ']';
}

inline void append_faces(std::string& s, const std::vector<Face>& fs) {
  s += '[';
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ',';
    append_face(s, fs[i]);
  }
  s += ']';
}

inline void append_point(std::string& s, const geometry::Point& p) {
  s += '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += p[i].to_string();
  }
  s += ')';
}

}  // namespace detail

inline std::string dump_instance(const Instance& inst) {
  std::string s;
  if (inst.cpx) {
    s += "complex ground=";
    detail::append_face(s, inst.cpx->ground_set());
    s += " maximal=";
    detail::append_faces(s, inst.cpx->maximal_faces());
    s += '\n';
  }
  if (inst.classes) {
    s += "classes=";
    detail::append_faces(s, inst.classes->classes());
    s += '\n';
  }
  const auto dump_matroid = [&s](const char* name, const matroid::Matroid& m) {
    s += name;
    s += " ground=";
    detail::append_face(s, m.ground());
    s += " rank=" + std::to_string(m.rank()) + " bases=";
    detail::append_faces(s, m.bases());
    s += '\n';
  };
  if (inst.mat) dump_matroid("matroid", *inst.mat);
  if (inst.mat2) dump_matroid("matroid2", *inst.mat2);
  if (inst.graph) {
    s += "graph vertices=";
    detail::append_face(s, inst.graph->vertices());
    s += " edges=[";
    const auto& edges = inst.graph->edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) s += ',';
      s += '(' + std::to_string(edges[i].first) + ',' + std::to_string(edges[i].second) + ')';
    }
    s += "]\n";
  }
  if (inst.hyper) {
    s += "hypergraph vertices=";
    detail::append_face(s, inst.hyper->vertices());
    s += " edges=";
    detail::append_faces(s, inst.hyper->edges());
    if (inst.hyper->uniformity()) s += " r=" + std::to_string(*inst.hyper->uniformity());
    s += '\n';
  }
  if (inst.a_side) {
    s += "a_side=";
    detail::append_face(s, *inst.a_side);
    s += '\n';
  }
  if (inst.lists) {
    s += "lists={";
    bool first = true;
    for (const auto& [key, list] : inst.lists->lists()) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(key) + ':';
      detail::append_face(s, list);
    }
    s += "}\n";
  }
  if (inst.edge_classes) {
    s += "edge_classes=";
    detail::append_faces(s, *inst.edge_classes);
    s += '\n';
  }
  if (inst.points) {
    s += "points d=" + std::to_string(inst.points->dimension()) + " {";
    const auto& labels = inst.points->labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(labels[i]) + ':';
      detail::append_point(s, inst.points->point_at(static_cast<long>(i)));
    }
    s += "}\n";
  }
  if (inst.point_sets) {
    s += "point_sets=[";
    for (std::size_t i = 0; i < inst.point_sets->size(); ++i) {
      if (i) s += ',';
      s += '[';
      const auto& set = (*inst.point_sets)[i];
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (j) s += ',';
        detail::append_point(s, set[j]);
      }
      s += ']';
    }
    s += "]\n";
  }
  if (inst.target) {
    s += "target=";
    detail::append_point(s, *inst.target);
    s += '\n';
  }
  if (inst.half_spaces) {
    s += "half_spaces d=" + std::to_string(inst.half_spaces->d) + " families=[";
    for (std::size_t i = 0; i < inst.half_spaces->families.size(); ++i) {
      if (i) s += ',';
      s += '[';
      const auto& family = inst.half_spaces->families[i];
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (j) s += ',';
        s += '{';
        for (std::size_t t = 0; t < family[j].size(); ++t) {
          if (t) s += ';';
          detail::append_point(s, family[j][t].a);
          s += ">=" + family[j][t].b.to_string();
        }
        s += '}';
      }
      s += ']';
    }
    s += "]\n";
  }
  s += "m=" + std::to_string(inst.m) + " d=" + std::to_string(inst.d) +
       " k=" + std::to_string(inst.k) + " r=" + std::to_string(inst.r) +
       " delta=" + std::to_string(inst.delta) + " leray=" + std::to_string(inst.leray);
  if (!inst.nerve_oracle.empty()) s += " nerve_oracle=" + inst.nerve_oracle;
  s += '\n';
  return s;
}

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "hall-existence",
      "hall-deficiency-existence",
      "reconfig-hall",
      "reconfig-hall-deficiency",
      "colorful-complex",
      "colorful-complex-deficiency",
      "colorful-nerve",
      "bko",
      "domination",
      "domination-independent",
      "two-delta-plus-one",
      "rainbow",
      "hypergraph-hall",
      "konig-reconfiguration",
      "ryser-r3",
      "matroid-intersection",
      "complex-matroid-reconfiguration",
      "complex-matroid-connectedness",
      "vertex-list-coloring",
      "edge-list-coloring",
      "tverberg-reconfiguration",
      "colorful-caratheodory",
      "helly-reconfiguration",
      "topological-helly-reconfiguration",
  };
  return ids;
}

namespace detail {

template <typename T>
const T& need(const std::optional<T>& field, const std::string& theorem, const char* what) {
  if (!field) throw std::invalid_argument(theorem + ": instance needs " + what);
  return *field;
}

// Declared uniformity when present, otherwise the common edge size when all
// edge sizes agree.
inline std::optional<int> effective_uniformity(const graphs::Hypergraph& h) {
  if (h.uniformity()) return h.uniformity();
  std::optional<int> r;
  for (const auto& e : h.edges()) {
    const int s = static_cast<int>(e.size());
    if (!r) {
      r = s;
    } else if (*r != s) {
      return std::nullopt;
    }
  }
  return r;
}

// Statements over a complex accept a bare graph instance by taking its
// independence complex; that is how the graph-family experiments feed them.
inline complex::SimplicialComplex need_complex(const Instance& inst, const std::string& theorem) {
  if (inst.cpx) return *inst.cpx;
  if (inst.graph) return graphs::independence_complex(*inst.graph);
  throw std::invalid_argument(theorem + ": instance needs a complex or a graph");
}

inline Classification classify(bool hypothesis, bool conclusion, const std::string& theorem,
                               const Instance& inst) {
  if (hypothesis && !conclusion) throw CounterexampleFound(theorem, dump_instance(inst));
  if (hypothesis) return Classification::Confirmed;
  return conclusion ? Classification::Vacuous : Classification::TightNegative;
}

// Shared oracle for the independent-transversal family of statements.
inline void it_reconfig_oracle(const graphs::Graph& g, const complex::VertexPartition& v,
                               VerificationVerdict& out) {
  const auto rg = reconfig::rg_colorful(graphs::independence_complex(g), v, v.n());
  out.analysis = rg.analyze();
  out.conclusion = out.analysis->is_connected;
}

// Max over colors of the max degree of the subgraph spanned by the vertices
// whose list holds that color.
inline long vertex_color_degree(const graphs::Graph& g, const graphs::ListAssignment& l) {
  std::map<int, Face> holders;
  for (int v : g.vertices()) {
    for (int c : l.at(v)) holders[c].push_back(v);
  }
  long delta = 0;
  for (const auto& entry : holders) {
    delta = std::max(delta, g.induced(entry.second).max_degree());
  }
  return delta;
}

// Max over colors of the max vertex degree among the edges whose list holds
// that color.
inline long edge_color_degree(const graphs::Hypergraph& h, const graphs::ListAssignment& l) {
  std::map<int, std::map<int, long>> per_color;
  for (int i = 0; i < h.edge_count(); ++i) {
    for (int c : l.at(i)) {
      for (int v : h.edges()[i]) ++per_color[c][v];
    }
  }
  long delta = 0;
  for (const auto& entry : per_color) {
    for (const auto& vc : entry.second) delta = std::max(delta, vc.second);
  }
  return delta;
}

// The edges {e - A} of a bipartite 3-graph form a graph; 3-partiteness with
// A as one side is exactly 2-colorability of that projection.
inline bool projection_bipartite(const graphs::Hypergraph& h, const Face& a) {
  std::map<int, std::vector<int>> adj;
  for (const auto& e : h.edges()) {
    const Face rest = complex::face_difference(e, a);
    if (rest.size() != 2) return false;
    adj[rest[0]].push_back(rest[1]);
    adj[rest[1]].push_back(rest[0]);
  }
  std::map<int, int> color;
  for (const auto& entry : adj) {
    const int start = entry.first;
    if (color.count(start)) continue;
    color[start] = 0;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      for (int w : adj[u]) {
        if (!color.count(w)) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

// Runs the hypothesis checker and the independent oracle for one named
// statement, classifies the outcome, and throws CounterexampleFound if the
// hypothesis holds while the oracle refutes the conclusion. with_oracle =
// false skips the oracle (and classification), evaluating the hypothesis
// side alone.
inline VerificationVerdict verify_instance(const Instance& inst, const std::string& theorem,
                                           bool with_oracle = true) {
  VerificationVerdict out;
  out.theorem = theorem;

  if (theorem == "hall-existence" || theorem == "hall-deficiency-existence") {
    const auto c = detail::need_complex(inst, theorem);
    const auto& v = detail::need(inst.classes, theorem, "classes");
    const long d = theorem == "hall-existence" ? 0 : inst.d;
    out.report = check_hall(c, v, 0, d);
    if (with_oracle) {
      out.conclusion = partial_colorful_simplex_exists(c, v, v.n() - d);
    }
  } else if (theorem == "reconfig-hall" || theorem == "reconfig-hall-deficiency") {
    const auto c = detail::need_complex(inst, theorem);
    const auto& v = detail::need(inst.classes, theorem, "classes");
    const long d = theorem == "reconfig-hall" ? 0 : inst.d;
    if (d < 0 || d > v.n()) throw std::invalid_argument(theorem + ": d out of range");
    out.report = check_hall(c, v, 1, d);
    if (with_oracle) {
      const auto rg = reconfig::rg_colorful(c, v, v.n() - d);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "colorful-complex" || theorem == "colorful-complex-deficiency") {
    const auto c = detail::need_complex(inst, theorem);
    const auto& v = detail::need(inst.classes, theorem, "classes");
    const long d = theorem == "colorful-complex" ? 0 : inst.d;
    out.report = check_hall(c, v, inst.m, d);
    if (with_oracle) {
      out.oracle_eta = homology::eta_h(complex::colorful_complex(c, v, v.n() - d).complex);
      out.conclusion = out.oracle_eta->at_least(inst.m + 1);
    }
  } else if (theorem == "colorful-nerve") {
    const auto c = detail::need_complex(inst, theorem);
    const auto& v = detail::need(inst.classes, theorem, "classes");
    out.report = check_hall(c, v, inst.m, 0);
    if (with_oracle) {
      out.nerve_eta = homology::eta_h(complex::colorful_nerve(c, v).complex);
      if (inst.nerve_oracle == "loose-walk") {
        out.conclusion = loose_walk_connected(c, v);
      } else if (inst.nerve_oracle == "rg") {
        const auto rg = reconfig::rg_colorful(c, v, v.n());
        out.analysis = rg.analyze();
        out.conclusion = out.analysis->is_connected;
      } else {
        throw std::invalid_argument(
            "colorful-nerve: nerve_oracle must be set to \"loose-walk\" or \"rg\"");
      }
    }
  } else if (theorem == "bko") {
    const auto& g = detail::need(inst.graph, theorem, "a graph");
    const auto& v = detail::need(inst.classes, theorem, "classes");
    out.report = check_bko(g, v, inst.delta);
    if (with_oracle) detail::it_reconfig_oracle(g, v, out);
  } else if (theorem == "domination" || theorem == "domination-independent") {
    const auto& g = detail::need(inst.graph, theorem, "a graph");
    const auto& v = detail::need(inst.classes, theorem, "classes");
    if (v.support() != g.vertices()) {
      throw std::invalid_argument(theorem + ": classes must partition the vertex set");
    }
    const int n = v.n();
    if (n > 20) throw CapacityError(theorem + ": more than 20 classes");
    const bool independent = theorem == "domination-independent";
    out.report.theorem = theorem;
    detail::foreach_subset_lex(n, [&](const Face& i_set) {
      const auto params = graphs::domination_params(g.induced(v.union_of(detail::zero_based(i_set))));
      const long size = static_cast<long>(i_set.size());
      detail::add_row(out.report, i_set, independent ? params.igamma : params.gamma_tilde,
                      independent ? size + 1 : 2 * size + 1, true);
      return true;
    });
    if (with_oracle) detail::it_reconfig_oracle(g, v, out);
  } else if (theorem == "two-delta-plus-one") {
    const auto& g = detail::need(inst.graph, theorem, "a graph");
    const auto& v = detail::need(inst.classes, theorem, "classes");
    if (inst.delta < 1) throw std::invalid_argument(theorem + ": delta must be positive");
    if (g.max_degree() > inst.delta) {
      throw std::invalid_argument(theorem + ": max degree exceeds delta");
    }
    if (v.support() != g.vertices()) {
      throw std::invalid_argument(theorem + ": classes must partition the vertex set");
    }
    out.report.theorem = theorem;
    for (int i = 0; i < v.n(); ++i) {
      detail::add_row(out.report, Face{i + 1},
                      detail::count_eta(static_cast<long>(v.classes()[i].size())),
                      2 * inst.delta + 1, true);
    }
    if (with_oracle) detail::it_reconfig_oracle(g, v, out);
  } else if (theorem == "rainbow") {
    const auto& h = detail::need(inst.hyper, theorem, "a hypergraph");
    const auto& ec = detail::need(inst.edge_classes, theorem, "edge classes");
    const auto unif = detail::effective_uniformity(h);
    if (!unif) throw std::invalid_argument(theorem + ": hypergraph must be uniform");
    if (inst.delta < 1) throw std::invalid_argument(theorem + ": delta must be positive");
    if (h.max_degree() > inst.delta) {
      throw std::invalid_argument(theorem + ": max degree exceeds delta");
    }
    const auto vp = complex::VertexPartition::from_classes(ec);
    Face all_ids;
    for (int i = 0; i < h.edge_count(); ++i) all_ids.push_back(i);
    if (vp.support() != all_ids) {
      throw std::invalid_argument(theorem + ": edge classes must partition the edge ids");
    }
    out.report.theorem = theorem;
    for (int i = 0; i < vp.n(); ++i) {
      detail::add_row(out.report, Face{i + 1},
                      detail::count_eta(static_cast<long>(vp.classes()[i].size())),
                      *unif * inst.delta + 1, true);
    }
    if (with_oracle) {
      const auto rg = reconfig::rg_colorful(graphs::matching_complex(h), vp, vp.n());
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "hypergraph-hall") {
    const auto& h = detail::need(inst.hyper, theorem, "a hypergraph");
    const Face a = complex::sorted_face(detail::need(inst.a_side, theorem, "an a_side"));
    if (!graphs::is_bipartite_with_a_side(h, a)) {
      throw std::invalid_argument(theorem + ": hypergraph is not bipartite over a_side");
    }
    const auto unif = detail::effective_uniformity(h);
    if (!unif) throw std::invalid_argument(theorem + ": hypergraph must be uniform");
    if (a.size() > 20) throw CapacityError(theorem + ": a_side above the 20 cap");
    out.report.theorem = theorem;
    detail::foreach_subset_lex(static_cast<int>(a.size()), [&](const Face& idx) {
      Face x;
      for (int i : idx) x.push_back(a[static_cast<std::size_t>(i - 1)]);
      const auto nums = graphs::matching_numbers(graphs::link(h, a, x));
      detail::add_row(out.report, x, detail::count_eta(nums.nu),
                      (*unif - 1) * static_cast<long>(x.size()) + 1, true);
      return true;
    });
    if (with_oracle) {
      const auto rg = reconfig::rg_bipartite_matching(h, a, static_cast<long>(a.size()));
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "konig-reconfiguration") {
    const auto& h = detail::need(inst.hyper, theorem, "a hypergraph");
    const Face a = complex::sorted_face(detail::need(inst.a_side, theorem, "an a_side"));
    const auto unif2 = detail::effective_uniformity(h);
    if (!unif2 || *unif2 != 2) {
      throw std::invalid_argument(theorem + ": hypergraph must be 2-uniform");
    }
    if (!graphs::is_bipartite_with_a_side(h, a)) {
      throw std::invalid_argument(theorem + ": hypergraph is not bipartite over a_side");
    }
    if (inst.k < 1) throw std::invalid_argument(theorem + ": k must be positive");
    out.report.theorem = theorem;
    detail::add_row(out.report, Face{}, detail::count_eta(graphs::matching_numbers(h).nu),
                    inst.k + 1, true);
    if (with_oracle) {
      const auto rg = reconfig::rg_bipartite_matching(h, a, inst.k - 1);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "ryser-r3") {
    const auto& h = detail::need(inst.hyper, theorem, "a hypergraph");
    const Face a = complex::sorted_face(detail::need(inst.a_side, theorem, "an a_side"));
    const auto unif3 = detail::effective_uniformity(h);
    if (!unif3 || *unif3 != 3) {
      throw std::invalid_argument(theorem + ": hypergraph must be 3-uniform");
    }
    if (!graphs::is_bipartite_with_a_side(h, a)) {
      throw std::invalid_argument(theorem + ": hypergraph is not bipartite over a_side");
    }
    if (!detail::projection_bipartite(h, a)) {
      throw std::invalid_argument(theorem + ": hypergraph is not 3-partite with a_side");
    }
    if (inst.k < 0) throw std::invalid_argument(theorem + ": k must be nonnegative");
    out.report.theorem = theorem;
    detail::add_row(out.report, Face{}, detail::count_eta(graphs::matching_numbers(h).tau),
                    2 * inst.k + 1, true);
    if (with_oracle) {
      const auto rg = reconfig::rg_bipartite_matching(h, a, inst.k);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "matroid-intersection") {
    const auto& m1 = detail::need(inst.mat, theorem, "a matroid");
    const auto& m2 = detail::need(inst.mat2, theorem, "a second matroid");
    if (inst.k < 0) throw std::invalid_argument(theorem + ": k must be nonnegative");
    const long nu = matroid::matroid_intersection_number(m1, m2);
    if (nu != matroid::matroid_intersection_min_formula(m1, m2)) {
      throw std::logic_error(theorem + ": intersection number cross-check failed");
    }
    out.report.theorem = theorem;
    detail::add_row(out.report, Face{}, detail::count_eta(nu), inst.k + 1, true);
    if (with_oracle) {
      const auto rg = reconfig::rg_matroid_intersection(m1, m2, inst.k);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "complex-matroid-reconfiguration") {
    const auto c = detail::need_complex(inst, theorem);
    const auto& m = detail::need(inst.mat, theorem, "a matroid");
    out.report = check_complex_matroid(c, m, inst.k, 1);
    if (with_oracle) {
      const auto rg = reconfig::rg_complex_matroid(c, m, inst.k);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "complex-matroid-connectedness") {
    const auto c = detail::need_complex(inst, theorem);
    const auto& m = detail::need(inst.mat, theorem, "a matroid");
    out.report = check_complex_matroid(c, m, inst.k, inst.m);
    if (with_oracle) {
      out.oracle_eta = homology::eta_h(complex::intersection_complex(c, m, inst.k).complex);
      out.conclusion = out.oracle_eta->at_least(inst.m + 1);
    }
  } else if (theorem == "vertex-list-coloring") {
    const auto& g = detail::need(inst.graph, theorem, "a graph");
    const auto& l = detail::need(inst.lists, theorem, "lists");
    for (int v : g.vertices()) l.at(v);
    const long delta = detail::vertex_color_degree(g, l);
    out.report.theorem = theorem;
    for (int v : g.vertices()) {
      detail::add_row(out.report, Face{v}, detail::count_eta(static_cast<long>(l.at(v).size())),
                      2 * delta + 1, true);
    }
    if (with_oracle) {
      const auto red = graphs::vertex_list_reduction(g, l);
      const auto rg = reconfig::rg_colorful(graphs::independence_complex(red.aux), red.classes,
                                            red.classes.n());
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "edge-list-coloring") {
    const auto& h = detail::need(inst.hyper, theorem, "a hypergraph");
    const auto& l = detail::need(inst.lists, theorem, "lists");
    const auto unif = detail::effective_uniformity(h);
    if (!unif) throw std::invalid_argument(theorem + ": hypergraph must be uniform");
    for (int i = 0; i < h.edge_count(); ++i) l.at(i);
    const long delta = detail::edge_color_degree(h, l);
    out.report.theorem = theorem;
    for (int i = 0; i < h.edge_count(); ++i) {
      detail::add_row(out.report, Face{i}, detail::count_eta(static_cast<long>(l.at(i).size())),
                      *unif * delta + 1, true);
    }
    if (with_oracle) {
      const auto red = graphs::edge_list_reduction(h, l);
      const auto vp = complex::VertexPartition::from_classes(red.edge_classes);
      const auto rg = reconfig::rg_colorful(graphs::matching_complex(red.aux), vp, vp.n());
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "tverberg-reconfiguration") {
    const auto& x = detail::need(inst.points, theorem, "points");
    if (inst.r < 2) throw std::invalid_argument(theorem + ": r must be at least 2");
    out.report.theorem = theorem;
    detail::add_row(out.report, Face{}, detail::count_eta(x.size()),
                    (x.dimension() + 1) * (inst.r - 1) + 2, true);
    if (with_oracle) {
      const auto rg = geometry::rg_tverberg(x, inst.r);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "colorful-caratheodory") {
    const auto& sets = detail::need(inst.point_sets, theorem, "point sets");
    const auto& target = detail::need(inst.target, theorem, "a target point");
    const long d = static_cast<long>(target.size());
    out.report.theorem = theorem;
    detail::add_row(out.report, Face{}, detail::count_eta(static_cast<long>(sets.size())), d + 2,
                    true);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      detail::add_row(out.report, Face{static_cast<int>(i) + 1},
                      detail::bool_eta(geometry::conv_contains(sets[i], target).inside), 1, true);
    }
    if (with_oracle) {
      const auto rg = geometry::rg_colorful_caratheodory(sets, target);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "helly-reconfiguration") {
    const auto& f = detail::need(inst.half_spaces, theorem, "half-space families");
    out.report.theorem = theorem;
    detail::add_row(out.report, Face{},
                    detail::count_eta(static_cast<long>(f.families.size())), f.d + 2, true);
    for (std::size_t i = 0; i < f.families.size(); ++i) {
      detail::add_row(out.report, Face{static_cast<int>(i) + 1},
                      detail::bool_eta(!geometry::hpolytopes_intersect(f.families[i], f.d)), 1,
                      true);
    }
    if (with_oracle) {
      const auto rg = geometry::rg_colorful_helly(f);
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else if (theorem == "topological-helly-reconfiguration") {
    const auto c = detail::need_complex(inst, theorem);
    const auto& m = detail::need(inst.mat, theorem, "a matroid");
    if (c.ground_set() != m.ground()) {
      throw std::invalid_argument(theorem + ": ground sets differ");
    }
    if (c.has_face(c.ground_set())) {
      throw std::invalid_argument(theorem + ": the ground set must not be a face");
    }
    if (inst.leray < 0) throw std::invalid_argument(theorem + ": leray must be nonnegative");
    out.report.theorem = theorem;
    detail::add_row(out.report, Face{}, detail::bool_eta(homology::is_d_leray(c, inst.leray)), 1,
                    true);
    auto faces = c.all_faces();
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (const Face& a : faces) {
      detail::add_row(out.report, a,
                      detail::count_eta(m.rank(complex::face_difference(c.ground_set(), a))),
                      inst.leray + 2, true);
    }
    if (with_oracle) {
      const auto dual_m = m.dual();
      const auto rg =
          reconfig::rg_complex_matroid(complex::alexander_dual(c), dual_m, dual_m.rank());
      out.analysis = rg.analyze();
      out.conclusion = out.analysis->is_connected;
    }
  } else {
    std::string known;
    for (const auto& id : theorem_ids()) known += (known.empty() ? "" : ", ") + id;
    throw std::invalid_argument("verify_instance: unknown theorem \"" + theorem +
                                "\" (known: " + known + ")");
  }

  out.report.theorem = theorem;
  out.hypothesis = out.report.holds;
  out.oracle_ran = with_oracle;
  if (with_oracle) {
    out.classification = detail::classify(out.hypothesis, out.conclusion, theorem, inst);
  }
  return out;
}

}  // namespace topohall::hallcheck

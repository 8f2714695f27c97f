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
 * JSON encodings for every payload the command line reads or writes:
 * complexes, partitions, posets, matroid descriptions, graphs, hypergraphs,
 * list assignments, point configurations, ordered partitions, half-space
 * families, prism triangulations, checker instances, and report objects.
 *
 * Conventions: rationals serialize as strings "p/q" (or "p" when q = 1);
 * integer JSON values are also accepted on parse. Faces and ground sets
 * emit sorted, matching the in-memory canonical form, so parse(emit(x)) = x
 * and emit is byte-reproducible. Map-like payloads (points, lists,
 * assignments) key by the decimal rendering of the integer label. Parse
 * errors raise std::invalid_argument naming the offending field;
 * syntactically malformed text raises nlohmann::json::parse_error with a
 * byte position.
 */

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "topohall/complex.hpp"
#include "topohall/geometry.hpp"
#include "topohall/graphs.hpp"
#include "topohall/hallcheck.hpp"
#include "topohall/homology.hpp"
#include "topohall/matroid.hpp"
#include "topohall/poset.hpp"
#include "topohall/rational.hpp"
#include "topohall/rational_matrix.hpp"
#include "topohall/reconfig.hpp"
#include "topohall/sperner.hpp"

namespace topohall::jsonio {

using json = nlohmann::json;
using complex::Face;
using exactla::Rational;

namespace detail {

inline const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("json: missing field '") + key + "'");
  }
  return *it;
}

inline long require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string("json: '") + what + "' must be an integer");
  }
  return j.get<long>();
}

inline int parse_label(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("json: '") + what +
                                "' key '" + s + "' is not an integer label");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars and flat containers.

inline json parse_text(const std::string& text) { return json::parse(text); }

inline Rational parse_rational(const json& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("json: rational must be a \"p/q\" string or integer");
}

inline json emit_rational(const Rational& q) { return q.to_string(); }

inline Face parse_face(const json& j, const char* what = "face") {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string("json: '") + what + "' must be an array");
  }
  Face out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(static_cast<int>(detail::require_int(v, what)));
  return out;
}

inline json emit_face(const Face& f) { return json(f); }

inline std::vector<Face> parse_face_list(const json& j, const char* what = "faces") {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string("json: '") + what + "' must be an array");
  }
  std::vector<Face> out;
  out.reserve(j.size());
  for (const auto& f : j) out.push_back(parse_face(f, what));
  return out;
}

inline json emit_face_list(const std::vector<Face>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back(emit_face(f));
  return out;
}

inline std::vector<Rational> parse_rational_vector(const json& j,
                                                   const char* what = "vector") {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string("json: '") + what + "' must be an array");
  }
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(parse_rational(v));
  return out;
}

inline json emit_rational_vector(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(emit_rational(q));
  return out;
}

// ---------------------------------------------------------------------------
// Complexes, partitions, posets.

// {"ground_set": [ids], "maximal_faces": [[ids]]}
inline complex::SimplicialComplex parse_complex(const json& j) {
  return complex::SimplicialComplex::from_maximal_faces(
      parse_face(detail::field(j, "ground_set"), "ground_set"),
      parse_face_list(detail::field(j, "maximal_faces"), "maximal_faces"));
}

inline json emit_complex(const complex::SimplicialComplex& c) {
  return json{{"ground_set", emit_face(c.ground_set())},
              {"maximal_faces", emit_face_list(c.maximal_faces())}};
}

// {"classes": [[ids]]}
inline complex::VertexPartition parse_partition(const json& j) {
  return complex::VertexPartition::from_classes(
      parse_face_list(detail::field(j, "classes"), "classes"));
}

inline json emit_partition(const complex::VertexPartition& v) {
  return json{{"classes", emit_face_list(v.classes())}};
}

// {"elements": [ids], "covers": [[lo, hi]]}
inline complex::FinitePoset parse_poset(const json& j) {
  std::vector<std::pair<int, int>> covers;
  for (const auto& pr : detail::field(j, "covers")) {
    const Face p = parse_face(pr, "covers");
    if (p.size() != 2) throw std::invalid_argument("json: cover must be a [lo, hi] pair");
    covers.emplace_back(p[0], p[1]);
  }
  return complex::FinitePoset::from_covers(
      parse_face(detail::field(j, "elements"), "elements"), std::move(covers));
}

inline json emit_poset(const complex::FinitePoset& p) {
  json covers = json::array();
  for (const auto& [lo, hi] : p.cover_pairs()) covers.push_back(json{lo, hi});
  return json{{"elements", emit_face(p.elements())}, {"covers", covers}};
}

// ---------------------------------------------------------------------------
// Matroid descriptions. A matroid payload is a base constructor plus a
// transform stack applied left to right:
//   {"kind": "partition", "classes": [[ids]], "capacities": [n]?}
//   {"kind": "uniform", "ground": [ids], "k": n}
//   {"kind": "linear", "ground": [ids], "columns": [["p/q", ...]]}
// with optional "transforms": [{"op": "dual"} | {"op": "truncate", "k": n} |
// {"op": "restrict", "subset": [ids]} | {"op": "contract", "subset": [ids]} |
// {"op": "direct-sum", "with": <matroid>}].

inline matroid::Matroid parse_matroid(const json& j) {
  const std::string kind = detail::field(j, "kind").get<std::string>();
  matroid::Matroid m = [&] {
    if (kind == "partition") {
      std::vector<long> caps;
      if (j.contains("capacities")) {
        for (const auto& c : j["capacities"]) caps.push_back(detail::require_int(c, "capacities"));
      }
      return matroid::Matroid::partition(
          parse_face_list(detail::field(j, "classes"), "classes"), std::move(caps));
    }
    if (kind == "uniform") {
      return matroid::Matroid::uniform(parse_face(detail::field(j, "ground"), "ground"),
                                       detail::require_int(detail::field(j, "k"), "k"));
    }
    if (kind == "linear") {
      const Face ground = parse_face(detail::field(j, "ground"), "ground");
      const json& cols = detail::field(j, "columns");
      if (!cols.is_array() || cols.size() != ground.size()) {
        throw std::invalid_argument("json: 'columns' must list one column per ground element");
      }
      const int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
      exactla::RationalMatrix mat(rows, static_cast<int>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto col = parse_rational_vector(cols[c], "columns");
        if (static_cast<int>(col.size()) != rows) {
          throw std::invalid_argument("json: ragged 'columns' entries");
        }
        for (int r = 0; r < rows; ++r) mat.set(r, static_cast<int>(c), col[r]);
      }
      return matroid::Matroid::linear(ground, std::move(mat));
    }
    throw std::invalid_argument("json: unknown matroid kind '" + kind + "'");
  }();
  if (j.contains("transforms")) {
    for (const auto& t : j["transforms"]) {
      const std::string op = detail::field(t, "op").get<std::string>();
      if (op == "dual") {
        m = m.dual();
      } else if (op == "truncate") {
        m = m.truncate(detail::require_int(detail::field(t, "k"), "k"));
      } else if (op == "restrict") {
        m = m.restrict_to(parse_face(detail::field(t, "subset"), "subset"));
      } else if (op == "contract") {
        m = m.contract(parse_face(detail::field(t, "subset"), "subset"));
      } else if (op == "direct-sum") {
        m = matroid::Matroid::direct_sum(m, parse_matroid(detail::field(t, "with")));
      } else {
        throw std::invalid_argument("json: unknown matroid transform '" + op + "'");
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Graphs, hypergraphs, list assignments.

// {"vertices": [ids], "edges": [[u, v]]}
inline graphs::Graph parse_graph(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : detail::field(j, "edges")) {
    const Face p = parse_face(e, "edges");
    if (p.size() != 2) throw std::invalid_argument("json: graph edge must be a [u, v] pair");
    edges.emplace_back(p[0], p[1]);
  }
  return graphs::Graph::from_edges(parse_face(detail::field(j, "vertices"), "vertices"),
                                   std::move(edges));
}

inline json emit_graph(const graphs::Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json{u, v});
  return json{{"vertices", emit_face(g.vertices())}, {"edges", edges}};
}

// {"vertices": [ids], "edges": [[ids]], "r": n?}; "r" declares uniformity.
inline graphs::Hypergraph parse_hypergraph(const json& j) {
  std::optional<int> r;
  if (j.contains("r")) r = static_cast<int>(detail::require_int(j["r"], "r"));
  return graphs::Hypergraph::from_edges(parse_face(detail::field(j, "vertices"), "vertices"),
                                        parse_face_list(detail::field(j, "edges"), "edges"),
                                        r);
}

inline json emit_hypergraph(const graphs::Hypergraph& h) {
  json out = json{{"vertices", emit_face(h.vertices())},
                  {"edges", emit_face_list(h.edges())}};
  if (h.uniformity()) out["r"] = *h.uniformity();
  return out;
}

// {"lists": {"v": [colors]}}; bare {"v": [colors]} maps are also accepted.
inline graphs::ListAssignment parse_lists(const json& j) {
  const json& body = (j.is_object() && j.contains("lists")) ? j["lists"] : j;
  if (!body.is_object()) throw std::invalid_argument("json: 'lists' must be an object");
  std::map<int, std::vector<int>> lists;
  for (const auto& item : body.items()) {
    lists[detail::parse_label(item.key(), "lists")] = parse_face(item.value(), "lists");
  }
  return graphs::ListAssignment::from_lists(std::move(lists));
}

inline json emit_lists(const graphs::ListAssignment& a) {
  json body = json::object();
  for (const auto& [v, colors] : a.lists()) body[std::to_string(v)] = emit_face(colors);
  return json{{"lists", body}};
}

// ---------------------------------------------------------------------------
// Geometry payloads.

// {"d": n, "points": {"label": ["p/q", ...]}}
inline geometry::PointConfig parse_points(const json& j) {
  const long d = detail::require_int(detail::field(j, "d"), "d");
  const json& body = detail::field(j, "points");
  if (!body.is_object()) throw std::invalid_argument("json: 'points' must be an object");
  std::vector<std::pair<int, geometry::Point>> labeled;
  for (const auto& item : body.items()) {
    labeled.emplace_back(detail::parse_label(item.key(), "points"),
                         parse_rational_vector(item.value(), "points"));
  }
  return geometry::PointConfig::from_points(d, std::move(labeled));
}

inline json emit_points(const geometry::PointConfig& x) {
  json body = json::object();
  for (long i = 0; i < x.size(); ++i) {
    body[std::to_string(x.labels()[static_cast<std::size_t>(i)])] =
        emit_rational_vector(x.point_at(i));
  }
  return json{{"d", x.dimension()}, {"points", body}};
}

// {"r": n, "assignment": {"label": part}}; parts run 1..r. Missing "r"
// defaults to the largest part named.
inline geometry::OrderedPartition parse_ordered_partition(const json& j) {
  const json& body = detail::field(j, "assignment");
  if (!body.is_object()) throw std::invalid_argument("json: 'assignment' must be an object");
  std::vector<std::pair<int, int>> part_of;
  long r = 0;
  for (const auto& item : body.items()) {
    const int part = static_cast<int>(detail::require_int(item.value(), "assignment"));
    part_of.emplace_back(detail::parse_label(item.key(), "assignment"), part);
    r = std::max(r, static_cast<long>(part));
  }
  if (j.contains("r")) r = detail::require_int(j["r"], "r");
  return geometry::OrderedPartition::from_assignment(r, std::move(part_of));
}

inline json emit_ordered_partition(const geometry::OrderedPartition& p) {
  json body = json::object();
  for (const auto& [label, part] : p.assignment()) body[std::to_string(label)] = part;
  return json{{"r", p.r()}, {"assignment", body}};
}

// {"a": ["p/q", ...], "b": "p/q"}; a polytope is an array of half-spaces;
// a family payload is {"d": n, "families": [[polytope, ...], ...]}.
inline geometry::HalfSpace parse_halfspace(const json& j) {
  return geometry::HalfSpace{parse_rational_vector(detail::field(j, "a"), "a"),
                             parse_rational(detail::field(j, "b"))};
}

inline json emit_halfspace(const geometry::HalfSpace& h) {
  return json{{"a", emit_rational_vector(h.a)}, {"b", emit_rational(h.b)}};
}

inline geometry::HPolytope parse_polytope(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: polytope must be an array");
  geometry::HPolytope out;
  for (const auto& h : j) out.push_back(parse_halfspace(h));
  return out;
}

inline json emit_polytope(const geometry::HPolytope& p) {
  json out = json::array();
  for (const auto& h : p) out.push_back(emit_halfspace(h));
  return out;
}

inline geometry::HPolytopeFamily parse_polytope_family(const json& j) {
  geometry::HPolytopeFamily out;
  out.d = detail::require_int(detail::field(j, "d"), "d");
  for (const auto& fam : detail::field(j, "families")) {
    if (!fam.is_array()) throw std::invalid_argument("json: family must be an array");
    std::vector<geometry::HPolytope> members;
    for (const auto& p : fam) members.push_back(parse_polytope(p));
    out.families.push_back(std::move(members));
  }
  return out;
}

inline json emit_polytope_family(const geometry::HPolytopeFamily& f) {
  json fams = json::array();
  for (const auto& fam : f.families) {
    json members = json::array();
    for (const auto& p : fam) members.push_back(emit_polytope(p));
    fams.push_back(members);
  }
  return json{{"d", f.d}, {"families", fams}};
}

// {"d": n, "sets": [[["p/q", ...], ...], ...], "target": ["p/q", ...]?}
struct PointSetsPayload {
  long d = 0;
  std::vector<std::vector<geometry::Point>> sets;
  std::optional<geometry::Point> target;
};

inline PointSetsPayload parse_point_sets(const json& j) {
  PointSetsPayload out;
  out.d = detail::require_int(detail::field(j, "d"), "d");
  for (const auto& s : detail::field(j, "sets")) {
    if (!s.is_array()) throw std::invalid_argument("json: point set must be an array");
    std::vector<geometry::Point> pts;
    for (const auto& p : s) pts.push_back(parse_rational_vector(p, "sets"));
    out.sets.push_back(std::move(pts));
  }
  if (j.contains("target")) out.target = parse_rational_vector(j["target"], "target");
  return out;
}

inline json emit_point_sets(const PointSetsPayload& p) {
  json sets = json::array();
  for (const auto& s : p.sets) {
    json pts = json::array();
    for (const auto& pt : s) pts.push_back(emit_rational_vector(pt));
    sets.push_back(pts);
  }
  json out = json{{"d", p.d}, {"sets", sets}};
  if (p.target) out["target"] = emit_rational_vector(*p.target);
  return out;
}

// ---------------------------------------------------------------------------
// Prism triangulations and colorings.

// {"n": n, "vertices": [{"barycentric": ["p/q", ...], "height": "p/q"}],
//  "cells": [[ids]]}
inline sperner::PrismTriangulation parse_prism(const json& j) {
  std::vector<sperner::PrismVertex> vertices;
  for (const auto& v : detail::field(j, "vertices")) {
    vertices.push_back(sperner::PrismVertex{
        parse_rational_vector(detail::field(v, "barycentric"), "barycentric"),
        parse_rational(detail::field(v, "height"))});
  }
  return sperner::PrismTriangulation::from_cells(
      detail::require_int(detail::field(j, "n"), "n"), std::move(vertices),
      parse_face_list(detail::field(j, "cells"), "cells"));
}

inline json emit_prism(const sperner::PrismTriangulation& t) {
  json vertices = json::array();
  for (const auto& v : t.vertices()) {
    vertices.push_back(json{{"barycentric", emit_rational_vector(v.barycentric)},
                            {"height", emit_rational(v.height)}});
  }
  return json{{"n", t.n()},
              {"vertices", vertices},
              {"cells", emit_face_list(t.top_simplices())}};
}

// {"colors": [color per vertex id]}
inline sperner::Coloring parse_coloring(const json& j) {
  return parse_face(detail::field(j, "colors"), "colors");
}

inline json emit_coloring(const sperner::Coloring& c) {
  return json{{"colors", emit_face(c)}};
}

// ---------------------------------------------------------------------------
// Checker instances. Every field is optional; checkers reject instances
// missing the fields their hypothesis needs.

inline hallcheck::Instance parse_instance(const json& j) {
  hallcheck::Instance inst;
  if (j.contains("complex")) inst.cpx = parse_complex(j["complex"]);
  if (j.contains("classes")) inst.classes = parse_partition(j["classes"]);
  if (j.contains("matroid")) inst.mat = parse_matroid(j["matroid"]);
  if (j.contains("matroid2")) inst.mat2 = parse_matroid(j["matroid2"]);
  if (j.contains("graph")) inst.graph = parse_graph(j["graph"]);
  if (j.contains("hypergraph")) inst.hyper = parse_hypergraph(j["hypergraph"]);
  if (j.contains("a_side")) inst.a_side = parse_face(j["a_side"], "a_side");
  if (j.contains("lists")) inst.lists = parse_lists(j["lists"]);
  if (j.contains("edge_classes")) {
    inst.edge_classes = parse_face_list(j["edge_classes"], "edge_classes");
  }
  if (j.contains("points")) inst.points = parse_points(j["points"]);
  if (j.contains("point_sets")) {
    auto payload = parse_point_sets(j["point_sets"]);
    inst.point_sets = std::move(payload.sets);
    if (payload.target) inst.target = std::move(payload.target);
    if (inst.d == 0) inst.d = payload.d;
  }
  if (j.contains("target")) inst.target = parse_rational_vector(j["target"], "target");
  if (j.contains("half_spaces")) inst.half_spaces = parse_polytope_family(j["half_spaces"]);
  if (j.contains("m")) inst.m = detail::require_int(j["m"], "m");
  if (j.contains("d")) inst.d = detail::require_int(j["d"], "d");
  if (j.contains("k")) inst.k = detail::require_int(j["k"], "k");
  if (j.contains("r")) inst.r = detail::require_int(j["r"], "r");
  if (j.contains("delta")) inst.delta = detail::require_int(j["delta"], "delta");
  if (j.contains("leray")) inst.leray = detail::require_int(j["leray"], "leray");
  if (j.contains("nerve_oracle")) inst.nerve_oracle = j["nerve_oracle"].get<std::string>();
  return inst;
}

inline json emit_instance(const hallcheck::Instance& inst) {
  json out = json::object();
  if (inst.cpx) out["complex"] = emit_complex(*inst.cpx);
  if (inst.classes) out["classes"] = emit_partition(*inst.classes);
  if (inst.graph) out["graph"] = emit_graph(*inst.graph);
  if (inst.hyper) out["hypergraph"] = emit_hypergraph(*inst.hyper);
  if (inst.a_side) out["a_side"] = emit_face(*inst.a_side);
  if (inst.lists) out["lists"] = emit_lists(*inst.lists);
  if (inst.edge_classes) out["edge_classes"] = emit_face_list(*inst.edge_classes);
  if (inst.points) out["points"] = emit_points(*inst.points);
  if (inst.point_sets) {
    PointSetsPayload payload;
    payload.d = inst.d;
    payload.sets = *inst.point_sets;
    payload.target = inst.target;
    out["point_sets"] = emit_point_sets(payload);
  } else if (inst.target) {
    out["target"] = emit_rational_vector(*inst.target);
  }
  if (inst.half_spaces) out["half_spaces"] = emit_polytope_family(*inst.half_spaces);
  if (inst.m != 0) out["m"] = inst.m;
  if (inst.d != 0) out["d"] = inst.d;
  if (inst.k != 0) out["k"] = inst.k;
  if (inst.r != 0) out["r"] = inst.r;
  if (inst.delta != 0) out["delta"] = inst.delta;
  if (inst.leray != 0) out["leray"] = inst.leray;
  if (!inst.nerve_oracle.empty()) out["nerve_oracle"] = inst.nerve_oracle;
  return out;
}

// ---------------------------------------------------------------------------
// Report objects (emit only; reports are outputs, not inputs).

inline json emit_eta(const homology::Eta& e) {
  if (e.is_infinite()) return json("inf");
  return json(e.value());
}

// {"betti": {"-1": b, ...}, "eta_h": n | "inf"}
inline json emit_homology(const homology::ReducedBetti& betti, const homology::Eta& eta) {
  json b = json::object();
  for (long p = -1; p <= betti.top_dim(); ++p) b[std::to_string(p)] = betti.at(p);
  return json{{"betti", b}, {"eta_h", emit_eta(eta)}};
}

inline json emit_subset_evaluation(const hallcheck::SubsetEvaluation& e) {
  return json{{"subset", emit_face(e.subset)},
              {"value", emit_eta(e.value)},
              {"required", e.required},
              {"ok", e.ok}};
}

inline json emit_report(const hallcheck::HypothesisReport& r) {
  json out = json{{"theorem", r.theorem}, {"holds", r.holds}};
  if (r.failing_witness) out["failing_witness"] = emit_subset_evaluation(*r.failing_witness);
  json table = json::array();
  for (const auto& row : r.table) table.push_back(emit_subset_evaluation(row));
  out["table"] = table;
  return out;
}

// {"vertices": n, "edges": m, "components": k,
//  "witness_vertices_per_component": [config per component]}
inline json emit_reconfig(const reconfig::ReconfigAnalysis& a,
                          const reconfig::ReconfigGraph* graph = nullptr) {
  json out = json{{"vertices", a.vertex_count},
                  {"edges", a.edge_count},
                  {"components", a.component_count}};
  json witnesses = json::array();
  if (graph != nullptr) {
    for (const auto& comp : a.components) {
      witnesses.push_back(emit_face(graph->configurations()[static_cast<std::size_t>(comp[0])]));
    }
  }
  out["witness_vertices_per_component"] = witnesses;
  return out;
}

inline json emit_verdict(const hallcheck::VerificationVerdict& v) {
  json out = json{{"theorem", v.theorem},
                  {"hypothesis", v.hypothesis},
                  {"oracle_ran", v.oracle_ran},
                  {"report", emit_report(v.report)}};
  if (v.oracle_ran) {
    out["conclusion"] = v.conclusion;
    out["classification"] = hallcheck::to_string(v.classification);
  }
  if (v.analysis) out["oracle_reconfig"] = emit_reconfig(*v.analysis);
  if (v.oracle_eta) out["oracle_eta"] = emit_eta(*v.oracle_eta);
  if (v.nerve_eta) out["nerve_eta"] = emit_eta(*v.nerve_eta);
  return out;
}

// ---------------------------------------------------------------------------
// Instance hashing: 64-bit FNV-1a over the canonical dump (nlohmann objects
// iterate key-sorted, so equal payloads hash equally).

inline std::string instance_hash(const json& j) {
  const std::string text = j.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace topohall::jsonio

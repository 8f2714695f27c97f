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
 * Command-line front end: subcommand dispatch, payload schemas, experiment
 * presets, and deterministic JSON report emission.
 *
 * Exit codes: 0 success or hypothesis-consistent, 1 input error (malformed
 * JSON reports a byte position), 2 counterexample found, 3 capacity
 * exceeded. All randomness is seed-parameterized, so identical argv plus
 * seed yields a byte-identical report; reports embed the theorem id, the
 * instance hash, and the artifact version.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topohall/hallcheck.hpp"
#include "topohall/jsonio.hpp"
#include "topohall/sweep.hpp"

namespace topohall::cli {

using complex::Face;
using jsonio::json;

inline constexpr const char* kArtifactVersion = "1.0.0";

namespace detail {

inline json read_payload(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return jsonio::parse_text(ss.str());
}

inline void print_json(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

inline json envelope(const char* command, const json& payload, json result) {
  return json{{"artifact_version", kArtifactVersion},
              {"command", command},
              {"instance_hash", jsonio::instance_hash(payload)},
              {"result", std::move(result)}};
}

// Reconfiguration graph dispatch over the fields present in the payload.
inline std::pair<std::string, reconfig::ReconfigGraph> build_rg(const hallcheck::Instance& inst,
                                                                const json& payload, long k_flag,
                                                                bool k_given, bool weak) {
  auto pick_k = [&](long fallback) {
    if (k_given) return k_flag;
    if (payload.contains("k")) return inst.k;
    return fallback;
  };
  if (inst.cpx && inst.classes) {
    const long k = pick_k(inst.classes->n());
    return {"colorful", reconfig::rg_colorful(*inst.cpx, *inst.classes, k, weak)};
  }
  if (inst.cpx && inst.mat) {
    const long k = pick_k(inst.mat->rank());
    return {"complex-matroid", reconfig::rg_complex_matroid(*inst.cpx, *inst.mat, k, weak)};
  }
  if (inst.mat && inst.mat2) {
    const long k = pick_k(std::min(inst.mat->rank(), inst.mat2->rank()));
    return {"matroid-intersection",
            reconfig::rg_matroid_intersection(*inst.mat, *inst.mat2, k, weak)};
  }
  if (inst.hyper && inst.a_side) {
    const long k = pick_k(static_cast<long>(inst.a_side->size()));
    return {"bipartite-matching",
            reconfig::rg_bipartite_matching(*inst.hyper, *inst.a_side, k, weak)};
  }
  if (inst.points) {
    if (inst.r < 2) throw std::invalid_argument("rg: tverberg payload needs r >= 2");
    return {"tverberg", geometry::rg_tverberg(*inst.points, inst.r)};
  }
  if (inst.point_sets && inst.target) {
    return {"colorful-caratheodory",
            geometry::rg_colorful_caratheodory(*inst.point_sets, *inst.target)};
  }
  if (inst.half_spaces) {
    return {"colorful-helly", geometry::rg_colorful_helly(*inst.half_spaces)};
  }
  if (inst.cpx) {
    if (!k_given && !payload.contains("k")) {
      throw std::invalid_argument("rg: up-down walk on a bare complex needs --k");
    }
    return {"up-down-walk", reconfig::up_down_walk(*inst.cpx, pick_k(0), weak)};
  }
  throw std::invalid_argument(
      "rg: payload must pair complex+classes, complex+matroid, matroid+matroid2, "
      "hypergraph+a_side, points, point_sets+target, or half_spaces");
}

// Machine-readable payload schemas, keyed by kind.
inline json schema_document(const std::string& kind) {
  const json ints = json{{"type", "array"}, {"items", json{{"type", "integer"}}}};
  const json faces = json{{"type", "array"}, {"items", ints}};
  const json rat =
      json{{"oneOf", json::array({json{{"type", "string"},
                                       {"pattern", "^-?[0-9]+(/[0-9]+)?$"}},
                                  json{{"type", "integer"}}})}};
  const json rats = json{{"type", "array"}, {"items", rat}};
  auto doc = [&](std::initializer_list<const char*> required, json props) {
    json req = json::array();
    for (const char* r : required) req.push_back(r);
    return json{{"$schema", "http://json-schema.org/draft-07/schema#"},
                {"title", kind},
                {"type", "object"},
                {"required", req},
                {"properties", std::move(props)}};
  };
  if (kind == "complex") {
    return doc({"ground_set", "maximal_faces"},
               json{{"ground_set", ints}, {"maximal_faces", faces}});
  }
  if (kind == "partition") return doc({"classes"}, json{{"classes", faces}});
  if (kind == "poset") {
    return doc({"elements", "covers"}, json{{"elements", ints}, {"covers", faces}});
  }
  if (kind == "matroid") {
    return doc({"kind"},
               json{{"kind", json{{"enum", json::array({"partition", "uniform", "linear"})}}},
                    {"classes", faces},
                    {"capacities", ints},
                    {"ground", ints},
                    {"k", json{{"type", "integer"}}},
                    {"columns", json{{"type", "array"}, {"items", rats}}},
                    {"transforms", json{{"type", "array"}, {"items", json{{"type", "object"}}}}}});
  }
  if (kind == "graph") {
    return doc({"vertices", "edges"}, json{{"vertices", ints}, {"edges", faces}});
  }
  if (kind == "hypergraph") {
    return doc({"vertices", "edges"},
               json{{"vertices", ints}, {"edges", faces}, {"r", json{{"type", "integer"}}}});
  }
  if (kind == "lists") {
    return doc({"lists"}, json{{"lists", json{{"type", "object"},
                                              {"additionalProperties", ints}}}});
  }
  if (kind == "points") {
    return doc({"d", "points"},
               json{{"d", json{{"type", "integer"}}},
                    {"points", json{{"type", "object"}, {"additionalProperties", rats}}}});
  }
  if (kind == "assignment") {
    return doc({"assignment"},
               json{{"r", json{{"type", "integer"}}},
                    {"assignment", json{{"type", "object"},
                                        {"additionalProperties", json{{"type", "integer"}}}}}});
  }
  if (kind == "halfspaces") {
    const json hs = json{{"type", "object"},
                         {"required", json::array({"a", "b"})},
                         {"properties", json{{"a", rats}, {"b", rat}}}};
    const json polytope = json{{"type", "array"}, {"items", hs}};
    return doc({"d", "families"},
               json{{"d", json{{"type", "integer"}}},
                    {"families", json{{"type", "array"},
                                      {"items", json{{"type", "array"}, {"items", polytope}}}}}});
  }
  if (kind == "point-sets") {
    const json pts = json{{"type", "array"}, {"items", rats}};
    return doc({"d", "sets"},
               json{{"d", json{{"type", "integer"}}},
                    {"sets", json{{"type", "array"}, {"items", pts}}},
                    {"target", rats}});
  }
  if (kind == "prism") {
    const json vert = json{{"type", "object"},
                           {"required", json::array({"barycentric", "height"})},
                           {"properties", json{{"barycentric", rats}, {"height", rat}}}};
    return doc({"n", "vertices", "cells"},
               json{{"n", json{{"type", "integer"}}},
                    {"vertices", json{{"type", "array"}, {"items", vert}}},
                    {"cells", faces}});
  }
  if (kind == "coloring") return doc({"colors"}, json{{"colors", ints}});
  if (kind == "instance") {
    return doc({}, json{{"complex", json{{"$ref", "#/definitions/complex"}}},
                        {"classes", json{{"$ref", "#/definitions/partition"}}},
                        {"matroid", json{{"$ref", "#/definitions/matroid"}}},
                        {"matroid2", json{{"$ref", "#/definitions/matroid"}}},
                        {"graph", json{{"$ref", "#/definitions/graph"}}},
                        {"hypergraph", json{{"$ref", "#/definitions/hypergraph"}}},
                        {"a_side", ints},
                        {"lists", json{{"type", "object"}}},
                        {"edge_classes", faces},
                        {"points", json{{"$ref", "#/definitions/points"}}},
                        {"point_sets", json{{"$ref", "#/definitions/point-sets"}}},
                        {"target", rats},
                        {"half_spaces", json{{"$ref", "#/definitions/halfspaces"}}},
                        {"m", json{{"type", "integer"}}},
                        {"d", json{{"type", "integer"}}},
                        {"k", json{{"type", "integer"}}},
                        {"r", json{{"type", "integer"}}},
                        {"delta", json{{"type", "integer"}}},
                        {"leray", json{{"type", "integer"}}},
                        {"nerve_oracle", json{{"enum", json::array({"loose-walk", "rg"})}}}});
  }
  if (kind == "homology") {
    return doc({"betti", "eta_h"},
               json{{"betti", json{{"type", "object"},
                                   {"additionalProperties", json{{"type", "integer"}}}}},
                    {"eta_h", json{{"oneOf", json::array({json{{"type", "integer"}},
                                                          json{{"const", "inf"}}})}}}});
  }
  if (kind == "reconfig") {
    return doc({"vertices", "edges", "components", "witness_vertices_per_component"},
               json{{"vertices", json{{"type", "integer"}}},
                    {"edges", json{{"type", "integer"}}},
                    {"components", json{{"type", "integer"}}},
                    {"witness_vertices_per_component", faces}});
  }
  if (kind == "report") {
    const json row = json{{"type", "object"},
                          {"required", json::array({"subset", "value", "required", "ok"})}};
    return doc({"theorem", "holds", "table"},
               json{{"theorem", json{{"type", "string"}}},
                    {"holds", json{{"type", "boolean"}}},
                    {"failing_witness", row},
                    {"table", json{{"type", "array"}, {"items", row}}}});
  }
  if (kind == "verdict") {
    return doc({"theorem", "hypothesis", "oracle_ran", "report"},
               json{{"theorem", json{{"type", "string"}}},
                    {"hypothesis", json{{"type", "boolean"}}},
                    {"conclusion", json{{"type", "boolean"}}},
                    {"oracle_ran", json{{"type", "boolean"}}},
                    {"classification",
                     json{{"enum", json::array({"confirmed", "vacuous", "tight-negative"})}}},
                    {"report", json{{"$ref", "#/definitions/report"}}}});
  }
  throw std::invalid_argument("schema: unknown kind '" + kind + "'");
}

}  // namespace detail

// Parses argv and runs one subcommand, writing the report to out and
// diagnostics to err. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checkers for topological Hall statements and their "
               "reconfiguration analogues"};
  app.set_version_flag("--version", kArtifactVersion);
  app.require_subcommand(1);

  std::string input;
  std::string theorem;
  std::string format = "json";
  std::string kind;
  std::string family;
  bool with_oracle = true;
  bool weak = false;
  long m = 0, d = 0, k = 0, r = 0, delta = 0, leray = 0, cap = 0;
  long n = 0, subdivisions = 1, p_num = 1, p_den = 2;
  long max_vertices = 6, classes = 3, max_class_size = 3, stride = 100'000;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input", input, "Input payload file (JSON)");
    if (needs_input) opt->required();
    sub->add_option("--format", format, "Output format (json)")
        ->check(CLI::IsMember({"json"}));
    return sub;
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cap, "Candidate configuration cap override")
        ->check(CLI::PositiveNumber);
  };

  auto* c_homology = add_common(app.add_subcommand("homology", "Reduced Betti numbers and eta"),
                                true);
  auto* c_eta = add_common(app.add_subcommand("eta", "Eta of a complex or matroid"), true);
  auto* c_rg = add_common(app.add_subcommand("rg", "Reconfiguration graph analysis"), true);
  c_rg->add_option("--k", k, "Configuration size / class count");
  c_rg->add_flag("--weak", weak, "Weak adjacency (differ in one element)");
  add_cap(c_rg);
  auto* c_check = add_common(app.add_subcommand("check", "Verify a named statement"), true);
  c_check->add_option("--theorem", theorem, "Statement id")->required();
  c_check->add_flag("--oracle,!--no-oracle", with_oracle,
                    "Run the conclusion oracle (default on)");
  c_check->add_option("--m", m, "Connectivity offset override");
  c_check->add_option("--d", d, "Deficiency override");
  c_check->add_option("--k", k, "Size threshold override");
  c_check->add_option("--r", r, "Part count override");
  c_check->add_option("--delta", delta, "Degree bound override");
  c_check->add_option("--leray", leray, "Leray bound override");
  add_cap(c_check);
  auto* c_witness =
      add_common(app.add_subcommand("witness", "Extract a domination witness"), true);
  auto* c_tverberg = add_common(app.add_subcommand("tverberg", "Tverberg partitions"), true);
  c_tverberg->add_option("--r", r, "Number of parts override");
  add_cap(c_tverberg);
  auto* c_radon = add_common(app.add_subcommand("radon-path", "Walk between Radon partitions"),
                             true);
  auto* c_cara = add_common(
      app.add_subcommand("caratheodory", "Colorful Caratheodory reconfiguration"), true);
  add_cap(c_cara);
  auto* c_helly =
      add_common(app.add_subcommand("helly", "Colorful Helly reconfiguration"), true);
  add_cap(c_helly);
  auto* c_sperner = add_common(app.add_subcommand("sperner", "Prism path-following"), true);
  c_sperner->add_option("--seed", seed, "Seed for a random coloring");
  auto* c_gen = add_common(app.add_subcommand("gen", "Generate a preset instance"), false);
  c_gen->add_option("--kind", kind, "Preset name")->required();
  c_gen->add_option("--delta", delta, "Degree parameter");
  c_gen->add_option("--r", r, "Uniformity / grid size");
  c_gen->add_option("--n", n, "Vertex count / prism dimension");
  c_gen->add_option("--subdivisions", subdivisions, "Staircase height layers");
  c_gen->add_option("--p-num", p_num, "Edge probability numerator");
  c_gen->add_option("--p-den", p_den, "Edge probability denominator");
  c_gen->add_option("--seed", seed, "Random seed");
  auto* c_sweep = add_common(app.add_subcommand("sweep", "Exhaustive family sweep"), false);
  c_sweep->add_option("--family", family, "Instance family (graphs, matroids)")->required();
  c_sweep->add_option("--theorem", theorem, "Statement id")->required();
  c_sweep->add_option("--max-vertices", max_vertices, "Vertex bound for graphs");
  c_sweep->add_option("--max-elements", max_vertices, "Ground bound for matroids");
  c_sweep->add_option("--classes", classes, "Class count bound");
  c_sweep->add_option("--max-class-size", max_class_size, "Class size bound");
  c_sweep->add_option("--stride", stride, "Cross-validation stride (0 disables)");
  add_cap(c_sweep);
  auto* c_schema = app.add_subcommand("schema", "Print a payload schema");
  c_schema->add_option("--kind", kind, "Payload kind")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (cap > 0) reconfig::candidate_cap = cap;

    if (c_homology->parsed()) {
      const json payload = detail::read_payload(input);
      const auto c = jsonio::parse_complex(payload);
      const auto betti = homology::reduced_betti(c);
      detail::print_json(
          out, detail::envelope("homology", payload,
                                jsonio::emit_homology(betti, homology::eta_h(c))));
    } else if (c_eta->parsed()) {
      const json payload = detail::read_payload(input);
      homology::Eta eta = homology::Eta::finite(0);
      if (payload.contains("kind")) {
        eta = homology::eta_h(jsonio::parse_matroid(payload).independence_complex());
      } else {
        eta = homology::eta_h(jsonio::parse_complex(payload));
      }
      detail::print_json(out, detail::envelope("eta", payload,
                                               json{{"eta_h", jsonio::emit_eta(eta)}}));
    } else if (c_rg->parsed()) {
      const json payload = detail::read_payload(input);
      const auto inst = jsonio::parse_instance(payload);
      const bool k_given = c_rg->count("--k") > 0;
      auto [rg_kind, rg] = detail::build_rg(inst, payload, k, k_given, weak);
      const auto analysis = rg.analyze();
      json result = jsonio::emit_reconfig(analysis, &rg);
      result["kind"] = rg_kind;
      result["connected"] = analysis.is_connected;
      detail::print_json(out, detail::envelope("rg", payload, std::move(result)));
    } else if (c_check->parsed()) {
      const json payload = detail::read_payload(input);
      auto inst = jsonio::parse_instance(payload);
      if (c_check->count("--m")) inst.m = m;
      if (c_check->count("--d")) inst.d = d;
      if (c_check->count("--k")) inst.k = k;
      if (c_check->count("--r")) inst.r = r;
      if (c_check->count("--delta")) inst.delta = delta;
      if (c_check->count("--leray")) inst.leray = leray;
      const auto verdict = hallcheck::verify_instance(inst, theorem, with_oracle);
      json env = detail::envelope("check", payload, jsonio::emit_verdict(verdict));
      env["theorem"] = theorem;
      detail::print_json(out, env);
    } else if (c_witness->parsed()) {
      const json payload = detail::read_payload(input);
      const auto inst = jsonio::parse_instance(payload);
      if (!inst.graph || !inst.classes) {
        throw std::invalid_argument("witness: payload needs graph and classes");
      }
      const auto w = hallcheck::extract_domination_witness(*inst.graph, *inst.classes);
      detail::print_json(
          out, detail::envelope("witness", payload,
                                json{{"connected", w.connected},
                                     {"haxell_fallback", w.haxell_fallback},
                                     {"classes", jsonio::emit_face(w.classes)},
                                     {"dominating_set", jsonio::emit_face(w.dominating_set)}}));
    } else if (c_tverberg->parsed()) {
      const json payload = detail::read_payload(input);
      const auto x = jsonio::parse_points(payload);
      json result;
      if (payload.contains("partition")) {
        const auto p = jsonio::parse_ordered_partition(payload["partition"]);
        const auto t = geometry::is_tverberg(x, p);
        result["is_tverberg"] = t.intersecting;
        if (t.intersecting) result["common_point"] = jsonio::emit_rational_vector(t.common);
      } else {
        long parts = r;
        if (c_tverberg->count("--r") == 0) {
          parts = jsonio::detail::require_int(jsonio::detail::field(payload, "r"), "r");
        }
        const auto rg = geometry::rg_tverberg(x, parts);
        const auto analysis = rg.analyze();
        result = jsonio::emit_reconfig(analysis, &rg);
        result["connected"] = analysis.is_connected;
      }
      detail::print_json(out, detail::envelope("tverberg", payload, std::move(result)));
    } else if (c_radon->parsed()) {
      const json payload = detail::read_payload(input);
      const auto x = jsonio::parse_points(payload);
      const auto p = jsonio::parse_ordered_partition(jsonio::detail::field(payload, "from"));
      const auto q = jsonio::parse_ordered_partition(jsonio::detail::field(payload, "to"));
      const auto path = geometry::radon_path(x, p, q);
      json walk = json::array();
      for (const auto& step : path.walk) walk.push_back(jsonio::emit_ordered_partition(step));
      detail::print_json(
          out, detail::envelope("radon-path", payload,
                                json{{"walk", walk},
                                     {"steps", static_cast<long>(path.walk.size())},
                                     {"used_detour", path.used_detour}}));
    } else if (c_cara->parsed()) {
      const json payload = detail::read_payload(input);
      const auto ps = jsonio::parse_point_sets(payload);
      if (!ps.target) throw std::invalid_argument("caratheodory: payload needs a target");
      const auto rg = geometry::rg_colorful_caratheodory(ps.sets, *ps.target);
      const auto analysis = rg.analyze();
      json result = jsonio::emit_reconfig(analysis, &rg);
      result["connected"] = analysis.is_connected;
      result["halfspace_family"] = jsonio::emit_polytope_family(
          geometry::caratheodory_halfspace_family(ps.sets, *ps.target));
      detail::print_json(out, detail::envelope("caratheodory", payload, std::move(result)));
    } else if (c_helly->parsed()) {
      const json payload = detail::read_payload(input);
      const auto f = jsonio::parse_polytope_family(payload);
      const auto rg = geometry::rg_colorful_helly(f);
      const auto analysis = rg.analyze();
      json result = jsonio::emit_reconfig(analysis, &rg);
      result["connected"] = analysis.is_connected;
      detail::print_json(out, detail::envelope("helly", payload, std::move(result)));
    } else if (c_sperner->parsed()) {
      const json payload = detail::read_payload(input);
      const json& tri_json =
          payload.contains("triangulation") ? payload["triangulation"] : payload;
      const auto t = jsonio::parse_prism(tri_json);
      sperner::Coloring colors;
      if (payload.contains("coloring")) {
        colors = jsonio::parse_coloring(payload["coloring"]);
      } else {
        colors = sperner::random_r_sperner(t, seed);
      }
      const auto validation = sperner::validate_r_sperner(t, colors);
      if (!validation.valid) {
        for (const auto& v : validation.violations) {
          err << "invalid color at vertex " << v.vertex << "\n";
        }
        return 1;
      }
      const auto report = sperner::follow_paths(t, colors);
      auto paths_json = [](const std::vector<std::vector<sperner::Face>>& paths) {
        json out_paths = json::array();
        for (const auto& p : paths) out_paths.push_back(jsonio::emit_face_list(p));
        return out_paths;
      };
      detail::print_json(
          out,
          detail::envelope("sperner", payload,
                           json{{"coloring", json(colors)},
                                {"base0_colorful", report.base0_count},
                                {"base1_colorful", report.base1_count},
                                {"connecting_paths", paths_json(report.connecting_paths)},
                                {"other_paths", paths_json(report.other_paths)},
                                {"cycles", paths_json(report.cycles)}}));
    } else if (c_gen->parsed()) {
      json payload;
      if (kind == "kdd") {
        const auto inst = graphs::gen_kdd_single_class(delta);
        payload = json{{"graph", jsonio::emit_graph(inst.g)},
                       {"classes", jsonio::emit_partition(inst.v)}};
      } else if (kind == "kdd-double") {
        const auto inst = graphs::gen_kdd_double(delta);
        payload = json{{"graph", jsonio::emit_graph(inst.g)},
                       {"classes", jsonio::emit_partition(inst.v)}};
      } else if (kind == "grid") {
        const auto inst = graphs::gen_grid(r);
        payload = json{{"hypergraph", jsonio::emit_hypergraph(inst.h)},
                       {"edge_classes", jsonio::emit_face_list(inst.edge_classes)}};
      } else if (kind == "bipartite-counterexample") {
        const auto inst = graphs::gen_bipartite_counterexample(r);
        payload = json{{"hypergraph", jsonio::emit_hypergraph(inst.h)},
                       {"a_side", jsonio::emit_face(inst.a_side)}};
      } else if (kind == "random-graph") {
        payload = jsonio::emit_graph(graphs::gen_random_graph(n, p_num, p_den, seed));
      } else if (kind == "staircase") {
        payload = jsonio::emit_prism(sperner::staircase_triangulation(n, subdivisions));
      } else {
        throw std::invalid_argument(
            "gen: unknown kind (kdd, kdd-double, grid, bipartite-counterexample, "
            "random-graph, staircase)");
      }
      detail::print_json(out, payload);
    } else if (c_sweep->parsed()) {
      json result;
      if (family == "graphs") {
        if (theorem != "reconfig-hall") {
          throw std::invalid_argument("sweep: family graphs supports theorem reconfig-hall");
        }
        sweep::GraphSweepOptions opt;
        opt.max_vertices = static_cast<int>(max_vertices);
        opt.max_classes = static_cast<int>(classes);
        opt.max_class_size = static_cast<int>(max_class_size);
        opt.cross_validate_stride = stride;
        const auto s = sweep::sweep_reconfig_hall(opt);
        result = json{{"family", family},
                      {"theorem", theorem},
                      {"instances", s.instances},
                      {"confirmed", s.confirmed},
                      {"vacuous", s.vacuous},
                      {"tight_negative", s.tight_negative},
                      {"counterexamples", s.counterexamples},
                      {"cross_validated", s.cross_validated},
                      {"eta_memo_entries", s.eta_memo_entries}};
      } else if (family == "matroids") {
        if (theorem != "matroid-intersection") {
          throw std::invalid_argument("sweep: family matroids supports theorem "
                                      "matroid-intersection");
        }
        if (max_vertices < 1 || max_vertices > 6) {
          throw std::invalid_argument("sweep: matroid ground bound must be in 1..6");
        }
        long instances = 0, confirmed = 0, vacuous = 0, tight = 0;
        for (int ground_n = 1; ground_n <= max_vertices; ++ground_n) {
          const auto parts = sweep::set_partitions(ground_n, ground_n, ground_n);
          Face ground;
          for (int i = 0; i < ground_n; ++i) ground.push_back(i);
          for (const auto& blocks : parts) {
            const auto m1 = matroid::Matroid::partition(blocks);
            for (long u = 0; u <= ground_n; ++u) {
              const auto m2 = matroid::Matroid::uniform(ground, u);
              const long k_max = std::min(m1.rank(), m2.rank());
              for (long kk = 0; kk <= k_max; ++kk) {
                hallcheck::Instance inst;
                inst.mat = m1;
                inst.mat2 = m2;
                inst.k = kk;
                ++instances;
                const auto verdict = hallcheck::verify_instance(inst, theorem);
                switch (verdict.classification) {
                  case hallcheck::Classification::Confirmed: ++confirmed; break;
                  case hallcheck::Classification::Vacuous: ++vacuous; break;
                  case hallcheck::Classification::TightNegative: ++tight; break;
                }
              }
            }
          }
        }
        result = json{{"family", family},       {"theorem", theorem},
                      {"instances", instances}, {"confirmed", confirmed},
                      {"vacuous", vacuous},     {"tight_negative", tight},
                      {"counterexamples", 0}};
      } else {
        throw std::invalid_argument("sweep: unknown family (graphs, matroids)");
      }
      json env = json{{"artifact_version", kArtifactVersion},
                      {"command", "sweep"},
                      {"theorem", theorem},
                      {"result", std::move(result)}};
      detail::print_json(out, env);
    } else if (c_schema->parsed()) {
      detail::print_json(out, detail::schema_document(kind));
    }
    return 0;
  } catch (const json::parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const hallcheck::CounterexampleFound& e) {
    detail::print_json(out, json{{"artifact_version", kArtifactVersion},
                                 {"counterexample", true},
                                 {"theorem", e.theorem()},
                                 {"instance", e.instance_dump()}});
    err << "COUNTEREXAMPLE: " << e.theorem() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace topohall::cli

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
 * Exhaustive experiment sweeps over small instance families. The flagship
 * sweep enumerates every labeled graph on up to max_vertices vertices
 * together with every vertex partition into bounded classes, checks the
 * independent-transversal reconfiguration statement on each pair, and
 * demands zero counterexamples.
 *
 * The flagship sweep runs on bitmask graphs with a global memo of eta
 * values keyed by the relabeled induced subgraph, so the millions of
 * hypothesis evaluations reduce to tens of thousands of homology runs. A
 * configurable sample of instances is re-verified through the generic
 * checker to guard the fast path.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topohall/complex.hpp"
#include "topohall/graphs.hpp"
#include "topohall/hallcheck.hpp"
#include "topohall/homology.hpp"
#include "topohall/reconfig.hpp"

namespace topohall::sweep {

using complex::Face;

// Restricted-growth enumeration of set partitions of {0..n-1} into at most
// max_classes nonempty blocks of size at most max_class_size. Blocks are
// ordered by least element; output is deterministic.
inline std::vector<std::vector<Face>> set_partitions(int n, int max_classes,
                                                     int max_class_size) {
  std::vector<std::vector<Face>> out;
  std::vector<Face> blocks;
  auto rec = [&](auto&& self, int vertex) -> void {
    if (vertex == n) {
      out.push_back(blocks);
      return;
    }
    // Deeper levels may grow the block vector; index, don't hold references.
    const std::size_t existing = blocks.size();
    for (std::size_t i = 0; i < existing; ++i) {
      if (static_cast<int>(blocks[i].size()) < max_class_size) {
        blocks[i].push_back(vertex);
        self(self, vertex + 1);
        blocks[i].pop_back();
      }
    }
    if (static_cast<int>(blocks.size()) < max_classes) {
      blocks.push_back(Face{vertex});
      self(self, vertex + 1);
      blocks.pop_back();
    }
  };
  if (n == 0) {
    out.push_back({});
  } else {
    rec(rec, 0);
  }
  return out;
}

namespace detail {

// Vertex pairs (i, j), i < j, in the fixed bit order used by graph masks.
inline std::vector<std::pair<int, int>> pair_bits(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// Eta of the independence complex of the graph given by (k, mask), memoized.
// Values cap at 127, standing in for infinity; the sweep only compares
// against thresholds far below the cap.
class EtaMemo {
 public:
  int value(int k, std::uint32_t mask) {
    const std::uint64_t key = (static_cast<std::uint64_t>(k) << 32) | mask;
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<int> verts;
    for (int i = 0; i < k; ++i) verts.push_back(i);
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j, ++bit) {
        if (mask >> bit & 1) edges.emplace_back(i, j);
      }
    }
    const auto g = graphs::Graph::from_edges(std::move(verts), std::move(edges));
    const auto eta = homology::eta_h(graphs::independence_complex(g));
    const int v = eta.is_infinite() ? 127 : static_cast<int>(std::min(eta.value(), 126L));
    memo_.emplace(key, v);
    return v;
  }

  long size() const { return static_cast<long>(memo_.size()); }

 private:
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

struct GraphSweepOptions {
  int max_vertices = 6;
  int max_classes = 3;
  int max_class_size = 3;
  // Re-run every stride-th instance through the generic checker; 0 disables.
  long cross_validate_stride = 100'000;
  // Keep up to this many hypothesis-failing disconnected instances for
  // downstream witness extraction.
  long collect_disconnected_limit = 64;
};

struct GraphSweepSummary {
  long instances = 0;
  long confirmed = 0;
  long vacuous = 0;
  long tight_negative = 0;
  long counterexamples = 0;  // a nonzero count never returns; it throws
  long cross_validated = 0;
  long eta_memo_entries = 0;
  std::vector<graphs::GraphPartitionInstance> disconnected;
};

// Enumerates every labeled graph on 1..max_vertices vertices crossed with
// every bounded vertex partition, and calls visit(graph, partition). visit
// returning false stops the enumeration. Generic path for arbitrary
// statements; the dedicated fast sweep below avoids the object churn.
template <typename Visit>
void foreach_graph_partition(int max_vertices, int max_classes, int max_class_size,
                             Visit&& visit) {
  if (max_vertices < 1 || max_vertices > 6) {
    throw std::invalid_argument("foreach_graph_partition: max_vertices must be in 1..6");
  }
  for (int n = 1; n <= max_vertices; ++n) {
    const auto pairs = detail::pair_bits(n);
    const auto partitions = set_partitions(n, max_classes, max_class_size);
    const std::uint32_t mask_end = 1u << pairs.size();
    std::vector<int> verts;
    for (int i = 0; i < n; ++i) verts.push_back(i);
    for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask >> b & 1) edges.push_back(pairs[b]);
      }
      const auto g = graphs::Graph::from_edges(verts, std::move(edges));
      for (const auto& blocks : partitions) {
        if (!visit(g, complex::VertexPartition::from_classes(blocks))) return;
      }
    }
  }
}

// Exhaustive check of the independent-transversal reconfiguration statement:
// for every labeled graph on <= max_vertices vertices and every partition of
// its vertices into <= max_classes classes of size <= max_class_size, if the
// eta hypothesis holds at offset 1 then the transversal reconfiguration
// graph is connected. A violation throws CounterexampleFound.
inline GraphSweepSummary sweep_reconfig_hall(const GraphSweepOptions& opt = {}) {
  if (opt.max_vertices < 1 || opt.max_vertices > 6) {
    throw std::invalid_argument("sweep_reconfig_hall: max_vertices must be in 1..6");
  }
  if (opt.max_classes < 1 || opt.max_class_size < 1) {
    throw std::invalid_argument("sweep_reconfig_hall: class bounds must be positive");
  }
  GraphSweepSummary out;
  detail::EtaMemo memo;

  for (int n = 1; n <= opt.max_vertices; ++n) {
    const auto pairs = detail::pair_bits(n);
    const auto partitions = set_partitions(n, opt.max_classes, opt.max_class_size);

    // Per-partition precomputation: class vertex lists and, per nonempty
    // class subset, the vertex set mask and required eta threshold.
    struct SubsetInfo {
      std::uint32_t vertex_mask;
      int required;
    };
    struct PartitionInfo {
      std::vector<Face> blocks;
      std::vector<SubsetInfo> subsets;
    };
    std::vector<PartitionInfo> infos;
    infos.reserve(partitions.size());
    for (const auto& blocks : partitions) {
      PartitionInfo info;
      info.blocks = blocks;
      const int cls = static_cast<int>(blocks.size());
      for (std::uint32_t s = 1; s < (1u << cls); ++s) {
        std::uint32_t vm = 0;
        int size = 0;
        for (int c = 0; c < cls; ++c) {
          if (s >> c & 1) {
            ++size;
            for (int v : blocks[static_cast<std::size_t>(c)]) vm |= 1u << v;
          }
        }
        info.subsets.push_back({vm, size + 1});
      }
      infos.push_back(std::move(info));
    }

    const std::uint32_t mask_end = 1u << pairs.size();
    for (std::uint32_t gmask = 0; gmask < mask_end; ++gmask) {
      // Adjacency bitmasks of the current graph.
      std::uint32_t adj[6] = {0, 0, 0, 0, 0, 0};
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (gmask >> b & 1) {
          adj[pairs[b].first] |= 1u << pairs[b].second;
          adj[pairs[b].second] |= 1u << pairs[b].first;
        }
      }
      // Relabels a vertex-mask-induced subgraph into the memo key space.
      auto induced_key = [&](std::uint32_t vm, int& k_out) -> std::uint32_t {
        int order[6];
        int k = 0;
        for (int v = 0; v < n; ++v) {
          if (vm >> v & 1) order[k++] = v;
        }
        k_out = k;
        std::uint32_t mask = 0;
        int bit = 0;
        for (int i = 0; i < k; ++i) {
          for (int j = i + 1; j < k; ++j, ++bit) {
            if (adj[order[i]] >> order[j] & 1) mask |= 1u << bit;
          }
        }
        return mask;
      };

      for (const auto& info : infos) {
        ++out.instances;

        bool hypothesis = true;
        for (const auto& sub : info.subsets) {
          int k = 0;
          const std::uint32_t key = induced_key(sub.vertex_mask, k);
          if (memo.value(k, key) < sub.required) {
            hypothesis = false;
            break;
          }
        }

        // Independent transversals as vertex bitmasks, in odometer order.
        std::uint32_t configs[768];
        int config_count = 0;
        const int cls = static_cast<int>(info.blocks.size());
        int pick[6] = {0, 0, 0, 0, 0, 0};
        bool overflow = false;
        while (!overflow) {
          std::uint32_t cm = 0;
          bool independent = true;
          for (int c = 0; c < cls && independent; ++c) {
            const int v = info.blocks[static_cast<std::size_t>(c)]
                                     [static_cast<std::size_t>(pick[c])];
            if (adj[v] & cm) {
              independent = false;
            } else {
              cm |= 1u << v;
            }
          }
          if (independent) configs[config_count++] = cm;
          int c = cls;
          while (true) {
            --c;
            if (c < 0) {
              overflow = true;
              break;
            }
            if (++pick[c] < static_cast<int>(info.blocks[static_cast<std::size_t>(c)].size())) {
              break;
            }
            pick[c] = 0;
          }
        }

        // Connectivity under: union has one extra vertex and is independent.
        bool connected = false;
        long component_count = 0;
        if (config_count > 0) {
          int comp[768];
          for (int i = 0; i < config_count; ++i) comp[i] = -1;
          for (int s = 0; s < config_count; ++s) {
            if (comp[s] >= 0) continue;
            ++component_count;
            int stack[768];
            int top = 0;
            stack[top++] = s;
            comp[s] = s;
            while (top > 0) {
              const int u = stack[--top];
              for (int t = 0; t < config_count; ++t) {
                if (comp[t] >= 0) continue;
                const std::uint32_t un = configs[u] | configs[t];
                if (__builtin_popcount(un) != cls + 1) continue;
                bool ind = true;
                std::uint32_t rest = un;
                while (rest && ind) {
                  const int v = __builtin_ctz(rest);
                  rest &= rest - 1;
                  if (adj[v] & un) ind = false;
                }
                if (!ind) continue;
                comp[t] = s;
                stack[top++] = t;
              }
            }
          }
          connected = component_count == 1;
        }

        // Materialize the instance only when something needs the objects.
        auto materialize = [&]() -> graphs::GraphPartitionInstance {
          std::vector<int> verts;
          for (int i = 0; i < n; ++i) verts.push_back(i);
          std::vector<std::pair<int, int>> edges;
          for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (gmask >> b & 1) edges.push_back(pairs[b]);
          }
          return {graphs::Graph::from_edges(std::move(verts), std::move(edges)),
                  complex::VertexPartition::from_classes(info.blocks)};
        };

        if (hypothesis && !connected) {
          ++out.counterexamples;
          const auto gp = materialize();
          hallcheck::Instance inst;
          inst.cpx = graphs::independence_complex(gp.g);
          inst.classes = gp.v;
          throw hallcheck::CounterexampleFound("reconfig-hall",
                                               hallcheck::dump_instance(inst));
        }
        if (hypothesis) {
          ++out.confirmed;
        } else if (connected) {
          ++out.vacuous;
        } else {
          ++out.tight_negative;
          if (component_count >= 2 &&
              static_cast<long>(out.disconnected.size()) < opt.collect_disconnected_limit) {
            out.disconnected.push_back(materialize());
          }
        }

        if (opt.cross_validate_stride > 0 &&
            out.instances % opt.cross_validate_stride == 0) {
          const auto gp = materialize();
          hallcheck::Instance inst;
          inst.cpx = graphs::independence_complex(gp.g);
          inst.classes = gp.v;
          try {
            const auto verdict = hallcheck::verify_instance(inst, "reconfig-hall");
            if (verdict.hypothesis != hypothesis || verdict.conclusion != connected) {
              throw std::logic_error("sweep_reconfig_hall: fast path disagrees with checker");
            }
          } catch (const hallcheck::CounterexampleFound&) {
            throw std::logic_error("sweep_reconfig_hall: fast path missed a counterexample");
          }
          ++out.cross_validated;
        }
      }
    }
  }

  out.eta_memo_entries = memo.size();
  return out;
}

}  // namespace topohall::sweep

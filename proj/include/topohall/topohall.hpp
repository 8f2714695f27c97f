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
 * Umbrella header pulling in the whole library: exact rational linear
 * algebra, simplicial complexes and posets, rational homology and eta,
 * matroids, graphs and hypergraphs, reconfiguration graphs, hypothesis
 * checkers with brute-force oracles, convex position statements, prism
 * path-following, exhaustive sweeps, JSON payloads, and the CLI driver.
 */

#include "topohall/cli.hpp"
#include "topohall/complex.hpp"
#include "topohall/geometry.hpp"
#include "topohall/graphs.hpp"
#include "topohall/hallcheck.hpp"
#include "topohall/homology.hpp"
#include "topohall/jsonio.hpp"
#include "topohall/lp.hpp"
#include "topohall/matroid.hpp"
#include "topohall/poset.hpp"
#include "topohall/rational.hpp"
#include "topohall/rational_matrix.hpp"
#include "topohall/reconfig.hpp"
#include "topohall/sperner.hpp"
#include "topohall/sweep.hpp"

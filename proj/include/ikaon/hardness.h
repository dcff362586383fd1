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

// Max k-vertex cover on graphs of maximum degree 3, encoded as an
// incremental knapsack instance whose aggregation function counts covered
// edges. Marginals of that function lie in {0, 1, 2, 3} rather than
// {0, p_i}, which is what takes it outside the all-or-nothing class.

#ifndef IKAON_HARDNESS_H_
#define IKAON_HARDNESS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ikaon/instance.h"
#include "ikaon/rng.h"

namespace ikaon {

struct SubcubicGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

std::vector<int> Degrees(const SubcubicGraph& graph);

// Throws Error(kNotSubcubic) on a degree above 3, a self-loop, a parallel
// edge or an endpoint out of range.
void ValidateSubcubic(const SubcubicGraph& graph);

// Edges with at least one endpoint in `vertices`.
int CountCovered(const SubcubicGraph& graph, std::span<const int> vertices);

struct VcReductionInstance {
  SubcubicGraph graph;
  Instance instance;
  std::vector<int> item_vertex;  // item i stands for vertex item_vertex[i]
  int k = 0;
};

// One unit-weight, unit-profit item per vertex, W_t = k and delta_t = 1 for
// every period, coverage oracle. `horizon` defaults to the single-period
// construction. Throws Error(kNotSubcubic) or Error(kBadK) unless
// 1 <= k <= num_vertices.
VcReductionInstance BuildReduction(const SubcubicGraph& graph, int k,
                                   int horizon = 1);

struct CoverResult {
  std::vector<int> vertices;
  int edges_covered = 0;
};

// The vertices of the final knapsack contents (S_1 when T = 1). Throws
// Error(kInfeasibleChain) if the chain does not fit the reduction instance.
CoverResult ExtractCover(const VcReductionInstance& reduction, const Chain& chain);

// Random simple graph with all degrees <= 3: vertex pairs are visited in a
// seeded random order and each is added with probability `edge_probability`
// when both endpoints still have spare degree.
SubcubicGraph GenerateSubcubic(int num_vertices, double edge_probability,
                               std::uint64_t seed = kDefaultSeed);

// Edge-list text: a header line "n m" followed by m lines "u v", 0-based.
SubcubicGraph ReadEdgeList(std::istream& in);
void WriteEdgeList(std::ostream& out, const SubcubicGraph& graph);

}  // namespace ikaon

#endif  // IKAON_HARDNESS_H_

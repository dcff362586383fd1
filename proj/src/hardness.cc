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

#include "ikaon/hardness.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "ikaon/error.h"

namespace ikaon {

std::vector<int> Degrees(const SubcubicGraph& graph) {
  std::vector<int> degree(static_cast<std::size_t>(std::max(graph.num_vertices, 0)), 0);
  for (const auto& [u, v] : graph.edges) {
    if (u >= 0 && u < graph.num_vertices) ++degree[u];
    if (v >= 0 && v < graph.num_vertices) ++degree[v];
  }
  return degree;
}

void ValidateSubcubic(const SubcubicGraph& graph) {
  if (graph.num_vertices < 0) {
    throw Error(ErrorCode::kNotSubcubic, "negative vertex count");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : graph.edges) {
    if (u < 0 || v < 0 || u >= graph.num_vertices || v >= graph.num_vertices) {
      throw Error(ErrorCode::kNotSubcubic,
                  "edge {" + std::to_string(u) + ", " + std::to_string(v) +
                      "} has an unknown endpoint");
    }
    if (u == v) {
      throw Error(ErrorCode::kNotSubcubic,
                  "self-loop at vertex " + std::to_string(u));
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorCode::kNotSubcubic,
                  "parallel edge {" + std::to_string(u) + ", " +
                      std::to_string(v) + "}");
    }
  }
  const std::vector<int> degree = Degrees(graph);
  for (int v = 0; v < graph.num_vertices; ++v) {
    if (degree[v] > 3) {
      throw Error(ErrorCode::kNotSubcubic,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(degree[v]));
    }
  }
}

int CountCovered(const SubcubicGraph& graph, std::span<const int> vertices) {
  int covered = 0;
  for (const auto& [u, v] : graph.edges) {
    const bool hit =
        std::find(vertices.begin(), vertices.end(), u) != vertices.end() ||
        std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    if (hit) ++covered;
  }
  return covered;
}

VcReductionInstance BuildReduction(const SubcubicGraph& graph, int k, int horizon) {
  ValidateSubcubic(graph);
  if (k < 1 || k > graph.num_vertices) {
    throw Error(ErrorCode::kBadK, "k = " + std::to_string(k) +
                                      " outside [1, " +
                                      std::to_string(graph.num_vertices) + "]");
  }
  if (horizon < 1) throw Error(ErrorCode::kEmptyHorizon, "horizon must be >= 1");
  const auto n = static_cast<std::size_t>(graph.num_vertices);
  std::vector<int> item_vertex(n);
  for (std::size_t i = 0; i < n; ++i) item_vertex[i] = static_cast<int>(i);
  auto oracle =
      std::make_shared<CoverageOracle>(graph.num_vertices, graph.edges, item_vertex);
  const auto periods = static_cast<std::size_t>(horizon);
  Instance instance(std::vector<Value>(n, 1), std::vector<Value>(n, 1),
                    std::vector<Value>(periods, k), std::vector<Value>(periods, 1),
                    std::move(oracle));
  return {graph, std::move(instance), std::move(item_vertex), k};
}

CoverResult ExtractCover(const VcReductionInstance& reduction, const Chain& chain) {
  if (chain.num_items() != reduction.instance.num_items() ||
      chain.horizon() != reduction.instance.horizon() ||
      !IsFeasible(reduction.instance, chain)) {
    throw Error(ErrorCode::kInfeasibleChain,
                "chain is not feasible for the reduction instance");
  }
  CoverResult result;
  for (ItemId i : chain.SetAt(chain.horizon())) {
    result.vertices.push_back(reduction.item_vertex[i]);
  }
  result.edges_covered = CountCovered(reduction.graph, result.vertices);
  return result;
}

SubcubicGraph GenerateSubcubic(int num_vertices, double edge_probability,
                               std::uint64_t seed) {
  SubcubicGraph graph{std::max(num_vertices, 0), {}};
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < graph.num_vertices; ++u) {
    for (int v = u + 1; v < graph.num_vertices; ++v) pairs.emplace_back(u, v);
  }
  Rng rng(seed);
  rng.Shuffle(pairs);
  std::vector<int> degree(static_cast<std::size_t>(graph.num_vertices), 0);
  for (const auto& [u, v] : pairs) {
    const bool take = rng.UnitDouble() < edge_probability;
    if (!take || degree[u] >= 3 || degree[v] >= 3) continue;
    ++degree[u];
    ++degree[v];
    graph.edges.emplace_back(u, v);
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

SubcubicGraph ReadEdgeList(std::istream& in) {
  SubcubicGraph graph;
  long long m = 0;
  if (!(in >> graph.num_vertices >> m) || graph.num_vertices < 0 || m < 0) {
    throw Error(ErrorCode::kParseError, "edge list needs an 'n m' header");
  }
  for (long long e = 0; e < m; ++e) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::kParseError,
                  "edge list ended after " + std::to_string(e) + " of " +
                      std::to_string(m) + " edges");
    }
    graph.edges.emplace_back(u, v);
  }
  return graph;
}

void WriteEdgeList(std::ostream& out, const SubcubicGraph& graph) {
  out << graph.num_vertices << ' ' << graph.edges.size() << '\n';
  for (const auto& [u, v] : graph.edges) out << u << ' ' << v << '\n';
}

}  // namespace ikaon

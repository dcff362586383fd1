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

#include "ikaon/generators.h"

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "ikaon/error.h"

namespace ikaon {
namespace {

constexpr Family kAllFamilies[] = {Family::kModular, Family::kUniformClasses,
                                   Family::kPartitionClasses,
                                   Family::kGraphicClasses, Family::kVcReduction};

void CheckParams(const GeneratorParams& p) {
  if (p.num_items < 0 || p.horizon < 1 || p.max_weight < 1 || p.max_profit < 1 ||
      p.max_delta < 0 || p.num_classes < 1) {
    throw Error(ErrorCode::kInvalidInstance, "generator parameters out of range");
  }
}

std::vector<Value> RandomWeights(int n, Value max_weight, Rng& rng) {
  std::vector<Value> weights(static_cast<std::size_t>(n));
  for (auto& w : weights) w = rng.Uniform(1, max_weight);
  return weights;
}

// Sorted draws from [0, total], so late periods can usually hold more.
std::vector<Value> RandomCapacities(int horizon, Value total, Rng& rng) {
  std::vector<Value> caps(static_cast<std::size_t>(horizon));
  for (auto& c : caps) c = rng.Uniform(0, total);
  std::sort(caps.begin(), caps.end());
  return caps;
}

std::vector<Value> RandomDeltas(int horizon, Value max_delta, Rng& rng) {
  std::vector<Value> deltas(static_cast<std::size_t>(horizon));
  for (auto& d : deltas) d = rng.Uniform(0, max_delta);
  return deltas;
}

Value Total(const std::vector<Value>& values) {
  Value total = 0;
  for (Value v : values) total += v;
  return total;
}

// `count` distinct profits from [1, max_profit], ascending. count is clamped
// to max_profit.
std::vector<Value> DistinctProfits(int count, Value max_profit, Rng& rng) {
  std::vector<Value> pool;
  for (Value p = 1; p <= max_profit; ++p) pool.push_back(p);
  rng.Shuffle(pool);
  pool.resize(std::min<std::size_t>(pool.size(), static_cast<std::size_t>(count)));
  std::sort(pool.begin(), pool.end());
  return pool;
}

Instance ClassesInstance(MatroidSpec::Kind kind, const GeneratorParams& p, Rng& rng) {
  const int n = p.num_items;
  std::vector<Value> weights = RandomWeights(n, p.max_weight, rng);
  const std::vector<Value> class_profit =
      DistinctProfits(p.num_classes, p.max_profit, rng);
  const int num_classes = static_cast<int>(class_profit.size());

  std::vector<ItemSet> members(static_cast<std::size_t>(num_classes));
  std::vector<Value> profits(static_cast<std::size_t>(n));
  for (ItemId i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(rng.Uniform(0, num_classes - 1));
    members[c].push_back(i);
    profits[i] = class_profit[c];
  }
  std::vector<RankClass> classes;
  for (int c = 0; c < num_classes; ++c) {
    if (members[c].empty()) continue;
    classes.push_back({class_profit[c], RandomMatroid(kind, members[c], rng)});
  }
  auto oracle = std::make_shared<MatroidRankSumOracle>(n, std::move(classes));
  std::vector<Value> caps = RandomCapacities(p.horizon, Total(weights), rng);
  std::vector<Value> deltas = RandomDeltas(p.horizon, p.max_delta, rng);
  return Instance(std::move(weights), std::move(profits), std::move(caps),
                  std::move(deltas), std::move(oracle));
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kModular: return "modular";
    case Family::kUniformClasses: return "uniform-classes";
    case Family::kPartitionClasses: return "partition-classes";
    case Family::kGraphicClasses: return "graphic-classes";
    case Family::kVcReduction: return "vc-reduction";
  }
  return "modular";
}

Family ParseFamily(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (FamilyName(f) == name) return f;
  }
  throw Error(ErrorCode::kBadFamily,
              "unknown family '" + std::string(name) +
                  "' (expected modular, uniform-classes, partition-classes, "
                  "graphic-classes or vc-reduction)");
}

MatroidSpec RandomMatroid(MatroidSpec::Kind kind, const ItemSet& ground, Rng& rng) {
  const auto size = static_cast<std::int64_t>(ground.size());
  switch (kind) {
    case MatroidSpec::Kind::kUniform:
      return MatroidSpec::Uniform(ground, static_cast<int>(rng.Uniform(0, size)));
    case MatroidSpec::Kind::kPartition: {
      const auto num_groups = size == 0 ? 0 : rng.Uniform(1, size);
      std::vector<ItemSet> groups(static_cast<std::size_t>(num_groups));
      for (ItemId i : ground) {
        groups[static_cast<std::size_t>(rng.Uniform(0, num_groups - 1))].push_back(i);
      }
      std::erase_if(groups, [](const ItemSet& g) { return g.empty(); });
      std::vector<int> caps;
      for (const ItemSet& g : groups) {
        caps.push_back(static_cast<int>(rng.Uniform(0, static_cast<std::int64_t>(g.size()))));
      }
      return MatroidSpec::Partition(std::move(groups), std::move(caps));
    }
    case MatroidSpec::Kind::kGraphic: {
      const int vertices = static_cast<int>(rng.Uniform(1, size + 1));
      std::vector<std::pair<int, int>> edges;
      for (std::size_t k = 0; k < ground.size(); ++k) {
        edges.emplace_back(static_cast<int>(rng.Uniform(0, vertices - 1)),
                           static_cast<int>(rng.Uniform(0, vertices - 1)));
      }
      return MatroidSpec::Graphic(ground, vertices, std::move(edges));
    }
  }
  throw Error(ErrorCode::kInvalidInstance, "unknown matroid kind");
}

Instance GenerateInstance(Family family, const GeneratorParams& params) {
  CheckParams(params);
  Rng rng(params.seed);
  switch (family) {
    case Family::kModular: {
      std::vector<Value> weights = RandomWeights(params.num_items, params.max_weight, rng);
      std::vector<Value> profits(static_cast<std::size_t>(params.num_items));
      for (auto& p : profits) p = rng.Uniform(1, params.max_profit);
      auto oracle = std::make_shared<ModularOracle>(profits);
      std::vector<Value> caps = RandomCapacities(params.horizon, Total(weights), rng);
      std::vector<Value> deltas = RandomDeltas(params.horizon, params.max_delta, rng);
      return Instance(std::move(weights), std::move(profits), std::move(caps),
                      std::move(deltas), std::move(oracle));
    }
    case Family::kUniformClasses:
      return ClassesInstance(MatroidSpec::Kind::kUniform, params, rng);
    case Family::kPartitionClasses:
      return ClassesInstance(MatroidSpec::Kind::kPartition, params, rng);
    case Family::kGraphicClasses:
      return ClassesInstance(MatroidSpec::Kind::kGraphic, params, rng);
    case Family::kVcReduction: {
      const SubcubicGraph graph =
          params.graph ? *params.graph
                       : GenerateSubcubic(params.num_items, params.edge_probability,
                                          params.seed);
      const int k = params.k > 0 ? params.k : std::max(1, graph.num_vertices / 3);
      return BuildReduction(graph, k, params.horizon).instance;
    }
  }
  throw Error(ErrorCode::kBadFamily, "unknown family");
}

Instance GenerateMatroidRankInstance(const GeneratorParams& params) {
  CheckParams(params);
  Rng rng(params.seed);
  const int n = params.num_items;
  std::vector<Value> weights = RandomWeights(n, params.max_weight, rng);
  ItemSet ground(static_cast<std::size_t>(n));
  for (ItemId i = 0; i < n; ++i) ground[i] = i;
  const auto kind = static_cast<MatroidSpec::Kind>(rng.Uniform(0, 2));
  std::vector<RankClass> classes;
  if (n > 0) classes.push_back({1, RandomMatroid(kind, ground, rng)});
  auto oracle = std::make_shared<MatroidRankSumOracle>(n, std::move(classes));
  std::vector<Value> caps = RandomCapacities(params.horizon, Total(weights), rng);
  return Instance(std::move(weights), std::vector<Value>(ground.size(), 1),
                  std::move(caps),
                  std::vector<Value>(static_cast<std::size_t>(params.horizon), 1),
                  std::move(oracle));
}

}  // namespace ikaon

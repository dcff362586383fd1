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

// Seeded random instance families. The same parameters and seed always give
// the same instance.

#ifndef IKAON_GENERATORS_H_
#define IKAON_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "ikaon/hardness.h"
#include "ikaon/instance.h"
#include "ikaon/rng.h"

namespace ikaon {

enum class Family {
  kModular,
  kUniformClasses,
  kPartitionClasses,
  kGraphicClasses,
  kVcReduction,
};

std::string_view FamilyName(Family family);
// Throws Error(kBadFamily) for anything but the five names above.
Family ParseFamily(std::string_view name);

struct GeneratorParams {
  int num_items = 8;
  int horizon = 3;
  int num_classes = 2;  // profit classes for the *-classes families
  Value max_weight = 10;
  Value max_profit = 10;
  Value max_delta = 3;

  // vc-reduction: the given graph, or a random subcubic graph on num_items
  // vertices. k = 0 picks max(1, num_vertices / 3).
  std::optional<SubcubicGraph> graph;
  double edge_probability = 0.5;
  int k = 0;

  std::uint64_t seed = kDefaultSeed;
};

// Weights in [1, max_weight], non-decreasing capacities spread over
// [0, total weight], coefficients in [0, max_delta]. The *-classes families
// use a rank-sum oracle with one matroid of the named kind per class.
Instance GenerateInstance(Family family, const GeneratorParams& params);

// A single matroid rank function as gamma: every profit is 1 and every
// coefficient is 1. The matroid kind is drawn at random.
Instance GenerateMatroidRankInstance(const GeneratorParams& params);

// Random matroid of the given kind over `ground`. Uniform and partition caps
// may be 0; graphic matroids may contain loops and parallel edges.
MatroidSpec RandomMatroid(MatroidSpec::Kind kind, const ItemSet& ground, Rng& rng);

}  // namespace ikaon

#endif  // IKAON_GENERATORS_H_

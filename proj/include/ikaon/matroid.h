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

#ifndef IKAON_MATROID_H_
#define IKAON_MATROID_H_

#include <span>
#include <utility>
#include <vector>

#include "ikaon/types.h"

namespace ikaon {

// A concrete matroid over a subset of the item ids. Three families are
// supported: uniform (rank cap), partition (per-group caps) and graphic
// (items are the edges of a multigraph; loops and parallel edges allowed).
struct MatroidSpec {
  enum class Kind { kUniform, kPartition, kGraphic };

  Kind kind = Kind::kUniform;
  ItemSet ground;

  // kUniform
  int rank_cap = 0;

  // kPartition: groups partition `ground`.
  std::vector<ItemSet> groups;
  std::vector<int> caps;

  // kGraphic: edges[k] is the edge of item ground[k].
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  static MatroidSpec Uniform(ItemSet ground, int rank_cap);
  static MatroidSpec Partition(std::vector<ItemSet> groups,
                               std::vector<int> caps);
  // `items[k]` is carried by `edges[k]`; the pairs are re-sorted by item id.
  static MatroidSpec Graphic(const ItemSet& items, int num_vertices,
                             std::vector<std::pair<int, int>> edges);
};

// Throws Error(kInvalidInstance) when caps are negative, groups overlap or do
// not cover the ground set, or graphic edges do not biject to the ground.
void ValidateMatroidSpec(const MatroidSpec& spec);

// Rank of `set`, which must be normalized and contained in spec.ground
// (Error(kUnknownItemId) otherwise). Graphic rank is the size of a spanning
// forest, found with a union-find that is rebuilt on every call.
int MatroidRank(const MatroidSpec& spec, std::span<const ItemId> set);

}  // namespace ikaon

#endif  // IKAON_MATROID_H_

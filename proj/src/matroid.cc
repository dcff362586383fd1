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

#include "ikaon/matroid.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "ikaon/error.h"

namespace ikaon {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), rank_(parent_.size(), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when a and b were already connected.
  bool Merge(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

std::size_t PositionInGround(const MatroidSpec& spec, ItemId item) {
  auto it = std::lower_bound(spec.ground.begin(), spec.ground.end(), item);
  if (it == spec.ground.end() || *it != item) {
    throw Error(ErrorCode::kUnknownItemId,
                "item " + std::to_string(item) + " is not in the matroid ground set");
  }
  return static_cast<std::size_t>(it - spec.ground.begin());
}

}  // namespace

MatroidSpec MatroidSpec::Uniform(ItemSet ground, int rank_cap) {
  MatroidSpec spec;
  spec.kind = Kind::kUniform;
  Normalize(ground);
  spec.ground = std::move(ground);
  spec.rank_cap = rank_cap;
  return spec;
}

MatroidSpec MatroidSpec::Partition(std::vector<ItemSet> groups,
                                   std::vector<int> caps) {
  MatroidSpec spec;
  spec.kind = Kind::kPartition;
  for (auto& g : groups) {
    Normalize(g);
    spec.ground.insert(spec.ground.end(), g.begin(), g.end());
  }
  std::sort(spec.ground.begin(), spec.ground.end());
  spec.groups = std::move(groups);
  spec.caps = std::move(caps);
  return spec;
}

MatroidSpec MatroidSpec::Graphic(const ItemSet& items, int num_vertices,
                                 std::vector<std::pair<int, int>> edges) {
  if (items.size() != edges.size()) {
    throw Error(ErrorCode::kInvalidInstance,
                "graphic matroid needs exactly one edge per item");
  }
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return items[a] < items[b]; });
  MatroidSpec spec;
  spec.kind = Kind::kGraphic;
  spec.num_vertices = num_vertices;
  for (std::size_t k : order) {
    spec.ground.push_back(items[k]);
    spec.edges.push_back(edges[k]);
  }
  return spec;
}

void ValidateMatroidSpec(const MatroidSpec& spec) {
  if (!std::is_sorted(spec.ground.begin(), spec.ground.end()) ||
      std::adjacent_find(spec.ground.begin(), spec.ground.end()) !=
          spec.ground.end()) {
    throw Error(ErrorCode::kInvalidInstance,
                "matroid ground set has duplicate items");
  }
  switch (spec.kind) {
    case MatroidSpec::Kind::kUniform:
      if (spec.rank_cap < 0) {
        throw Error(ErrorCode::kInvalidInstance, "uniform rank cap is negative");
      }
      break;
    case MatroidSpec::Kind::kPartition: {
      if (spec.groups.size() != spec.caps.size()) {
        throw Error(ErrorCode::kInvalidInstance,
                    "partition matroid needs one cap per group");
      }
      for (int cap : spec.caps) {
        if (cap < 0) {
          throw Error(ErrorCode::kInvalidInstance, "partition cap is negative");
        }
      }
      std::size_t total = 0;
      for (const auto& g : spec.groups) total += g.size();
      if (total != spec.ground.size()) {
        throw Error(ErrorCode::kInvalidInstance, "partition groups overlap");
      }
      break;
    }
    case MatroidSpec::Kind::kGraphic:
      if (spec.edges.size() != spec.ground.size()) {
        throw Error(ErrorCode::kInvalidInstance,
                    "graphic matroid edges do not biject to its items");
      }
      for (const auto& [u, v] : spec.edges) {
        if (u < 0 || v < 0 || u >= spec.num_vertices ||
            v >= spec.num_vertices) {
          throw Error(ErrorCode::kInvalidInstance,
                      "graphic matroid edge endpoint out of range");
        }
      }
      break;
  }
}

int MatroidRank(const MatroidSpec& spec, std::span<const ItemId> set) {
  switch (spec.kind) {
    case MatroidSpec::Kind::kUniform: {
      for (ItemId i : set) PositionInGround(spec, i);
      return std::min(static_cast<int>(set.size()), spec.rank_cap);
    }
    case MatroidSpec::Kind::kPartition: {
      for (ItemId i : set) PositionInGround(spec, i);
      int rank = 0;
      for (std::size_t g = 0; g < spec.groups.size(); ++g) {
        const auto& group = spec.groups[g];
        int hits = 0;
        for (ItemId i : set) {
          if (std::binary_search(group.begin(), group.end(), i)) ++hits;
        }
        rank += std::min(hits, spec.caps[g]);
      }
      return rank;
    }
    case MatroidSpec::Kind::kGraphic: {
      UnionFind forest(spec.num_vertices);
      int rank = 0;
      for (ItemId i : set) {
        const auto& [u, v] = spec.edges[PositionInGround(spec, i)];
        if (forest.Merge(u, v)) ++rank;
      }
      return rank;
    }
  }
  return 0;
}

}  // namespace ikaon

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

#include "ikaon/properties.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

namespace ikaon {
namespace {

// gamma over every subset of a small ground set, indexed by bitmask.
std::vector<Value> ValueTable(const AggregationOracle& oracle,
                              std::span<const ItemId> ground) {
  const std::uint64_t count = std::uint64_t{1} << ground.size();
  std::vector<Value> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    table[mask] = oracle.Evaluate(SubsetFromMask(ground, mask));
  }
  return table;
}

ItemSet SortedGround(std::span<const ItemId> ground) {
  ItemSet g(ground.begin(), ground.end());
  Normalize(g);
  return g;
}

ItemSet RandomSubset(Rng& rng, std::span<const ItemId> ground) {
  ItemSet s;
  for (ItemId i : ground) {
    if (rng.Bernoulli(1, 2)) s.push_back(i);
  }
  return s;
}

// Visits (S, i) pairs with i outside S; stops when `visit` returns false.
void ForEachMarginal(
    const AggregationOracle& oracle, std::span<const ItemId> ground_in,
    std::size_t sample_budget, std::uint64_t seed,
    const std::function<bool(const ItemSet&, ItemId, Value)>& visit) {
  const ItemSet ground = SortedGround(ground_in);
  if (ground.size() <= kAonExhaustiveLimit) {
    const std::vector<Value> table = ValueTable(oracle, ground);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      for (std::size_t b = 0; b < ground.size(); ++b) {
        if (mask >> b & 1U) continue;
        const Value marginal = table[mask | (std::uint64_t{1} << b)] - table[mask];
        if (!visit(SubsetFromMask(ground, mask), ground[b], marginal)) return;
      }
    }
    return;
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < sample_budget; ++k) {
    ItemSet s = RandomSubset(rng, ground);
    ItemSet outside = Difference(ground, s);
    if (outside.empty()) continue;
    const ItemId i = outside[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(outside.size()) - 1))];
    const Value marginal = oracle.Evaluate(With(s, i)) - oracle.Evaluate(s);
    if (!visit(s, i, marginal)) return;
  }
}

}  // namespace

std::optional<AonViolation> CheckAonProperty(const AggregationOracle& oracle,
                                             std::span<const Value> profits,
                                             std::span<const ItemId> ground,
                                             std::size_t sample_budget,
                                             std::uint64_t seed) {
  std::optional<AonViolation> found;
  ForEachMarginal(oracle, ground, sample_budget, seed,
                  [&](const ItemSet& s, ItemId i, Value marginal) {
                    if (marginal == 0 || marginal == profits[i]) return true;
                    found = AonViolation{s, i, marginal};
                    return false;
                  });
  return found;
}

MarginalRange ObserveMarginals(const AggregationOracle& oracle,
                               std::span<const ItemId> ground,
                               std::size_t sample_budget, std::uint64_t seed) {
  MarginalRange range{std::numeric_limits<Value>::max(),
                      std::numeric_limits<Value>::min()};
  ForEachMarginal(oracle, ground, sample_budget, seed,
                  [&](const ItemSet&, ItemId, Value marginal) {
                    range.min = std::min(range.min, marginal);
                    range.max = std::max(range.max, marginal);
                    return true;
                  });
  if (range.min > range.max) range = {0, 0};
  return range;
}

std::optional<SubmodularityViolation> CheckSubmodularity(
    const AggregationOracle& oracle, std::span<const ItemId> ground_in,
    std::size_t sample_budget, std::uint64_t seed) {
  using Kind = SubmodularityViolation::Kind;
  const ItemSet ground = SortedGround(ground_in);
  if (oracle.Evaluate(ItemSet{}) != 0) {
    return SubmodularityViolation{Kind::kNonzeroEmpty, {}, {}, -1};
  }

  if (ground.size() <= kSubmodularityExhaustiveLimit) {
    const std::vector<Value> table = ValueTable(oracle, ground);
    const std::uint64_t full = table.size() - 1;
    for (std::uint64_t big = 0; big <= full; ++big) {
      // Enumerate every submask of `big`, including 0.
      for (std::uint64_t small = big;; small = (small - 1) & big) {
        if (table[small] > table[big]) {
          return SubmodularityViolation{Kind::kNotMonotone,
                                        SubsetFromMask(ground, small),
                                        SubsetFromMask(ground, big), -1};
        }
        for (std::size_t b = 0; b < ground.size(); ++b) {
          const std::uint64_t bit = std::uint64_t{1} << b;
          if (big & bit) continue;
          if (table[small | bit] - table[small] < table[big | bit] - table[big]) {
            return SubmodularityViolation{
                Kind::kNotSubmodular, SubsetFromMask(ground, small),
                SubsetFromMask(ground, big), ground[b]};
          }
        }
        if (small == 0) break;
      }
    }
    return std::nullopt;
  }

  Rng rng(seed);
  for (std::size_t k = 0; k < sample_budget; ++k) {
    ItemSet larger = RandomSubset(rng, ground);
    ItemSet smaller = RandomSubset(rng, larger);
    const Value small_value = oracle.Evaluate(smaller);
    const Value large_value = oracle.Evaluate(larger);
    if (small_value > large_value) {
      return SubmodularityViolation{Kind::kNotMonotone, smaller, larger, -1};
    }
    ItemSet outside = Difference(ground, larger);
    if (outside.empty()) continue;
    const ItemId i = outside[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(outside.size()) - 1))];
    if (oracle.Evaluate(With(smaller, i)) - small_value <
        oracle.Evaluate(With(larger, i)) - large_value) {
      return SubmodularityViolation{Kind::kNotSubmodular, smaller, larger, i};
    }
  }
  return std::nullopt;
}

}  // namespace ikaon

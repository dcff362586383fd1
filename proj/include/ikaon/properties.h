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

// Black-box checkers for the properties an aggregation oracle is supposed to
// have. They run exhaustively on small ground sets and fall back to seeded
// sampling above fixed thresholds. Violations are returned, not thrown.

#ifndef IKAON_PROPERTIES_H_
#define IKAON_PROPERTIES_H_

#include <cstdint>
#include <optional>
#include <span>

#include "ikaon/oracle.h"
#include "ikaon/rng.h"
#include "ikaon/types.h"

namespace ikaon {

inline constexpr std::size_t kAonExhaustiveLimit = 12;
inline constexpr std::size_t kSubmodularityExhaustiveLimit = 10;

struct AonViolation {
  ItemSet set;
  ItemId item;
  Value marginal;
};

// Looks for (S, i), i not in S, with gamma(S + i) - gamma(S) not in {0, p_i}.
// Exhaustive when |ground| <= kAonExhaustiveLimit, scanning subsets in
// bitmask order and items in ground order; otherwise draws `sample_budget`
// random pairs. Returns the first violation found.
std::optional<AonViolation> CheckAonProperty(const AggregationOracle& oracle,
                                             std::span<const Value> profits,
                                             std::span<const ItemId> ground,
                                             std::size_t sample_budget,
                                             std::uint64_t seed = kDefaultSeed);

struct SubmodularityViolation {
  enum class Kind { kNonzeroEmpty, kNotMonotone, kNotSubmodular };
  Kind kind;
  ItemSet smaller;  // S
  ItemSet larger;   // T, a superset of S
  ItemId item;      // -1 unless kind == kNotSubmodular
};

// Checks gamma(empty) == 0, gamma(S) <= gamma(T) and
// gamma(S + i) - gamma(S) >= gamma(T + i) - gamma(T) for S subset of T,
// i outside T. Exhaustive when |ground| <= kSubmodularityExhaustiveLimit.
std::optional<SubmodularityViolation> CheckSubmodularity(
    const AggregationOracle& oracle, std::span<const ItemId> ground,
    std::size_t sample_budget, std::uint64_t seed = kDefaultSeed);

// Largest gamma(S + i) - gamma(S) over the same exhaustive/sampled pairs as
// CheckAonProperty, and the smallest one.
struct MarginalRange {
  Value min;
  Value max;
};
MarginalRange ObserveMarginals(const AggregationOracle& oracle,
                               std::span<const ItemId> ground,
                               std::size_t sample_budget,
                               std::uint64_t seed = kDefaultSeed);

}  // namespace ikaon

#endif  // IKAON_PROPERTIES_H_

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

// Independence with respect to an all-or-nothing oracle: S is independent
// when gamma(S) equals the sum of its profits. Within one profit class the
// independent sets form a matroid, which is what makes the weight-ordered
// greedy below return a minimum-weight maximal independent set.

#ifndef IKAON_INDEPENDENCE_H_
#define IKAON_INDEPENDENCE_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>

#include "ikaon/instance.h"
#include "ikaon/rng.h"
#include "ikaon/types.h"

namespace ikaon {

struct ItemSetHash {
  std::size_t operator()(const ItemSet& set) const noexcept;
};

// Memoizes independence verdicts. Once the memo holds `memo_capacity`
// entries new verdicts are computed but not stored; existing entries are
// never evicted or rewritten. Safe for concurrent use.
class IndependenceContext {
 public:
  static constexpr std::size_t kDefaultMemoCapacity = std::size_t{1} << 16;

  explicit IndependenceContext(const Instance& instance,
                               std::size_t memo_capacity = kDefaultMemoCapacity)
      : instance_(&instance), memo_capacity_(memo_capacity) {}

  IndependenceContext(const IndependenceContext&) = delete;
  IndependenceContext& operator=(const IndependenceContext&) = delete;

  // One oracle call on a memo miss. `set` must be normalized. Throws
  // Error(kOracleViolation) when gamma(S) exceeds p(S).
  bool IsIndependent(std::span<const ItemId> set);

  const Instance& instance() const { return *instance_; }
  std::size_t memo_size() const;
  // Oracle calls issued by this context.
  std::uint64_t oracle_calls() const {
    return oracle_calls_.load(std::memory_order_relaxed);
  }

 private:
  const Instance* instance_;
  std::size_t memo_capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<ItemSet, bool, ItemSetHash> memo_;
  std::atomic<std::uint64_t> oracle_calls_{0};
};

// Shrinks a dependent set to a cycle: a dependent set whose one-element
// deletions are all independent. Candidates are tried from the largest id
// down, so smaller ids survive. Throws Error(kNotDependent) if `set` is
// independent.
ItemSet FindCycle(IndependenceContext& ctx, std::span<const ItemId> set);

struct ClassBasis {
  int class_index = 0;
  ItemSet basis;
  Value weight = 0;
};

// Matroid greedy over `items` sorted by (weight, id): keep an item when the
// kept set stays independent. Exactly one independence test per item.
ClassBasis MinWeightBasis(IndependenceContext& ctx, std::span<const ItemId> items,
                          int class_index = 0);

struct ExchangeViolation {
  ItemSet smaller;  // S
  ItemSet larger;   // S', with |S| < |S'|
  ItemSet within;   // A = S + S'
};

inline constexpr std::size_t kMatroidExhaustiveLimit = 8;

// Exchange axiom on the independent subsets of `items`: for independent
// S, S' with |S| < |S'| some j in S' - S keeps S + j independent.
// Exhaustive when |items| <= kMatroidExhaustiveLimit, else `budget` samples.
std::optional<ExchangeViolation> CheckMatroidExchange(
    IndependenceContext& ctx, std::span<const ItemId> items, std::size_t budget,
    std::uint64_t seed = kDefaultSeed);

struct CardinalityViolation {
  ItemSet within;  // A
  ItemSet first;   // two maximal independent subsets of A
  ItemSet second;  // with different sizes
};

// All inclusion-maximal independent subsets of any A within `items` have the
// same size. Same exhaustive/sampled switch as CheckMatroidExchange.
std::optional<CardinalityViolation> CheckEqualMaximalCardinality(
    IndependenceContext& ctx, std::span<const ItemId> items, std::size_t budget,
    std::uint64_t seed = kDefaultSeed);

// Replaces an independent chain living inside one profit class by the chain
// whose t-th set is the |S_t| lightest basis items (ties to the smaller id).
// Throws Error(kChainNotIndependent) if S_T is not an independent subset of
// `class_items` or is larger than the basis.
Chain RestrictChainToBasis(IndependenceContext& ctx,
                           std::span<const ItemId> class_items,
                           const ClassBasis& basis, const Chain& chain);

}  // namespace ikaon

#endif  // IKAON_INDEPENDENCE_H_

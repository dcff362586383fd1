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

#include "ikaon/independence.h"

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>
#include <vector>

#include "ikaon/error.h"

namespace ikaon {
namespace {

ItemSet SortedCopy(std::span<const ItemId> items) {
  ItemSet out(items.begin(), items.end());
  Normalize(out);
  return out;
}

// (weight, id) order used by the greedy and by the chain restriction.
void SortByWeight(const Instance& instance, ItemSet& items) {
  std::sort(items.begin(), items.end(), [&](ItemId a, ItemId b) {
    const Value wa = instance.weights()[a];
    const Value wb = instance.weights()[b];
    return wa != wb ? wa < wb : a < b;
  });
}

// Independence of every subset of `ground`, by bitmask.
std::vector<char> IndependenceTable(IndependenceContext& ctx, const ItemSet& ground) {
  std::vector<char> table(std::size_t{1} << ground.size());
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = ctx.IsIndependent(SubsetFromMask(ground, mask)) ? 1 : 0;
  }
  return table;
}

// A maximal independent subset of `within`, growing `start` in random order.
ItemSet RandomMaximal(IndependenceContext& ctx, Rng& rng, const ItemSet& within,
                      ItemSet start = {}) {
  ItemSet order = within;
  rng.Shuffle(order);
  for (ItemId i : order) {
    if (std::binary_search(start.begin(), start.end(), i)) continue;
    ItemSet grown = With(start, i);
    if (ctx.IsIndependent(grown)) start = std::move(grown);
  }
  return start;
}

ItemSet RandomSubsetOf(Rng& rng, const ItemSet& ground) {
  ItemSet s;
  for (ItemId i : ground) {
    if (rng.Bernoulli(1, 2)) s.push_back(i);
  }
  return s;
}

}  // namespace

std::size_t ItemSetHash::operator()(const ItemSet& set) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (ItemId i : set) {
    h ^= static_cast<std::size_t>(i) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

bool IndependenceContext::IsIndependent(std::span<const ItemId> set) {
  ItemSet key(set.begin(), set.end());
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const Value gamma = instance_->oracle().Evaluate(key);
  oracle_calls_.fetch_add(1, std::memory_order_relaxed);
  const Value profit = SumOver(instance_->profits(), key);
  if (gamma > profit) {
    throw Error(ErrorCode::kOracleViolation,
                "gamma(S) = " + std::to_string(gamma) + " exceeds p(S) = " +
                    std::to_string(profit));
  }
  const bool independent = gamma == profit;
  std::unique_lock lock(mutex_);
  if (memo_.size() < memo_capacity_) memo_.emplace(std::move(key), independent);
  return independent;
}

std::size_t IndependenceContext::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

ItemSet FindCycle(IndependenceContext& ctx, std::span<const ItemId> set) {
  ItemSet cycle = SortedCopy(set);
  if (ctx.IsIndependent(cycle)) {
    throw Error(ErrorCode::kNotDependent, "set is independent");
  }
  // One descending pass suffices under the oracle contract; the outer loop
  // only matters for oracles that break monotonicity of independence.
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t k = cycle.size(); k-- > 0;) {
      ItemSet smaller = Without(cycle, cycle[k]);
      if (!ctx.IsIndependent(smaller)) {
        cycle = std::move(smaller);
        removed = true;
      }
    }
  }
  return cycle;
}

ClassBasis MinWeightBasis(IndependenceContext& ctx, std::span<const ItemId> items,
                          int class_index) {
  const Instance& instance = ctx.instance();
  ItemSet order = SortedCopy(items);
  SortByWeight(instance, order);
  ClassBasis result;
  result.class_index = class_index;
  for (ItemId i : order) {
    ItemSet grown = With(result.basis, i);
    if (ctx.IsIndependent(grown)) {
      result.basis = std::move(grown);
      result.weight += instance.weights()[i];
    }
  }
  return result;
}

std::optional<ExchangeViolation> CheckMatroidExchange(
    IndependenceContext& ctx, std::span<const ItemId> items_in,
    std::size_t budget, std::uint64_t seed) {
  const ItemSet items = SortedCopy(items_in);
  auto exchange_holds = [&](const ItemSet& s, const ItemSet& s_prime) {
    for (ItemId j : Difference(s_prime, s)) {
      if (ctx.IsIndependent(With(s, j))) return true;
    }
    return false;
  };

  if (items.size() <= kMatroidExhaustiveLimit) {
    const std::vector<char> independent = IndependenceTable(ctx, items);
    for (std::uint64_t a = 0; a < independent.size(); ++a) {
      if (!independent[a]) continue;
      for (std::uint64_t b = 0; b < independent.size(); ++b) {
        if (!independent[b] ||
            std::popcount(a) >= std::popcount(b)) {
          continue;
        }
        bool ok = false;
        for (std::size_t k = 0; k < items.size() && !ok; ++k) {
          const std::uint64_t bit = std::uint64_t{1} << k;
          ok = (b & bit) && !(a & bit) && independent[a | bit];
        }
        if (!ok) {
          return ExchangeViolation{SubsetFromMask(items, a),
                                   SubsetFromMask(items, b),
                                   SubsetFromMask(items, a | b)};
        }
      }
    }
    return std::nullopt;
  }

  Rng rng(seed);
  for (std::size_t k = 0; k < budget; ++k) {
    const ItemSet within = RandomSubsetOf(rng, items);
    ItemSet larger = RandomMaximal(ctx, rng, within);
    ItemSet other = RandomMaximal(ctx, rng, within);
    // Subsets of an independent set stay independent; truncating `other`
    // gives a pair with |S| < |S'|.
    if (larger.size() < other.size()) std::swap(larger, other);
    if (larger.empty()) continue;
    const auto keep = static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(larger.size()) - 1));
    rng.Shuffle(other);
    if (other.size() > keep) other.resize(keep);
    Normalize(other);
    if (other.size() >= larger.size()) continue;
    if (!exchange_holds(other, larger)) {
      return ExchangeViolation{other, larger, Union(other, larger)};
    }
  }
  return std::nullopt;
}

std::optional<CardinalityViolation> CheckEqualMaximalCardinality(
    IndependenceContext& ctx, std::span<const ItemId> items_in,
    std::size_t budget, std::uint64_t seed) {
  const ItemSet items = SortedCopy(items_in);
  if (items.size() <= kMatroidExhaustiveLimit) {
    const std::vector<char> independent = IndependenceTable(ctx, items);
    for (std::uint64_t a = 0; a < independent.size(); ++a) {
      std::optional<std::uint64_t> first;
      // Submasks of `a` that are independent and maximal within `a`.
      for (std::uint64_t s = a;; s = (s - 1) & a) {
        if (independent[s]) {
          bool maximal = true;
          for (std::size_t k = 0; k < items.size() && maximal; ++k) {
            const std::uint64_t bit = std::uint64_t{1} << k;
            if ((a & bit) && !(s & bit) && independent[s | bit]) maximal = false;
          }
          if (maximal) {
            if (!first) {
              first = s;
            } else if (std::popcount(*first) != std::popcount(s)) {
              return CardinalityViolation{SubsetFromMask(items, a),
                                          SubsetFromMask(items, *first),
                                          SubsetFromMask(items, s)};
            }
          }
        }
        if (s == 0) break;
      }
    }
    return std::nullopt;
  }

  Rng rng(seed);
  for (std::size_t k = 0; k < budget; ++k) {
    const ItemSet within = RandomSubsetOf(rng, items);
    ItemSet first = RandomMaximal(ctx, rng, within);
    ItemSet second = RandomMaximal(ctx, rng, within);
    if (first.size() != second.size()) {
      return CardinalityViolation{within, first, second};
    }
  }
  return std::nullopt;
}

Chain RestrictChainToBasis(IndependenceContext& ctx,
                           std::span<const ItemId> class_items_in,
                           const ClassBasis& basis, const Chain& chain) {
  const Instance& instance = ctx.instance();
  const ItemSet class_items = SortedCopy(class_items_in);
  const ItemSet last = chain.SetAt(chain.horizon());
  if (!IsSubset(last, class_items)) {
    throw Error(ErrorCode::kChainNotIndependent,
                "chain leaves the profit class");
  }
  if (!ctx.IsIndependent(last) || last.size() > basis.basis.size()) {
    throw Error(ErrorCode::kChainNotIndependent,
                "final set of the chain is dependent");
  }
  ItemSet lightest = basis.basis;
  SortByWeight(instance, lightest);
  std::vector<int> times(static_cast<std::size_t>(chain.num_items()), Chain::kNever);
  std::size_t filled = 0;
  for (int t = 1; t <= chain.horizon(); ++t) {
    const std::size_t target = chain.SetAt(t).size();
    for (; filled < target; ++filled) times[lightest[filled]] = t;
  }
  return Chain(std::move(times), chain.horizon());
}

}  // namespace ikaon

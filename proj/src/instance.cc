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

#include "ikaon/instance.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace ikaon {
namespace {

constexpr __int128 kValueMax = std::numeric_limits<Value>::max();

void CheckChainShape(const Instance& instance, const Chain& chain) {
  if (chain.num_items() != instance.num_items() ||
      chain.horizon() != instance.horizon()) {
    throw Error(ErrorCode::kUnknownItemId,
                "chain over " + std::to_string(chain.num_items()) + " items and " +
                    std::to_string(chain.horizon()) +
                    " periods does not match the instance");
  }
}

}  // namespace

Instance::Instance(std::vector<Value> weights, std::vector<Value> profits,
                   std::vector<Value> capacities, std::vector<Value> deltas,
                   OraclePtr oracle)
    : weights_(std::move(weights)),
      profits_(std::move(profits)),
      capacities_(std::move(capacities)),
      deltas_(std::move(deltas)),
      oracle_(std::move(oracle)) {}

std::string ValidationReport::Summary() const {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += std::string(ErrorCodeName(issue.code));
    if (issue.index >= 0) out += "[" + std::to_string(issue.index) + "]";
    out += ": " + issue.message;
  }
  return out;
}

ValidationReport ValidateInstance(const Instance& instance) {
  ValidationReport report;
  auto add = [&](ErrorCode code, int index, std::string message) {
    report.issues.push_back({code, index, std::move(message)});
  };

  const int n = static_cast<int>(instance.weights().size());
  const int horizon = instance.horizon();
  if (horizon < 1) add(ErrorCode::kEmptyHorizon, -1, "horizon must be >= 1");
  if (static_cast<int>(instance.profits().size()) != n) {
    add(ErrorCode::kInvalidInstance, -1, "weights and profits differ in length");
  }
  if (static_cast<int>(instance.deltas().size()) != horizon) {
    add(ErrorCode::kInvalidInstance, -1,
        "capacities and coefficients differ in length");
  }
  for (int i = 0; i < n; ++i) {
    if (instance.weights()[i] < 0) {
      add(ErrorCode::kInvalidInstance, i, "weight is negative");
    }
  }
  for (std::size_t i = 0; i < instance.profits().size(); ++i) {
    if (instance.profits()[i] < 1) {
      add(ErrorCode::kNonPositiveProfit, static_cast<int>(i),
          "profit must be >= 1");
    }
  }
  for (int t = 1; t <= horizon; ++t) {
    if (instance.capacity(t) < 0) {
      add(ErrorCode::kInvalidInstance, t, "capacity is negative");
    }
    if (t > 1 && instance.capacity(t) < instance.capacity(t - 1)) {
      add(ErrorCode::kNonMonotoneCapacities, t,
          "capacity decreases from the previous period");
    }
  }
  for (std::size_t t = 0; t < instance.deltas().size(); ++t) {
    if (instance.deltas()[t] < 0) {
      add(ErrorCode::kInvalidInstance, static_cast<int>(t) + 1,
          "coefficient is negative");
    }
  }
  if (instance.oracle_ptr() == nullptr) {
    add(ErrorCode::kInvalidInstance, -1, "no aggregation oracle attached");
    return report;
  }
  if (instance.oracle().ground_size() != n) {
    add(ErrorCode::kInvalidInstance, -1,
        "oracle ground size differs from the item count");
  }
  if (!report.ok()) return report;

  __int128 total_weight = 0;
  __int128 total_profit = 0;
  for (int i = 0; i < n; ++i) {
    total_weight += instance.weights()[i];
    total_profit += instance.profits()[i];
  }
  __int128 delta_sum = 0;
  for (Value d : instance.deltas()) delta_sum += d;
  const __int128 gamma_bound =
      std::max<__int128>(total_profit, instance.oracle().UpperBound());
  if (total_weight > kValueMax || delta_sum > kValueMax ||
      (delta_sum > 0 && gamma_bound > kValueMax / delta_sum)) {
    add(ErrorCode::kInvalidInstance, -1,
        "objective or weight totals overflow 64-bit integers");
  }
  return report;
}

void RequireValid(const Instance& instance) {
  ValidationReport report = ValidateInstance(instance);
  if (!report.ok()) throw Error(report.issues.front().code, report.Summary());
}

// ---------------------------------------------------------------------------

Chain::Chain(int num_items, int horizon)
    : horizon_(horizon), times_(static_cast<std::size_t>(num_items), kNever) {}

Chain::Chain(std::vector<int> insertion_times, int horizon)
    : horizon_(horizon), times_(std::move(insertion_times)) {
  for (int t : times_) {
    if (t < 0 || t > horizon_) {
      throw Error(ErrorCode::kInvalidInstance,
                  "insertion time " + std::to_string(t) + " outside [1, " +
                      std::to_string(horizon_) + "]");
    }
  }
}

Chain Chain::FromSets(const std::vector<ItemSet>& sets, int num_items) {
  std::vector<int> times(static_cast<std::size_t>(num_items), kNever);
  const int horizon = static_cast<int>(sets.size());
  for (int t = 1; t <= horizon; ++t) {
    for (ItemId i : sets[t - 1]) {
      if (i < 0 || i >= num_items) {
        throw Error(ErrorCode::kUnknownItemId,
                    "item " + std::to_string(i) + " in S_" + std::to_string(t));
      }
      if (times[i] == kNever) times[i] = t;
    }
  }
  Chain chain(std::move(times), horizon);
  std::vector<ItemSet> normalized = sets;
  for (auto& s : normalized) Normalize(s);
  if (chain.Sets() != normalized) {
    throw Error(ErrorCode::kInfeasibleChain, "sets are not nested");
  }
  return chain;
}

ItemSet Chain::SetAt(int t) const {
  ItemSet out;
  for (int i = 0; i < num_items(); ++i) {
    if (times_[i] != kNever && times_[i] <= t) out.push_back(i);
  }
  return out;
}

std::vector<ItemSet> Chain::Sets() const {
  std::vector<ItemSet> sets;
  sets.reserve(static_cast<std::size_t>(horizon_));
  for (int t = 1; t <= horizon_; ++t) sets.push_back(SetAt(t));
  return sets;
}

bool IsNested(const std::vector<ItemSet>& sets) {
  for (std::size_t t = 1; t < sets.size(); ++t) {
    ItemSet prev = sets[t - 1];
    ItemSet cur = sets[t];
    Normalize(prev);
    Normalize(cur);
    if (!IsSubset(prev, cur)) return false;
  }
  return true;
}

bool IsFeasible(const Instance& instance, const Chain& chain) {
  CheckChainShape(instance, chain);
  std::vector<Value> added(static_cast<std::size_t>(instance.horizon()) + 1, 0);
  for (int i = 0; i < chain.num_items(); ++i) {
    if (chain.inserted(i)) added[chain.insertion_time(i)] += instance.weights()[i];
  }
  Value load = 0;
  for (int t = 1; t <= instance.horizon(); ++t) {
    load += added[t];
    if (load > instance.capacity(t)) return false;
  }
  return true;
}

bool IsFeasible(const Instance& instance, const std::vector<ItemSet>& sets) {
  if (static_cast<int>(sets.size()) != instance.horizon()) return false;
  for (const auto& s : sets) {
    for (ItemId i : s) {
      if (i < 0 || i >= instance.num_items()) {
        throw Error(ErrorCode::kUnknownItemId,
                    "item " + std::to_string(i) + " not in the instance");
      }
    }
  }
  if (!IsNested(sets)) return false;
  return IsFeasible(instance, Chain::FromSets(sets, instance.num_items()));
}

Value ProfitPhi(const Instance& instance, const Chain& chain) {
  CheckChainShape(instance, chain);
  Value total = 0;
  ItemSet previous;
  Value previous_value = 0;
  for (int t = 1; t <= instance.horizon(); ++t) {
    ItemSet current = chain.SetAt(t);
    if (t == 1 || current != previous) {
      previous_value = instance.oracle().Evaluate(current);
      previous = std::move(current);
    }
    total += instance.delta(t) * previous_value;
  }
  return total;
}

Value ProfitPhiBar(std::span<const Value> profits, std::span<const Value> deltas,
                   const Chain& chain) {
  if (chain.num_items() != static_cast<int>(profits.size()) ||
      chain.horizon() != static_cast<int>(deltas.size())) {
    throw Error(ErrorCode::kUnknownItemId,
                "chain does not match the modular profit vector");
  }
  Value total = 0;
  for (int t = 1; t <= chain.horizon(); ++t) {
    Value set_profit = 0;
    for (ItemId i : chain.SetAt(t)) set_profit += profits[i];
    total += deltas[t - 1] * set_profit;
  }
  return total;
}

ProfitPartition ComputeProfitPartition(std::span<const Value> profits) {
  std::vector<ItemId> order(profits.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return profits[a] < profits[b];
  });
  ProfitPartition partition;
  for (ItemId i : order) {
    if (partition.classes.empty() ||
        partition.classes.back().profit != profits[i]) {
      partition.classes.push_back({profits[i], {}});
    }
    partition.classes.back().items.push_back(i);
  }
  return partition;
}

PreprocessResult PreprocessSingletons(const Instance& instance) {
  const int n = instance.num_items();
  ItemSet dropped;
  std::vector<ItemId> retained;
  for (ItemId i = 0; i < n; ++i) {
    const ItemId singleton[] = {i};
    const Value value = instance.oracle().Evaluate(singleton);
    if (value == instance.profits()[i]) {
      retained.push_back(i);
    } else if (value == 0) {
      dropped.push_back(i);
    } else {
      throw Error(ErrorCode::kOracleViolation,
                  "gamma({" + std::to_string(i) + "}) = " + std::to_string(value) +
                      " but the item's profit is " +
                      std::to_string(instance.profits()[i]));
    }
  }
  if (dropped.empty()) {
    return {instance, {}, std::move(retained)};
  }
  std::vector<Value> weights;
  std::vector<Value> profits;
  for (ItemId i : retained) {
    weights.push_back(instance.weights()[i]);
    profits.push_back(instance.profits()[i]);
  }
  auto oracle = std::make_shared<RestrictedOracle>(instance.oracle_ptr(), retained);
  Instance reduced(std::move(weights), std::move(profits), instance.capacities(),
                   instance.deltas(), std::move(oracle));
  return {std::move(reduced), std::move(dropped), std::move(retained)};
}

}  // namespace ikaon

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

// Exhaustive chain enumeration. This is the ground truth the other solvers
// are tested against, so it shares no search code with them: it walks the
// items in id order and keeps its own loads and per-period sets.

#include <string>
#include <unordered_map>
#include <vector>

#include "ikaon/error.h"
#include "ikaon/ik_solver.h"

namespace ikaon {
namespace {

void CheckBudget(int num_items, int horizon, const SolverLimits& limits) {
  if (AssignmentCount(num_items, horizon) > limits.max_states_brute) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(horizon + 1) + "^" + std::to_string(num_items) +
                    " assignments exceed the brute-force budget of " +
                    std::to_string(limits.max_states_brute));
  }
}

// Enumerates feasible insertion-time vectors in lexicographic order (times
// 1..T, then never) and hands each complete one to `score`.
class Enumerator {
 public:
  Enumerator(std::span<const Value> weights, std::span<const Value> capacities)
      : weights_(weights),
        capacities_(capacities),
        load_(capacities.size() + 1, 0),
        times_(weights.size(), Chain::kNever) {}

  template <typename Score>
  BruteForceResult Run(Score&& score) {
    BruteForceResult result;
    bool have_best = false;
    std::vector<int> best;
    Visit(0, [&] {
      ++result.leaves;
      const Value value = score(times_);
      if (!have_best || value > result.value) {
        have_best = true;
        result.value = value;
        best = times_;
      }
    });
    result.chain = Chain(best, static_cast<int>(capacities_.size()));
    return result;
  }

 private:
  template <typename Leaf>
  void Visit(std::size_t item, Leaf&& leaf) {
    if (item == weights_.size()) {
      leaf();
      return;
    }
    const int horizon = static_cast<int>(capacities_.size());
    for (int t = 1; t <= horizon; ++t) {
      bool fits = true;
      for (int s = t; s <= horizon && fits; ++s) {
        fits = load_[s] + weights_[item] <= capacities_[s - 1];
      }
      if (!fits) continue;
      for (int s = t; s <= horizon; ++s) load_[s] += weights_[item];
      times_[item] = t;
      Visit(item + 1, leaf);
      times_[item] = Chain::kNever;
      for (int s = t; s <= horizon; ++s) load_[s] -= weights_[item];
    }
    Visit(item + 1, leaf);
  }

  std::span<const Value> weights_;
  std::span<const Value> capacities_;
  std::vector<Value> load_;
  std::vector<int> times_;
};

}  // namespace

BruteForceResult BruteForceChains(const IkInstance& ik, const SolverLimits& limits) {
  ValidateIkInstance(ik);
  CheckBudget(ik.num_items(), ik.horizon(), limits);
  Enumerator enumerator(ik.weights, ik.capacities);
  return enumerator.Run([&](const std::vector<int>& times) {
    // Direct sum_t delta_t * p(S_t).
    Value total = 0;
    for (int t = 1; t <= ik.horizon(); ++t) {
      Value set_profit = 0;
      for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] != Chain::kNever && times[i] <= t) set_profit += ik.profits[i];
      }
      total += ik.deltas[t - 1] * set_profit;
    }
    return total;
  });
}

BruteForceResult BruteForceChains(const Instance& instance,
                                  const SolverLimits& limits) {
  RequireValid(instance);
  const int n = instance.num_items();
  CheckBudget(n, instance.horizon(), limits);
  if (n > 62) {
    throw Error(ErrorCode::kBudgetExceeded, "too many items for enumeration");
  }

  // gamma by bitmask, filled on first use.
  constexpr int kDenseTableLimit = 20;
  std::vector<Value> dense;
  std::vector<char> known;
  std::unordered_map<std::uint64_t, Value> sparse;
  if (n <= kDenseTableLimit) {
    dense.assign(std::size_t{1} << n, 0);
    known.assign(dense.size(), 0);
  }
  auto as_set = [n](std::uint64_t mask) {
    ItemSet s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.push_back(i);
    }
    return s;
  };
  auto gamma = [&](std::uint64_t mask) -> Value {
    if (n <= kDenseTableLimit) {
      if (!known[mask]) {
        dense[mask] = instance.oracle().Evaluate(as_set(mask));
        known[mask] = 1;
      }
      return dense[mask];
    }
    if (auto it = sparse.find(mask); it != sparse.end()) return it->second;
    return sparse[mask] = instance.oracle().Evaluate(as_set(mask));
  };

  Enumerator enumerator(instance.weights(), instance.capacities());
  return enumerator.Run([&](const std::vector<int>& times) {
    Value total = 0;
    for (int t = 1; t <= instance.horizon(); ++t) {
      if (instance.delta(t) == 0) continue;
      std::uint64_t mask = 0;
      for (int i = 0; i < n; ++i) {
        if (times[i] != Chain::kNever && times[i] <= t) mask |= std::uint64_t{1} << i;
      }
      total += instance.delta(t) * gamma(mask);
    }
    return total;
  });
}

}  // namespace ikaon

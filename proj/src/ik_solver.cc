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

#include "ikaon/ik_solver.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "ikaon/error.h"

namespace ikaon {
namespace {

using Wide = __int128;

// Cumulative weight per period for a partial assignment; W is shared.
class LoadProfile {
 public:
  explicit LoadProfile(std::span<const Value> capacities)
      : capacities_(capacities), load_(capacities.size() + 1, 0) {}

  int horizon() const { return static_cast<int>(capacities_.size()); }

  // Smallest t such that adding `weight` at t keeps every period >= t within
  // capacity, or Chain::kNever.
  int Earliest(Value weight) const {
    int earliest = Chain::kNever;
    for (int t = horizon(); t >= 1; --t) {
      if (load_[t] + weight > capacities_[t - 1]) break;
      earliest = t;
    }
    return earliest;
  }

  void Add(int t, Value weight) {
    for (int s = t; s <= horizon(); ++s) load_[s] += weight;
  }
  void Remove(int t, Value weight) {
    for (int s = t; s <= horizon(); ++s) load_[s] -= weight;
  }

  // min over s >= t of (W_s - load_s).
  std::vector<Value> Residuals() const {
    std::vector<Value> residual(load_.size(), 0);
    Value running = std::numeric_limits<Value>::max();
    for (int t = horizon(); t >= 1; --t) {
      running = std::min(running, capacities_[t - 1] - load_[t]);
      residual[t] = running;
    }
    return residual;
  }

 private:
  std::span<const Value> capacities_;
  std::vector<Value> load_;
};

// Items that could ever be inserted, in descending p/w order (weight 0
// first), ties to the smaller id.
std::vector<ItemId> DensityOrder(const IkInstance& ik) {
  std::vector<ItemId> order;
  const Value top = ik.capacities.empty() ? 0 : ik.capacities.back();
  for (ItemId i = 0; i < ik.num_items(); ++i) {
    if (ik.weights[i] <= top) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    const Wide lhs = Wide{ik.profits[a]} * ik.weights[b];
    const Wide rhs = Wide{ik.profits[b]} * ik.weights[a];
    return lhs != rhs ? lhs > rhs : a < b;
  });
  return order;
}

// Earliest-feasible-time greedy along `order`.
std::vector<int> GreedyTimes(const IkInstance& ik, std::span<const ItemId> order) {
  LoadProfile loads(ik.capacities);
  std::vector<int> times(static_cast<std::size_t>(ik.num_items()), Chain::kNever);
  for (ItemId i : order) {
    const int t = loads.Earliest(ik.weights[i]);
    if (t == Chain::kNever) continue;
    loads.Add(t, ik.weights[i]);
    times[i] = t;
  }
  return times;
}

Value ScoreTimes(const IkInstance& ik, const SuffixCoefficients& suffix,
                 std::span<const int> times) {
  Value total = 0;
  for (ItemId i = 0; i < ik.num_items(); ++i) {
    total += ik.profits[i] * suffix.at(times[i]);
  }
  return total;
}

class BranchAndBound {
 public:
  BranchAndBound(const IkInstance& ik, const SuffixCoefficients& suffix)
      : ik_(ik),
        suffix_(suffix),
        density_order_(DensityOrder(ik)),
        loads_(ik.capacities),
        times_(static_cast<std::size_t>(ik.num_items()), Chain::kNever),
        assigned_(times_.size(), 0) {
    order_ = density_order_;
    // p_i * D_1 descending is p_i descending; ties to the smaller id.
    std::stable_sort(order_.begin(), order_.end(), [&](ItemId a, ItemId b) {
      return ik_.profits[a] != ik_.profits[b] ? ik_.profits[a] > ik_.profits[b]
                                              : a < b;
    });
    best_times_ = GreedyTimes(ik_, density_order_);
    best_value_ = ScoreTimes(ik_, suffix_, best_times_);
  }

  SolveResult Run() {
    Search(0);
    return {Chain(best_times_, ik_.horizon()), best_value_, Optimality::kExact,
            nodes_};
  }

 private:
  void Search(std::size_t depth) {
    ++nodes_;
    if (depth == order_.size()) {
      if (value_ > best_value_) {
        best_value_ = value_;
        best_times_ = times_;
      }
      return;
    }
    if (Bound(depth) <= best_value_) return;

    const ItemId item = order_[depth];
    const Value weight = ik_.weights[item];
    assigned_[item] = 1;
    if (const int earliest = loads_.Earliest(weight); earliest != Chain::kNever) {
      for (int t = earliest; t <= ik_.horizon(); ++t) {
        loads_.Add(t, weight);
        times_[item] = t;
        value_ += ik_.profits[item] * suffix_.at(t);
        Search(depth + 1);
        value_ -= ik_.profits[item] * suffix_.at(t);
        loads_.Remove(t, weight);
      }
      times_[item] = Chain::kNever;
    }
    Search(depth + 1);
    assigned_[item] = 0;
  }

  // Minimum of two valid upper bounds on any completion of the node.
  Value Bound(std::size_t depth) const {
    Wide earliest_bound = value_;
    for (std::size_t k = depth; k < order_.size(); ++k) {
      const ItemId j = order_[k];
      earliest_bound += Wide{ik_.profits[j]} * suffix_.at(loads_.Earliest(ik_.weights[j]));
    }

    // Per period: the items already in S_t plus a fractional knapsack of the
    // unassigned items into the capacity left at t and every later period.
    const std::vector<Value> residual = loads_.Residuals();
    Wide knapsack_bound = value_;
    for (int t = 1; t <= ik_.horizon(); ++t) {
      const Value delta = ik_.deltas[t - 1];
      if (delta == 0) continue;
      Value room = residual[t];
      Wide whole = 0;
      for (ItemId j : density_order_) {
        if (assigned_[j]) continue;
        if (ik_.weights[j] <= room) {
          whole += ik_.profits[j];
          room -= ik_.weights[j];
          continue;
        }
        if (room > 0) {
          // ceil(delta * p * room / w), exact.
          const Wide num = Wide{delta} * ik_.profits[j] * room;
          knapsack_bound += (num + ik_.weights[j] - 1) / ik_.weights[j];
        }
        break;
      }
      knapsack_bound += Wide{delta} * whole;
    }
    return static_cast<Value>(std::min(earliest_bound, knapsack_bound));
  }

  const IkInstance& ik_;
  const SuffixCoefficients& suffix_;
  std::vector<ItemId> density_order_;
  std::vector<ItemId> order_;
  LoadProfile loads_;
  std::vector<int> times_;
  std::vector<char> assigned_;
  Value value_ = 0;
  Value best_value_ = 0;
  std::vector<int> best_times_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void ValidateIkInstance(const IkInstance& ik) {
  auto fail = [](ErrorCode code, const std::string& message) {
    throw Error(code, message);
  };
  if (ik.horizon() < 1) fail(ErrorCode::kEmptyHorizon, "horizon must be >= 1");
  if (ik.profits.size() != ik.weights.size() ||
      ik.deltas.size() != ik.capacities.size()) {
    fail(ErrorCode::kInvalidInstance, "vector lengths disagree");
  }
  for (std::size_t i = 0; i < ik.weights.size(); ++i) {
    if (ik.weights[i] < 0) fail(ErrorCode::kInvalidInstance, "negative weight");
    if (ik.profits[i] < 1) fail(ErrorCode::kNonPositiveProfit, "profit must be >= 1");
  }
  for (int t = 0; t < ik.horizon(); ++t) {
    if (ik.capacities[t] < 0 || ik.deltas[t] < 0) {
      fail(ErrorCode::kInvalidInstance, "negative capacity or coefficient");
    }
    if (t > 0 && ik.capacities[t] < ik.capacities[t - 1]) {
      fail(ErrorCode::kNonMonotoneCapacities, "capacities must not decrease");
    }
  }
}

IkInstance ToIkInstance(const Instance& instance) {
  return {instance.weights(), instance.profits(), instance.capacities(),
          instance.deltas()};
}

SuffixCoefficients::SuffixCoefficients(std::span<const Value> deltas)
    : suffix_(deltas.size() + 2, 0) {
  for (std::size_t t = deltas.size(); t >= 1; --t) {
    suffix_[t] = suffix_[t + 1] + deltas[t - 1];
  }
}

Value PhiBarBySuffix(const IkInstance& ik, const Chain& chain) {
  const SuffixCoefficients suffix(ik.deltas);
  return ScoreTimes(ik, suffix, chain.insertion_times());
}

bool IsFeasible(const IkInstance& ik, const Chain& chain) {
  if (chain.num_items() != ik.num_items() || chain.horizon() != ik.horizon()) {
    throw Error(ErrorCode::kUnknownItemId, "chain does not match the instance");
  }
  std::vector<Value> added(static_cast<std::size_t>(ik.horizon()) + 1, 0);
  for (ItemId i = 0; i < ik.num_items(); ++i) {
    if (chain.inserted(i)) added[chain.insertion_time(i)] += ik.weights[i];
  }
  Value load = 0;
  for (int t = 1; t <= ik.horizon(); ++t) {
    load += added[t];
    if (load > ik.capacities[t - 1]) return false;
  }
  return true;
}

SolveResult SolveExact(const IkInstance& ik, const SolverLimits& limits) {
  ValidateIkInstance(ik);
  if (ik.num_items() > limits.max_n_exact || ik.horizon() > limits.max_t_exact) {
    throw Error(ErrorCode::kLimitsExceeded,
                "exact solver limited to " + std::to_string(limits.max_n_exact) +
                    " items and " + std::to_string(limits.max_t_exact) +
                    " periods, got " + std::to_string(ik.num_items()) + " and " +
                    std::to_string(ik.horizon()));
  }
  const SuffixCoefficients suffix(ik.deltas);
  if (suffix.at(1) == 0) {
    // Every chain scores 0; report the empty one.
    return {Chain(ik.num_items(), ik.horizon()), 0, Optimality::kExact, 0};
  }
  BranchAndBound search(ik, suffix);
  return search.Run();
}

SolveResult SolveHeuristic(const IkInstance& ik, std::uint64_t seed,
                           const SolverLimits& limits) {
  ValidateIkInstance(ik);
  const SuffixCoefficients suffix(ik.deltas);
  const int horizon = ik.horizon();
  if (suffix.at(1) == 0) {
    return {Chain(ik.num_items(), horizon), 0, Optimality::kHeuristic, 0};
  }
  const std::vector<ItemId> order = DensityOrder(ik);
  std::vector<int> times = GreedyTimes(ik, order);
  Value value = ScoreTimes(ik, suffix, times);
  LoadProfile loads(ik.capacities);
  for (ItemId i = 0; i < ik.num_items(); ++i) {
    if (times[i] != Chain::kNever) loads.Add(times[i], ik.weights[i]);
  }

  struct Move {
    ItemId item;
    int target;       // new time for `item` when partner < 0
    ItemId partner;   // uninserted item swapped in for `item`
  };
  Rng rng(seed);
  std::uint64_t evaluated = 0;
  bool improved = true;
  while (improved && evaluated < limits.local_search_budget) {
    improved = false;
    std::vector<Move> moves;
    for (ItemId i : order) {
      for (int t = 1; t <= horizon; ++t) {
        if (t != times[i]) moves.push_back({i, t, -1});
      }
      if (times[i] == Chain::kNever) continue;
      for (ItemId j : order) {
        if (times[j] == Chain::kNever) moves.push_back({i, 0, j});
      }
    }
    rng.Shuffle(moves);
    for (const Move& move : moves) {
      if (evaluated++ >= limits.local_search_budget) break;
      const ItemId i = move.item;
      const int current = times[i];
      if (move.partner < 0) {
        const Value gain =
            ik.profits[i] * (suffix.at(move.target) - suffix.at(current));
        if (gain <= 0) continue;
        if (current != Chain::kNever) loads.Remove(current, ik.weights[i]);
        const int earliest = loads.Earliest(ik.weights[i]);
        if (earliest != Chain::kNever && earliest <= move.target) {
          loads.Add(move.target, ik.weights[i]);
          times[i] = move.target;
          value += gain;
          improved = true;
          break;
        }
        if (current != Chain::kNever) loads.Add(current, ik.weights[i]);
        continue;
      }
      const ItemId j = move.partner;
      loads.Remove(current, ik.weights[i]);
      const int slot = loads.Earliest(ik.weights[j]);
      const Value gain = slot == Chain::kNever
                             ? 0
                             : ik.profits[j] * suffix.at(slot) -
                                   ik.profits[i] * suffix.at(current);
      if (gain > 0) {
        loads.Add(slot, ik.weights[j]);
        times[i] = Chain::kNever;
        times[j] = slot;
        value += gain;
        improved = true;
        break;
      }
      loads.Add(current, ik.weights[i]);
    }
  }
  return {Chain(std::move(times), horizon), value, Optimality::kHeuristic, evaluated};
}

std::uint64_t AssignmentCount(int num_items, int horizon) {
  std::uint64_t count = 1;
  const auto base = static_cast<std::uint64_t>(horizon) + 1;
  for (int i = 0; i < num_items; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= base;
  }
  return count;
}

}  // namespace ikaon

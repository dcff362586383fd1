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

// Solvers for incremental knapsack with modular profits.
//
// With D_t = delta_t + ... + delta_T (and D_{T+1} = 0), an item inserted at
// time t contributes p_i * D_t to the objective, so a chain is scored by its
// insertion-time vector alone. All three solvers search that vector.

#ifndef IKAON_IK_SOLVER_H_
#define IKAON_IK_SOLVER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ikaon/instance.h"
#include "ikaon/rng.h"
#include "ikaon/types.h"

namespace ikaon {

struct IkInstance {
  std::vector<Value> weights;
  std::vector<Value> profits;
  std::vector<Value> capacities;  // W_1..W_T
  std::vector<Value> deltas;      // delta_1..delta_T

  int num_items() const { return static_cast<int>(weights.size()); }
  int horizon() const { return static_cast<int>(capacities.size()); }
};

// Same structural checks as ValidateInstance; throws on the first issue.
void ValidateIkInstance(const IkInstance& ik);

// The instance viewed with gamma(S) = p(S).
IkInstance ToIkInstance(const Instance& instance);

class SuffixCoefficients {
 public:
  explicit SuffixCoefficients(std::span<const Value> deltas);

  // D_t for t in [1, T + 1]; D_{T+1} = 0. at(Chain::kNever) is 0 as well.
  Value at(int t) const { return t == Chain::kNever ? 0 : suffix_[t]; }
  int horizon() const { return static_cast<int>(suffix_.size()) - 2; }

 private:
  std::vector<Value> suffix_;
};

// sum_i p_i * D_{t(i)}.
Value PhiBarBySuffix(const IkInstance& ik, const Chain& chain);

bool IsFeasible(const IkInstance& ik, const Chain& chain);

struct SolverLimits {
  int max_n_exact = 18;
  int max_t_exact = 6;
  std::uint64_t max_states_brute = 20'000'000;
  std::uint64_t local_search_budget = 200'000;
};

enum class Optimality { kExact, kHeuristic };

struct SolveResult {
  Chain chain;
  Value objective = 0;
  Optimality optimality = Optimality::kExact;
  std::uint64_t nodes = 0;
};

// Branch and bound over insertion times. Items are branched in descending
// p_i * D_1 order, trying times 1..T and then "never". Nodes are pruned by
// prefix capacity, by an earliest-feasible-time bound and by per-period
// fractional knapsack bounds computed in exact integer arithmetic.
// Throws Error(kLimitsExceeded) above max_n_exact items or max_t_exact
// periods.
SolveResult SolveExact(const IkInstance& ik, const SolverLimits& limits = {});

// Density greedy (p_i * D_1 / w_i) inserting at the earliest feasible time,
// then first-improvement local search over single-item time changes and
// inserted/uninserted swaps, in a seeded move order.
SolveResult SolveHeuristic(const IkInstance& ik, std::uint64_t seed = kDefaultSeed,
                           const SolverLimits& limits = {});

struct BruteForceResult {
  Value value = 0;
  Chain chain;
  std::uint64_t leaves = 0;  // feasible complete assignments scored
};

// Exhaustive enumeration of insertion-time vectors. Ties go to the
// lexicographically smallest vector, with "never" ordered after time T.
// Throws Error(kBudgetExceeded) when (T + 1)^n exceeds max_states_brute.
BruteForceResult BruteForceChains(const IkInstance& ik,
                                  const SolverLimits& limits = {});
// Scores chains with the instance's oracle; each distinct set is evaluated
// at most once.
BruteForceResult BruteForceChains(const Instance& instance,
                                  const SolverLimits& limits = {});

// Exact integer (T+1)^n, saturating at UINT64_MAX.
std::uint64_t AssignmentCount(int num_items, int horizon);

}  // namespace ikaon

#endif  // IKAON_IK_SOLVER_H_

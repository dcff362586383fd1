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

// Reduction from all-or-nothing profits to modular profits.
//
// Within each profit class the independent sets form a matroid. Keeping only
// a minimum-weight basis of every class loses no value, and on the kept
// items gamma is exactly the sum of profits, so any solver for the modular
// problem can be run on the kept items and its chain returned unchanged.

#ifndef IKAON_MODULARIZE_H_
#define IKAON_MODULARIZE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ikaon/ik_solver.h"
#include "ikaon/independence.h"
#include "ikaon/instance.h"

namespace ikaon {

struct ModularizedInstance {
  IkInstance ik;              // kept items renumbered 0..m-1
  std::vector<ItemId> kept;   // kept local id -> item id in the source
  ProfitPartition partition;  // of the source instance
  std::vector<ClassBasis> bases;
};

// Profit partition plus one greedy basis per class. `instance` must already
// be singleton-preprocessed. Makes exactly num_items oracle calls.
ModularizedInstance Modularize(const Instance& instance);

enum class SolverChoice { kAuto, kExact, kHeuristic, kBrute };

std::string_view SolverName(SolverChoice choice);
// Accepts "auto", "exact", "heuristic" and "brute".
SolverChoice ParseSolverChoice(std::string_view name);

struct PipelineOptions {
  SolverChoice solver = SolverChoice::kAuto;
  SolverLimits limits;
  std::uint64_t seed = kDefaultSeed;
};

struct SolveReport {
  Chain chain;  // over the original item ids
  Value phi = 0;
  Value phi_bar = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t modularize_oracle_calls = 0;
  ItemSet kept_items;     // original ids
  ItemSet dropped_items;  // original ids removed by preprocessing
  std::string solver;     // the solver that actually ran
  bool exact = false;
  double elapsed_ms = 0;
};

// Validate, drop zero-value singletons, modularize, solve the modular
// instance and map the chain back. Phi is recomputed from the oracle.
//
// Errors: the instance's validation code; kOracleViolation when the oracle
// breaks the all-or-nothing contract (including Phi != Phi-bar on the
// output); kLimitsExceeded / kBudgetExceeded from the chosen solver;
// kInfeasibleInternal if the solver's chain is infeasible; kSolverFailure
// if the solver misreports its objective.
SolveReport SolveIkAon(const Instance& instance, const PipelineOptions& options = {});

struct VerificationReport {
  bool nested = true;
  bool feasible = true;
  std::optional<Value> recomputed_phi;
  Value claimed_phi = 0;
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
};

// Rechecks a claimed solution from scratch: nesting, known item ids,
// capacities, and Phi against the oracle. Mismatches are reported.
VerificationReport VerifySolution(const Instance& instance,
                                  const std::vector<ItemSet>& sets,
                                  Value claimed_phi);
VerificationReport VerifySolution(const Instance& instance, const Chain& chain,
                                  Value claimed_phi);

}  // namespace ikaon

#endif  // IKAON_MODULARIZE_H_

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

#include "ikaon/modularize.h"

#include <algorithm>
#include <chrono>

#include "ikaon/error.h"

namespace ikaon {

ModularizedInstance Modularize(const Instance& instance) {
  ModularizedInstance result;
  result.partition = ComputeProfitPartition(instance);
  // A fresh context: every greedy candidate set is new, so each costs one
  // oracle call.
  IndependenceContext ctx(instance);
  for (int c = 0; c < result.partition.size(); ++c) {
    result.bases.push_back(
        MinWeightBasis(ctx, result.partition.classes[c].items, c));
    const ItemSet& basis = result.bases.back().basis;
    result.kept.insert(result.kept.end(), basis.begin(), basis.end());
  }
  std::sort(result.kept.begin(), result.kept.end());

  result.ik.capacities = instance.capacities();
  result.ik.deltas = instance.deltas();
  for (ItemId i : result.kept) {
    result.ik.weights.push_back(instance.weights()[i]);
    result.ik.profits.push_back(instance.profits()[i]);
  }
  return result;
}

std::string_view SolverName(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::kAuto: return "auto";
    case SolverChoice::kExact: return "exact";
    case SolverChoice::kHeuristic: return "heuristic";
    case SolverChoice::kBrute: return "brute";
  }
  return "auto";
}

SolverChoice ParseSolverChoice(std::string_view name) {
  for (SolverChoice c : {SolverChoice::kAuto, SolverChoice::kExact,
                         SolverChoice::kHeuristic, SolverChoice::kBrute}) {
    if (SolverName(c) == name) return c;
  }
  throw Error(ErrorCode::kParseError,
              "unknown solver '" + std::string(name) +
                  "' (expected auto, exact, heuristic or brute)");
}

SolveReport SolveIkAon(const Instance& instance, const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RequireValid(instance);
  const std::uint64_t calls_before = instance.oracle().calls();

  PreprocessResult pre = PreprocessSingletons(instance);
  const std::uint64_t calls_after_preprocess = instance.oracle().calls();
  const ModularizedInstance modular = Modularize(pre.instance);

  SolveReport report;
  report.modularize_oracle_calls =
      instance.oracle().calls() - calls_after_preprocess;
  report.dropped_items = pre.dropped;

  SolverChoice choice = options.solver;
  if (choice == SolverChoice::kAuto) {
    choice = modular.ik.num_items() <= options.limits.max_n_exact &&
                     modular.ik.horizon() <= options.limits.max_t_exact
                 ? SolverChoice::kExact
                 : SolverChoice::kHeuristic;
  }
  SolveResult solved;
  switch (choice) {
    case SolverChoice::kExact:
      solved = SolveExact(modular.ik, options.limits);
      break;
    case SolverChoice::kHeuristic:
      solved = SolveHeuristic(modular.ik, options.seed, options.limits);
      break;
    case SolverChoice::kBrute: {
      BruteForceResult brute = BruteForceChains(modular.ik, options.limits);
      solved = {std::move(brute.chain), brute.value, Optimality::kExact,
                brute.leaves};
      break;
    }
    case SolverChoice::kAuto:
      break;
  }
  report.solver = std::string(SolverName(choice));
  report.exact = solved.optimality == Optimality::kExact;

  const Value phi_bar =
      ProfitPhiBar(modular.ik.profits, modular.ik.deltas, solved.chain);
  if (phi_bar != solved.objective) {
    throw Error(ErrorCode::kSolverFailure,
                "solver reported " + std::to_string(solved.objective) +
                    " but its chain scores " + std::to_string(phi_bar));
  }

  std::vector<int> times(static_cast<std::size_t>(instance.num_items()),
                         Chain::kNever);
  for (std::size_t j = 0; j < modular.kept.size(); ++j) {
    const ItemId original = pre.retained_original[modular.kept[j]];
    times[original] = solved.chain.insertion_time(static_cast<ItemId>(j));
    report.kept_items.push_back(original);
  }
  report.chain = Chain(std::move(times), instance.horizon());
  if (!IsFeasible(instance, report.chain)) {
    throw Error(ErrorCode::kInfeasibleInternal,
                "solver chain violates a capacity of the original instance");
  }

  report.phi_bar = phi_bar;
  report.phi = ProfitPhi(instance, report.chain);
  if (report.phi != report.phi_bar) {
    throw Error(ErrorCode::kOracleViolation,
                "Phi = " + std::to_string(report.phi) + " differs from Phi-bar = " +
                    std::to_string(report.phi_bar) +
                    "; the oracle is not all-or-nothing submodular");
  }
  report.oracle_calls = instance.oracle().calls() - calls_before;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

VerificationReport VerifySolution(const Instance& instance,
                                  const std::vector<ItemSet>& sets,
                                  Value claimed_phi) {
  VerificationReport report;
  report.claimed_phi = claimed_phi;
  if (static_cast<int>(sets.size()) != instance.horizon()) {
    report.feasible = false;
    report.issues.push_back("chain has " + std::to_string(sets.size()) +
                            " periods, instance has " +
                            std::to_string(instance.horizon()));
    return report;
  }
  for (std::size_t t = 0; t < sets.size(); ++t) {
    for (ItemId i : sets[t]) {
      if (i < 0 || i >= instance.num_items()) {
        report.feasible = false;
        report.issues.push_back("unknown item " + std::to_string(i) + " in S_" +
                                std::to_string(t + 1));
      }
    }
  }
  if (!report.ok()) return report;
  if (!IsNested(sets)) {
    report.nested = false;
    report.feasible = false;
    report.issues.push_back("sets are not nested");
    return report;
  }

  // Weights and gamma straight from the sets, not through Chain.
  for (std::size_t t = 0; t < sets.size(); ++t) {
    ItemSet s = sets[t];
    Normalize(s);
    const Value weight = SumOver(instance.weights(), s);
    if (weight > instance.capacities()[t]) {
      report.feasible = false;
      report.issues.push_back("w(S_" + std::to_string(t + 1) + ") = " +
                              std::to_string(weight) + " exceeds W = " +
                              std::to_string(instance.capacities()[t]));
    }
  }
  Value phi = 0;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    ItemSet s = sets[t];
    Normalize(s);
    phi += instance.deltas()[t] * instance.oracle().Evaluate(s);
  }
  report.recomputed_phi = phi;
  if (phi != claimed_phi) {
    report.issues.push_back("claimed Phi " + std::to_string(claimed_phi) +
                            " but the oracle gives " + std::to_string(phi));
  }
  return report;
}

VerificationReport VerifySolution(const Instance& instance, const Chain& chain,
                                  Value claimed_phi) {
  return VerifySolution(instance, chain.Sets(), claimed_phi);
}

}  // namespace ikaon

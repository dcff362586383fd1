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

#ifndef IKAON_INSTANCE_H_
#define IKAON_INSTANCE_H_

#include <span>
#include <string>
#include <vector>

#include "ikaon/error.h"
#include "ikaon/oracle.h"
#include "ikaon/types.h"

namespace ikaon {

struct Item {
  ItemId id = 0;
  Value weight = 0;
  Value profit = 1;
};

// An incremental knapsack instance with an all-or-nothing aggregation
// oracle. Times are 1-based: capacity(t) and delta(t) for t in [1, horizon].
// Construction does not validate; see ValidateInstance.
class Instance {
 public:
  Instance(std::vector<Value> weights, std::vector<Value> profits,
           std::vector<Value> capacities, std::vector<Value> deltas,
           OraclePtr oracle);

  int num_items() const { return static_cast<int>(weights_.size()); }
  int horizon() const { return static_cast<int>(capacities_.size()); }

  Item item(ItemId i) const { return {i, weights_[i], profits_[i]}; }
  const std::vector<Value>& weights() const { return weights_; }
  const std::vector<Value>& profits() const { return profits_; }
  const std::vector<Value>& capacities() const { return capacities_; }
  const std::vector<Value>& deltas() const { return deltas_; }
  Value capacity(int t) const { return capacities_[t - 1]; }
  Value delta(int t) const { return deltas_[t - 1]; }

  const AggregationOracle& oracle() const { return *oracle_; }
  const OraclePtr& oracle_ptr() const { return oracle_; }

 private:
  std::vector<Value> weights_;
  std::vector<Value> profits_;
  std::vector<Value> capacities_;
  std::vector<Value> deltas_;
  OraclePtr oracle_;
};

struct ValidationIssue {
  ErrorCode code;
  int index;  // offending item or (1-based) time; -1 when not applicable
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string Summary() const;
};

// Checks every structural invariant without calling the oracle: horizon
// T >= 1, non-decreasing nonnegative capacities, profits >= 1, weights and
// coefficients >= 0, matching lengths, the oracle's ground size, and that
// (sum of coefficients) * (oracle upper bound) fits in a Value.
ValidationReport ValidateInstance(const Instance& instance);

// Throws Error with the first issue's code if the report is not ok.
void RequireValid(const Instance& instance);

// Solution object: each item's insertion time in [1, T], or kNever. The
// set view S_t = { i : 1 <= t(i) <= t } is nested by construction.
class Chain {
 public:
  static constexpr int kNever = 0;

  Chain() = default;
  // The empty chain.
  Chain(int num_items, int horizon);
  // Throws Error(kInvalidInstance) for times outside [0, horizon].
  Chain(std::vector<int> insertion_times, int horizon);

  // Throws Error(kInfeasibleChain) if the sets are not nested and
  // Error(kUnknownItemId) for ids outside [0, num_items).
  static Chain FromSets(const std::vector<ItemSet>& sets, int num_items);

  int num_items() const { return static_cast<int>(times_.size()); }
  int horizon() const { return horizon_; }
  int insertion_time(ItemId i) const { return times_[i]; }
  bool inserted(ItemId i) const { return times_[i] != kNever; }
  const std::vector<int>& insertion_times() const { return times_; }

  // S_t for t in [1, horizon].
  ItemSet SetAt(int t) const;
  std::vector<ItemSet> Sets() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int horizon_ = 0;
  std::vector<int> times_;
};

bool IsNested(const std::vector<ItemSet>& sets);

// True iff w(S_t) <= W_t for every t. Throws Error(kUnknownItemId) when the
// chain is not defined over the instance's items.
bool IsFeasible(const Instance& instance, const Chain& chain);
// Raw set-list form: additionally false when the sets are not nested.
bool IsFeasible(const Instance& instance, const std::vector<ItemSet>& sets);

// Phi = sum_t delta_t * gamma(S_t). One oracle call per time, except that a
// set equal to its predecessor reuses the previous value.
Value ProfitPhi(const Instance& instance, const Chain& chain);

// Phi-bar = sum_t delta_t * sum_{i in S_t} p_i; never touches an oracle.
Value ProfitPhiBar(std::span<const Value> profits, std::span<const Value> deltas,
                   const Chain& chain);

struct ProfitClass {
  Value profit;
  ItemSet items;
};

// Items grouped by equal profit, classes in strictly increasing profit.
struct ProfitPartition {
  std::vector<ProfitClass> classes;

  int size() const { return static_cast<int>(classes.size()); }
};

ProfitPartition ComputeProfitPartition(std::span<const Value> profits);
inline ProfitPartition ComputeProfitPartition(const Instance& instance) {
  return ComputeProfitPartition(instance.profits());
}

struct PreprocessResult {
  Instance instance;                     // over the retained items, renumbered
  ItemSet dropped;                       // original ids
  std::vector<ItemId> retained_original; // retained local id -> original id
};

// Drops every item whose singleton value is 0. Costs exactly num_items
// oracle calls. Throws Error(kOracleViolation) if some gamma({i}) is neither
// 0 nor p_i. When nothing is dropped the original oracle object is reused.
PreprocessResult PreprocessSingletons(const Instance& instance);

}  // namespace ikaon

#endif  // IKAON_INSTANCE_H_

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

// Aggregation oracles: set functions over item ids that the solvers may only
// query, never inspect. Every evaluation is counted so that oracle budgets
// can be measured from the outside.

#ifndef IKAON_ORACLE_H_
#define IKAON_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ikaon/matroid.h"
#include "ikaon/types.h"

namespace ikaon {

using Json = nlohmann::ordered_json;

class AggregationOracle {
 public:
  virtual ~AggregationOracle() = default;

  // `set` must be sorted, duplicate-free and inside [0, ground_size()).
  // Safe to call concurrently.
  Value Evaluate(std::span<const ItemId> set) const;

  std::uint64_t calls() const {
    return calls_.load(std::memory_order_relaxed);
  }
  void ResetCalls() const { calls_.store(0, std::memory_order_relaxed); }

  virtual int ground_size() const = 0;

  // An upper bound on the value of the whole ground set, available without
  // evaluating the oracle. Used for overflow checks.
  virtual Value UpperBound() const = 0;

  // JSON recipe that rebuilds an equivalent oracle via OracleFromDescriptor.
  virtual Json Descriptor() const = 0;

 protected:
  virtual Value DoEvaluate(std::span<const ItemId> set) const = 0;

 private:
  mutable std::atomic<std::uint64_t> calls_{0};
};

using OraclePtr = std::shared_ptr<const AggregationOracle>;

// gamma(S) = sum of profits over S.
class ModularOracle final : public AggregationOracle {
 public:
  explicit ModularOracle(std::vector<Value> profits);

  int ground_size() const override { return static_cast<int>(profits_.size()); }
  Value UpperBound() const override;
  Json Descriptor() const override;
  const std::vector<Value>& profits() const { return profits_; }

 protected:
  Value DoEvaluate(std::span<const ItemId> set) const override;

 private:
  std::vector<Value> profits_;
};

struct RankClass {
  Value profit = 1;
  MatroidSpec matroid;
};

// gamma(S) = sum over classes of profit * rank(S restricted to the class).
// Monotone, submodular and all-or-nothing, with every item of a class worth
// that class's profit. Items outside every class contribute nothing.
class MatroidRankSumOracle final : public AggregationOracle {
 public:
  // Throws Error(kOverlappingClasses) if two class grounds intersect and
  // Error(kInvalidInstance) for ids outside [0, ground_size) or class
  // profits that are not strictly increasing.
  MatroidRankSumOracle(int ground_size, std::vector<RankClass> classes);

  int ground_size() const override { return ground_size_; }
  Value UpperBound() const override;
  Json Descriptor() const override;
  const std::vector<RankClass>& classes() const { return classes_; }

 protected:
  Value DoEvaluate(std::span<const ItemId> set) const override;

 private:
  int ground_size_;
  std::vector<RankClass> classes_;
  std::vector<int> class_of_;  // -1 for items in no class
};

// gamma(S) = number of edges with an endpoint among the vertices of S.
class CoverageOracle final : public AggregationOracle {
 public:
  // The graph must be simple. item_vertex[i] is the vertex of item i.
  CoverageOracle(int num_vertices, std::vector<std::pair<int, int>> edges,
                 std::vector<int> item_vertex);

  int ground_size() const override {
    return static_cast<int>(item_vertex_.size());
  }
  Value UpperBound() const override { return static_cast<Value>(edges_.size()); }
  Json Descriptor() const override;
  int max_degree() const;

 protected:
  Value DoEvaluate(std::span<const ItemId> set) const override;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> item_vertex_;
};

// Explicit value table indexed by subset bitmask (bit i = item i). Meant for
// small hand-crafted and adversarial set functions; no property is assumed.
class TableOracle final : public AggregationOracle {
 public:
  static constexpr int kMaxItems = 20;

  explicit TableOracle(std::vector<Value> values);

  int ground_size() const override { return ground_size_; }
  Value UpperBound() const override;
  Json Descriptor() const override;

 protected:
  Value DoEvaluate(std::span<const ItemId> set) const override;

 private:
  int ground_size_;
  std::vector<Value> values_;
};

// The base oracle seen through a renaming: local item j is base item
// local_to_base[j]. Produced when items are dropped from an instance.
class RestrictedOracle final : public AggregationOracle {
 public:
  RestrictedOracle(OraclePtr base, std::vector<ItemId> local_to_base);

  int ground_size() const override {
    return static_cast<int>(local_to_base_.size());
  }
  Value UpperBound() const override { return base_->UpperBound(); }
  Json Descriptor() const override;
  const AggregationOracle& base() const { return *base_; }

 protected:
  Value DoEvaluate(std::span<const ItemId> set) const override;

 private:
  OraclePtr base_;
  std::vector<ItemId> local_to_base_;
};

// Rebuilds an oracle from its JSON recipe. `profits` supplies the modular
// oracle's values when the recipe does not carry its own. The result must
// cover exactly `ground_size` items.
OraclePtr OracleFromDescriptor(const Json& descriptor,
                               std::span<const Value> profits, int ground_size);

}  // namespace ikaon

#endif  // IKAON_ORACLE_H_

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

#include <gtest/gtest.h>

#include <memory>

#include "ikaon/error.h"
#include "ikaon/generators.h"
#include "support/test_support.h"

namespace ikaon {
namespace {

using testing::Mask;
using testing::MaskItems;

Instance SingleClass(std::vector<Value> weights, Value profit, MatroidSpec spec) {
  const auto n = weights.size();
  auto oracle = std::make_shared<MatroidRankSumOracle>(
      static_cast<int>(n), std::vector<RankClass>{{profit, std::move(spec)}});
  return Instance(std::move(weights), std::vector<Value>(n, profit), {100}, {1},
                  std::move(oracle));
}

ItemSet Iota(int n) {
  ItemSet s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

std::vector<Instance> ClassFamilies(int n, int per_family, std::uint64_t salt) {
  std::vector<Instance> out;
  for (Family f : {Family::kModular, Family::kUniformClasses,
                   Family::kPartitionClasses, Family::kGraphicClasses}) {
    for (int k = 0; k < per_family; ++k) {
      GeneratorParams p;
      p.num_items = n;
      p.num_classes = 1 + k % 3;
      p.seed = salt * 1000 + static_cast<std::uint64_t>(k);
      out.push_back(GenerateInstance(f, p));
    }
  }
  return out;
}

TEST(IsIndependentTest, ModularEverythingIndependent) {
  auto oracle = std::make_shared<ModularOracle>(std::vector<Value>{2, 3, 4});
  const Instance inst({1, 1, 1}, {2, 3, 4}, {3}, {1}, oracle);
  IndependenceContext ctx(inst);
  for (Mask m = 0; m < 8; ++m) EXPECT_TRUE(ctx.IsIndependent(MaskItems(m)));
}

TEST(IsIndependentTest, CappedRankIsDependent) {
  const Instance inst = SingleClass({1, 1}, 5, MatroidSpec::Uniform({0, 1}, 1));
  IndependenceContext ctx(inst);
  EXPECT_FALSE(ctx.IsIndependent(ItemSet{0, 1}));
  EXPECT_TRUE(ctx.IsIndependent(ItemSet{1}));
}

TEST(IsIndependentTest, MatchesPerClassRankPrediction) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (Family f : {Family::kUniformClasses, Family::kPartitionClasses,
                     Family::kGraphicClasses}) {
      GeneratorParams p;
      p.num_items = 6;
      p.num_classes = 2;
      p.seed = seed;
      const Instance inst = GenerateInstance(f, p);
      const auto& classes =
          dynamic_cast<const MatroidRankSumOracle&>(inst.oracle()).classes();
      IndependenceContext ctx(inst);
      for (Mask m = 0; m < 64; ++m) {
        const ItemSet s = MaskItems(m);
        bool predicted = true;
        for (const RankClass& rc : classes) {
          const ItemSet slice = Intersection(s, rc.matroid.ground);
          predicted = predicted &&
                      MatroidRank(rc.matroid, slice) == static_cast<int>(slice.size());
        }
        ASSERT_EQ(ctx.IsIndependent(s), predicted);
      }
    }
  }
}

TEST(IsIndependentTest, ValueAboveProfitIsAnOracleViolation) {
  auto oracle = std::make_shared<TableOracle>(std::vector<Value>{0, 1, 1, 5});
  const Instance inst({1, 1}, {1, 1}, {2}, {1}, oracle);
  IndependenceContext ctx(inst);
  try {
    ctx.IsIndependent(ItemSet{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleViolation);
  }
}

TEST(IndependenceContextTest, MemoAvoidsRepeatCallsAndRespectsCapacity) {
  const Instance inst = SingleClass({1, 1, 1}, 2, MatroidSpec::Uniform({0, 1, 2}, 2));
  IndependenceContext ctx(inst, 3);
  for (int round = 0; round < 3; ++round) {
    for (Mask m = 0; m < 8; ++m) ctx.IsIndependent(MaskItems(m));
  }
  EXPECT_EQ(ctx.memo_size(), 3u);
  // Three memoized sets cost one call each; the other five are re-evaluated.
  EXPECT_EQ(ctx.oracle_calls(), 3u + 5u * 3u);
  EXPECT_EQ(inst.oracle().calls(), ctx.oracle_calls());
}

TEST(IndependenceLemmaTest, SubsetsOfIndependentSetsAreIndependent) {
  for (const Instance& inst : ClassFamilies(8, 6, 1)) {
    std::vector<bool> indep(256);
    for (Mask m = 0; m < 256; ++m) indep[m] = testing::DirectlyIndependent(inst, MaskItems(m));
    for (Mask m = 0; m < 256; ++m) {
      if (!indep[m]) continue;
      for (Mask s = m; s; s = (s - 1) & m) ASSERT_TRUE(indep[s]);
    }
  }
}

TEST(IndependenceLemmaTest, IndependentIffEverySliceIs) {
  for (const Instance& inst : ClassFamilies(8, 6, 2)) {
    const ProfitPartition part = ComputeProfitPartition(inst);
    for (Mask m = 0; m < 256; ++m) {
      const ItemSet s = MaskItems(m);
      bool slices = true;
      for (const auto& c : part.classes) {
        slices = slices && testing::DirectlyIndependent(inst, Intersection(s, c.items));
      }
      ASSERT_EQ(testing::DirectlyIndependent(inst, s), slices);
    }
  }
}

bool IsCycle(const Instance& inst, const ItemSet& c) {
  if (testing::DirectlyIndependent(inst, c)) return false;
  for (ItemId i : c) {
    if (!testing::DirectlyIndependent(inst, Without(c, i))) return false;
  }
  return true;
}

TEST(FindCycleTest, PairUnderRankOne) {
  const Instance inst = SingleClass({1, 1}, 5, MatroidSpec::Uniform({0, 1}, 1));
  IndependenceContext ctx(inst);
  EXPECT_EQ(FindCycle(ctx, ItemSet{0, 1}), (ItemSet{0, 1}));
}

TEST(FindCycleTest, LargestIdLeavesFirst) {
  const Instance inst = SingleClass({1, 1, 1}, 5, MatroidSpec::Uniform({0, 1, 2}, 1));
  IndependenceContext ctx(inst);
  const ItemSet c = FindCycle(ctx, ItemSet{0, 1, 2});
  EXPECT_EQ(c, (ItemSet{0, 1}));
  EXPECT_TRUE(IsCycle(inst, c));
}

TEST(FindCycleTest, IndependentInputThrows) {
  const Instance inst = SingleClass({1, 1}, 5, MatroidSpec::Uniform({0, 1}, 2));
  IndependenceContext ctx(inst);
  try {
    FindCycle(ctx, ItemSet{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDependent);
  }
}

TEST(FindCycleTest, EveryCycleIsMinimalSingleProfitAndValueNeutral) {
  int cycles = 0;
  for (const Instance& inst : ClassFamilies(7, 8, 3)) {
    IndependenceContext ctx(inst);
    for (Mask m = 0; m < 128; ++m) {
      const ItemSet s = MaskItems(m);
      if (testing::DirectlyIndependent(inst, s)) continue;
      const ItemSet c = FindCycle(ctx, s);
      ++cycles;
      ASSERT_TRUE(IsSubset(c, s));
      ASSERT_TRUE(IsCycle(inst, c));
      const Value gamma_c = inst.oracle().Evaluate(c);
      for (ItemId i : c) {
        ASSERT_EQ(inst.oracle().Evaluate(Without(c, i)), gamma_c);
        ASSERT_EQ(inst.profits()[i], inst.profits()[c.front()]);
      }
    }
  }
  EXPECT_GT(cycles, 100);
}

TEST(MinWeightBasisTest, RankOneKeepsLightest) {
  const Instance inst = SingleClass({2, 3, 4}, 10, MatroidSpec::Uniform({0, 1, 2}, 1));
  IndependenceContext ctx(inst);
  const ClassBasis b = MinWeightBasis(ctx, Iota(3));
  EXPECT_EQ(b.basis, (ItemSet{0}));
  EXPECT_EQ(b.weight, 2);
}

TEST(MinWeightBasisTest, PartitionExample) {
  // a = 0 (w 3), b = 1 (w 1) share a cap-1 group; c = 2 (w 2) has its own.
  const Instance inst =
      SingleClass({3, 1, 2}, 4, MatroidSpec::Partition({{0, 1}, {2}}, {1, 1}));
  IndependenceContext ctx(inst);
  const ClassBasis b = MinWeightBasis(ctx, Iota(3));
  EXPECT_EQ(b.basis, (ItemSet{1, 2}));
  EXPECT_EQ(b.weight, 3);
  EXPECT_EQ(b.weight, testing::BruteMinBasisWeight(inst, Iota(3)));
}

TEST(MinWeightBasisTest, GreedyIsIndependentMaximalAndLightest) {
  Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    const auto kind = static_cast<MatroidSpec::Kind>(rng.Uniform(0, 2));
    const int n = static_cast<int>(rng.Uniform(1, 7));
    std::vector<Value> weights(static_cast<std::size_t>(n));
    for (auto& w : weights) w = rng.Uniform(0, 6);
    const Instance inst = SingleClass(weights, 3, RandomMatroid(kind, Iota(n), rng));
    IndependenceContext ctx(inst);
    const ClassBasis b = MinWeightBasis(ctx, Iota(n));
    ASSERT_EQ(ctx.oracle_calls(), static_cast<std::uint64_t>(n));
    ASSERT_TRUE(testing::DirectlyIndependent(inst, b.basis));
    for (ItemId i : Difference(Iota(n), b.basis)) {
      ASSERT_FALSE(testing::DirectlyIndependent(inst, With(b.basis, i)));
    }
    ASSERT_EQ(b.weight, SumOver(inst.weights(), b.basis));
    ASSERT_EQ(b.weight, testing::BruteMinBasisWeight(inst, Iota(n)));
  }
}

TEST(MatroidAxiomTest, BuiltInFamiliesPassExhaustively) {
  for (const Instance& inst : ClassFamilies(8, 5, 4)) {
    IndependenceContext ctx(inst);
    for (const auto& c : ComputeProfitPartition(inst).classes) {
      ASSERT_FALSE(CheckMatroidExchange(ctx, c.items, 0).has_value());
      ASSERT_FALSE(CheckEqualMaximalCardinality(ctx, c.items, 0).has_value());
    }
  }
}

TEST(MatroidAxiomTest, SampledModeOnLargeClasses) {
  GeneratorParams p;
  p.num_items = 14;
  p.num_classes = 1;
  for (Family f : {Family::kUniformClasses, Family::kPartitionClasses,
                   Family::kGraphicClasses}) {
    const Instance inst = GenerateInstance(f, p);
    IndependenceContext ctx(inst);
    EXPECT_FALSE(CheckMatroidExchange(ctx, Iota(14), 300).has_value());
    EXPECT_FALSE(CheckEqualMaximalCardinality(ctx, Iota(14), 300).has_value());
  }
}

// Independent sets {}, {0}, {1}, {2}, {0,1}: {2} and {0,1} are both maximal.
// Unit marginals everywhere, but not submodular.
Instance NonMatroidInstance() {
  auto oracle =
      std::make_shared<TableOracle>(std::vector<Value>{0, 1, 1, 2, 1, 1, 1, 2});
  return Instance({1, 1, 1}, {1, 1, 1}, {3}, {1}, oracle);
}

TEST(MatroidAxiomTest, NonSubmodularOracleBreaksBothAxioms) {
  const Instance inst = NonMatroidInstance();
  IndependenceContext ctx(inst);
  const auto exchange = CheckMatroidExchange(ctx, Iota(3), 0);
  ASSERT_TRUE(exchange.has_value());
  EXPECT_LT(exchange->smaller.size(), exchange->larger.size());
  const auto cardinality = CheckEqualMaximalCardinality(ctx, Iota(3), 0);
  ASSERT_TRUE(cardinality.has_value());
  EXPECT_NE(cardinality->first.size(), cardinality->second.size());
}

TEST(RestrictChainTest, PrefixChainIsAFixedPoint) {
  const Instance inst =
      SingleClass({1, 2, 5}, 3, MatroidSpec::Uniform({0, 1, 2}, 2));
  IndependenceContext ctx(inst);
  const ClassBasis b = MinWeightBasis(ctx, Iota(3));
  const Chain c({1, 2, Chain::kNever}, 2);
  EXPECT_EQ(RestrictChainToBasis(ctx, Iota(3), b, c), c);
}

TEST(RestrictChainTest, MovesOntoLightestBasisItems) {
  const Instance inst =
      SingleClass({1, 2, 5}, 3, MatroidSpec::Uniform({0, 1, 2}, 2));
  IndependenceContext ctx(inst);
  const ClassBasis b = MinWeightBasis(ctx, Iota(3));
  EXPECT_EQ(b.basis, (ItemSet{0, 1}));
  const Chain in({Chain::kNever, 2, 1}, 2);  // S1 = {2}, S2 = {1, 2}
  const Chain out = RestrictChainToBasis(ctx, Iota(3), b, in);
  EXPECT_EQ(out.SetAt(1), (ItemSet{0}));
  EXPECT_EQ(out.SetAt(2), (ItemSet{0, 1}));
}

TEST(RestrictChainTest, DependentChainThrows) {
  const Instance inst =
      SingleClass({1, 2, 5}, 3, MatroidSpec::Uniform({0, 1, 2}, 2));
  IndependenceContext ctx(inst);
  const ClassBasis b = MinWeightBasis(ctx, Iota(3));
  try {
    RestrictChainToBasis(ctx, Iota(3), b, Chain({1, 1, 1}, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kChainNotIndependent);
  }
}

TEST(RestrictChainTest, RandomIndependentChainsKeepValueAndShedWeight) {
  Rng rng(41);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    const auto kind = static_cast<MatroidSpec::Kind>(rng.Uniform(0, 2));
    const int n = static_cast<int>(rng.Uniform(1, 6));
    const int horizon = static_cast<int>(rng.Uniform(1, 3));
    std::vector<Value> weights(static_cast<std::size_t>(n));
    for (auto& w : weights) w = rng.Uniform(0, 9);
    const Instance inst = SingleClass(weights, 2, RandomMatroid(kind, Iota(n), rng));
    IndependenceContext ctx(inst);
    const Chain c = testing::RandomChain(n, horizon, rng);
    if (!testing::DirectlyIndependent(inst, c.SetAt(horizon))) continue;
    const ClassBasis b = MinWeightBasis(ctx, Iota(n));
    const Chain r = RestrictChainToBasis(ctx, Iota(n), b, c);
    for (int t = 1; t <= horizon; ++t) {
      ASSERT_TRUE(IsSubset(r.SetAt(t), b.basis));
      ASSERT_EQ(inst.oracle().Evaluate(r.SetAt(t)), inst.oracle().Evaluate(c.SetAt(t)));
      ASSERT_LE(SumOver(inst.weights(), r.SetAt(t)), SumOver(inst.weights(), c.SetAt(t)));
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace ikaon

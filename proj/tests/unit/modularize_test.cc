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

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>

#include "ikaon/error.h"
#include "ikaon/generators.h"
#include "support/test_support.h"

namespace ikaon {
namespace {

using testing::Mask;
using testing::MaskItems;

Instance SingleClass(std::vector<Value> weights, Value profit, MatroidSpec spec,
                     std::vector<Value> caps, std::vector<Value> deltas) {
  const auto n = weights.size();
  auto oracle = std::make_shared<MatroidRankSumOracle>(
      static_cast<int>(n), std::vector<RankClass>{{profit, std::move(spec)}});
  return Instance(std::move(weights), std::vector<Value>(n, profit), std::move(caps),
                  std::move(deltas), std::move(oracle));
}

TEST(ModularizeTest, ModularKeepsEverything) {
  auto oracle = std::make_shared<ModularOracle>(std::vector<Value>{3, 3, 8});
  const Instance inst({1, 2, 3}, {3, 3, 8}, {4}, {1}, oracle);
  const ModularizedInstance m = Modularize(inst);
  EXPECT_EQ(m.kept, (std::vector<ItemId>{0, 1, 2}));
  EXPECT_EQ(m.ik.profits, inst.profits());
  EXPECT_EQ(m.ik.capacities, inst.capacities());
}

TEST(ModularizeTest, RankOneKeepsLightest) {
  const Instance inst =
      SingleClass({2, 3, 4}, 10, MatroidSpec::Uniform({0, 1, 2}, 1), {9}, {1});
  const ModularizedInstance m = Modularize(inst);
  EXPECT_EQ(m.kept, (std::vector<ItemId>{0}));
  EXPECT_EQ(m.ik.weights, (std::vector<Value>{2}));
}

TEST(ModularizeTest, KeptSetIsIndependentAndMaximalPerClass) {
  for (Family f : {Family::kUniformClasses, Family::kPartitionClasses,
                   Family::kGraphicClasses}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Instance raw = testing::RandomFamilyInstance(f, seed, 10, 2);
      const Instance inst = PreprocessSingletons(raw).instance;
      inst.oracle().ResetCalls();
      const ModularizedInstance m = Modularize(inst);
      ASSERT_EQ(inst.oracle().calls(), static_cast<std::uint64_t>(inst.num_items()));
      const ItemSet kept(m.kept.begin(), m.kept.end());
      ASSERT_TRUE(testing::DirectlyIndependent(inst, kept));
      for (const auto& c : m.partition.classes) {
        const ItemSet slice = Intersection(kept, c.items);
        for (ItemId i : Difference(c.items, slice)) {
          ASSERT_FALSE(testing::DirectlyIndependent(inst, With(slice, i)));
        }
      }
    }
  }
}

TEST(ModularizeTest, EverySubsetOfKeptItemsIsIndependent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance raw =
        testing::RandomFamilyInstance(Family::kGraphicClasses, seed, 10, 1);
    const Instance inst = PreprocessSingletons(raw).instance;
    const ModularizedInstance m = Modularize(inst);
    const auto k = m.kept.size();
    for (Mask mask = 0; mask < (Mask{1} << k); ++mask) {
      ItemSet s;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask >> j & 1u) s.push_back(m.kept[j]);
      }
      ASSERT_TRUE(testing::DirectlyIndependent(inst, s));
    }
  }
}

TEST(SolveIkAonTest, ModularPipelineMatchesDirectSolve) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::RandomFamilyInstance(Family::kModular, seed, 10, 3);
    PipelineOptions opts;
    opts.solver = SolverChoice::kExact;
    const SolveReport r = SolveIkAon(inst, opts);
    ASSERT_EQ(r.phi, SolveExact(ToIkInstance(inst)).objective);
    ASSERT_EQ(r.phi, r.phi_bar);
  }
}

TEST(SolveIkAonTest, MatroidRankMatchesWeightGreedy) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorParams p;
    p.num_items = 8;
    p.horizon = 3;
    p.seed = seed;
    const Instance inst = GenerateMatroidRankInstance(p);
    PipelineOptions opts;
    opts.solver = SolverChoice::kExact;
    const SolveReport r = SolveIkAon(inst, opts);
    ASSERT_EQ(r.phi, ProfitPhi(inst, testing::MatroidRankGreedy(inst)));
    ASSERT_EQ(r.phi, testing::ReferenceOptimum(inst));
  }
}

TEST(SolveIkAonTest, ExactPipelineEqualsOriginalOptimum) {
  for (Family f : {Family::kModular, Family::kUniformClasses,
                   Family::kPartitionClasses, Family::kGraphicClasses}) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const Instance inst = testing::RandomFamilyInstance(f, seed, 9, 3);
      PipelineOptions opts;
      opts.solver = SolverChoice::kExact;
      const SolveReport r = SolveIkAon(inst, opts);
      ASSERT_EQ(r.phi, testing::ReferenceOptimum(inst)) << FamilyName(f) << seed;
      ASSERT_TRUE(IsFeasible(inst, r.chain));
      ASSERT_TRUE(r.exact);
      ASSERT_EQ(r.solver, "exact");
      for (int i = 0; i < inst.num_items(); ++i) {
        if (r.chain.inserted(i)) {
          ASSERT_TRUE(std::binary_search(r.kept_items.begin(), r.kept_items.end(), i));
        }
      }
    }
  }
}

TEST(SolveIkAonTest, ModularizationLosesNothing) {
  for (Family f : {Family::kUniformClasses, Family::kPartitionClasses,
                   Family::kGraphicClasses}) {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
      const Instance inst = testing::RandomFamilyInstance(f, seed, 8, 3);
      const PreprocessResult pre = PreprocessSingletons(inst);
      const ModularizedInstance m = Modularize(pre.instance);
      ASSERT_EQ(testing::ReferenceOptimum(m.ik), testing::ReferenceOptimum(inst));
    }
  }
}

TEST(SolveIkAonTest, AllSolversAgreeOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst =
        testing::RandomFamilyInstance(Family::kPartitionClasses, seed, 8, 3);
    PipelineOptions exact{SolverChoice::kExact, {}, 1};
    PipelineOptions brute{SolverChoice::kBrute, {}, 1};
    PipelineOptions heuristic{SolverChoice::kHeuristic, {}, 1};
    const Value best = SolveIkAon(inst, exact).phi;
    ASSERT_EQ(SolveIkAon(inst, brute).phi, best);
    const SolveReport h = SolveIkAon(inst, heuristic);
    ASSERT_LE(h.phi, best);
    ASSERT_FALSE(h.exact);
  }
}

TEST(SolveIkAonTest, AutoPicksExactForSmallAndHeuristicForLarge) {
  const Instance small = testing::RandomFamilyInstance(Family::kModular, 1, 6, 2);
  EXPECT_EQ(SolveIkAon(small).solver, "exact");
  GeneratorParams p;
  p.num_items = 40;
  const Instance large = GenerateInstance(Family::kModular, p);
  EXPECT_EQ(SolveIkAon(large).solver, "heuristic");
}

TEST(SolveIkAonTest, OracleBudget) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst =
        testing::RandomFamilyInstance(Family::kUniformClasses, seed, 10, 3);
    const SolveReport r = SolveIkAon(inst);
    const auto retained =
        static_cast<std::uint64_t>(inst.num_items()) - r.dropped_items.size();
    ASSERT_EQ(r.modularize_oracle_calls, retained);
  }
}

TEST(SolveIkAonTest, ExactOverLimitsIsReported) {
  GeneratorParams p;
  p.num_items = 25;
  const Instance inst = GenerateInstance(Family::kModular, p);
  PipelineOptions opts;
  opts.solver = SolverChoice::kExact;
  try {
    SolveIkAon(inst, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitsExceeded);
  }
}

TEST(SolveIkAonTest, NonAonOracleIsRejected) {
  // Path coverage with unit profits: the middle vertex alone is worth 2.
  auto oracle = std::make_shared<CoverageOracle>(
      3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}, std::vector<int>{0, 1, 2});
  const Instance inst({1, 1, 1}, {1, 1, 1}, {1}, {1}, oracle);
  try {
    SolveIkAon(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleViolation);
  }
}

TEST(SolveIkAonTest, InvalidInstanceIsRejected) {
  auto oracle = std::make_shared<ModularOracle>(std::vector<Value>{1});
  const Instance inst({1}, {1}, {5, 3}, {1, 1}, oracle);
  try {
    SolveIkAon(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonotoneCapacities);
  }
}

TEST(SolveIkAonTest, AllZeroCoefficientsReturnEmptyChain) {
  auto oracle = std::make_shared<ModularOracle>(std::vector<Value>{4, 5});
  const Instance inst({1, 1}, {4, 5}, {2, 2}, {0, 0}, oracle);
  const SolveReport r = SolveIkAon(inst);
  EXPECT_EQ(r.phi, 0);
  EXPECT_EQ(r.chain, Chain(2, 2));
}

TEST(VerifySolutionTest, SolverOutputVerifies) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst =
        testing::RandomFamilyInstance(Family::kGraphicClasses, seed, 9, 3);
    const SolveReport r = SolveIkAon(inst);
    const VerificationReport v = VerifySolution(inst, r.chain, r.phi);
    ASSERT_TRUE(v.ok());
    ASSERT_EQ(v.recomputed_phi, r.phi);
  }
}

TEST(VerifySolutionTest, ForgedValueIsReported) {
  const Instance inst = testing::RandomFamilyInstance(Family::kModular, 3, 6, 2);
  const SolveReport r = SolveIkAon(inst);
  const VerificationReport v = VerifySolution(inst, r.chain, r.phi + 1);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(v.feasible);
}

TEST(VerifySolutionTest, NonNestedSetsAreInfeasible) {
  auto oracle = std::make_shared<ModularOracle>(std::vector<Value>{1, 1});
  const Instance inst({1, 1}, {1, 1}, {2, 2}, {1, 1}, oracle);
  const VerificationReport v = VerifySolution(inst, std::vector<ItemSet>{{0}, {1}}, 2);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.nested);
  EXPECT_FALSE(v.feasible);
}

TEST(VerifySolutionTest, OverweightIsInfeasible) {
  auto oracle = std::make_shared<ModularOracle>(std::vector<Value>{1, 1});
  const Instance inst({2, 3}, {1, 1}, {2, 4}, {1, 1}, oracle);
  const VerificationReport v = VerifySolution(inst, Chain({1, 2}, 2), 3);
  EXPECT_FALSE(v.feasible);
}

TEST(SolverChoiceTest, Names) {
  EXPECT_EQ(ParseSolverChoice("brute"), SolverChoice::kBrute);
  EXPECT_EQ(SolverName(ParseSolverChoice("heuristic")), "heuristic");
  EXPECT_THROW(ParseSolverChoice("magic"), Error);
}

}  // namespace
}  // namespace ikaon

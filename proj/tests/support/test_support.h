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

// Reference computations for tests. These deliberately avoid the library's
// solvers and independence machinery: optima come from walking nested
// bitmask sequences, independence from raw oracle calls.

#ifndef IKAON_TESTS_SUPPORT_TEST_SUPPORT_H_
#define IKAON_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "ikaon/generators.h"
#include "ikaon/hardness.h"
#include "ikaon/ik_solver.h"
#include "ikaon/instance.h"
#include "ikaon/rng.h"

namespace ikaon::testing {

using Mask = std::uint32_t;

ItemSet MaskItems(Mask mask);
Mask ItemsMask(const ItemSet& set);

// Best sum_t delta_t * f(S_t) over nested feasible mask sequences, found by
// recursing on supersets of the previous set. f is called on masks.
Value ReferenceOptimum(const std::vector<Value>& weights,
                       const std::vector<Value>& capacities,
                       const std::vector<Value>& deltas,
                       const std::function<Value(Mask)>& f);
// f = gamma, every distinct set evaluated once.
Value ReferenceOptimum(const Instance& instance);
// f = sum of profits.
Value ReferenceOptimum(const IkInstance& ik);

// Calls fn for every insertion-time vector over n items and T periods.
void ForEachChain(int num_items, int horizon,
                  const std::function<void(const Chain&)>& fn);

Chain RandomChain(int num_items, int horizon, Rng& rng);

// gamma(S) == p(S), one raw oracle call.
bool DirectlyIndependent(const Instance& instance, const ItemSet& set);

// Minimum weight over all inclusion-maximal independent subsets of `items`,
// by subset enumeration.
Value BruteMinBasisWeight(const Instance& instance, const ItemSet& items);

// Weight-sorted greedy for a single matroid rank function with unit
// coefficients: for t = 1..T, scan items by (weight, id) and add each one
// that fits W_t and keeps the set independent.
Chain MatroidRankGreedy(const Instance& instance);

int DirectEdgeCount(const SubcubicGraph& graph, const std::vector<int>& vertices);
// Best cover over all vertex sets of size <= k.
int BruteMaxKVertexCover(const SubcubicGraph& graph, int k);

// Family instance with n in [1, max_n], T in [1, max_t] and 1..3 classes,
// drawn from `seed`.
Instance RandomFamilyInstance(Family family, std::uint64_t seed, int max_n,
                              int max_t);

}  // namespace ikaon::testing

#endif  // IKAON_TESTS_SUPPORT_TEST_SUPPORT_H_

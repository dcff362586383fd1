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

#include "ikaon/types.h"

#include <algorithm>
#include <iterator>

#include "ikaon/error.h"

namespace ikaon {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kNonMonotoneCapacities: return "NonMonotoneCapacities";
    case ErrorCode::kNonPositiveProfit: return "NonPositiveProfit";
    case ErrorCode::kEmptyHorizon: return "EmptyHorizon";
    case ErrorCode::kUnknownItemId: return "UnknownItemId";
    case ErrorCode::kOracleViolation: return "OracleViolation";
    case ErrorCode::kOverlappingClasses: return "OverlappingClasses";
    case ErrorCode::kNotDependent: return "NotDependent";
    case ErrorCode::kChainNotIndependent: return "ChainNotIndependent";
    case ErrorCode::kLimitsExceeded: return "LimitsExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSolverFailure: return "SolverFailure";
    case ErrorCode::kInfeasibleInternal: return "InfeasibleInternal";
    case ErrorCode::kNotSubcubic: return "NotSubcubic";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kInfeasibleChain: return "InfeasibleChain";
    case ErrorCode::kBadFamily: return "BadFamily";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

void Normalize(ItemSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

bool IsSubset(std::span<const ItemId> sub, std::span<const ItemId> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

ItemSet Union(std::span<const ItemId> a, std::span<const ItemId> b) {
  ItemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ItemSet Difference(std::span<const ItemId> a, std::span<const ItemId> b) {
  ItemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ItemSet Intersection(std::span<const ItemId> a, std::span<const ItemId> b) {
  ItemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ItemSet With(std::span<const ItemId> set, ItemId item) {
  ItemSet out(set.begin(), set.end());
  auto it = std::lower_bound(out.begin(), out.end(), item);
  if (it == out.end() || *it != item) out.insert(it, item);
  return out;
}

ItemSet Without(std::span<const ItemId> set, ItemId item) {
  ItemSet out;
  out.reserve(set.size());
  for (ItemId i : set) {
    if (i != item) out.push_back(i);
  }
  return out;
}

ItemSet SubsetFromMask(std::span<const ItemId> ground, std::uint64_t mask) {
  ItemSet out;
  for (std::size_t b = 0; b < ground.size(); ++b) {
    if (mask >> b & 1U) out.push_back(ground[b]);
  }
  Normalize(out);
  return out;
}

Value SumOver(std::span<const Value> values, std::span<const ItemId> set) {
  Value total = 0;
  for (ItemId i : set) total += values[static_cast<std::size_t>(i)];
  return total;
}

}  // namespace ikaon

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

#ifndef IKAON_TYPES_H_
#define IKAON_TYPES_H_

#include <cstdint>
#include <span>
#include <vector>

namespace ikaon {

// Items are addressed by their 0-based position in the instance.
using ItemId = int;
using Value = std::int64_t;

// A set of items, kept sorted ascending without duplicates.
using ItemSet = std::vector<ItemId>;

// Sorts and deduplicates in place.
void Normalize(ItemSet& set);

bool IsSubset(std::span<const ItemId> sub, std::span<const ItemId> super);

// Both arguments must be normalized.
ItemSet Union(std::span<const ItemId> a, std::span<const ItemId> b);
ItemSet Difference(std::span<const ItemId> a, std::span<const ItemId> b);
ItemSet Intersection(std::span<const ItemId> a, std::span<const ItemId> b);

// Returns `set` plus `item`, normalized. `set` must be normalized.
ItemSet With(std::span<const ItemId> set, ItemId item);
ItemSet Without(std::span<const ItemId> set, ItemId item);

// Members of `ground` selected by the low bits of `mask`.
ItemSet SubsetFromMask(std::span<const ItemId> ground, std::uint64_t mask);

Value SumOver(std::span<const Value> values, std::span<const ItemId> set);

}  // namespace ikaon

#endif  // IKAON_TYPES_H_

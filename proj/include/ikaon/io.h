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

// JSON forms of instances, chains and solve reports.
//
//   instance: {"n", "T", "weights", "profits", "capacities", "deltas",
//              "oracle": <descriptor>}
//   chain:    {"insertion_times": [t or null, ...]}   (1-based times)
//   report:   {"phi", "phi_bar", "oracle_calls", "kept_items", "chain",
//              "solver", "elapsed_ms"}
//
// Item ids are 0-based positions everywhere.

#ifndef IKAON_IO_H_
#define IKAON_IO_H_

#include <string>
#include <vector>

#include "ikaon/instance.h"
#include "ikaon/modularize.h"
#include "ikaon/oracle.h"

namespace ikaon {

Json InstanceToJson(const Instance& instance);
// Parses without validating invariants (see ValidateInstance); throws
// Error(kParseError) on missing fields or n/T disagreeing with array sizes.
Instance InstanceFromJson(const Json& json);

Json ChainToJson(const Chain& chain);
Chain ChainFromJson(const Json& json, int num_items, int horizon);
// Also accepts {"sets": [[ids], ...]}, which may describe a non-nested
// sequence; verification uses this form.
std::vector<ItemSet> ChainSetsFromJson(const Json& json, int num_items,
                                       int horizon);

Json ReportToJson(const SolveReport& report);

// Throws Error(kIoError) / Error(kParseError).
Json ReadJsonFile(const std::string& path);
// Two-space indented, trailing newline.
void WriteJsonFile(const std::string& path, const Json& json);
std::string DumpJson(const Json& json);

}  // namespace ikaon

#endif  // IKAON_IO_H_

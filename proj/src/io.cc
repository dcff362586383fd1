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

#include "ikaon/io.h"

#include <fstream>
#include <sstream>

#include "ikaon/error.h"

namespace ikaon {

Json InstanceToJson(const Instance& instance) {
  Json j;
  j["n"] = instance.num_items();
  j["T"] = instance.horizon();
  j["weights"] = instance.weights();
  j["profits"] = instance.profits();
  j["capacities"] = instance.capacities();
  j["deltas"] = instance.deltas();
  j["oracle"] = instance.oracle().Descriptor();
  return j;
}

Instance InstanceFromJson(const Json& json) {
  try {
    const int n = json.at("n").get<int>();
    const int horizon = json.at("T").get<int>();
    auto weights = json.at("weights").get<std::vector<Value>>();
    auto profits = json.at("profits").get<std::vector<Value>>();
    auto capacities = json.at("capacities").get<std::vector<Value>>();
    auto deltas = json.at("deltas").get<std::vector<Value>>();
    if (static_cast<int>(weights.size()) != n ||
        static_cast<int>(profits.size()) != n) {
      throw Error(ErrorCode::kParseError, "weights/profits length differs from n");
    }
    if (static_cast<int>(capacities.size()) != horizon ||
        static_cast<int>(deltas.size()) != horizon) {
      throw Error(ErrorCode::kParseError,
                  "capacities/deltas length differs from T");
    }
    OraclePtr oracle = OracleFromDescriptor(json.at("oracle"), profits, n);
    return Instance(std::move(weights), std::move(profits), std::move(capacities),
                    std::move(deltas), std::move(oracle));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad instance: ") + e.what());
  }
}

Json ChainToJson(const Chain& chain) {
  Json times = Json::array();
  for (int t : chain.insertion_times()) {
    if (t == Chain::kNever) {
      times.push_back(nullptr);
    } else {
      times.push_back(t);
    }
  }
  Json j;
  j["insertion_times"] = std::move(times);
  return j;
}

Chain ChainFromJson(const Json& json, int num_items, int horizon) {
  try {
    if (!json.contains("insertion_times")) {
      return Chain::FromSets(ChainSetsFromJson(json, num_items, horizon),
                             num_items);
    }
    const Json& times = json.at("insertion_times");
    if (!times.is_array() || static_cast<int>(times.size()) != num_items) {
      throw Error(ErrorCode::kParseError,
                  "insertion_times must list one entry per item");
    }
    std::vector<int> parsed;
    for (const auto& t : times) {
      parsed.push_back(t.is_null() ? Chain::kNever : t.get<int>());
      if (parsed.back() == Chain::kNever && !t.is_null()) {
        throw Error(ErrorCode::kParseError, "insertion times are 1-based");
      }
    }
    return Chain(std::move(parsed), horizon);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad chain: ") + e.what());
  }
}

std::vector<ItemSet> ChainSetsFromJson(const Json& json, int num_items,
                                       int horizon) {
  try {
    if (json.contains("sets")) {
      return json.at("sets").get<std::vector<ItemSet>>();
    }
    return ChainFromJson(json, num_items, horizon).Sets();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad chain: ") + e.what());
  }
}

Json ReportToJson(const SolveReport& report) {
  Json j;
  j["phi"] = report.phi;
  j["phi_bar"] = report.phi_bar;
  j["oracle_calls"] = report.oracle_calls;
  j["kept_items"] = report.kept_items;
  j["chain"] = ChainToJson(report.chain);
  j["solver"] = report.solver;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

void WriteJsonFile(const std::string& path, const Json& json) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << DumpJson(json);
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path);
}

}  // namespace ikaon

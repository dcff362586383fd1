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

#include "ikaon/oracle.h"

#include <algorithm>
#include <set>
#include <string>

#include "ikaon/error.h"

namespace ikaon {
namespace {

Json MatroidToJson(const MatroidSpec& spec) {
  Json j;
  switch (spec.kind) {
    case MatroidSpec::Kind::kUniform:
      j["type"] = "uniform";
      j["ground"] = spec.ground;
      j["rank"] = spec.rank_cap;
      break;
    case MatroidSpec::Kind::kPartition:
      j["type"] = "partition";
      j["groups"] = spec.groups;
      j["caps"] = spec.caps;
      break;
    case MatroidSpec::Kind::kGraphic: {
      j["type"] = "graphic";
      j["items"] = spec.ground;
      j["num_vertices"] = spec.num_vertices;
      Json edges = Json::array();
      for (const auto& [u, v] : spec.edges) edges.push_back({u, v});
      j["edges"] = std::move(edges);
      break;
    }
  }
  return j;
}

std::vector<std::pair<int, int>> EdgesFromJson(const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(ErrorCode::kParseError, "edge must be a [u, v] pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

MatroidSpec MatroidFromJson(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "uniform") {
    return MatroidSpec::Uniform(j.at("ground").get<ItemSet>(),
                                j.at("rank").get<int>());
  }
  if (type == "partition") {
    return MatroidSpec::Partition(j.at("groups").get<std::vector<ItemSet>>(),
                                  j.at("caps").get<std::vector<int>>());
  }
  if (type == "graphic") {
    return MatroidSpec::Graphic(j.at("items").get<ItemSet>(),
                                j.at("num_vertices").get<int>(),
                                EdgesFromJson(j.at("edges")));
  }
  throw Error(ErrorCode::kParseError, "unknown matroid type '" + type + "'");
}

void CheckIds(std::span<const ItemId> set, int ground_size) {
  ItemId prev = -1;
  for (ItemId i : set) {
    if (i < 0 || i >= ground_size) {
      throw Error(ErrorCode::kUnknownItemId,
                  "item " + std::to_string(i) + " outside ground of size " +
                      std::to_string(ground_size));
    }
    if (i <= prev) {
      throw Error(ErrorCode::kInvalidInstance,
                  "oracle input must be sorted and duplicate-free");
    }
    prev = i;
  }
}

}  // namespace

Value AggregationOracle::Evaluate(std::span<const ItemId> set) const {
  CheckIds(set, ground_size());
  calls_.fetch_add(1, std::memory_order_relaxed);
  return DoEvaluate(set);
}

// ---------------------------------------------------------------------------

ModularOracle::ModularOracle(std::vector<Value> profits)
    : profits_(std::move(profits)) {}

Value ModularOracle::UpperBound() const {
  Value total = 0;
  for (Value p : profits_) total += std::max<Value>(p, 0);
  return total;
}

Json ModularOracle::Descriptor() const {
  Json j;
  j["kind"] = "modular";
  j["profits"] = profits_;
  return j;
}

Value ModularOracle::DoEvaluate(std::span<const ItemId> set) const {
  return SumOver(profits_, set);
}

// ---------------------------------------------------------------------------

MatroidRankSumOracle::MatroidRankSumOracle(int ground_size,
                                           std::vector<RankClass> classes)
    : ground_size_(ground_size),
      classes_(std::move(classes)),
      class_of_(static_cast<std::size_t>(ground_size), -1) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const RankClass& rc = classes_[c];
    ValidateMatroidSpec(rc.matroid);
    if (rc.profit < 1) {
      throw Error(ErrorCode::kInvalidInstance, "class profit must be positive");
    }
    if (c > 0 && classes_[c - 1].profit >= rc.profit) {
      throw Error(ErrorCode::kInvalidInstance,
                  "class profits must be strictly increasing");
    }
    for (ItemId i : rc.matroid.ground) {
      if (i < 0 || i >= ground_size) {
        throw Error(ErrorCode::kInvalidInstance,
                    "class item " + std::to_string(i) + " out of range");
      }
      if (class_of_[i] != -1) {
        throw Error(ErrorCode::kOverlappingClasses,
                    "item " + std::to_string(i) + " belongs to two classes");
      }
      class_of_[i] = static_cast<int>(c);
    }
  }
}

Value MatroidRankSumOracle::UpperBound() const {
  Value total = 0;
  for (const RankClass& rc : classes_) {
    total += rc.profit * static_cast<Value>(rc.matroid.ground.size());
  }
  return total;
}

Json MatroidRankSumOracle::Descriptor() const {
  Json j;
  j["kind"] = "matroid_rank_sum";
  Json classes = Json::array();
  for (const RankClass& rc : classes_) {
    Json c;
    c["profit"] = rc.profit;
    c["matroid"] = MatroidToJson(rc.matroid);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

Value MatroidRankSumOracle::DoEvaluate(std::span<const ItemId> set) const {
  std::vector<ItemSet> slices(classes_.size());
  for (ItemId i : set) {
    if (int c = class_of_[i]; c >= 0) slices[c].push_back(i);
  }
  Value total = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (slices[c].empty()) continue;
    total += classes_[c].profit * MatroidRank(classes_[c].matroid, slices[c]);
  }
  return total;
}

// ---------------------------------------------------------------------------

CoverageOracle::CoverageOracle(int num_vertices,
                               std::vector<std::pair<int, int>> edges,
                               std::vector<int> item_vertex)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      item_vertex_(std::move(item_vertex)) {
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
      throw Error(ErrorCode::kInvalidInstance, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidInstance, "self-loop in graph");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorCode::kInvalidInstance, "parallel edge in graph");
    }
  }
  for (int v : item_vertex_) {
    if (v < 0 || v >= num_vertices_) {
      throw Error(ErrorCode::kInvalidInstance, "item mapped to unknown vertex");
    }
  }
}

int CoverageOracle::max_degree() const {
  std::vector<int> degree(static_cast<std::size_t>(num_vertices_), 0);
  for (const auto& [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

Json CoverageOracle::Descriptor() const {
  Json j;
  j["kind"] = "coverage";
  j["num_vertices"] = num_vertices_;
  Json edges = Json::array();
  for (const auto& [u, v] : edges_) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["item_vertex"] = item_vertex_;
  return j;
}

Value CoverageOracle::DoEvaluate(std::span<const ItemId> set) const {
  std::vector<char> chosen(static_cast<std::size_t>(num_vertices_), 0);
  for (ItemId i : set) chosen[item_vertex_[i]] = 1;
  Value covered = 0;
  for (const auto& [u, v] : edges_) {
    if (chosen[u] || chosen[v]) ++covered;
  }
  return covered;
}

// ---------------------------------------------------------------------------

TableOracle::TableOracle(std::vector<Value> values) : values_(std::move(values)) {
  int n = 0;
  while (n <= kMaxItems && (std::size_t{1} << n) < values_.size()) ++n;
  if (n > kMaxItems || (std::size_t{1} << n) != values_.size()) {
    throw Error(ErrorCode::kInvalidInstance,
                "table oracle needs 2^n values with n <= 20");
  }
  ground_size_ = n;
}

Value TableOracle::UpperBound() const {
  return *std::max_element(values_.begin(), values_.end());
}

Json TableOracle::Descriptor() const {
  Json j;
  j["kind"] = "table";
  j["values"] = values_;
  return j;
}

Value TableOracle::DoEvaluate(std::span<const ItemId> set) const {
  std::size_t mask = 0;
  for (ItemId i : set) mask |= std::size_t{1} << i;
  return values_[mask];
}

// ---------------------------------------------------------------------------

RestrictedOracle::RestrictedOracle(OraclePtr base,
                                   std::vector<ItemId> local_to_base)
    : base_(std::move(base)), local_to_base_(std::move(local_to_base)) {
  if (!std::is_sorted(local_to_base_.begin(), local_to_base_.end())) {
    throw Error(ErrorCode::kInvalidInstance,
                "restricted oracle mapping must be increasing");
  }
  for (ItemId b : local_to_base_) {
    if (b < 0 || b >= base_->ground_size()) {
      throw Error(ErrorCode::kUnknownItemId, "restricted item outside base");
    }
  }
}

Json RestrictedOracle::Descriptor() const {
  Json j;
  j["kind"] = "restricted";
  j["items"] = local_to_base_;
  j["base_ground_size"] = base_->ground_size();
  j["base"] = base_->Descriptor();
  return j;
}

Value RestrictedOracle::DoEvaluate(std::span<const ItemId> set) const {
  // The mapping is increasing, so the image stays sorted.
  ItemSet mapped;
  mapped.reserve(set.size());
  for (ItemId i : set) mapped.push_back(local_to_base_[i]);
  return base_->Evaluate(mapped);
}

// ---------------------------------------------------------------------------

OraclePtr OracleFromDescriptor(const Json& descriptor,
                               std::span<const Value> profits,
                               int ground_size) {
  OraclePtr oracle;
  try {
    const std::string kind = descriptor.at("kind").get<std::string>();
    if (kind == "modular") {
      std::vector<Value> values(profits.begin(), profits.end());
      if (descriptor.contains("profits")) {
        values = descriptor.at("profits").get<std::vector<Value>>();
      }
      oracle = std::make_shared<ModularOracle>(std::move(values));
    } else if (kind == "matroid_rank_sum") {
      std::vector<RankClass> classes;
      for (const auto& c : descriptor.at("classes")) {
        classes.push_back(
            {c.at("profit").get<Value>(), MatroidFromJson(c.at("matroid"))});
      }
      oracle = std::make_shared<MatroidRankSumOracle>(ground_size,
                                                      std::move(classes));
    } else if (kind == "coverage") {
      oracle = std::make_shared<CoverageOracle>(
          descriptor.at("num_vertices").get<int>(),
          EdgesFromJson(descriptor.at("edges")),
          descriptor.at("item_vertex").get<std::vector<int>>());
    } else if (kind == "table") {
      oracle = std::make_shared<TableOracle>(
          descriptor.at("values").get<std::vector<Value>>());
    } else if (kind == "restricted") {
      auto items = descriptor.at("items").get<std::vector<ItemId>>();
      const Json& base = descriptor.at("base");
      const int base_size = descriptor.at("base_ground_size").get<int>();
      oracle = std::make_shared<RestrictedOracle>(
          OracleFromDescriptor(base, {}, base_size), std::move(items));
    } else {
      throw Error(ErrorCode::kParseError, "unknown oracle kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("bad oracle descriptor: ") + e.what());
  }
  if (oracle->ground_size() != ground_size) {
    throw Error(ErrorCode::kInvalidInstance,
                "oracle covers " + std::to_string(oracle->ground_size()) +
                    " items but the instance has " +
                    std::to_string(ground_size));
  }
  return oracle;
}

}  // namespace ikaon

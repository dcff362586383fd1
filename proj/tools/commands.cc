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

#include "commands.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ikaon/error.h"
#include "ikaon/generators.h"
#include "ikaon/hardness.h"
#include "ikaon/io.h"
#include "ikaon/modularize.h"

namespace ikaon::cli {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string instance_path;
  std::string out_path;
  std::string report_path;
  std::string graph_path;
  std::string dir;
  std::string solver = "auto";
  std::string solvers = "exact,heuristic";
  std::string limits;
  std::string family;
  std::uint64_t seed = kDefaultSeed;
  bool quiet = false;
  GeneratorParams gen;
  int reduction_horizon = 1;
};

std::uint64_t ParseUnsigned(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kParseError,
                "limit " + std::string(key) + " needs a non-negative integer, got '" +
                    std::string(text) + "'");
  }
  return value;
}

std::string FormatDouble(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string();
}

// value / reference, or empty when undefined. Two zeros count as a match.
std::string Ratio(Value value, std::optional<Value> reference) {
  if (!reference) return "";
  if (*reference == 0) return value == 0 ? "1" : "";
  return FormatDouble(static_cast<double>(value) / static_cast<double>(*reference));
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOracleViolation: return kExitOracleViolation;
    case ErrorCode::kLimitsExceeded:
    case ErrorCode::kBudgetExceeded: return kExitLimitsExceeded;
    default: return kExitFailure;
  }
}

std::string InstanceSummary(const Instance& instance) {
  std::ostringstream line;
  line << "n=" << instance.num_items() << " T=" << instance.horizon()
       << " classes=" << ComputeProfitPartition(instance).size()
       << " oracle=" << instance.oracle().Descriptor().value("kind", "?");
  return line.str();
}

int CmdGenerate(const RunConfig& cfg, std::ostream& out) {
  const Family family = ParseFamily(cfg.family);
  GeneratorParams params = cfg.gen;
  params.seed = cfg.seed;
  if (!cfg.graph_path.empty()) {
    std::ifstream in(cfg.graph_path);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + cfg.graph_path);
    params.graph = ReadEdgeList(in);
  }
  const Instance instance = GenerateInstance(family, params);
  WriteJsonFile(cfg.out_path, InstanceToJson(instance));
  if (!cfg.quiet) out << InstanceSummary(instance) << '\n';
  return kExitOk;
}

int CmdReduceVc(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.graph_path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + cfg.graph_path);
  const SubcubicGraph graph = ReadEdgeList(in);
  const VcReductionInstance reduction =
      BuildReduction(graph, cfg.gen.k, cfg.reduction_horizon);
  WriteJsonFile(cfg.out_path, InstanceToJson(reduction.instance));
  if (!cfg.quiet) {
    out << InstanceSummary(reduction.instance) << " k=" << reduction.k << '\n';
  }
  return kExitOk;
}

int CmdSolve(const RunConfig& cfg, std::ostream& out) {
  const Instance instance = InstanceFromJson(ReadJsonFile(cfg.instance_path));
  PipelineOptions options;
  options.solver = ParseSolverChoice(cfg.solver);
  options.limits = ParseLimits(cfg.limits);
  options.seed = cfg.seed;
  const SolveReport report = SolveIkAon(instance, options);
  const Json json = ReportToJson(report);
  if (cfg.out_path.empty()) {
    out << DumpJson(json);
  } else {
    WriteJsonFile(cfg.out_path, json);
    if (!cfg.quiet) {
      out << "phi=" << report.phi << " solver=" << report.solver
          << " kept=" << report.kept_items.size() << '/' << instance.num_items()
          << " oracle_calls=" << report.oracle_calls << '\n';
    }
  }
  return kExitOk;
}

int CmdVerify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance instance = InstanceFromJson(ReadJsonFile(cfg.instance_path));
  const Json report = ReadJsonFile(cfg.report_path);
  Value claimed = 0;
  std::vector<ItemSet> sets;
  try {
    claimed = report.at("phi").get<Value>();
    sets = ChainSetsFromJson(report.at("chain"), instance.num_items(),
                             instance.horizon());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad report: ") + e.what());
  }
  VerificationReport check = VerifySolution(instance, sets, claimed);
  if (check.ok() && report.contains("phi_bar")) {
    // The chain holds kept items only, so its modular profit is Phi as well.
    Value phi_bar = 0;
    for (std::size_t t = 0; t < sets.size(); ++t) {
      phi_bar += instance.deltas()[t] * SumOver(instance.profits(), sets[t]);
    }
    const Value claimed_bar = report.at("phi_bar").get<Value>();
    if (phi_bar != claimed_bar) {
      check.issues.push_back("claimed phi_bar " + std::to_string(claimed_bar) +
                             " but the chain's modular profit is " +
                             std::to_string(phi_bar));
    }
  }
  if (!check.ok()) {
    for (const std::string& issue : check.issues) err << "mismatch: " << issue << '\n';
    return kExitFailure;
  }
  if (!cfg.quiet) out << "ok phi=" << *check.recomputed_phi << '\n';
  return kExitOk;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

struct BenchRow {
  std::string instance;
  std::string solver;
  std::string status = "ok";
  std::optional<Value> value;
  std::optional<Value> brute;
  std::optional<Value> exact;
  std::uint64_t oracle_calls = 0;
  double elapsed_ms = 0;
};

// Rows are produced sequentially, instance paths in sorted order.
int CmdBench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SolverChoice> solvers;
  for (const std::string& name : SplitList(cfg.solvers)) {
    solvers.push_back(ParseSolverChoice(name));
  }
  const SolverLimits limits = ParseLimits(cfg.limits);
  std::vector<fs::path> paths;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(cfg.dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      paths.push_back(entry.path());
    }
  }
  if (ec) throw Error(ErrorCode::kIoError, "cannot list " + cfg.dir);
  std::sort(paths.begin(), paths.end());

  std::vector<BenchRow> rows;
  for (const fs::path& path : paths) {
    std::optional<Instance> instance;
    std::string load_error;
    try {
      instance.emplace(InstanceFromJson(ReadJsonFile(path.string())));
    } catch (const Error& e) {
      load_error = std::string(ErrorCodeName(e.code()));
      err << path.string() << ": " << e.what() << '\n';
    }
    std::optional<Value> brute;
    if (instance) {
      try {
        brute = BruteForceChains(*instance, limits).value;
      } catch (const Error&) {
        // Over budget or unusable oracle: the ratio cell stays empty.
      }
    }
    const std::size_t first = rows.size();
    std::optional<Value> exact;
    for (SolverChoice solver : solvers) {
      BenchRow row;
      row.instance = path.filename().string();
      row.solver = std::string(SolverName(solver));
      row.brute = brute;
      if (!instance) {
        row.status = load_error;
      } else {
        try {
          PipelineOptions options{solver, limits, cfg.seed};
          const SolveReport report = SolveIkAon(*instance, options);
          row.value = report.phi;
          row.oracle_calls = report.oracle_calls;
          row.elapsed_ms = report.elapsed_ms;
          if (report.exact && !exact) exact = report.phi;
        } catch (const Error& e) {
          row.status = std::string(ErrorCodeName(e.code()));
          err << path.string() << " [" << row.solver << "]: " << e.what() << '\n';
        }
      }
      rows.push_back(std::move(row));
    }
    for (std::size_t r = first; r < rows.size(); ++r) rows[r].exact = exact;
  }

  std::ostringstream csv;
  csv << "instance,solver,status,value,brute_optimum,ratio_to_brute,"
         "ratio_to_exact,oracle_calls,elapsed_ms\n";
  std::size_t failures = 0;
  for (const BenchRow& row : rows) {
    if (!row.value) ++failures;
    csv << row.instance << ',' << row.solver << ',' << row.status << ',';
    if (row.value) csv << *row.value;
    csv << ',';
    if (row.brute) csv << *row.brute;
    csv << ',' << (row.value ? Ratio(*row.value, row.brute) : "") << ','
        << (row.value ? Ratio(*row.value, row.exact) : "") << ','
        << row.oracle_calls << ',' << FormatDouble(row.elapsed_ms) << '\n';
  }
  if (cfg.out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIoError, "cannot write " + cfg.out_path);
    file << csv.str();
    if (!cfg.quiet) {
      out << rows.size() << " rows, " << failures << " failed\n";
    }
  }
  return !rows.empty() && failures == rows.size() ? kExitFailure : kExitOk;
}

}  // namespace

SolverLimits ParseLimits(std::string_view text) {
  SolverLimits limits;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view pair = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (pair.empty()) continue;
    const std::size_t eq = pair.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "limit '" + std::string(pair) + "' is not key=value");
    }
    const std::string_view key = pair.substr(0, eq);
    const std::uint64_t value = ParseUnsigned(key, pair.substr(eq + 1));
    if (key == "max_n_exact") {
      limits.max_n_exact = static_cast<int>(std::min<std::uint64_t>(value, 1u << 30));
    } else if (key == "max_t_exact") {
      limits.max_t_exact = static_cast<int>(std::min<std::uint64_t>(value, 1u << 30));
    } else if (key == "max_states_brute") {
      limits.max_states_brute = value;
    } else if (key == "local_search_budget") {
      limits.local_search_budget = value;
    } else {
      throw Error(ErrorCode::kParseError,
                  "unknown limit '" + std::string(key) +
                      "' (expected max_n_exact, max_t_exact, max_states_brute or "
                      "local_search_budget)");
    }
  }
  return limits;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Incremental knapsack with all-or-nothing submodular profits", "ikaon"};
  app.require_subcommand(1);
  app.add_flag("--quiet", cfg.quiet, "Suppress summary lines")->configurable();

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  };

  CLI::App* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--family", cfg.family,
                       "modular | uniform-classes | partition-classes | "
                       "graphic-classes | vc-reduction")
      ->required();
  generate->add_option("--n", cfg.gen.num_items, "Items (vertices for vc-reduction)")
      ->capture_default_str();
  generate->add_option("--T", cfg.gen.horizon, "Periods")->capture_default_str();
  generate->add_option("--classes", cfg.gen.num_classes, "Profit classes")
      ->capture_default_str();
  generate->add_option("--max-weight", cfg.gen.max_weight)->capture_default_str();
  generate->add_option("--max-profit", cfg.gen.max_profit)->capture_default_str();
  generate->add_option("--max-delta", cfg.gen.max_delta)->capture_default_str();
  generate->add_option("--graph", cfg.graph_path, "Edge list for vc-reduction");
  generate->add_option("--k", cfg.gen.k, "Cover size for vc-reduction (0: n/3)");
  generate->add_option("--edge-prob", cfg.gen.edge_probability)
      ->capture_default_str();
  generate->add_option("--out", cfg.out_path, "Instance file")->required();
  add_seed(generate);

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--instance", cfg.instance_path)->required();
  solve->add_option("--solver", cfg.solver, "auto | exact | heuristic | brute")
      ->capture_default_str();
  solve->add_option("--limits", cfg.limits, "key=value,...");
  solve->add_option("--out", cfg.out_path, "Report file (stdout if omitted)");
  add_seed(solve);

  CLI::App* verify = app.add_subcommand("verify", "Recheck a solve report");
  verify->add_option("--instance", cfg.instance_path)->required();
  verify->add_option("--report", cfg.report_path)->required();

  CLI::App* reduce = app.add_subcommand(
      "reduce-vc", "Encode max k-vertex cover on a subcubic graph");
  reduce->add_option("--graph", cfg.graph_path, "Edge list")->required();
  reduce->add_option("--k", cfg.gen.k)->required();
  reduce->add_option("--T", cfg.reduction_horizon)->capture_default_str();
  reduce->add_option("--out", cfg.out_path, "Instance file")->required();

  CLI::App* bench = app.add_subcommand("bench", "Run solvers over a directory");
  bench->add_option("--dir", cfg.dir, "Directory of instance files")->required();
  bench->add_option("--solvers", cfg.solvers)->capture_default_str();
  bench->add_option("--limits", cfg.limits, "key=value,...");
  bench->add_option("--out", cfg.out_path, "CSV file (stdout if omitted)");
  add_seed(bench);

  for (CLI::App* cmd : {generate, solve, verify, reduce, bench}) {
    cmd->add_flag("--quiet", cfg.quiet, "Suppress summary lines");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (generate->parsed()) return CmdGenerate(cfg, out);
    if (solve->parsed()) return CmdSolve(cfg, out);
    if (verify->parsed()) return CmdVerify(cfg, out, err);
    if (reduce->parsed()) return CmdReduceVc(cfg, out);
    if (bench->parsed()) return CmdBench(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitFailure;
}

}  // namespace ikaon::cli

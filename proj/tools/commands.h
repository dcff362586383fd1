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

// The `ikaon` command line. Everything here parses, dispatches to the
// library and serializes; no algorithmic work happens in this layer.

#ifndef IKAON_TOOLS_COMMANDS_H_
#define IKAON_TOOLS_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ikaon/ik_solver.h"

namespace ikaon::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // bad input, I/O error, verification mismatch
  kExitOracleViolation = 2,
  kExitLimitsExceeded = 3,
};

// "key=value,key=value" over the SolverLimits fields max_n_exact,
// max_t_exact, max_states_brute and local_search_budget. Unknown keys and
// malformed values throw Error(kParseError).
SolverLimits ParseLimits(std::string_view text);

// Runs one invocation; `args` excludes the program name. Results go to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ikaon::cli

#endif  // IKAON_TOOLS_COMMANDS_H_

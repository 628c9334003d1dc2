// Copyright 2026 The Storyweave Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace storyweave::cli {

// Process exit codes; one per error class.
enum ExitCode : int {
  kExitOk = 0,
  kExitTestFailures = 1,
  kExitInputError = 2,      // DSL diagnostics, unreadable or malformed input files
  kExitNotSampleable = 3,   // --uniform on a cyclic/truncated graph
  kExitUnsupportedCriterion = 4,
  kExitRendererNotFound = 5,
  kExitAdapterMisconfigured = 6,
  kExitRendererFailed = 7,
  kExitBudgetExceeded = 8,
  kExitUsage = 64,
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Help text of the top-level command followed by every subcommand's.
std::string full_help();

}  // namespace storyweave::cli

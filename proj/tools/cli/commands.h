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

#ifndef DELTATWIST_TOOLS_CLI_COMMANDS_H_
#define DELTATWIST_TOOLS_CLI_COMMANDS_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "deltatwist/error.h"

namespace deltatwist::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
  kExitTooLarge = 3,
  kExitPrecondition = 4,
};

int ExitCodeFor(ErrorCode code);

// Everything the process touches, so tests can drive the tool in memory.
struct Environment {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  // Value of DELTATWIST_MAX_N, if set.
  std::optional<std::string> max_n_env;
};

// Parses argv (argv[0] is the program name) and runs one command.
int RunCli(int argc, const char* const* argv, const Environment& env);

}  // namespace deltatwist::cli

#endif  // DELTATWIST_TOOLS_CLI_COMMANDS_H_

/* Copyright 2026 The trico Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line front end. Every command produces one JSON report; without
// --json it is rendered as indented text with per-k tables.

#ifndef TRICO_CLI_HPP
#define TRICO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace trico {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,           // usage, parse and argument errors
  kExitOracleMismatch = 2,  // a closed form disagreed with its oracle
  kExitResourceBound = 3,   // an enumeration bound was hit
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trico

#endif  // TRICO_CLI_HPP

// Copyright 2026 The svsim Authors
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


#ifndef SVSIM_TOOLS_CLI_H_
#define SVSIM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace svsim::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntimeError = 3;

// Environment variable overriding the default kernel worker count.
inline constexpr char kWorkersEnv[] = "SVSIM_WORKERS";

// Runs the command line `args` (args[0] is the program name) writing normal
// output to `out` and diagnostics to `err`. Returns the exit status.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace svsim::cli

#endif  // SVSIM_TOOLS_CLI_H_

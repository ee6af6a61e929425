// Copyright 2026 The MWE Workbench Authors.
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

#ifndef MWE_CLI_H_
#define MWE_CLI_H_

#include <iosfwd>

namespace mwe {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or data errors
inline constexpr int kExitUsage = 2;

// Runs one command line. Human-readable output goes to `out`, diagnostics
// to `err`; machine-readable results are written to files.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace mwe

#endif  // MWE_CLI_H_

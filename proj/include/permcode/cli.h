// Copyright 2026 The permcode Authors
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

#ifndef PERMCODE_CLI_H_
#define PERMCODE_CLI_H_

#include <ostream>

namespace permcode {

inline constexpr char kVersion[] = "1.0.0";
// Bumped whenever a field of the JSON report changes meaning or disappears.
inline constexpr char kReportSchema[] = "permcode-report/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitSolverFailure = 4;

// Entry point of the `permcode` tool. Reports go to `out`, diagnostics and
// usage text to `err`. Returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace permcode

#endif  // PERMCODE_CLI_H_

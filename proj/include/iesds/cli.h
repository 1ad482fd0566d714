// Copyright 2026 The IESDS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IESDS_CLI_H_
#define IESDS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace iesds {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitCapExceeded = 2;
inline constexpr int kExitVerificationFailed = 3;

// Runs the `iesds` command line with `args[0]` as the program name.
// Results go to `out` (or the --out file), diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace iesds

#endif  // IESDS_CLI_H_

// Copyright 2026 The pvc5 Authors
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

#ifndef PVC5_TOOLS_CLI_HPP_
#define PVC5_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pvc5::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// argv[0] is the program name. Never throws; errors go to `err` and the
// exit status.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace pvc5::cli

#endif  // PVC5_TOOLS_CLI_HPP_

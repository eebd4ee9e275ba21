// Copyright 2026 The Game Dynamics Lab Authors.
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

#ifndef GDL_TOOLS_CLI_H_
#define GDL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gdl {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one subcommand (analyze, simulate, scan, basin, regret). `args`
// excludes the program name. Returns 0 on success, 1 on input errors and 2
// on numerical failures. A manifest.json is written to the output directory
// whenever that directory can be created.
int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace gdl

#endif  // GDL_TOOLS_CLI_H_

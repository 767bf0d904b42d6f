// Copyright 2026 The Poncelet Loci Authors
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


// Command-line front end. `run_cli` holds all of it so tests can drive it
// without a process.

#ifndef PONCELET_CLI_HPP_
#define PONCELET_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace poncelet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verify found a failing check
inline constexpr int kExitUsage = 2;    // bad flags or invalid config
inline constexpr int kExitCompute = 3;  // geometry failed

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poncelet

#endif  // PONCELET_CLI_HPP_

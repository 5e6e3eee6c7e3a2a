// Copyright 2026 The ffv Authors
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

#ifndef FFV_CLI_HPP_
#define FFV_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ffv {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     // I/O error or failed self-test
inline constexpr int kExitValidation = 2;  // bad flags, parameters or file contents
inline constexpr int kExitNullUnlock = 3;  // unlock produced no key

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffv

#endif  // FFV_CLI_HPP_

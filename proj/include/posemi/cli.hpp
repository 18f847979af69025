// Copyright 2026 The posemi Authors
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

#ifndef POSEMI_CLI_HPP_
#define POSEMI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace posemi::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // axiom failure, exhaustion, verdict "no"
inline constexpr int kUsage = 2;     // usage or parse error
inline constexpr int kLimit = 3;     // search node limit reached

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace posemi::cli

#endif  // POSEMI_CLI_HPP_

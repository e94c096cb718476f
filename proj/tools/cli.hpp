// Copyright 2026 The Daisy Authors
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

// Command-line frontend. Exit codes: 0 success or affirmative verdict,
// 1 well-formed negative verdict, 2 usage, input or parse error.

#ifndef DAISY_TOOLS_CLI_HPP_
#define DAISY_TOOLS_CLI_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace daisy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. `in` backs the "-" input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace daisy::cli

#endif  // DAISY_TOOLS_CLI_HPP_

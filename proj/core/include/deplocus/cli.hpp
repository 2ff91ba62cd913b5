// Copyright 2026 The deplocus Authors
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

#ifndef DEPLOCUS_CLI_HPP
#define DEPLOCUS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace deplocus::cli {

/// Dispatches a full command line (without the program name). Exit codes:
/// 0 success, 1 input or parse errors, 2 capacity/budget exhaustion,
/// 3 internal invariant violations.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace deplocus::cli

#endif  // DEPLOCUS_CLI_HPP

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

#ifndef DEPLOCUS_PARSE_HPP
#define DEPLOCUS_PARSE_HPP

#include <string>

#include "deplocus/poly.hpp"

namespace deplocus {

/// Parses a polynomial expression over the given ring. Grammar: integer
/// literals, declared variable names, + - * ^ and parentheses; ^ binds
/// tightest and takes a nonnegative integer exponent; a leading - negates.
/// Implicit multiplication is rejected. Coefficients reduce mod p. Throws
/// SyntaxError (with a 0-based offset) or UnknownVariableError.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx);

}  // namespace deplocus

#endif  // DEPLOCUS_PARSE_HPP

// Copyright 2026 The pdwtile Authors.
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

// Arithmetic expressions for angle arguments, e.g. "acos(-1/(2*sqrt(7)))"
// or "4*pi/3". Supports numbers, pi, + - * / ^, parentheses and sqrt, sin,
// cos, tan, asin, acos, atan.

#ifndef PDWTILE_TOOLS_EXPR_HPP_
#define PDWTILE_TOOLS_EXPR_HPP_

#include <string_view>

namespace pdwcli {

// Throws std::invalid_argument on a malformed expression.
double EvalExpr(std::string_view text);

}  // namespace pdwcli

#endif  // PDWTILE_TOOLS_EXPR_HPP_

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

#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pdwcli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  double Parse() {
    const double v = Sum();
    Skip();
    if (i_ != s_.size()) Fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  // sum := product (('+' | '-') product)*
  double Sum() {
    double v = Product();
    for (;;) {
      if (Eat('+')) v += Product();
      else if (Eat('-')) v -= Product();
      else return v;
    }
  }

  // product := unary (('*' | '/') unary)*
  double Product() {
    double v = Unary();
    for (;;) {
      if (Eat('*')) v *= Unary();
      else if (Eat('/')) v /= Unary();
      else return v;
    }
  }

  // unary := ('-' | '+') unary | power
  double Unary() {
    if (Eat('-')) return -Unary();
    if (Eat('+')) return Unary();
    return Power();
  }

  // power := primary ('^' unary)?   (right associative through unary)
  double Power() {
    const double base = Primary();
    if (Eat('^')) return std::pow(base, Unary());
    return base;
  }

  double Primary() {
    Skip();
    if (Eat('(')) {
      const double v = Sum();
      if (!Eat(')')) Fail("missing ')'");
      return v;
    }
    if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.'))
      return Number();
    if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
      std::string name;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])))
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(s_[i_++])));
      if (name == "pi") return std::numbers::pi;
      if (!Eat('(')) Fail("expected '(' after " + name);
      const double x = Sum();
      if (!Eat(')')) Fail("missing ')'");
      if (name == "sqrt") return std::sqrt(x);
      if (name == "sin") return std::sin(x);
      if (name == "cos") return std::cos(x);
      if (name == "tan") return std::tan(x);
      if (name == "asin" || name == "arcsin") return std::asin(x);
      if (name == "acos" || name == "arccos") return std::acos(x);
      if (name == "atan" || name == "arctan") return std::atan(x);
      Fail("unknown function " + name);
    }
    Fail("expected a number");
  }

  double Number() {
    const char* begin = s_.data() + i_;
    double v = 0;
    auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
    if (ec != std::errc()) Fail("bad number");
    i_ += static_cast<size_t>(ptr - begin);
    return v;
  }

  void Skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool Eat(char c) {
    Skip();
    if (i_ < s_.size() && s_[i_] == c) { ++i_; return true; }
    return false;
  }

  [[noreturn]] void Fail(const std::string& msg) {
    throw std::invalid_argument("expression \"" + std::string(s_) + "\": " + msg);
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

double EvalExpr(std::string_view text) {
  const double v = Parser(text).Parse();
  if (!std::isfinite(v)) throw std::invalid_argument("expression \"" + std::string(text) + "\" is not finite");
  return v;
}

}  // namespace pdwcli

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

#ifndef PDWTILE_ERRORS_HPP_
#define PDWTILE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pdw {

// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Angle triple violating one of the spherical triangle existence
// inequalities. `inequality()` names the violated one.
class NoSuchTriangle : public DomainError {
 public:
  NoSuchTriangle(const std::string& inequality)
      : DomainError("no spherical triangle: violated " + inequality),
        inequality_(inequality) {}
  const std::string& inequality() const { return inequality_; }

 private:
  std::string inequality_;
};

// Corner angle too close to pi/2 or pi (cotangent blows up or the tile
// cannot exist).
class SingularAngle : public DomainError {
 public:
  using DomainError::DomainError;
};

// Edge length that does not solve the tile quadratic.
class NotATile : public DomainError {
 public:
  using DomainError::DomainError;
};

// Geometric construction hit a degenerate configuration.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Layout search did not produce the required tiling.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input (JSON, OBJ).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdw

#endif  // PDWTILE_ERRORS_HPP_

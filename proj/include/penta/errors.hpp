// Copyright 2026 The penta Authors
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

#ifndef PENTA_ERRORS_HPP_
#define PENTA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace penta {

// A request exceeds a configured memory/time bound (e.g. explicit-graph
// generation ceiling).
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, long bound)
      : std::runtime_error(what), bound_(bound) {}
  long bound() const noexcept { return bound_; }

 private:
  long bound_;
};

// Malformed graph document. `offset` is the byte position the parser stopped
// at; schema violations report the offset of the end of the document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Two routes that must agree did not. Always a bug, never bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, std::size_t column_a, std::size_t column_b)
      : std::runtime_error(what), column_a_(column_a), column_b_(column_b) {}
  std::size_t column_a() const noexcept { return column_a_; }
  std::size_t column_b() const noexcept { return column_b_; }

 private:
  std::size_t column_a_;
  std::size_t column_b_;
};

}  // namespace penta

#endif  // PENTA_ERRORS_HPP_

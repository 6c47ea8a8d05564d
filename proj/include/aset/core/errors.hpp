//  Copyright 2026 The aset Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ASET_CORE_ERRORS_HPP_
#define ASET_CORE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Endpoints of a composite do not match.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// The category does not provide the requested structure.
class UnsupportedStructure : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search exceeded its configured ceiling.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace aset

#endif  // ASET_CORE_ERRORS_HPP_

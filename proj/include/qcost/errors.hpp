// Copyright 2026 The qcost Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcost {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed gate or circuit: bad indices, overlapping lines, role mismatch.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A classical-only operation met a non-classical gate.
class SemanticsError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded (matrix size, enumeration depth,
/// arithmetic range).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A circuit holds a gate the target file dialect cannot express.
class EmitError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcost

// Copyright 2026 The k0lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace k0lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley specification violates its invariants (zero weight, duplicate
/// generator, generator outside the group, ...).
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// The generators do not generate the group, so the Cayley graph is not
/// strongly connected.
class NotStronglyConnectedError : public Error {
 public:
  using Error::Error;
};

/// An operation whose formula needs a purely infinite simple Leavitt path
/// algebra was handed a graph that does not give one.
class NotPurelyInfiniteSimpleError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace k0lab

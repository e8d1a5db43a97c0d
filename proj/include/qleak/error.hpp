// Copyright 2026 The qleak Authors
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
#include <string_view>

namespace qleak {

enum class Errc {
  MalformedHeader,
  ClauseCountMismatch,
  VariableOutOfRange,
  TautologyClause,
  EmptyClause,
  LengthMismatch,
  TooManyVariables,
  InfeasibleSpec,
  TooManyQubits,
  IndexOutOfRange,
  InvalidK,
  ZeroShots,
  InvalidDelta,
  InvalidProbability,
  NoRoot,
  InvalidArgument,
  Io,
};

std::string_view to_string(Errc code);

/// Base exception for every recoverable failure in the library. The code is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// DIMACS parse failure; line is 1-based, 0 when the failure is not tied to
/// a single line (e.g. a clause count mismatch detected at end of input).
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string &what)
      : Error(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qleak

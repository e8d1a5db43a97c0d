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

/**
 * @file
 * CNF formulas, assignments and DIMACS text I/O.
 *
 * Variables are 1-based (DIMACS convention). An Assignment stores the value
 * of variable i+1 in bit i, and bit 0 is the most significant bit of the
 * assignment's integer index, so increasing index order is lexicographic
 * order of the bitstring. The same convention maps qubit 0 to the leftmost
 * character of a measured bitstring.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qleak {

struct Literal {
  std::uint32_t var = 1;  // 1-based
  bool negated = false;

  static Literal from_dimacs(long long value);
  long long to_dimacs() const {
    return negated ? -static_cast<long long>(var) : static_cast<long long>(var);
  }
  /// Value of the literal when its variable takes `value`.
  bool satisfied_by(bool value) const { return value != negated; }

  friend bool operator==(const Literal &, const Literal &) = default;
};

inline Literal pos(std::uint32_t var) { return Literal{var, false}; }
inline Literal neg(std::uint32_t var) { return Literal{var, true}; }

/// Nonempty disjunction of literals. Repeated literals are dropped (first
/// occurrence wins) and a clause containing both x and ~x is rejected.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  const std::vector<Literal> &literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  std::uint32_t max_var() const;

  friend bool operator==(const Clause &, const Clause &) = default;

 private:
  std::vector<Literal> literals_;
};

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::uint8_t> bits);
  Assignment(std::initializer_list<int> bits);

  static Assignment from_index(std::uint64_t index, std::size_t num_vars);
  /// Parses a string of '0'/'1' characters.
  static Assignment from_string(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  /// Value of 1-based variable `var`.
  bool value(std::uint32_t var) const { return bits_.at(var - 1) != 0; }
  const std::vector<std::uint8_t> &bits() const { return bits_; }

  std::uint64_t to_index() const;
  std::string to_string() const;

  friend bool operator==(const Assignment &, const Assignment &) = default;
  friend auto operator<=>(const Assignment &, const Assignment &) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Immutable conjunction of clauses over variables 1..num_vars.
class Cnf {
 public:
  Cnf(std::uint32_t num_vars, std::vector<Clause> clauses);

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause> &clauses() const { return clauses_; }

  /// True iff every clause has a literal made true by x.
  bool evaluate(const Assignment &x) const;

  /// Returns a copy with one clause appended.
  Cnf with_clause(Clause clause) const;

  friend bool operator==(const Cnf &, const Cnf &) = default;

 private:
  std::uint32_t num_vars_;
  std::vector<Clause> clauses_;
};

inline bool evaluate(const Cnf &cnf, const Assignment &x) {
  return cnf.evaluate(x);
}

/// Bitmask form of a CNF for evaluating integer-indexed assignments, used by
/// the enumerating solver and the phase oracle. Requires num_vars <= 63.
class CompiledCnf {
 public:
  explicit CompiledCnf(const Cnf &cnf);

  std::uint32_t num_vars() const { return num_vars_; }
  bool operator()(std::uint64_t index) const {
    for (const auto &c : masks_) {
      if ((index & c.positive) == 0 && (~index & c.negative) == 0) {
        return false;
      }
    }
    return true;
  }

 private:
  struct ClauseMask {
    std::uint64_t positive;
    std::uint64_t negative;
  };
  std::uint32_t num_vars_;
  std::vector<ClauseMask> masks_;
};

Cnf parse_dimacs(std::string_view text);
std::string emit_dimacs(const Cnf &cnf);

Cnf read_dimacs_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view contents);
std::string read_text_file(const std::string &path);

}  // namespace qleak

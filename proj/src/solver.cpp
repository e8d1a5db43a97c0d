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

#include "qleak/solver.hpp"

#include <string>

#include "qleak/error.hpp"

namespace qleak {

std::string_view to_string(SolveStatus status) {
  return status == SolveStatus::Sat ? "SAT" : "UNSAT";
}

namespace {

void check_enumerable(const Cnf &cnf) {
  if (cnf.num_vars() > kMaxEnumerationVars) {
    throw Error(Errc::TooManyVariables,
                "enumeration limited to " + std::to_string(kMaxEnumerationVars) +
                    " variables, CNF has " + std::to_string(cnf.num_vars()));
  }
}

}  // namespace

SolveResult brute_force(const Cnf &cnf) {
  check_enumerable(cnf);
  const CompiledCnf f(cnf);
  const std::uint64_t size = std::uint64_t{1} << cnf.num_vars();
  std::uint64_t count = 0;
  std::optional<std::uint64_t> first;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (f(x)) {
      if (!first) first = x;
      ++count;
    }
  }
  SolveResult result;
  result.solution_count = count;
  if (first) {
    result.status = SolveStatus::Sat;
    result.witness = Assignment::from_index(*first, cnf.num_vars());
  }
  return result;
}

std::vector<Assignment> enumerate_models(const Cnf &cnf) {
  check_enumerable(cnf);
  const CompiledCnf f(cnf);
  const std::uint64_t size = std::uint64_t{1} << cnf.num_vars();
  std::vector<Assignment> models;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (f(x)) models.push_back(Assignment::from_index(x, cnf.num_vars()));
  }
  return models;
}

namespace {

class Dpll {
 public:
  explicit Dpll(const Cnf &cnf)
      : cnf_(cnf), value_(cnf.num_vars() + 1, kUnassigned) {}

  bool solve() {
    const std::size_t mark = trail_.size();
    if (!simplify()) {
      undo(mark);
      return false;
    }
    std::uint32_t branch = 0;
    for (std::uint32_t v = 1; v <= cnf_.num_vars(); ++v) {
      if (value_[v] == kUnassigned) {
        branch = v;
        break;
      }
    }
    if (branch == 0 || all_satisfied()) return true;
    for (std::int8_t guess : {std::int8_t{0}, std::int8_t{1}}) {
      const std::size_t before = trail_.size();
      assign(branch, guess);
      if (solve()) return true;
      undo(before);
    }
    undo(mark);
    return false;
  }

  Assignment model() const {
    std::vector<std::uint8_t> bits(cnf_.num_vars());
    for (std::uint32_t v = 1; v <= cnf_.num_vars(); ++v) {
      bits[v - 1] = value_[v] == 1 ? 1 : 0;
    }
    return Assignment(std::move(bits));
  }

 private:
  static constexpr std::int8_t kUnassigned = -1;

  enum class ClauseState { Satisfied, Conflict, Unit, Open };

  ClauseState inspect(const Clause &clause, Literal &unit) const {
    std::size_t free = 0;
    for (const auto &lit : clause.literals()) {
      const std::int8_t v = value_[lit.var];
      if (v == kUnassigned) {
        ++free;
        unit = lit;
      } else if (lit.satisfied_by(v == 1)) {
        return ClauseState::Satisfied;
      }
    }
    if (free == 0) return ClauseState::Conflict;
    return free == 1 ? ClauseState::Unit : ClauseState::Open;
  }

  bool all_satisfied() const {
    Literal unused;
    for (const auto &clause : cnf_.clauses()) {
      if (inspect(clause, unused) != ClauseState::Satisfied) return false;
    }
    return true;
  }

  // Unit propagation and pure-literal elimination to a fixed point.
  bool simplify() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &clause : cnf_.clauses()) {
        Literal unit;
        switch (inspect(clause, unit)) {
          case ClauseState::Conflict:
            return false;
          case ClauseState::Unit:
            assign(unit.var, unit.negated ? 0 : 1);
            changed = true;
            break;
          default:
            break;
        }
      }
      if (changed) continue;

      // bit 0: occurs positive, bit 1: occurs negative
      std::vector<std::uint8_t> polarity(cnf_.num_vars() + 1, 0);
      for (const auto &clause : cnf_.clauses()) {
        Literal unused;
        if (inspect(clause, unused) == ClauseState::Satisfied) continue;
        for (const auto &lit : clause.literals()) {
          if (value_[lit.var] == kUnassigned) {
            polarity[lit.var] |= lit.negated ? 2 : 1;
          }
        }
      }
      for (std::uint32_t v = 1; v <= cnf_.num_vars(); ++v) {
        if (polarity[v] == 1 || polarity[v] == 2) {
          assign(v, polarity[v] == 1 ? 1 : 0);
          changed = true;
        }
      }
    }
    return true;
  }

  void assign(std::uint32_t var, std::int8_t v) {
    value_[var] = v;
    trail_.push_back(var);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  const Cnf &cnf_;
  std::vector<std::int8_t> value_;
  std::vector<std::uint32_t> trail_;
};

}  // namespace

SolveResult dpll_solve(const Cnf &cnf) {
  Dpll dpll(cnf);
  SolveResult result;
  if (dpll.solve()) {
    result.status = SolveStatus::Sat;
    result.witness = dpll.model();
  }
  return result;
}

}  // namespace qleak

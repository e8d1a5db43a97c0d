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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qleak/cnf.hpp"

namespace qleak {

enum class SolveStatus { Sat, Unsat };

std::string_view to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Assignment> witness;
  /// Exact model count; only the enumerating solver fills this in.
  std::optional<std::uint64_t> solution_count;
};

/// Largest variable count accepted by the enumerating routines.
inline constexpr std::uint32_t kMaxEnumerationVars = 24;

/// Exhaustive enumeration. Witness is the lexicographically smallest model.
/// Throws Errc::TooManyVariables above kMaxEnumerationVars.
SolveResult brute_force(const Cnf &cnf);

/// Every model in lexicographic order. Same variable guard as brute_force.
std::vector<Assignment> enumerate_models(const Cnf &cnf);

/// DPLL with unit propagation, pure-literal elimination and
/// first-unassigned-variable branching. Decision procedure only.
SolveResult dpll_solve(const Cnf &cnf);

}  // namespace qleak

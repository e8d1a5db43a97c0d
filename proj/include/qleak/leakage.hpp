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
 * Two-trace BIT-leakage CNF generator.
 *
 * Traces A and B run the same toy cipher on a shared plaintext bit p under
 * keys kA and kB. Per unrolled step the state evolves as
 *   state' = state ^ key ^ (step == 0 ? p : 0),   state_0 = 0,
 * bitwise over `state_bits` bits, and the adversary observes bit 0 of the
 * final state. The property mode relates the two observations:
 *   notequal: leak_A != leak_B,   equal: leak_A == leak_B,
 * optionally conjoined with kA != kB.
 *
 * Variable order: p, kA[0..b), kB[0..b), then per step sA_t[0..b),
 * sB_t[0..b), then relation indicators, then padding.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qleak/cnf.hpp"

namespace qleak {

enum class PropertyMode { Equal, NotEqual };

/// How a (in)equality between two bits is written as clauses.
enum class RelationEncoding {
  /// Two clauses over the compared bits, no extra variable.
  Direct,
  /// Indicator d <-> a ^ b (four clauses) plus a unit clause on d.
  Indicator,
};

enum class VarRole { KeyA, KeyB, StateA, StateB, Aux };

std::string_view to_string(PropertyMode mode);
std::string_view to_string(RelationEncoding encoding);
std::string_view to_string(VarRole role);
PropertyMode parse_property_mode(std::string_view text);
RelationEncoding parse_relation_encoding(std::string_view text);

struct LeakageSpec {
  std::uint32_t state_bits = 1;
  std::uint32_t unroll_steps = 1;
  PropertyMode mode = PropertyMode::NotEqual;
  bool keys_must_differ = false;
  std::uint8_t plaintext = 1;
  std::uint32_t padding_vars = 0;
  RelationEncoding relation = RelationEncoding::Direct;

  friend bool operator==(const LeakageSpec &, const LeakageSpec &) = default;
};

struct VarInfo {
  VarRole role;
  std::string name;
};

struct LeakageInstance {
  Cnf cnf;
  LeakageSpec spec;
  /// var_roles[i] describes variable i+1.
  std::vector<VarInfo> var_roles;
  std::uint64_t expected_k = 0;
  /// Every model, lexicographic.
  std::vector<Assignment> expected_witnesses;
  std::string label;
};

/// Number of variables the spec produces before padding.
std::uint32_t base_variable_count(const LeakageSpec &spec);

/// Copy of `spec` with padding chosen so the CNF has exactly `num_vars`
/// variables. Throws Errc::InfeasibleSpec when the base encoding is larger.
LeakageSpec with_target_vars(LeakageSpec spec, std::uint32_t num_vars);

/// Builds the CNF and computes the ground truth by enumeration.
/// Throws Errc::InfeasibleSpec for out-of-range fields or more than
/// kMaxEnumerationVars variables.
LeakageInstance encode(const LeakageSpec &spec);

/// Case 1-3 and the UNSAT control, in that order.
std::vector<LeakageInstance> paper_benchmarks();

/// One benchmark by 1-based number (4 = UNSAT control).
LeakageInstance benchmark_case(int number);

/// Sidecar metadata: spec, variable roles, expected K and witnesses.
std::string metadata_json(const LeakageInstance &instance);

}  // namespace qleak

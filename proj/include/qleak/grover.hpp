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
#include <span>
#include <string_view>
#include <vector>

#include "qleak/cnf.hpp"
#include "qleak/statevector.hpp"

namespace qleak {

/// Phase oracle applied straight to amplitudes: |x> -> (-1)^F(x) |x> on the
/// search register, no ancillas.
class DirectOracle {
 public:
  explicit DirectOracle(const Cnf &cnf);

  Qubit num_vars() const { return num_vars_; }
  std::uint64_t marked_count() const { return marked_count_; }
  bool is_marked(std::uint64_t x) const { return marked_[x] != 0; }

  /// Search register is qubits [0, n) of `sv`; any further qubits are
  /// left untouched.
  void apply(StateVector &sv) const;
  void apply(StateVector &sv, std::span<const Qubit> search_qubits) const;

 private:
  Qubit num_vars_;
  std::vector<std::uint8_t> marked_;
  std::uint64_t marked_count_ = 0;
};

/// Which value the clause ancillas hold between compute and uncompute.
enum class ClauseEncoding {
  /// c_j = 1 iff clause j is violated; flag f = NOR(c).
  ViolationBits,
  /// c_j = 1 iff clause j is satisfied; flag f = AND(c).
  SatisfactionBits,
};

std::string_view to_string(ClauseEncoding encoding);

/// Compute-phase-uncompute circuit over n search qubits, m clause ancillas
/// and one flag: qubits [0, n), [n, n+m) and n+m respectively.
struct OracleCircuit {
  Circuit circuit;
  Qubit num_search = 0;
  Qubit num_clauses = 0;
  ClauseEncoding encoding = ClauseEncoding::ViolationBits;

  Qubit width() const { return circuit.num_qubits(); }
  Qubit flag_qubit() const { return num_search + num_clauses; }
  std::vector<Qubit> search_qubits() const { return qubit_range(0, num_search); }
  std::vector<Qubit> clause_ancillas() const {
    return qubit_range(num_search, num_clauses);
  }
};

/// Throws TooManyQubits when n + m + 1 exceeds the simulator ceiling.
OracleCircuit build_gate_oracle(const Cnf &cnf, ClauseEncoding encoding);

/// Gate-level oracle construction without the width ceiling, for resource
/// reporting on instances too wide to simulate.
OracleCircuit build_gate_oracle_unchecked(const Cnf &cnf, ClauseEncoding encoding);

/// 2|s><s| - I on `search_qubits`, applied exactly.
void apply_diffuser(StateVector &sv, std::span<const Qubit> search_qubits);

/// H^n X^n MCZ X^n H^n on qubits [0, n) of a `width`-qubit register. Equals
/// the diffuser up to a global phase of -1.
Circuit diffuser_circuit(Qubit n, Qubit width);

/// floor(pi / (4 theta)), sin^2 theta = K / 2^n. Throws InvalidK unless
/// 1 <= K <= 2^n.
std::uint64_t optimal_iterations(Qubit n, std::uint64_t k);

/// sin^2((2r+1) theta); 0 when K = 0.
double success_probability(Qubit n, std::uint64_t k, std::uint64_t r);

struct GroverConfig {
  std::uint64_t iterations = 0;
  std::uint64_t shots = 2000;
  std::uint64_t seed = 0;
  bool use_gate_level = false;
  ClauseEncoding encoding = ClauseEncoding::ViolationBits;
  std::optional<NoiseModel> noise;

  void validate() const;
};

struct GroverRun {
  Histogram histogram;
  /// Noiseless distribution over the search register.
  std::vector<double> probabilities;
  /// Total probability on satisfying assignments.
  double marked_mass = 0.0;
};

/// Reusable Grover machinery for one CNF: the direct oracle is tabulated
/// once and the gate-level oracle is built lazily.
class GroverSearch {
 public:
  explicit GroverSearch(const Cnf &cnf);

  const Cnf &cnf() const { return cnf_; }
  const DirectOracle &oracle() const { return oracle_; }

  /// (D U_F)^r |s> over the search register (plus ancillas on the gate path).
  StateVector evolve(std::uint64_t r, bool gate_level, ClauseEncoding encoding);

  GroverRun run(const GroverConfig &config);

 private:
  const OracleCircuit &gate_oracle(ClauseEncoding encoding);

  Cnf cnf_;
  DirectOracle oracle_;
  std::optional<OracleCircuit> gate_oracle_;
};

GroverRun grover_run(const Cnf &cnf, const GroverConfig &config);

}  // namespace qleak

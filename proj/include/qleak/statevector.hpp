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
 * Dense statevector simulation for the Grover gate set.
 *
 * Qubit 0 is the most significant bit of an amplitude index and the leftmost
 * character of a bitstring, matching the Assignment convention.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qleak {

using Complex = std::complex<double>;
using Qubit = std::uint32_t;

/// Memory guard: 2^28 amplitudes is 4 GiB.
inline constexpr Qubit kMaxQubits = 28;

enum class GateKind { H, X, Z, CZ, MCX, MCZ };

std::string to_string(GateKind kind);

struct Control {
  Qubit qubit;
  /// True: active on |1>. False: active on |0>.
  bool on_one = true;

  friend bool operator==(const Control &, const Control &) = default;
};

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Control> controls;
  Qubit target = 0;

  static Gate h(Qubit t) { return {GateKind::H, {}, t}; }
  static Gate x(Qubit t) { return {GateKind::X, {}, t}; }
  static Gate z(Qubit t) { return {GateKind::Z, {}, t}; }
  static Gate cz(Qubit c, Qubit t) { return {GateKind::CZ, {{c, true}}, t}; }
  static Gate mcx(std::vector<Control> c, Qubit t) {
    return {GateKind::MCX, std::move(c), t};
  }
  static Gate mcz(std::vector<Control> c, Qubit t) {
    return {GateKind::MCZ, std::move(c), t};
  }

  /// Throws IndexOutOfRange / InvalidArgument when the gate is malformed
  /// for a register of `num_qubits`.
  void validate(Qubit num_qubits) const;

  friend bool operator==(const Gate &, const Gate &) = default;
};

class Circuit {
 public:
  explicit Circuit(Qubit num_qubits) : num_qubits_(num_qubits) {}

  void add(Gate gate);
  void append(const Circuit &other);

  Qubit num_qubits() const { return num_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Greedy left-to-right layering: a gate goes one layer after the latest
  /// layer touching any of its qubits. Multi-controlled gates count as one.
  std::size_t depth() const;

 private:
  Qubit num_qubits_;
  std::vector<Gate> gates_;
};

struct NoiseModel {
  /// Independent per-bit readout flip, in [0, 0.5).
  double readout_flip_prob = 0.0;

  void validate() const;
};

/// Outcome counts keyed by integer index over a `width`-bit register.
class Histogram {
 public:
  explicit Histogram(Qubit width = 0) : width_(width) {}

  void add(std::uint64_t outcome, std::uint64_t count = 1);
  void merge(const Histogram &other);

  Qubit width() const { return width_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(std::uint64_t outcome) const;
  const std::map<std::uint64_t, std::uint64_t> &counts() const { return counts_; }

  /// Most frequent outcome; ties go to the smallest index.
  std::optional<std::uint64_t> mode() const;

  std::string bitstring(std::uint64_t outcome) const;

  /// `bitstring,count,probability` with a header row, sorted by bitstring,
  /// observed outcomes only.
  std::string to_csv() const;
  static Histogram from_csv(std::string_view text);

  /// Same rows as the CSV under "rows", plus width and total.
  std::string to_json() const;

 private:
  Qubit width_;
  std::uint64_t total_ = 0;
  std::map<std::uint64_t, std::uint64_t> counts_;
};

class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(Qubit num_qubits);

  static StateVector uniform(Qubit num_qubits);
  static StateVector basis(Qubit num_qubits, std::uint64_t index);
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  Qubit num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

  void apply(const Gate &gate);
  void apply(const Circuit &circuit);

  /// Marginal distribution over `subset`; subset[0] is the most significant
  /// bit of the outcome index.
  std::vector<double> probabilities(std::span<const Qubit> subset) const;
  std::vector<double> probabilities() const;

  /// Draws `shots` outcomes over `subset`. Deterministic for a given seed.
  Histogram sample(std::span<const Qubit> subset, std::uint64_t shots,
                   std::uint64_t seed,
                   const std::optional<NoiseModel> &noise = std::nullopt) const;

  /// Bit mask of qubit q inside an amplitude index.
  std::uint64_t mask(Qubit q) const {
    return std::uint64_t{1} << (num_qubits_ - 1 - q);
  }

 private:
  StateVector(Qubit num_qubits, std::vector<Complex> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  void check_qubit(Qubit q) const;

  Qubit num_qubits_;
  std::vector<Complex> amps_;
};

/// |s> = H^n |0^n>. Throws TooManyQubits outside [1, kMaxQubits].
inline StateVector init_uniform(Qubit n) { return StateVector::uniform(n); }

/// Sampling from an explicit distribution; shared by the simulator and the
/// tests that exercise the statistics without a state.
Histogram sample_distribution(std::span<const double> probabilities,
                              Qubit width, std::uint64_t shots,
                              std::uint64_t seed,
                              const std::optional<NoiseModel> &noise);

std::vector<Qubit> qubit_range(Qubit first, Qubit count);

}  // namespace qleak

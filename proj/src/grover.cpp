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

#include "qleak/grover.hpp"

#include <cmath>
#include <numbers>

#include "qleak/error.hpp"

namespace qleak {

std::string_view to_string(ClauseEncoding encoding) {
  return encoding == ClauseEncoding::ViolationBits ? "violation_bits"
                                                   : "satisfaction_bits";
}

namespace {

struct RegisterLayout {
  std::uint64_t search_mask = 0;
  // offsets[j]: index bits for search value j (subset[0] most significant)
  std::vector<std::uint64_t> offsets;
  bool is_prefix = false;
};

RegisterLayout layout_for(const StateVector &sv, std::span<const Qubit> search) {
  RegisterLayout layout;
  if (search.empty()) {
    throw Error(Errc::InvalidArgument, "search register must be nonempty");
  }
  std::vector<std::uint64_t> masks;
  layout.is_prefix = true;
  for (std::size_t i = 0; i < search.size(); ++i) {
    const Qubit q = search[i];
    if (q >= sv.num_qubits()) {
      throw Error(Errc::IndexOutOfRange,
                  "search qubit " + std::to_string(q) + " outside register");
    }
    const std::uint64_t m = sv.mask(q);
    if (layout.search_mask & m) {
      throw Error(Errc::InvalidArgument, "duplicate search qubit");
    }
    layout.search_mask |= m;
    masks.push_back(m);
    layout.is_prefix = layout.is_prefix && q == i;
  }
  if (!layout.is_prefix) {
    const std::size_t count = std::size_t{1} << search.size();
    layout.offsets.resize(count);
    for (std::size_t j = 0; j < count; ++j) {
      std::uint64_t off = 0;
      for (std::size_t b = 0; b < masks.size(); ++b) {
        if ((j >> (masks.size() - 1 - b)) & 1U) off |= masks[b];
      }
      layout.offsets[j] = off;
    }
  }
  return layout;
}

// Calls f(base) for every assignment of the non-search qubits.
template <class F>
void for_each_base(std::uint64_t size, std::uint64_t search_mask, F &&f) {
  const std::uint64_t free = (size - 1) & ~search_mask;
  std::uint64_t s = 0;
  while (true) {
    f(s);
    if (s == free) break;
    s = (s - free) & free;
  }
}

}  // namespace

DirectOracle::DirectOracle(const Cnf &cnf) : num_vars_(cnf.num_vars()) {
  if (num_vars_ > kMaxQubits) {
    throw Error(Errc::TooManyQubits,
                "direct oracle over " + std::to_string(num_vars_) +
                    " variables exceeds the " + std::to_string(kMaxQubits) +
                    "-qubit ceiling");
  }
  const CompiledCnf f(cnf);
  const std::uint64_t size = std::uint64_t{1} << num_vars_;
  marked_.resize(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    marked_[x] = f(x) ? 1 : 0;
    marked_count_ += marked_[x];
  }
}

void DirectOracle::apply(StateVector &sv) const {
  apply(sv, qubit_range(0, num_vars_));
}

void DirectOracle::apply(StateVector &sv, std::span<const Qubit> search) const {
  if (search.size() != num_vars_) {
    throw Error(Errc::LengthMismatch, "search register size differs from n");
  }
  const auto layout = layout_for(sv, search);
  auto a = sv.amplitudes();
  if (marked_count_ == 0) return;
  if (layout.is_prefix) {
    const Qubit shift = sv.num_qubits() - num_vars_;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (marked_[i >> shift]) a[i] = -a[i];
    }
    return;
  }
  for_each_base(a.size(), layout.search_mask, [&](std::uint64_t base) {
    for (std::size_t j = 0; j < layout.offsets.size(); ++j) {
      if (marked_[j]) a[base | layout.offsets[j]] *= -1.0;
    }
  });
}

void apply_diffuser(StateVector &sv, std::span<const Qubit> search) {
  const auto layout = layout_for(sv, search);
  auto a = sv.amplitudes();
  const std::size_t count = std::size_t{1} << search.size();
  const double inv = 1.0 / static_cast<double>(count);

  if (layout.is_prefix) {
    // search value is the high part of the index: stride over ancilla values
    const std::size_t stride = a.size() / count;
    for (std::size_t anc = 0; anc < stride; ++anc) {
      Complex mean{0.0, 0.0};
      for (std::size_t j = 0; j < count; ++j) mean += a[j * stride + anc];
      mean *= inv;
      for (std::size_t j = 0; j < count; ++j) {
        auto &v = a[j * stride + anc];
        v = 2.0 * mean - v;
      }
    }
    return;
  }
  for_each_base(a.size(), layout.search_mask, [&](std::uint64_t base) {
    Complex mean{0.0, 0.0};
    for (auto off : layout.offsets) mean += a[base | off];
    mean *= inv;
    for (auto off : layout.offsets) {
      auto &v = a[base | off];
      v = 2.0 * mean - v;
    }
  });
}

Circuit diffuser_circuit(Qubit n, Qubit width) {
  if (n < 1 || n > width) {
    throw Error(Errc::IndexOutOfRange, "diffuser register does not fit");
  }
  Circuit c(width);
  for (Qubit q = 0; q < n; ++q) c.add(Gate::h(q));
  for (Qubit q = 0; q < n; ++q) c.add(Gate::x(q));
  if (n == 1) {
    c.add(Gate::z(0));
  } else {
    std::vector<Control> controls;
    for (Qubit q = 0; q + 1 < n; ++q) controls.push_back({q, true});
    c.add(Gate::mcz(std::move(controls), n - 1));
  }
  for (Qubit q = 0; q < n; ++q) c.add(Gate::x(q));
  for (Qubit q = 0; q < n; ++q) c.add(Gate::h(q));
  return c;
}

OracleCircuit build_gate_oracle_unchecked(const Cnf &cnf, ClauseEncoding encoding) {
  const Qubit n = cnf.num_vars();
  const Qubit m = static_cast<Qubit>(cnf.num_clauses());
  const bool satisfaction = encoding == ClauseEncoding::SatisfactionBits;
  OracleCircuit oc{Circuit(n + m + 1), n, m, encoding};
  const Qubit flag = oc.flag_qubit();

  // controls fire when every literal of the clause is false
  auto violation = [&](const Clause &clause, Qubit target) {
    std::vector<Control> controls;
    for (const auto &lit : clause.literals()) {
      controls.push_back({lit.var - 1, lit.negated});
    }
    return Gate::mcx(std::move(controls), target);
  };

  std::vector<Control> flag_controls;
  for (Qubit j = 0; j < m; ++j) flag_controls.push_back({n + j, satisfaction});
  const Gate flag_gate = Gate::mcx(flag_controls, flag);

  for (Qubit j = 0; j < m; ++j) {
    oc.circuit.add(violation(cnf.clauses()[j], n + j));
    if (satisfaction) oc.circuit.add(Gate::x(n + j));
  }
  oc.circuit.add(flag_gate);
  oc.circuit.add(Gate::z(flag));
  oc.circuit.add(flag_gate);
  for (Qubit j = m; j-- > 0;) {
    if (satisfaction) oc.circuit.add(Gate::x(n + j));
    oc.circuit.add(violation(cnf.clauses()[j], n + j));
  }
  return oc;
}

OracleCircuit build_gate_oracle(const Cnf &cnf, ClauseEncoding encoding) {
  const std::uint64_t width =
      std::uint64_t{cnf.num_vars()} + cnf.num_clauses() + 1;
  if (width > kMaxQubits) {
    throw Error(Errc::TooManyQubits,
                "gate-level oracle needs " + std::to_string(width) +
                    " qubits; ceiling is " + std::to_string(kMaxQubits));
  }
  return build_gate_oracle_unchecked(cnf, encoding);
}

std::uint64_t optimal_iterations(Qubit n, std::uint64_t k) {
  if (n > 62) throw Error(Errc::InvalidArgument, "n too large");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (k < 1 || k > size) {
    throw Error(Errc::InvalidK, "K must satisfy 1 <= K <= 2^n");
  }
  const double theta =
      std::asin(std::sqrt(static_cast<double>(k) / static_cast<double>(size)));
  return static_cast<std::uint64_t>(std::floor(std::numbers::pi / (4.0 * theta)));
}

double success_probability(Qubit n, std::uint64_t k, std::uint64_t r) {
  if (k == 0) return 0.0;
  if (n > 62) throw Error(Errc::InvalidArgument, "n too large");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (k > size) throw Error(Errc::InvalidK, "K exceeds 2^n");
  const double theta =
      std::asin(std::sqrt(static_cast<double>(k) / static_cast<double>(size)));
  const double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * theta);
  return s * s;
}

void GroverConfig::validate() const {
  if (shots < 1) throw Error(Errc::ZeroShots, "need at least one shot");
  if (noise) noise->validate();
}

GroverSearch::GroverSearch(const Cnf &cnf) : cnf_(cnf), oracle_(cnf) {}

const OracleCircuit &GroverSearch::gate_oracle(ClauseEncoding encoding) {
  if (!gate_oracle_ || gate_oracle_->encoding != encoding) {
    gate_oracle_ = build_gate_oracle(cnf_, encoding);
  }
  return *gate_oracle_;
}

StateVector GroverSearch::evolve(std::uint64_t r, bool gate_level,
                                 ClauseEncoding encoding) {
  const Qubit n = cnf_.num_vars();
  const auto search = qubit_range(0, n);
  if (!gate_level) {
    StateVector sv = StateVector::uniform(n);
    for (std::uint64_t i = 0; i < r; ++i) {
      oracle_.apply(sv);
      apply_diffuser(sv, search);
    }
    return sv;
  }
  const auto &oc = gate_oracle(encoding);
  StateVector sv(oc.width());
  for (Qubit q = 0; q < n; ++q) sv.apply(Gate::h(q));
  for (std::uint64_t i = 0; i < r; ++i) {
    sv.apply(oc.circuit);
    apply_diffuser(sv, search);
  }
  return sv;
}

GroverRun GroverSearch::run(const GroverConfig &config) {
  config.validate();
  const Qubit n = cnf_.num_vars();
  const StateVector sv = evolve(config.iterations, config.use_gate_level,
                                config.encoding);
  GroverRun out{Histogram(n), {}, 0.0};
  out.probabilities = sv.probabilities(qubit_range(0, n));
  for (std::size_t x = 0; x < out.probabilities.size(); ++x) {
    if (oracle_.is_marked(x)) out.marked_mass += out.probabilities[x];
  }
  out.histogram = sample_distribution(out.probabilities, n, config.shots,
                                      config.seed, config.noise);
  return out;
}

GroverRun grover_run(const Cnf &cnf, const GroverConfig &config) {
  config.validate();
  if (config.use_gate_level) {
    // fail on width before tabulating the direct oracle
    const std::uint64_t width =
        std::uint64_t{cnf.num_vars()} + cnf.num_clauses() + 1;
    if (width > kMaxQubits) {
      throw Error(Errc::TooManyQubits,
                  "gate-level oracle needs " + std::to_string(width) + " qubits");
    }
  }
  GroverSearch search(cnf);
  return search.run(config);
}

}  // namespace qleak

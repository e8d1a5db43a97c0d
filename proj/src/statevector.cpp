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

#include "qleak/statevector.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <numeric>

#include "qleak/error.hpp"
#include "qleak/rng.hpp"

namespace qleak {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::CZ: return "CZ";
    case GateKind::MCX: return "MCX";
    case GateKind::MCZ: return "MCZ";
  }
  return "?";
}

void Gate::validate(Qubit num_qubits) const {
  if (target >= num_qubits) {
    throw Error(Errc::IndexOutOfRange,
                to_string(kind) + " target " + std::to_string(target) +
                    " outside register of " + std::to_string(num_qubits));
  }
  const bool single = kind == GateKind::H || kind == GateKind::X ||
                      kind == GateKind::Z;
  if (single && !controls.empty()) {
    throw Error(Errc::InvalidArgument, to_string(kind) + " takes no controls");
  }
  if (kind == GateKind::CZ && controls.size() != 1) {
    throw Error(Errc::InvalidArgument, "CZ takes exactly one control");
  }
  for (std::size_t i = 0; i < controls.size(); ++i) {
    const Qubit c = controls[i].qubit;
    if (c >= num_qubits) {
      throw Error(Errc::IndexOutOfRange,
                  "control " + std::to_string(c) + " outside register of " +
                      std::to_string(num_qubits));
    }
    if (c == target) {
      throw Error(Errc::InvalidArgument, "target cannot also be a control");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (controls[j].qubit == c) {
        throw Error(Errc::InvalidArgument, "duplicate control qubit");
      }
    }
  }
}

void Circuit::add(Gate gate) {
  gate.validate(num_qubits_);
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit &other) {
  if (other.num_qubits_ > num_qubits_) {
    throw Error(Errc::IndexOutOfRange, "appended circuit is wider");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> level(num_qubits_, 0);
  std::size_t depth = 0;
  for (const auto &g : gates_) {
    std::size_t layer = level[g.target];
    for (const auto &c : g.controls) layer = std::max(layer, level[c.qubit]);
    ++layer;
    level[g.target] = layer;
    for (const auto &c : g.controls) level[c.qubit] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

void NoiseModel::validate() const {
  if (!(readout_flip_prob >= 0.0 && readout_flip_prob < 0.5)) {
    throw Error(Errc::InvalidProbability,
                "readout flip probability must lie in [0, 0.5)");
  }
}

void Histogram::add(std::uint64_t outcome, std::uint64_t count) {
  if (count == 0) return;
  counts_[outcome] += count;
  total_ += count;
}

void Histogram::merge(const Histogram &other) {
  if (other.width_ != width_) {
    throw Error(Errc::LengthMismatch, "cannot merge histograms of different width");
  }
  for (const auto &[k, v] : other.counts_) add(k, v);
}

std::uint64_t Histogram::count(std::uint64_t outcome) const {
  auto it = counts_.find(outcome);
  return it == counts_.end() ? 0 : it->second;
}

std::optional<std::uint64_t> Histogram::mode() const {
  std::optional<std::uint64_t> best;
  std::uint64_t best_count = 0;
  for (const auto &[k, v] : counts_) {
    if (v > best_count) {
      best = k;
      best_count = v;
    }
  }
  return best;
}

std::string Histogram::bitstring(std::uint64_t outcome) const {
  std::string s(width_, '0');
  for (Qubit i = 0; i < width_; ++i) {
    if ((outcome >> (width_ - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string Histogram::to_csv() const {
  std::string out = "bitstring,count,probability\n";
  for (const auto &[k, v] : counts_) {
    out += bitstring(k);
    out += ',';
    out += std::to_string(v);
    out += ',';
    out += format_double(static_cast<double>(v) / static_cast<double>(total_));
    out += '\n';
  }
  return out;
}

std::string Histogram::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto &[k, v] : counts_) {
    rows.push_back({{"bitstring", bitstring(k)},
                    {"count", v},
                    {"probability", static_cast<double>(v) / static_cast<double>(total_)}});
  }
  nlohmann::ordered_json doc;
  doc["width"] = width_;
  doc["total"] = total_;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Histogram Histogram::from_csv(std::string_view text) {
  std::optional<Histogram> hist;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("bitstring", 0) == 0) continue;

    const auto c1 = line.find(',');
    if (c1 == std::string_view::npos) {
      throw ParseError(Errc::InvalidArgument, line_no, "expected bitstring,count");
    }
    const auto bits = line.substr(0, c1);
    auto rest = line.substr(c1 + 1);
    const auto c2 = rest.find(',');
    const auto count_text = rest.substr(0, c2);
    if (bits.empty() || bits.size() > 63 ||
        bits.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(Errc::InvalidArgument, line_no, "bad bitstring");
    }
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(count_text.data(),
                                     count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size()) {
      throw ParseError(Errc::InvalidArgument, line_no, "bad count");
    }
    if (!hist) hist.emplace(static_cast<Qubit>(bits.size()));
    if (hist->width() != bits.size()) {
      throw ParseError(Errc::LengthMismatch, line_no, "inconsistent bitstring width");
    }
    std::uint64_t outcome = 0;
    for (char c : bits) outcome = (outcome << 1) | (c == '1');
    hist->add(outcome, count);
  }
  if (!hist) throw Error(Errc::ZeroShots, "histogram CSV has no rows");
  return *hist;
}

namespace {

void check_width(Qubit n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error(Errc::TooManyQubits,
                "register of " + std::to_string(n) + " qubits outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

// Calls f(i) for every index i with (i & fixed) == value, ascending.
template <class F>
void for_each_matching(std::uint64_t size, std::uint64_t fixed,
                       std::uint64_t value, F &&f) {
  const std::uint64_t free = (size - 1) & ~fixed;
  std::uint64_t s = 0;
  while (true) {
    f(s | value);
    if (s == free) break;
    s = (s - free) & free;
  }
}

}  // namespace

StateVector::StateVector(Qubit num_qubits) : num_qubits_(num_qubits) {
  check_width(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::uniform(Qubit num_qubits) {
  check_width(num_qubits);
  const std::size_t size = std::size_t{1} << num_qubits;
  const double a = 1.0 / std::sqrt(static_cast<double>(size));
  return StateVector(num_qubits, std::vector<Complex>(size, Complex{a, 0.0}));
}

StateVector StateVector::basis(Qubit num_qubits, std::uint64_t index) {
  StateVector sv(num_qubits);
  if (index >= sv.size()) {
    throw Error(Errc::IndexOutOfRange, "basis index outside register");
  }
  sv.amps_[0] = 0.0;
  sv.amps_[index] = 1.0;
  return sv;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw Error(Errc::InvalidArgument, "amplitude count must be a power of two");
  }
  Qubit q = 0;
  while ((std::size_t{1} << q) < size) ++q;
  check_width(q);
  return StateVector(q, std::move(amplitudes));
}

void StateVector::check_qubit(Qubit q) const {
  if (q >= num_qubits_) {
    throw Error(Errc::IndexOutOfRange,
                "qubit " + std::to_string(q) + " outside register of " +
                    std::to_string(num_qubits_));
  }
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto &a : amps_) total += std::norm(a);
  return total;
}

void StateVector::apply(const Gate &gate) {
  gate.validate(num_qubits_);
  const std::uint64_t size = amps_.size();
  const std::uint64_t t = mask(gate.target);
  std::uint64_t cmask = 0;
  std::uint64_t cvalue = 0;
  for (const auto &c : gate.controls) {
    cmask |= mask(c.qubit);
    if (c.on_one) cvalue |= mask(c.qubit);
  }
  Complex *a = amps_.data();

  switch (gate.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      for_each_matching(size, t, 0, [&](std::uint64_t i) {
        const Complex lo = a[i];
        const Complex hi = a[i | t];
        a[i] = (lo + hi) * r;
        a[i | t] = (lo - hi) * r;
      });
      break;
    }
    case GateKind::X:
    case GateKind::MCX:
      for_each_matching(size, cmask | t, cvalue, [&](std::uint64_t i) {
        std::swap(a[i], a[i | t]);
      });
      break;
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::MCZ:
      for_each_matching(size, cmask | t, cvalue | t,
                        [&](std::uint64_t i) { a[i] = -a[i]; });
      break;
  }
}

void StateVector::apply(const Circuit &circuit) {
  if (circuit.num_qubits() != num_qubits_) {
    throw Error(Errc::IndexOutOfRange,
                "circuit width " + std::to_string(circuit.num_qubits()) +
                    " does not match state width " + std::to_string(num_qubits_));
  }
  for (const auto &g : circuit.gates()) apply(g);
}

std::vector<double> StateVector::probabilities(std::span<const Qubit> subset) const {
  if (subset.empty()) {
    throw Error(Errc::InvalidArgument, "marginal subset must be nonempty");
  }
  for (Qubit q : subset) check_qubit(q);
  const std::size_t k = subset.size();
  std::vector<double> out(std::size_t{1} << k, 0.0);

  bool prefix = true;
  for (std::size_t i = 0; i < k; ++i) prefix = prefix && subset[i] == i;
  if (prefix) {
    const Qubit shift = num_qubits_ - static_cast<Qubit>(k);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      out[i >> shift] += std::norm(amps_[i]);
    }
    return out;
  }

  std::vector<std::uint64_t> masks;
  for (Qubit q : subset) masks.push_back(mask(q));
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::uint64_t outcome = 0;
    for (auto m : masks) outcome = (outcome << 1) | ((i & m) ? 1 : 0);
    out[outcome] += std::norm(amps_[i]);
  }
  return out;
}

std::vector<double> StateVector::probabilities() const {
  return probabilities(qubit_range(0, num_qubits_));
}

Histogram StateVector::sample(std::span<const Qubit> subset, std::uint64_t shots,
                              std::uint64_t seed,
                              const std::optional<NoiseModel> &noise) const {
  const auto probs = probabilities(subset);
  return sample_distribution(probs, static_cast<Qubit>(subset.size()), shots,
                             seed, noise);
}

Histogram sample_distribution(std::span<const double> probabilities, Qubit width,
                              std::uint64_t shots, std::uint64_t seed,
                              const std::optional<NoiseModel> &noise) {
  if (shots == 0) throw Error(Errc::ZeroShots, "need at least one shot");
  if (probabilities.size() != (std::size_t{1} << width)) {
    throw Error(Errc::LengthMismatch, "distribution size must be 2^width");
  }
  if (noise) noise->validate();

  std::vector<double> cumulative(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cumulative.begin());
  const double total = cumulative.back();

  Rng rng(seed);
  Histogram hist(width);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    // skip zero-probability cells that share the cumulative value
    while (it != cumulative.begin() && probabilities[it - cumulative.begin()] == 0.0) {
      --it;
    }
    std::uint64_t outcome = static_cast<std::uint64_t>(it - cumulative.begin());
    if (noise && noise->readout_flip_prob > 0.0) {
      for (Qubit b = 0; b < width; ++b) {
        if (rng.bernoulli(noise->readout_flip_prob)) outcome ^= std::uint64_t{1} << b;
      }
    }
    hist.add(outcome);
  }
  return hist;
}

std::vector<Qubit> qubit_range(Qubit first, Qubit count) {
  std::vector<Qubit> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

}  // namespace qleak

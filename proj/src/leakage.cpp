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

#include "qleak/leakage.hpp"

#include <json.hpp>

#include "qleak/error.hpp"
#include "qleak/solver.hpp"

namespace qleak {

std::string_view to_string(PropertyMode mode) {
  return mode == PropertyMode::Equal ? "equal" : "notequal";
}

std::string_view to_string(RelationEncoding encoding) {
  return encoding == RelationEncoding::Direct ? "direct" : "indicator";
}

std::string_view to_string(VarRole role) {
  switch (role) {
    case VarRole::KeyA: return "key_A";
    case VarRole::KeyB: return "key_B";
    case VarRole::StateA: return "state_A";
    case VarRole::StateB: return "state_B";
    case VarRole::Aux: return "aux";
  }
  return "aux";
}

PropertyMode parse_property_mode(std::string_view text) {
  if (text == "equal") return PropertyMode::Equal;
  if (text == "notequal") return PropertyMode::NotEqual;
  throw Error(Errc::InvalidArgument,
              "property mode must be 'equal' or 'notequal'");
}

RelationEncoding parse_relation_encoding(std::string_view text) {
  if (text == "direct") return RelationEncoding::Direct;
  if (text == "indicator") return RelationEncoding::Indicator;
  throw Error(Errc::InvalidArgument,
              "relation encoding must be 'direct' or 'indicator'");
}

namespace {

class Builder {
 public:
  std::uint32_t add_var(VarRole role, std::string name) {
    roles_.push_back({role, std::move(name)});
    return static_cast<std::uint32_t>(roles_.size());
  }

  void add(std::initializer_list<Literal> lits) { clauses_.emplace_back(lits); }
  void add(std::vector<Literal> lits) { clauses_.emplace_back(std::move(lits)); }

  // out <-> a ^ b
  void define_xor(std::uint32_t out, std::uint32_t a, std::uint32_t b) {
    add({neg(out), pos(a), pos(b)});
    add({neg(out), neg(a), neg(b)});
    add({pos(out), neg(a), pos(b)});
    add({pos(out), pos(a), neg(b)});
  }

  void require_different(std::uint32_t a, std::uint32_t b) {
    add({pos(a), pos(b)});
    add({neg(a), neg(b)});
  }

  void require_equal(std::uint32_t a, std::uint32_t b) {
    add({neg(a), pos(b)});
    add({pos(a), neg(b)});
  }

  Cnf build() && {
    return Cnf(static_cast<std::uint32_t>(roles_.size()), std::move(clauses_));
  }
  std::vector<VarInfo> roles() const { return roles_; }

 private:
  std::vector<VarInfo> roles_;
  std::vector<Clause> clauses_;
};

std::string indexed(std::string_view stem, std::uint32_t i) {
  return std::string(stem) + "[" + std::to_string(i) + "]";
}

void validate(const LeakageSpec &spec) {
  if (spec.state_bits < 1 || spec.unroll_steps < 1 || spec.plaintext > 1) {
    throw Error(Errc::InfeasibleSpec,
                "state_bits and unroll_steps must be >= 1, plaintext in {0,1}");
  }
}

bool needs_key_indicators(const LeakageSpec &spec) {
  return spec.keys_must_differ &&
         (spec.state_bits > 1 || spec.relation == RelationEncoding::Indicator);
}

}  // namespace

std::uint32_t base_variable_count(const LeakageSpec &spec) {
  validate(spec);
  std::uint64_t n = 1 + 2ULL * spec.state_bits +
                    2ULL * spec.state_bits * spec.unroll_steps;
  if (spec.relation == RelationEncoding::Indicator) n += 1;
  if (needs_key_indicators(spec)) n += spec.state_bits;
  if (n > 0xffffffffULL) {
    throw Error(Errc::InfeasibleSpec, "encoding too large");
  }
  return static_cast<std::uint32_t>(n);
}

LeakageSpec with_target_vars(LeakageSpec spec, std::uint32_t num_vars) {
  const std::uint32_t base = base_variable_count(spec);
  if (num_vars < base) {
    throw Error(Errc::InfeasibleSpec,
                "target n=" + std::to_string(num_vars) +
                    " is below the base encoding size " + std::to_string(base));
  }
  spec.padding_vars = num_vars - base;
  return spec;
}

LeakageInstance encode(const LeakageSpec &spec) {
  const std::uint64_t total =
      static_cast<std::uint64_t>(base_variable_count(spec)) + spec.padding_vars;
  if (total > kMaxEnumerationVars) {
    throw Error(Errc::InfeasibleSpec,
                "instance would have " + std::to_string(total) +
                    " variables; ground truth needs <= " +
                    std::to_string(kMaxEnumerationVars));
  }

  const std::uint32_t bits = spec.state_bits;
  Builder b;
  const std::uint32_t p = b.add_var(VarRole::Aux, "p");
  std::vector<std::uint32_t> key_a(bits), key_b(bits);
  for (std::uint32_t i = 0; i < bits; ++i) key_a[i] = b.add_var(VarRole::KeyA, indexed("kA", i));
  for (std::uint32_t i = 0; i < bits; ++i) key_b[i] = b.add_var(VarRole::KeyB, indexed("kB", i));

  // Shared plaintext (P = P') fixed to the requested bit.
  b.add({spec.plaintext ? pos(p) : neg(p)});

  std::vector<std::uint32_t> prev_a, prev_b;
  for (std::uint32_t step = 1; step <= spec.unroll_steps; ++step) {
    std::vector<std::uint32_t> cur_a(bits), cur_b(bits);
    const std::string suffix = "_" + std::to_string(step);
    for (std::uint32_t i = 0; i < bits; ++i) cur_a[i] = b.add_var(VarRole::StateA, indexed("sA" + suffix, i));
    for (std::uint32_t i = 0; i < bits; ++i) cur_b[i] = b.add_var(VarRole::StateB, indexed("sB" + suffix, i));
    for (std::uint32_t i = 0; i < bits; ++i) {
      // first step loads the plaintext into the zero state
      b.define_xor(cur_a[i], step == 1 ? p : prev_a[i], key_a[i]);
      b.define_xor(cur_b[i], step == 1 ? p : prev_b[i], key_b[i]);
    }
    prev_a = std::move(cur_a);
    prev_b = std::move(cur_b);
  }

  const std::uint32_t leak_a = prev_a[0];
  const std::uint32_t leak_b = prev_b[0];
  if (spec.relation == RelationEncoding::Direct) {
    if (spec.mode == PropertyMode::NotEqual) {
      b.require_different(leak_a, leak_b);
    } else {
      b.require_equal(leak_a, leak_b);
    }
  } else {
    const std::uint32_t d = b.add_var(VarRole::Aux, "d_leak");
    b.define_xor(d, leak_a, leak_b);
    b.add({spec.mode == PropertyMode::NotEqual ? pos(d) : neg(d)});
  }

  if (spec.keys_must_differ) {
    if (needs_key_indicators(spec)) {
      std::vector<Literal> any_differs;
      for (std::uint32_t i = 0; i < bits; ++i) {
        const std::uint32_t d = b.add_var(VarRole::Aux, indexed("d_key", i));
        b.define_xor(d, key_a[i], key_b[i]);
        any_differs.push_back(pos(d));
      }
      b.add(std::move(any_differs));
    } else {
      b.require_different(key_a[0], key_b[0]);
    }
  }

  for (std::uint32_t i = 0; i < spec.padding_vars; ++i) {
    const std::uint32_t v = b.add_var(VarRole::Aux, indexed("pad", i));
    b.add({neg(v)});
  }

  auto roles = b.roles();
  Cnf cnf = std::move(b).build();
  auto models = enumerate_models(cnf);
  const auto k = static_cast<std::uint64_t>(models.size());
  return LeakageInstance{std::move(cnf), spec, std::move(roles), k,
                         std::move(models), "custom"};
}

LeakageInstance benchmark_case(int number) {
  LeakageSpec spec;
  std::uint32_t target = 0;
  std::string label;
  switch (number) {
    case 1:
      spec.mode = PropertyMode::NotEqual;
      spec.relation = RelationEncoding::Direct;
      target = 5;
      label = "case1";
      break;
    case 2:
      spec.mode = PropertyMode::Equal;
      spec.relation = RelationEncoding::Indicator;
      target = 6;
      label = "case2";
      break;
    case 3:
      spec.mode = PropertyMode::NotEqual;
      spec.keys_must_differ = true;
      spec.relation = RelationEncoding::Indicator;
      target = 7;
      label = "case3";
      break;
    case 4:
      spec.mode = PropertyMode::Equal;
      spec.keys_must_differ = true;
      spec.relation = RelationEncoding::Direct;
      target = 5;
      label = "unsat";
      break;
    default:
      throw Error(Errc::InvalidArgument,
                  "benchmark case must be 1, 2, 3 or 4 (UNSAT control)");
  }
  auto instance = encode(with_target_vars(spec, target));
  instance.label = std::move(label);
  return instance;
}

std::vector<LeakageInstance> paper_benchmarks() {
  std::vector<LeakageInstance> out;
  for (int c = 1; c <= 4; ++c) out.push_back(benchmark_case(c));
  return out;
}

std::string metadata_json(const LeakageInstance &instance) {
  using nlohmann::json;
  const auto &s = instance.spec;
  json doc;
  doc["label"] = instance.label;
  doc["spec"] = {
      {"state_bits", s.state_bits},
      {"unroll_T", s.unroll_steps},
      {"property_mode", to_string(s.mode)},
      {"keys_must_differ", s.keys_must_differ},
      {"plaintext", s.plaintext},
      {"padding_vars", s.padding_vars},
      {"relation_encoding", to_string(s.relation)},
      {"leakage_model", "BIT"},
  };
  doc["num_vars"] = instance.cnf.num_vars();
  doc["num_clauses"] = instance.cnf.num_clauses();
  doc["oracle_width"] = instance.cnf.num_vars() + instance.cnf.num_clauses() + 1;
  json roles = json::array();
  for (std::size_t i = 0; i < instance.var_roles.size(); ++i) {
    roles.push_back({{"var", i + 1},
                     {"role", to_string(instance.var_roles[i].role)},
                     {"name", instance.var_roles[i].name}});
  }
  doc["var_roles"] = std::move(roles);
  doc["expected_K"] = instance.expected_k;
  json witnesses = json::array();
  for (const auto &w : instance.expected_witnesses) witnesses.push_back(w.to_string());
  doc["expected_witnesses"] = std::move(witnesses);
  return doc.dump(2) + "\n";
}

}  // namespace qleak

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

#include "qleak/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qleak/error.hpp"

namespace qleak {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::ClauseCountMismatch: return "ClauseCountMismatch";
    case Errc::VariableOutOfRange: return "VariableOutOfRange";
    case Errc::TautologyClause: return "TautologyClause";
    case Errc::EmptyClause: return "EmptyClause";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::InfeasibleSpec: return "InfeasibleSpec";
    case Errc::TooManyQubits: return "TooManyQubits";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidK: return "InvalidK";
    case Errc::ZeroShots: return "ZeroShots";
    case Errc::InvalidDelta: return "InvalidDelta";
    case Errc::InvalidProbability: return "InvalidProbability";
    case Errc::NoRoot: return "NoRoot";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Literal Literal::from_dimacs(long long value) {
  if (value == 0) {
    throw Error(Errc::VariableOutOfRange, "literal references variable 0");
  }
  const long long mag = value < 0 ? -value : value;
  if (mag > 0xffffffffLL) {
    throw Error(Errc::VariableOutOfRange, "variable index too large");
  }
  return Literal{static_cast<std::uint32_t>(mag), value < 0};
}

Clause::Clause(std::vector<Literal> literals) {
  if (literals.empty()) {
    throw Error(Errc::EmptyClause, "clause must contain at least one literal");
  }
  literals_.reserve(literals.size());
  for (const auto &lit : literals) {
    if (lit.var == 0) {
      throw Error(Errc::VariableOutOfRange, "literal references variable 0");
    }
    bool duplicate = false;
    for (const auto &seen : literals_) {
      if (seen.var != lit.var) continue;
      if (seen.negated != lit.negated) {
        throw Error(Errc::TautologyClause,
                    "clause contains x" + std::to_string(lit.var) +
                        " and its negation");
      }
      duplicate = true;
    }
    if (!duplicate) literals_.push_back(lit);
  }
}

std::uint32_t Clause::max_var() const {
  std::uint32_t m = 0;
  for (const auto &lit : literals_) m = std::max(m, lit.var);
  return m;
}

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto &b : bits_) b = b ? 1 : 0;
}

Assignment::Assignment(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(b ? 1 : 0);
}

Assignment Assignment::from_index(std::uint64_t index, std::size_t num_vars) {
  std::vector<std::uint8_t> bits(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    bits[i] = (index >> (num_vars - 1 - i)) & 1U;
  }
  return Assignment(std::move(bits));
}

Assignment Assignment::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(Errc::InvalidArgument,
                  "bitstring may only contain '0' and '1'");
    }
    bits.push_back(c == '1');
  }
  return Assignment(std::move(bits));
}

std::uint64_t Assignment::to_index() const {
  if (bits_.size() > 64) {
    throw Error(Errc::TooManyVariables, "assignment wider than 64 bits");
  }
  std::uint64_t index = 0;
  for (auto b : bits_) index = (index << 1) | b;
  return index;
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Cnf::Cnf(std::uint32_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 1) {
    throw Error(Errc::InvalidArgument, "a CNF needs at least one variable");
  }
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    if (clauses_[j].max_var() > num_vars_) {
      throw Error(Errc::VariableOutOfRange,
                  "clause " + std::to_string(j + 1) + " references x" +
                      std::to_string(clauses_[j].max_var()) + " but n=" +
                      std::to_string(num_vars_));
    }
  }
}

bool Cnf::evaluate(const Assignment &x) const {
  if (x.size() != num_vars_) {
    throw Error(Errc::LengthMismatch,
                "assignment has " + std::to_string(x.size()) +
                    " bits, CNF has " + std::to_string(num_vars_) +
                    " variables");
  }
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause &c) {
    return std::any_of(c.literals().begin(), c.literals().end(),
                       [&](const Literal &l) {
                         return l.satisfied_by(x.value(l.var));
                       });
  });
}

Cnf Cnf::with_clause(Clause clause) const {
  auto clauses = clauses_;
  clauses.push_back(std::move(clause));
  return Cnf(num_vars_, std::move(clauses));
}

CompiledCnf::CompiledCnf(const Cnf &cnf) : num_vars_(cnf.num_vars()) {
  if (num_vars_ > 63) {
    throw Error(Errc::TooManyVariables,
                "bitmask evaluation supports at most 63 variables");
  }
  masks_.reserve(cnf.num_clauses());
  for (const auto &clause : cnf.clauses()) {
    ClauseMask m{0, 0};
    for (const auto &lit : clause.literals()) {
      const std::uint64_t bit = std::uint64_t{1} << (num_vars_ - lit.var);
      (lit.negated ? m.negative : m.positive) |= bit;
    }
    masks_.push_back(m);
  }
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_integer(std::string_view token, long long &out) {
  const char *first = token.data();
  const char *last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  std::optional<std::uint32_t> num_vars;
  std::size_t declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == 'c') continue;
    if (tokens[0] == "%") break;  // SATLIB trailer

    if (tokens[0] == "p") {
      long long n = 0;
      long long m = 0;
      if (num_vars || tokens.size() != 4 || tokens[1] != "cnf" ||
          !parse_integer(tokens[2], n) || !parse_integer(tokens[3], m) ||
          n < 1 || m < 0 || n > 0xffffffffLL) {
        throw ParseError(Errc::MalformedHeader, line_no,
                         "expected 'p cnf <vars> <clauses>'");
      }
      num_vars = static_cast<std::uint32_t>(n);
      declared_clauses = static_cast<std::size_t>(m);
      continue;
    }
    if (!num_vars) {
      throw ParseError(Errc::MalformedHeader, line_no,
                       "clause data before 'p cnf' header");
    }
    for (auto token : tokens) {
      long long value = 0;
      if (!parse_integer(token, value)) {
        throw ParseError(Errc::MalformedHeader, line_no,
                         "invalid literal '" + std::string(token) + "'");
      }
      if (value == 0) {
        if (pending.empty()) {
          throw ParseError(Errc::EmptyClause, line_no, "empty clause");
        }
        try {
          clauses.emplace_back(std::move(pending));
        } catch (const Error &e) {
          throw ParseError(e.code(), pending_line, e.what());
        }
        pending.clear();
        continue;
      }
      const long long mag = value < 0 ? -value : value;
      if (mag > static_cast<long long>(*num_vars)) {
        throw ParseError(Errc::VariableOutOfRange, line_no,
                         "variable " + std::to_string(mag) + " exceeds n=" +
                             std::to_string(*num_vars));
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Literal::from_dimacs(value));
    }
  }

  if (!num_vars) {
    throw ParseError(Errc::MalformedHeader, line_no, "missing 'p cnf' header");
  }
  if (!pending.empty()) {
    throw ParseError(Errc::ClauseCountMismatch, pending_line,
                     "last clause is not terminated by 0");
  }
  if (clauses.size() != declared_clauses) {
    throw ParseError(Errc::ClauseCountMismatch, line_no,
                     "header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(clauses.size()));
  }
  return Cnf(*num_vars, std::move(clauses));
}

std::string emit_dimacs(const Cnf &cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars()) + " " +
                    std::to_string(cnf.num_clauses()) + "\n";
  for (const auto &clause : cnf.clauses()) {
    for (const auto &lit : clause.literals()) {
      out += std::to_string(lit.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::Io, "write to '" + path + "' failed");
}

Cnf read_dimacs_file(const std::string &path) {
  return parse_dimacs(read_text_file(path));
}

}  // namespace qleak

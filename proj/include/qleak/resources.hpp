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
#include <string>
#include <vector>

namespace qleak {

/// A residual CNF left after classical preprocessing: n_eff free variables,
/// m clauses and K satisfying assignments.
struct ResidualInstance {
  std::uint64_t n_eff = 0;
  std::uint64_t m = 0;
  std::uint64_t k = 1;

  double rho() const { return static_cast<double>(m) / static_cast<double>(n_eff); }
  /// Throws InvalidArgument unless every field is positive.
  void validate() const;
};

struct ResourceEstimate {
  /// n_eff + m + 1 logical qubits.
  std::uint64_t q_log = 0;
  /// Toffoli-class gates per Grover step: 6m + 2 n_eff - 5.
  std::uint64_t c_q = 0;
  /// (pi/4) sqrt(2^n_eff / K) oracle queries. Infinite past double range;
  /// the log2 fields are always finite.
  double r_q = 0.0;
  double t_q = 0.0;
  double log2_r_q = 0.0;
  double log2_t_q = 0.0;
  /// Classical exponent at which 2^(alpha n_eff) equals T_Q.
  double alpha_min = 0.0;
};

ResourceEstimate estimate(const ResidualInstance &instance);

/// Larger root of 2^(n/2) = rho n, by bisection. Throws NoRoot when the curves
/// never meet on [1, 200].
double crossover_density(double rho);

/// 2 log2(m): where 2^n overtakes m 2^(n/2).
double crossover_fixed_m(std::uint64_t m);

/// The five residual rows (n_eff in 16, 32, 64, 80, 128; m = 8 n_eff; K = 1).
std::vector<ResidualInstance> reference_resource_rows();

/// Mantissa with three significant digits, e.g. "2.01e+02".
std::string format_sci(double log10_value);

enum class TableFormat { Csv, Text };

/// Columns n_eff, m, q_log, R_Q, C_Q, T_Q, alpha_min. Reals in three-digit
/// scientific notation, alpha_min to two decimals.
std::string emit_table(const std::vector<ResidualInstance> &rows, TableFormat format);

}  // namespace qleak

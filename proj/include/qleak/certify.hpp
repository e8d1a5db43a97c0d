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
 * Statistical UNSAT evidence from an aggregated measurement histogram: a
 * Pearson chi-square uniformity test and a Hoeffding bound on the largest
 * observed frequency. The verdict is evidence, never proof.
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "qleak/statevector.hpp"

namespace qleak {

struct ChiSquare {
  double statistic = 0.0;
  std::uint64_t dof = 0;
};

/// Pearson statistic against the uniform law on `num_cells` cells. Cells
/// missing from `counts` count as zero. Throws ZeroShots when shots = 0.
ChiSquare chi_square_uniform(const std::map<std::uint64_t, std::uint64_t> &counts,
                             std::uint64_t shots, std::uint64_t num_cells);

/// sqrt(ln(1/delta) / (2 S)). Throws InvalidDelta unless 0 < delta <= 1 and
/// ZeroShots when S = 0.
double hoeffding_radius(std::uint64_t shots, double delta);

/// Upper quantile of the chi-square law with `dof` degrees of freedom via
/// the Wilson-Hilferty cube-root normal approximation.
double chi_square_quantile(std::uint64_t dof, double z);

/// Standard normal 0.99 quantile.
inline constexpr double kZ99 = 2.326347874;

enum class CertifyVerdict { ConsistentWithUnsat, SpikeDetected };

std::string_view to_string(CertifyVerdict verdict);

struct HistogramReport {
  unsigned n = 0;
  std::uint64_t total_shots = 0;
  std::map<std::string, std::uint64_t> counts;
  double chi2_stat = 0.0;
  std::uint64_t chi2_dof = 0;
  double chi2_threshold = 0.0;
  double p_max = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  /// 1/N + epsilon.
  double threshold = 0.0;
  /// Fewer than 10 shots per cell.
  bool low_shot_warning = false;
  CertifyVerdict verdict = CertifyVerdict::SpikeDetected;

  std::string verdict_line() const;
  std::string to_json() const;
};

/// ConsistentWithUnsat iff p_max <= 1/N + epsilon and the chi-square
/// statistic does not exceed its 0.99 quantile.
HistogramReport certify(const Histogram &histogram, double delta = 0.01);

}  // namespace qleak

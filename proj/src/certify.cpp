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

#include "qleak/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "qleak/error.hpp"

namespace qleak {

ChiSquare chi_square_uniform(const std::map<std::uint64_t, std::uint64_t> &counts,
                             std::uint64_t shots, std::uint64_t num_cells) {
  if (shots == 0) throw Error(Errc::ZeroShots, "chi-square needs at least one shot");
  if (num_cells < 2) throw Error(Errc::InvalidArgument, "need at least two cells");
  const double expected = static_cast<double>(shots) / static_cast<double>(num_cells);
  double stat = 0.0;
  std::uint64_t seen = 0;
  for (const auto &[cell, observed] : counts) {
    if (cell >= num_cells) throw Error(Errc::IndexOutOfRange, "cell outside support");
    const double d = static_cast<double>(observed) - expected;
    stat += d * d / expected;
    ++seen;
  }
  // each empty cell contributes (0 - E)^2 / E = E
  stat += static_cast<double>(num_cells - seen) * expected;
  return {stat, num_cells - 1};
}

double hoeffding_radius(std::uint64_t shots, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw Error(Errc::InvalidDelta, "delta must lie in (0, 1]");
  }
  if (shots == 0) throw Error(Errc::ZeroShots, "radius needs at least one shot");
  return std::sqrt(std::log(1.0 / delta) / (2.0 * static_cast<double>(shots)));
}

double chi_square_quantile(std::uint64_t dof, double z) {
  if (dof == 0) throw Error(Errc::InvalidArgument, "dof must be positive");
  const double k = static_cast<double>(dof);
  const double a = 2.0 / (9.0 * k);
  const double c = 1.0 - a + z * std::sqrt(a);
  return k * c * c * c;
}

std::string_view to_string(CertifyVerdict verdict) {
  return verdict == CertifyVerdict::ConsistentWithUnsat ? "ConsistentWithUnsat"
                                                        : "SpikeDetected";
}

HistogramReport certify(const Histogram &histogram, double delta) {
  const unsigned n = histogram.width();
  if (n < 1 || n > 62) throw Error(Errc::InvalidArgument, "histogram width out of range");
  const std::uint64_t cells = std::uint64_t{1} << n;
  const std::uint64_t shots = histogram.total();

  HistogramReport r;
  r.n = n;
  r.total_shots = shots;
  r.delta = delta;
  r.epsilon = hoeffding_radius(shots, delta);
  const auto chi = chi_square_uniform(histogram.counts(), shots, cells);
  r.chi2_stat = chi.statistic;
  r.chi2_dof = chi.dof;
  r.chi2_threshold = chi_square_quantile(chi.dof, kZ99);

  std::uint64_t max_count = 0;
  for (const auto &[outcome, count] : histogram.counts()) {
    r.counts[histogram.bitstring(outcome)] = count;
    max_count = std::max(max_count, count);
  }
  r.p_max = static_cast<double>(max_count) / static_cast<double>(shots);
  r.threshold = 1.0 / static_cast<double>(cells) + r.epsilon;
  r.low_shot_warning = shots < 10 * cells;
  r.verdict = (r.p_max <= r.threshold && r.chi2_stat <= r.chi2_threshold)
                  ? CertifyVerdict::ConsistentWithUnsat
                  : CertifyVerdict::SpikeDetected;
  return r;
}

std::string HistogramReport::verdict_line() const {
  char buf[320];
  const bool flat = verdict == CertifyVerdict::ConsistentWithUnsat;
  std::snprintf(buf, sizeof buf,
                "%s: p_max=%.4f %s 1/N+eps=%.4f (eps=%.5f, delta=%g, S=%llu); "
                "chi2=%.2f on %llu dof (0.99 quantile %.2f). %s",
                flat ? "ConsistentWithUnsat" : "SpikeDetected", p_max,
                p_max <= threshold ? "<=" : ">", threshold, epsilon, delta,
                static_cast<unsigned long long>(total_shots), chi2_stat,
                static_cast<unsigned long long>(chi2_dof), chi2_threshold,
                flat ? "Statistical evidence of UNSAT, not a proof."
                     : "Marked-state amplification is likely.");
  return buf;
}

std::string HistogramReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["total_shots"] = total_shots;
  j["counts"] = counts;
  j["chi2_stat"] = chi2_stat;
  j["chi2_dof"] = chi2_dof;
  j["chi2_threshold"] = chi2_threshold;
  j["p_max"] = p_max;
  j["epsilon"] = epsilon;
  j["delta"] = delta;
  j["threshold"] = threshold;
  j["low_shot_warning"] = low_shot_warning;
  j["verdict"] = to_string(verdict);
  j["summary"] = verdict_line();
  return j.dump(2) + "\n";
}

}  // namespace qleak

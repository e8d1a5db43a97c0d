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
#include <string>
#include <string_view>
#include <vector>

#include "qleak/cnf.hpp"
#include "qleak/grover.hpp"
#include "qleak/statevector.hpp"

namespace qleak {

/// How a trial turns its shot histogram into one candidate assignment.
enum class CandidateRule {
  /// Most frequent bitstring of the trial; ties go to the smallest index.
  HistogramMode,
  /// The first shot drawn under the trial seed.
  SingleShot,
};

std::string_view to_string(CandidateRule rule);
CandidateRule parse_candidate_rule(std::string_view text);

/// Growth factor of the BBHT schedule, held as a ratio.
struct Ratio {
  std::uint64_t num = 8;
  std::uint64_t den = 7;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct BbhtOptions {
  std::uint64_t shots_per_trial = 2000;
  std::uint64_t seed = 0;
  /// Defaults to default_budget(n).
  std::optional<std::uint64_t> budget;
  bool gate_level = false;
  ClauseEncoding encoding = ClauseEncoding::ViolationBits;
  std::optional<NoiseModel> noise;
  CandidateRule candidate = CandidateRule::HistogramMode;
  Ratio lambda;

  void validate() const;
};

/// 3 * ceil(log_lambda sqrt(2^n)) + 10.
std::uint64_t default_budget(Qubit n, Ratio lambda = {});

struct BbhtTrial {
  double k = 1.0;
  std::uint64_t r = 0;
  Assignment measured;
  bool classical_check = false;
  Histogram histogram;
};

enum class BbhtVerdict { Sat, BudgetExhausted };

std::string_view to_string(BbhtVerdict verdict);

struct BbhtReport {
  std::vector<BbhtTrial> trials;
  BbhtVerdict verdict = BbhtVerdict::BudgetExhausted;
  std::optional<Assignment> witness;
  std::uint64_t budget = 0;
  /// Sum of every trial's histogram.
  Histogram aggregated;

  std::uint64_t tries() const { return trials.size(); }
  const Histogram &final_histogram() const { return trials.back().histogram; }
};

/// Randomized Grover schedule for an unknown number of solutions. Each trial
/// draws r uniformly from the integers below k, runs r Grover steps, picks a
/// candidate and accepts it only if it satisfies the CNF classically. After
/// each rejection k grows by lambda, capped at ceil(sqrt N); the loop ends
/// once k exceeds sqrt N or the budget is spent.
BbhtReport bbht_solve(const Cnf &cnf, const BbhtOptions &options);

/// Verdict, witness bitstring, tries, per-trial records and aggregated counts.
std::string report_json(const BbhtReport &report);

}  // namespace qleak

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

#include "qleak/bbht.hpp"

#include <cmath>
#include <json.hpp>

#include "qleak/error.hpp"
#include "qleak/rng.hpp"

namespace qleak {

std::string_view to_string(CandidateRule rule) {
  return rule == CandidateRule::HistogramMode ? "mode" : "single_shot";
}

CandidateRule parse_candidate_rule(std::string_view text) {
  if (text == "mode") return CandidateRule::HistogramMode;
  if (text == "single_shot" || text == "single-shot") return CandidateRule::SingleShot;
  throw Error(Errc::InvalidArgument, "unknown candidate rule: " + std::string(text));
}

std::string_view to_string(BbhtVerdict verdict) {
  return verdict == BbhtVerdict::Sat ? "SAT" : "BudgetExhausted";
}

void BbhtOptions::validate() const {
  if (shots_per_trial < 1) throw Error(Errc::ZeroShots, "need at least one shot per trial");
  if (budget && *budget < 1) throw Error(Errc::InvalidArgument, "budget must be at least 1");
  if (lambda.den == 0 || lambda.num <= lambda.den) {
    throw Error(Errc::InvalidArgument, "growth factor must exceed 1");
  }
  if (noise) noise->validate();
}

std::uint64_t default_budget(Qubit n, Ratio lambda) {
  const double log_sqrt_n = 0.5 * static_cast<double>(n) * std::log(2.0);
  const double sweep = std::ceil(log_sqrt_n / std::log(lambda.value()) - 1e-12);
  return 3 * static_cast<std::uint64_t>(std::max(sweep, 0.0)) + 10;
}

BbhtReport bbht_solve(const Cnf &cnf, const BbhtOptions &options) {
  options.validate();
  const Qubit n = cnf.num_vars();
  if (n > kMaxQubits) {
    throw Error(Errc::TooManyQubits, "search register exceeds the simulator ceiling");
  }
  if (options.gate_level) {
    const std::uint64_t width = std::uint64_t{n} + cnf.num_clauses() + 1;
    if (width > kMaxQubits) {
      throw Error(Errc::TooManyQubits,
                  "gate-level oracle needs " + std::to_string(width) + " qubits");
    }
  }

  GroverSearch search(cnf);
  const CompiledCnf check(cnf);
  const double sqrt_n = std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
  const double cap = std::ceil(sqrt_n);

  BbhtReport report;
  report.budget = options.budget.value_or(default_budget(n, options.lambda));
  report.aggregated = Histogram(n);

  double k = 1.0;
  for (std::uint64_t t = 0; t < report.budget; ++t) {
    const std::uint64_t trial_seed = derive_seed(options.seed, t);
    Rng rng(trial_seed);
    const auto bound = static_cast<std::uint64_t>(std::ceil(k));
    const std::uint64_t r = rng.below(bound);

    GroverConfig config;
    config.iterations = r;
    config.shots = options.shots_per_trial;
    config.seed = derive_seed(trial_seed, 1);
    config.use_gate_level = options.gate_level;
    config.encoding = options.encoding;
    config.noise = options.noise;
    GroverRun run = search.run(config);

    std::uint64_t candidate = 0;
    if (options.candidate == CandidateRule::HistogramMode) {
      candidate = *run.histogram.mode();
    } else {
      // same stream as the trial histogram, so this is its first shot
      const Histogram first =
          sample_distribution(run.probabilities, n, 1, config.seed, config.noise);
      candidate = first.counts().begin()->first;
    }

    BbhtTrial trial{k, r, Assignment::from_index(candidate, n), check(candidate),
                    std::move(run.histogram)};
    report.aggregated.merge(trial.histogram);
    const bool accepted = trial.classical_check;
    report.trials.push_back(std::move(trial));
    if (accepted) {
      report.verdict = BbhtVerdict::Sat;
      report.witness = report.trials.back().measured;
      if (!cnf.evaluate(*report.witness)) {
        throw Error(Errc::InvalidArgument, "accepted witness fails the CNF");
      }
      return report;
    }
    k = std::min(k * static_cast<double>(options.lambda.num) /
                     static_cast<double>(options.lambda.den),
                 cap);
    if (k > sqrt_n) break;
  }
  report.verdict = BbhtVerdict::BudgetExhausted;
  return report;
}

std::string report_json(const BbhtReport &report) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(report.verdict);
  j["witness"] = report.witness ? nlohmann::ordered_json(report.witness->to_string())
                                : nlohmann::ordered_json(nullptr);
  j["tries"] = report.tries();
  j["budget"] = report.budget;
  auto &trials = j["trials"] = nlohmann::ordered_json::array();
  for (const auto &t : report.trials) {
    trials.push_back({{"k", t.k},
                      {"r", t.r},
                      {"measured", t.measured.to_string()},
                      {"classical_check", t.classical_check}});
  }
  auto &counts = j["histogram"] = nlohmann::ordered_json::object();
  for (const auto &[outcome, count] : report.aggregated.counts()) {
    counts[report.aggregated.bitstring(outcome)] = count;
  }
  j["total_shots"] = report.aggregated.total();
  return j.dump(2) + "\n";
}

}  // namespace qleak

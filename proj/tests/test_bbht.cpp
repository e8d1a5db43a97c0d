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

#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>

#include "qleak/bbht.hpp"
#include "qleak/error.hpp"
#include "qleak/leakage.hpp"
#include "qleak/solver.hpp"
#include "support/fuzz.hpp"

namespace qleak {
namespace {

TEST(Budget, DefaultFormula) {
  // ceil(log_{8/7} 8) = 16 for n = 6
  EXPECT_EQ(default_budget(6), 58U);
  EXPECT_EQ(default_budget(5), 3U * 13U + 10U);
  EXPECT_EQ(default_budget(0), 10U);
}

TEST(Bbht, UnsatControlExhaustsBudget) {
  BbhtOptions options;
  options.seed = 3;
  const auto report = bbht_solve(benchmark_case(4).cnf, options);
  EXPECT_EQ(report.verdict, BbhtVerdict::BudgetExhausted);
  EXPECT_FALSE(report.witness);
  EXPECT_LE(report.tries(), report.budget);
  // odd n: a single sweep, ending when the next k would pass sqrt 32
  const double next = std::min(report.trials.back().k * 8.0 / 7.0, 6.0);
  EXPECT_GT(next, std::sqrt(32.0));
  EXPECT_LT(report.tries(), report.budget);
  for (const auto &t : report.trials) {
    EXPECT_LT(t.r, static_cast<std::uint64_t>(std::ceil(t.k)));
    EXPECT_FALSE(t.classical_check);
  }
  EXPECT_EQ(report.aggregated.total(), report.tries() * options.shots_per_trial);
}

TEST(Bbht, EvenWidthRunsToBudget) {
  BbhtOptions options;
  options.budget = 25;
  options.shots_per_trial = 50;
  const Cnf unsat(6, {Clause{pos(1)}, Clause{neg(1)}});
  const auto report = bbht_solve(unsat, options);
  EXPECT_EQ(report.tries(), 25U);
  // k is capped at sqrt 64 = 8 and never exceeds it
  EXPECT_EQ(report.trials.back().k, 8.0);
}

TEST(Bbht, SatWitnessesSatisfy) {
  for (int c = 1; c <= 3; ++c) {
    const auto inst = benchmark_case(c);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      BbhtOptions options;
      options.seed = seed;
      const auto report = bbht_solve(inst.cnf, options);
      ASSERT_EQ(report.verdict, BbhtVerdict::Sat);
      EXPECT_TRUE(inst.cnf.evaluate(*report.witness));
      EXPECT_TRUE(report.trials.back().classical_check);
      EXPECT_EQ(*report.witness, report.trials.back().measured);
    }
  }
}

TEST(Bbht, DeterministicForSeed) {
  BbhtOptions options;
  options.seed = 99;
  const auto cnf = benchmark_case(2).cnf;
  EXPECT_EQ(report_json(bbht_solve(cnf, options)), report_json(bbht_solve(cnf, options)));
}

TEST(Bbht, SingleShotTriesMatchAnalyticExpectation) {
  for (Qubit n : {5U, 6U}) {
    const Cnf cnf = testing::cnf_with_power_of_two_models(n, 1, 0x15);
    BbhtOptions options;
    options.candidate = CandidateRule::SingleShot;
    options.shots_per_trial = 1;
    double total = 0.0;
    const int seeds = 600;
    for (int s = 0; s < seeds; ++s) {
      options.seed = static_cast<std::uint64_t>(s);
      total += static_cast<double>(bbht_solve(cnf, options).tries());
    }
    const double expected = testing::single_shot_expected_tries(n, 2, default_budget(n));
    // standard error is below 0.2 at this seed count
    EXPECT_NEAR(total / seeds, expected, 0.6) << "n=" << n;
  }
}

TEST(Bbht, SingleShotUsesFirstShotOfTrialHistogram) {
  BbhtOptions options;
  options.candidate = CandidateRule::SingleShot;
  options.shots_per_trial = 1;
  options.seed = 5;
  const auto report = bbht_solve(benchmark_case(1).cnf, options);
  for (const auto &t : report.trials) {
    EXPECT_EQ(t.histogram.count(t.measured.to_index()), 1U);
  }
}

TEST(Bbht, NoiseNeverYieldsFalseWitness) {
  const auto inst = benchmark_case(1);
  for (auto rule : {CandidateRule::HistogramMode, CandidateRule::SingleShot}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      BbhtOptions options;
      options.seed = seed;
      options.candidate = rule;
      options.noise = NoiseModel{0.2};
      const auto report = bbht_solve(inst.cnf, options);
      if (report.witness) EXPECT_TRUE(inst.cnf.evaluate(*report.witness));
    }
  }
}

TEST(Bbht, GateLevelPath) {
  BbhtOptions options;
  options.gate_level = true;
  options.shots_per_trial = 200;
  const auto inst = benchmark_case(1);
  const auto report = bbht_solve(inst.cnf, options);
  ASSERT_EQ(report.verdict, BbhtVerdict::Sat);
  EXPECT_TRUE(inst.cnf.evaluate(*report.witness));
}

TEST(Bbht, RejectsBadOptions) {
  const auto cnf = benchmark_case(1).cnf;
  BbhtOptions options;
  options.budget = 0;
  EXPECT_THROW(bbht_solve(cnf, options), Error);
  options = {};
  options.shots_per_trial = 0;
  EXPECT_THROW(bbht_solve(cnf, options), Error);
  options = {};
  options.lambda = {1, 1};
  EXPECT_THROW(bbht_solve(cnf, options), Error);
}

TEST(Bbht, JsonReport) {
  BbhtOptions options;
  options.seed = 1;
  const auto report = bbht_solve(benchmark_case(1).cnf, options);
  const auto doc = nlohmann::json::parse(report_json(report));
  EXPECT_EQ(doc["verdict"], "SAT");
  EXPECT_EQ(doc["witness"], report.witness->to_string());
  EXPECT_EQ(doc["tries"], report.tries());
  EXPECT_EQ(doc["trials"].size(), report.tries());
  EXPECT_EQ(doc["total_shots"], report.tries() * 2000);
}

}  // namespace
}  // namespace qleak

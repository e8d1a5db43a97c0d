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

#include "qleak/error.hpp"
#include "qleak/solver.hpp"
#include "support/fuzz.hpp"

namespace qleak {
namespace {

TEST(BruteForce, CountsModelsOfDisjunction) {
  const auto r = brute_force(Cnf(2, {Clause{pos(1), pos(2)}}));
  EXPECT_EQ(r.status, SolveStatus::Sat);
  EXPECT_EQ(*r.solution_count, 3U);
  EXPECT_EQ(*r.witness, (Assignment{0, 1}));
}

TEST(BruteForce, Contradiction) {
  const auto r = brute_force(Cnf(1, {Clause{pos(1)}, Clause{neg(1)}}));
  EXPECT_EQ(r.status, SolveStatus::Unsat);
  EXPECT_EQ(*r.solution_count, 0U);
  EXPECT_FALSE(r.witness);
}

TEST(BruteForce, GuardsVariableCount) {
  EXPECT_THROW(
      {
        try {
          brute_force(Cnf(25, {}));
        } catch (const Error &e) {
          EXPECT_EQ(e.code(), Errc::TooManyVariables);
          throw;
        }
      },
      Error);
}

TEST(Solvers, AgreeWithNaiveEnumerationOnFuzz) {
  Rng rng(2024);
  int sat = 0;
  for (int i = 0; i < 400; ++i) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(10));
    const Cnf cnf = testing::random_cnf(rng, n, rng.below(5 * n + 1));
    const auto naive = testing::naive_models(cnf);
    const auto brute = brute_force(cnf);
    const auto dpll = dpll_solve(cnf);

    ASSERT_EQ(*brute.solution_count, naive.size());
    ASSERT_EQ(enumerate_models(cnf), naive);
    ASSERT_EQ(brute.status, dpll.status);
    if (!naive.empty()) {
      ++sat;
      ASSERT_EQ(*brute.witness, naive.front());
      ASSERT_TRUE(dpll.witness);
      ASSERT_TRUE(cnf.evaluate(*dpll.witness));
    } else {
      ASSERT_FALSE(dpll.witness);
    }
  }
  // the generator should exercise both outcomes
  EXPECT_GT(sat, 50);
  EXPECT_LT(sat, 390);
}

TEST(Dpll, HandlesEmptyFormulaAndLargeInstances) {
  EXPECT_EQ(dpll_solve(Cnf(3, {})).status, SolveStatus::Sat);
  // beyond the enumeration guard: a chain x1 -> x2 -> ... -> x40 with x1 and not x40
  std::vector<Clause> clauses{Clause{pos(1)}};
  for (std::uint32_t v = 1; v < 40; ++v) clauses.push_back(Clause{neg(v), pos(v + 1)});
  const Cnf chain(40, clauses);
  EXPECT_EQ(dpll_solve(chain).status, SolveStatus::Sat);
  EXPECT_EQ(dpll_solve(chain.with_clause(Clause{neg(40)})).status, SolveStatus::Unsat);
}

}  // namespace
}  // namespace qleak

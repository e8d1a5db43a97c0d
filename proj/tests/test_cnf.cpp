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

#include "qleak/cnf.hpp"
#include "qleak/error.hpp"
#include "support/fuzz.hpp"

namespace qleak {
namespace {

template <class F>
Errc error_code(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return Errc::Io;
}

TEST(Dimacs, ParsesTwoClauses) {
  const Cnf cnf = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0\n");
  EXPECT_EQ(cnf, Cnf(2, {Clause{pos(1), neg(2)}, Clause{neg(1), pos(2)}}));
}

TEST(Dimacs, ParsesUnitClause) {
  EXPECT_EQ(parse_dimacs("p cnf 1 1\n1 0\n"), Cnf(1, {Clause{pos(1)}}));
}

TEST(Dimacs, AcceptsCommentsCrlfAndMultiLineClauses) {
  const Cnf cnf = parse_dimacs("c hello\r\np cnf 3 2\r\n1 2\r\n 3 0 -1\n0\n");
  EXPECT_EQ(cnf, Cnf(3, {Clause{pos(1), pos(2), pos(3)}, Clause{neg(1)}}));
}

TEST(Dimacs, VariableOutOfRangeReportsLine) {
  try {
    parse_dimacs("p cnf 2 1\n3 0\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.code(), Errc::VariableOutOfRange);
    EXPECT_EQ(e.line(), 2U);
  }
}

TEST(Dimacs, RejectsMalformedInput) {
  EXPECT_EQ(error_code([] { parse_dimacs("1 0\n"); }), Errc::MalformedHeader);
  EXPECT_EQ(error_code([] { parse_dimacs("p cnf x 1\n1 0\n"); }), Errc::MalformedHeader);
  EXPECT_EQ(error_code([] { parse_dimacs("p cnf 2 2\n1 0\n"); }), Errc::ClauseCountMismatch);
  EXPECT_EQ(error_code([] { parse_dimacs("p cnf 2 1\n1 2 0\n2 0\n"); }),
            Errc::ClauseCountMismatch);
  EXPECT_EQ(error_code([] { parse_dimacs("p cnf 2 1\n1 -1 0\n"); }), Errc::TautologyClause);
  EXPECT_EQ(error_code([] { parse_dimacs("p cnf 2 1\n0\n"); }), Errc::EmptyClause);
}

TEST(Dimacs, EmitsCanonicalText) {
  EXPECT_EQ(emit_dimacs(Cnf(1, {Clause{pos(1)}})), "p cnf 1 1\n1 0\n");
  EXPECT_EQ(emit_dimacs(Cnf(2, {})), "p cnf 2 0\n");
}

TEST(Dimacs, FuzzRoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(12));
    const Cnf cnf = testing::random_cnf(rng, n, rng.below(30), 4);
    EXPECT_EQ(parse_dimacs(emit_dimacs(cnf)), cnf);
  }
}

TEST(Clause, DropsDuplicatesAndRejectsTautologies) {
  EXPECT_EQ(Clause({pos(1), pos(1), neg(2)}).size(), 2U);
  EXPECT_EQ(error_code([] { Clause({pos(3), neg(3)}); }), Errc::TautologyClause);
  EXPECT_EQ(error_code([] { Clause(std::vector<Literal>{}); }), Errc::EmptyClause);
}

TEST(Cnf, ValidatesVariables) {
  EXPECT_EQ(error_code([] { Cnf(1, {Clause{pos(2)}}); }), Errc::VariableOutOfRange);
}

TEST(Evaluate, Examples) {
  const Cnf equiv(2, {Clause{pos(1), neg(2)}, Clause{neg(1), pos(2)}});
  EXPECT_TRUE(evaluate(equiv, {1, 1}));
  EXPECT_FALSE(evaluate(equiv, {1, 0}));
  EXPECT_FALSE(evaluate(Cnf(1, {Clause{pos(1)}, Clause{neg(1)}}), {0}));
  EXPECT_TRUE(evaluate(Cnf(3, {}), {0, 1, 0}));
  EXPECT_EQ(error_code([&] { evaluate(equiv, {1}); }), Errc::LengthMismatch);
}

TEST(Assignment, IndexAndStringConventions) {
  const Assignment a = Assignment::from_index(0b10110, 5);
  EXPECT_EQ(a.to_string(), "10110");
  EXPECT_TRUE(a.value(1));
  EXPECT_FALSE(a.value(2));
  EXPECT_EQ(a.to_index(), 0b10110U);
  EXPECT_EQ(Assignment::from_string("10110"), a);
  EXPECT_LT(Assignment::from_string("011"), Assignment::from_string("100"));
}

TEST(CompiledCnf, MatchesReferenceEvaluation) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto n = 1 + static_cast<std::uint32_t>(rng.below(8));
    const Cnf cnf = testing::random_cnf(rng, n, rng.below(12));
    const CompiledCnf f(cnf);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      ASSERT_EQ(f(x), cnf.evaluate(Assignment::from_index(x, n)));
    }
  }
}

}  // namespace
}  // namespace qleak

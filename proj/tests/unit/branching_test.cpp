// Copyright 2026 The pvc5 Authors
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
#include <random>

#include "pvc5/branching.hpp"
#include "support/oracles.hpp"

namespace pvc5 {
namespace {

TEST(BranchingTest, ClosedForms) {
  EXPECT_NEAR(branching_factor(BranchVector{1, 1}), 2.0, 1e-9);
  EXPECT_NEAR(branching_factor(BranchVector{1, 1, 1}), 3.0, 1e-9);
  EXPECT_NEAR(branching_factor(BranchVector{1, 1, 2}), 1.0 + std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(branching_factor(BranchVector{2, 1, 1, 2}), 1.0 + std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(branching_factor(BranchVector{1, 2}), (1.0 + std::sqrt(5.0)) / 2.0, 1e-9);
  EXPECT_NEAR(characteristic_value(BranchVector{1, 1, 1}, 3.0), 0.0, 1e-12);
}

TEST(BranchingTest, AllOnesGivesLength) {
  for (int l = 2; l <= 9; ++l) {
    EXPECT_NEAR(branching_factor(BranchVector(l, 1)), l, 1e-9);
  }
}

TEST(BranchingTest, RejectsDegenerateVectors) {
  EXPECT_THROW((void)branching_factor(BranchVector{1}), std::invalid_argument);
  EXPECT_THROW((void)branching_factor(BranchVector{1, 0}), std::invalid_argument);
}

TEST(BranchingTest, MatchesNewtonAndIsMonotone) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    BranchVector v(2 + rng() % 5);
    for (int& x : v) x = 1 + static_cast<int>(rng() % 4);
    const double lambda = branching_factor(v);
    EXPECT_NEAR(lambda, testing::newton_factor(v), 1e-9);
    BranchVector longer = v;
    longer.push_back(1 + static_cast<int>(rng() % 4));
    EXPECT_GT(branching_factor(longer), lambda);
    BranchVector bigger = v;
    bigger[rng() % v.size()] += 1;
    EXPECT_LT(branching_factor(bigger), lambda);
  }
}

TEST(BranchingTest, RoundUpThird) {
  EXPECT_DOUBLE_EQ(round_up_3(2.41421), 2.415);
  EXPECT_DOUBLE_EQ(round_up_3(2.73205), 2.733);
  EXPECT_DOUBLE_EQ(round_up_3(3.0), 3.0);
  EXPECT_DOUBLE_EQ(round_up_3(2.9999999999), 3.0);
}

TEST(BranchingTest, TableMatchesEveryRow) {
  double worst = 0.0;
  for (const auto& e : verify_factor_table()) {
    EXPECT_TRUE(e.matches) << rule_name(e.rule);
    EXPECT_NEAR(e.computed_lambda, testing::newton_factor(e.vector), 1e-9);
    EXPECT_LE(std::abs(e.rounded_lambda - e.table_lambda), 0.001 + 1e-12);
    worst = std::max(worst, e.computed_lambda);
  }
  EXPECT_NEAR(worst, 3.0, 1e-9);
}

TEST(BranchingTest, PublishedRows) {
  auto row = [](RuleId id) {
    for (const auto& e : verify_factor_table()) {
      if (e.rule == id) return e;
    }
    throw std::out_of_range("missing row");
  };
  EXPECT_DOUBLE_EQ(row(RuleId::kR8_1).table_lambda, 2.415);
  EXPECT_NEAR(row(RuleId::kR8_1).hypothesis_lambda, 3.0, 1e-9);
  EXPECT_DOUBLE_EQ(row(RuleId::kR11_3).table_lambda, 2.733);
  EXPECT_EQ(row(RuleId::kR11_3).vector, (BranchVector{2, 1, 1, 2}));
  EXPECT_DOUBLE_EQ(row(RuleId::kR13_1).rounded_lambda, 2.733);
}

TEST(BranchingTest, EveryBranchingRuleHasARow) {
  EXPECT_TRUE(branching_rules_without_row().empty());
}

}  // namespace
}  // namespace pvc5

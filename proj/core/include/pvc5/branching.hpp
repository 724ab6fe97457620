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

// Branching factors of the branching rules.

#ifndef PVC5_BRANCHING_HPP_
#define PVC5_BRANCHING_HPP_

#include <span>
#include <vector>

#include "pvc5/rule_id.hpp"

namespace pvc5 {

// Branch sizes |X1|, ..., |Xl|: l >= 2, every entry >= 1.
using BranchVector = std::vector<int>;

// Unique positive root of x^d - sum_i x^(d - v_i), d = max v_i, found by
// bisection on [1, l]. Throws std::invalid_argument for an invalid vector.
[[nodiscard]] double branching_factor(std::span<const int> v);

// Value of the characteristic polynomial at x.
[[nodiscard]] double characteristic_value(std::span<const int> v, double x);

struct RuleVector {
  RuleId rule;
  BranchVector vector;             // the sizes the published table is based on
  BranchVector hypothesis_vector;  // smallest sizes the rule's hypothesis admits
  double table_lambda;             // published value
};

// One entry per row of the published factor table.
[[nodiscard]] const std::vector<RuleVector>& rule_branch_vectors();

struct FactorTableEntry {
  RuleId rule;
  BranchVector vector;
  double computed_lambda;
  double rounded_lambda;  // computed, rounded up at the third decimal
  double table_lambda;
  double residual;
  double hypothesis_lambda;  // factor of hypothesis_vector
  bool matches;
};

[[nodiscard]] std::vector<FactorTableEntry> verify_factor_table();

// ceil(x * 1000) / 1000, tolerant of representation noise.
[[nodiscard]] double round_up_3(double x);

// Branching rules of the engine that have no table row.
[[nodiscard]] std::vector<RuleId> branching_rules_without_row();

}  // namespace pvc5

#endif  // PVC5_BRANCHING_HPP_

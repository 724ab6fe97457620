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

#include "pvc5/branching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pvc5 {

double characteristic_value(std::span<const int> v, double x) {
  const int d = *std::max_element(v.begin(), v.end());
  double value = std::pow(x, d);
  for (int xi : v) value -= std::pow(x, d - xi);
  return value;
}

double branching_factor(std::span<const int> v) {
  if (v.size() < 2) throw std::invalid_argument("a branch vector needs at least two entries");
  for (int xi : v) {
    if (xi < 1) throw std::invalid_argument("branch sizes must be positive");
  }
  // 1 - sum x^-v_i increases in x; it is 1 - l < 0 at x = 1 and >= 0 at x = l.
  auto f = [&](double x) {
    double s = 1.0;
    for (int xi : v) s -= std::pow(x, -xi);
    return s;
  };
  double lo = 1.0;
  double hi = static_cast<double>(v.size());
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

const std::vector<RuleVector>& rule_branch_vectors() {
  using R = RuleId;
  static const std::vector<RuleVector> rows = {
      {R::kR2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR3, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR4, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR5_1, {1, 1}, {1, 1}, 2},
      {R::kR5_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR5_3, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR5_4, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR6_1, {1, 1}, {1, 1}, 2},
      {R::kR6_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR6_3, {1, 1}, {1, 1}, 2},
      {R::kR7_2_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR7_2_3, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR7_2_5, {2, 1, 1}, {2, 1, 1}, 2.415},
      // The third branch L \ {l1, l2} may hold a single leaf when |L| = 3.
      {R::kR8_1, {1, 1, 2}, {1, 1, 1}, 2.415},
      {R::kR8_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR8_3, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR9_1, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR9_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR9_3, {1, 1}, {1, 1}, 2},
      {R::kR9_4, {1, 1}, {1, 1}, 2},
      {R::kR10, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR11_1_1, {1, 1}, {1, 1}, 2},
      {R::kR11_1_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR11_1_3, {1, 1, 2, 2, 2}, {1, 1, 2, 2, 2}, 3},
      {R::kR11_2_1, {1, 1}, {1, 1}, 2},
      {R::kR11_2_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR11_2_3, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR11_2_4, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR11_3, {2, 1, 1, 2}, {2, 1, 1, 2}, 2.733},
      {R::kR12_1, {1, 1}, {1, 1}, 2},
      {R::kR12_2, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR12_3_1, {1, 1, 2}, {1, 1, 2}, 2.415},
      {R::kR12_3_3, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR12_3_4, {1, 1, 2}, {1, 1, 2}, 2.415},
      {R::kR13_1, {1, 1, 2, 2}, {1, 1, 2, 2}, 2.733},
      {R::kR13_3, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR13_4, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR14_2, {1, 1}, {1, 1}, 2},
      {R::kR16, {1, 1}, {1, 1}, 2},
      {R::kR17, {1, 1, 1}, {1, 1, 1}, 3},
      {R::kR18, {1, 1}, {1, 1}, 2},
  };
  return rows;
}

double round_up_3(double x) { return std::ceil(x * 1000.0 - 1e-6) / 1000.0; }

std::vector<FactorTableEntry> verify_factor_table() {
  std::vector<FactorTableEntry> out;
  for (const RuleVector& row : rule_branch_vectors()) {
    FactorTableEntry e;
    e.rule = row.rule;
    e.vector = row.vector;
    e.computed_lambda = branching_factor(row.vector);
    e.rounded_lambda = round_up_3(e.computed_lambda);
    e.table_lambda = row.table_lambda;
    e.residual = std::abs(characteristic_value(row.vector, e.computed_lambda));
    e.hypothesis_lambda = branching_factor(row.hypothesis_vector);
    e.matches = std::abs(e.rounded_lambda - e.table_lambda) <= 0.001 + 1e-9;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RuleId> branching_rules_without_row() {
  std::vector<RuleId> out;
  const auto& rows = rule_branch_vectors();
  for (RuleId id : leaf_rule_ids()) {
    if (!is_branching(id)) continue;
    const bool listed =
        std::any_of(rows.begin(), rows.end(), [&](const RuleVector& r) { return r.rule == id; });
    if (!listed) out.push_back(id);
  }
  return out;
}

}  // namespace pvc5

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

#ifndef PVC5_RULE_ID_HPP_
#define PVC5_RULE_ID_HPP_

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace pvc5 {

// Every rule of the disjoint routine, in the order the routine tries them.
// Context rules only group their subrules and never fire themselves.
enum class RuleId {
  kR0,
  kR1,
  kR2,
  kR3,
  kR4,
  kR5,
  kR5_1,
  kR5_2,
  kR5_3,
  kR5_4,
  kR6,
  kR6_1,
  kR6_2,
  kR6_3,
  kR7,
  kR7_1,
  kR7_2,
  kR7_2_1,
  kR7_2_2,
  kR7_2_3,
  kR7_2_4,
  kR7_2_5,
  kR8,
  kR8_1,
  kR8_2,
  kR8_3,
  kR9,
  kR9_1,
  kR9_2,
  kR9_3,
  kR9_4,
  kR10,
  kR11,
  kR11_1,
  kR11_1_1,
  kR11_1_2,
  kR11_1_3,
  kR11_1_4,
  kR11_2,
  kR11_2_1,
  kR11_2_2,
  kR11_2_3,
  kR11_2_4,
  kR11_3,
  kR12,
  kR12_1,
  kR12_2,
  kR12_3,
  kR12_3_1,
  kR12_3_2,
  kR12_3_3,
  kR12_3_4,
  kR13,
  kR13_1,
  kR13_2,
  kR13_3,
  kR13_4,
  kR14,
  kR14_1,
  kR14_2,
  kR15,
  kR16,
  kR17,
  kR18,
};

inline constexpr int kRuleCount = static_cast<int>(RuleId::kR18) + 1;

[[nodiscard]] std::span<const RuleId> all_rule_ids();
// Rules that can fire: every id except the context containers.
[[nodiscard]] std::span<const RuleId> leaf_rule_ids();

[[nodiscard]] bool is_context(RuleId id);
[[nodiscard]] bool is_reduction(RuleId id);
[[nodiscard]] bool is_branching(RuleId id);

// "R7.2.5" style name.
[[nodiscard]] std::string_view rule_name(RuleId id);
// Accepts the rule_name form, case-insensitively.
[[nodiscard]] std::optional<RuleId> parse_rule_id(std::string_view text);

std::ostream& operator<<(std::ostream& os, RuleId id);

}  // namespace pvc5

#endif  // PVC5_RULE_ID_HPP_

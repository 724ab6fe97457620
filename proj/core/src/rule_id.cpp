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

#include "pvc5/rule_id.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace pvc5 {
namespace {

constexpr std::array<std::string_view, kRuleCount> kNames = {
    "R0",      "R1",      "R2",      "R3",      "R4",      "R5",      "R5.1",    "R5.2",
    "R5.3",    "R5.4",    "R6",      "R6.1",    "R6.2",    "R6.3",    "R7",      "R7.1",
    "R7.2",    "R7.2.1",  "R7.2.2",  "R7.2.3",  "R7.2.4",  "R7.2.5",  "R8",      "R8.1",
    "R8.2",    "R8.3",    "R9",      "R9.1",    "R9.2",    "R9.3",    "R9.4",    "R10",
    "R11",     "R11.1",   "R11.1.1", "R11.1.2", "R11.1.3", "R11.1.4", "R11.2",   "R11.2.1",
    "R11.2.2", "R11.2.3", "R11.2.4", "R11.3",   "R12",     "R12.1",   "R12.2",   "R12.3",
    "R12.3.1", "R12.3.2", "R12.3.3", "R12.3.4", "R13",     "R13.1",   "R13.2",   "R13.3",
    "R13.4",   "R14",     "R14.1",   "R14.2",   "R15",     "R16",     "R17",     "R18",
};

const std::array<RuleId, kRuleCount>& all_ids() {
  static const auto ids = [] {
    std::array<RuleId, kRuleCount> out{};
    for (int i = 0; i < kRuleCount; ++i) out[i] = static_cast<RuleId>(i);
    return out;
  }();
  return ids;
}

}  // namespace

std::span<const RuleId> all_rule_ids() { return all_ids(); }

std::span<const RuleId> leaf_rule_ids() {
  static const std::vector<RuleId> leaves = [] {
    std::vector<RuleId> out;
    for (RuleId id : all_ids()) {
      if (!is_context(id)) out.push_back(id);
    }
    return out;
  }();
  return leaves;
}

bool is_context(RuleId id) {
  switch (id) {
    case RuleId::kR5:
    case RuleId::kR6:
    case RuleId::kR7:
    case RuleId::kR7_2:
    case RuleId::kR8:
    case RuleId::kR9:
    case RuleId::kR11:
    case RuleId::kR11_1:
    case RuleId::kR11_2:
    case RuleId::kR12:
    case RuleId::kR12_3:
    case RuleId::kR13:
    case RuleId::kR14:
      return true;
    default:
      return false;
  }
}

bool is_reduction(RuleId id) {
  switch (id) {
    case RuleId::kR0:
    case RuleId::kR1:
    case RuleId::kR7_1:
    case RuleId::kR7_2_1:
    case RuleId::kR7_2_4:
    case RuleId::kR11_1_4:
    case RuleId::kR12_3_2:
    case RuleId::kR13_2:
    case RuleId::kR14_1:
    case RuleId::kR15:
      return true;
    default:
      return false;
  }
}

bool is_branching(RuleId id) { return !is_context(id) && !is_reduction(id); }

std::string_view rule_name(RuleId id) { return kNames[static_cast<int>(id)]; }

std::optional<RuleId> parse_rule_id(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  auto it = std::find(kNames.begin(), kNames.end(), upper);
  if (it == kNames.end()) return std::nullopt;
  return static_cast<RuleId>(it - kNames.begin());
}

std::ostream& operator<<(std::ostream& os, RuleId id) { return os << rule_name(id); }

}  // namespace pvc5

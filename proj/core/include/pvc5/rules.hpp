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

// Rule selection for the disjoint routine. Rules are tried in a fixed total
// order; the first applicable one determines the decision. Each rule group
// below assumes every earlier group returned nothing on the same instance.

#ifndef PVC5_RULES_HPP_
#define PVC5_RULES_HPP_

#include <optional>

#include "pvc5/instance.hpp"

namespace pvc5 {

// R0, R1, R2.
[[nodiscard]] std::optional<RuleFiring> preprocessing_rules(const BipartitionInstance& inst);
// R3 to R6: blue components that are a vertex, an edge, a P3 or a triangle.
[[nodiscard]] std::optional<RuleFiring> small_component_rules(const BipartitionInstance& inst);
// R7: blue components that are subgraphs of K4 containing a 4-cycle.
[[nodiscard]] std::optional<RuleFiring> four_cycle_rules(const BipartitionInstance& inst);
// R8 and R9: stars and stars with a triangle.
[[nodiscard]] std::optional<RuleFiring> star_rules(const BipartitionInstance& inst);
// R10 to R18: di-stars.
[[nodiscard]] std::optional<RuleFiring> distar_rules(const BipartitionInstance& inst);

// First applicable rule. Throws InvariantViolation if none applies or a
// structural guarantee of the rule system fails.
[[nodiscard]] RuleFiring select_rule(const BipartitionInstance& inst);

// X has no red neighbour and exactly one blue neighbour outside X. Any
// solution touching X can then be moved off X without growing.
[[nodiscard]] bool single_exit_prunable(const BipartitionInstance& inst, const VertexSet& x_set);

// Once R0 to R2 are inapplicable: every P5 holds exactly one red vertex and
// red vertices are pairwise non-adjacent. Throws InvariantViolation
// otherwise. Enumerates all P5s; meant for small instances.
void check_single_red_property(const BipartitionInstance& inst);

}  // namespace pvc5

#endif  // PVC5_RULES_HPP_

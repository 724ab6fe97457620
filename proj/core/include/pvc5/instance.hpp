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

// The annotated subproblem handled by the disjoint routine: a P5-free
// bipartition into red (undeletable) and blue (deletable) vertices.

#ifndef PVC5_INSTANCE_HPP_
#define PVC5_INSTANCE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pvc5/graph.hpp"
#include "pvc5/rule_id.hpp"

namespace pvc5 {

// Raised when a structural guarantee the rule system relies on does not
// hold, e.g. no rule is applicable. Always an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct BipartitionInstance {
  Graph graph;
  VertexSet red;
  VertexSet blue;
  VertexSet partial_solution;  // vertices already deleted (no longer alive)
  int budget = 0;

  // Throws std::invalid_argument if red/blue do not partition the alive
  // vertices, either side contains a P5, or the partial solution overlaps
  // the alive vertices.
  void validate() const;
};

// Builds an instance with blue = alive \ red, an empty partial solution and
// the given budget; validates it.
[[nodiscard]] BipartitionInstance make_instance(Graph graph, VertexSet red, int budget);

struct Halt {
  std::optional<VertexSet> answer;
  friend bool operator==(const Halt&, const Halt&) = default;
};

// Remove: leave the graph without entering the solution. Delete: leave the
// graph and enter the solution, costing budget.
struct Reduce {
  VertexSet remove;
  VertexSet delete_set;
  friend bool operator==(const Reduce&, const Reduce&) = default;
};

struct Branch {
  std::vector<VertexSet> branches;
  friend bool operator==(const Branch&, const Branch&) = default;
};

using RuleDecision = std::variant<Halt, Reduce, Branch>;

struct RuleFiring {
  RuleId rule;
  RuleDecision decision;
  friend bool operator==(const RuleFiring&, const RuleFiring&) = default;
};

// Instance after a reduction, or after deleting one branch set.
[[nodiscard]] BipartitionInstance apply_reduce(const BipartitionInstance& inst, const Reduce& r);
[[nodiscard]] BipartitionInstance apply_branch(const BipartitionInstance& inst,
                                               const VertexSet& x);

[[nodiscard]] std::string describe(const RuleDecision& d);
[[nodiscard]] std::string describe(const RuleFiring& f);

}  // namespace pvc5

#endif  // PVC5_INSTANCE_HPP_

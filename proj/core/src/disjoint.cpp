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

#include "pvc5/disjoint.hpp"

#include <string>

#include "pvc5/p5.hpp"
#include "pvc5/rules.hpp"

namespace pvc5 {
namespace {

class Search {
 public:
  explicit Search(SearchObserver* observer) : observer_(observer) {}

  std::optional<VertexSet> run(const BipartitionInstance& inst, int depth) {
    const RuleFiring firing = select_rule(inst);
    if (observer_) observer_->on_node(firing.rule, inst.budget, depth);
    if (const auto* halt = std::get_if<Halt>(&firing.decision)) {
      if (observer_) observer_->on_leaf(halt->answer.has_value(), depth);
      return halt->answer;
    }
    if (const auto* reduce = std::get_if<Reduce>(&firing.decision)) {
      return run(apply_reduce(inst, *reduce), depth + 1);
    }
    for (const VertexSet& x : std::get<Branch>(firing.decision).branches) {
      if (static_cast<int>(x.size()) > inst.budget) {
        if (observer_) observer_->on_prune(depth);
        continue;
      }
      if (auto found = run(apply_branch(inst, x), depth + 1)) return found;
    }
    return std::nullopt;
  }

 private:
  SearchObserver* observer_;
};

}  // namespace

std::optional<VertexSet> disjoint_r(const BipartitionInstance& inst, SearchObserver* observer) {
  inst.validate();
  if (observer) observer->on_run_begin(inst.budget);
  std::optional<VertexSet> found = Search(observer).run(inst, 0);
  if (observer) observer->on_run_end(found.has_value());
  if (found) {
    const VertexSet added = found->minus(inst.partial_solution);
    if (!inst.partial_solution.is_subset_of(*found) || !added.is_subset_of(inst.blue) ||
        static_cast<int>(added.size()) > inst.budget ||
        !is_p5_free(inst.graph.without(added))) {
      throw InvariantViolation("disjoint routine returned an unsound set " + found->to_string());
    }
  }
  return found;
}

}  // namespace pvc5

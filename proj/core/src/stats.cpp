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

#include "pvc5/stats.hpp"

#include <algorithm>
#include <limits>

namespace pvc5 {

void SolveStats::merge(const SolveStats& other) {
  nodes += other.nodes;
  leaves += other.leaves;
  pruned += other.pruned;
  max_depth = std::max(max_depth, other.max_depth);
  for (const auto& [rule, count] : other.per_rule) per_rule[rule] += count;
}

std::uint64_t leaf_bound(int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / 3) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= 3;
  }
  return out;
}

void StatsCollector::on_run_begin(int budget) {
  run_budget_ = budget;
  run_leaves_ = 0;
}

void StatsCollector::on_node(RuleId rule, int /*budget*/, int depth) {
  ++total_.nodes;
  ++total_.per_rule[rule];
  total_.max_depth = std::max<std::uint64_t>(total_.max_depth, static_cast<std::uint64_t>(depth));
}

void StatsCollector::on_leaf(bool /*success*/, int /*depth*/) {
  ++total_.leaves;
  ++run_leaves_;
}

void StatsCollector::on_prune(int /*depth*/) { ++total_.pruned; }

void StatsCollector::on_run_end(bool /*success*/) {
  ++runs_;
  const std::uint64_t bound = leaf_bound(run_budget_);
  if (run_leaves_ > bound) ++violations_;
  worst_ratio_ = std::max(worst_ratio_, static_cast<double>(run_leaves_) /
                                            static_cast<double>(bound));
}

}  // namespace pvc5

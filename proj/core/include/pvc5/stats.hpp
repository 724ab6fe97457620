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

// Search-tree instrumentation shared by the solvers.

#ifndef PVC5_STATS_HPP_
#define PVC5_STATS_HPP_

#include <cstdint>
#include <map>

#include "pvc5/rule_id.hpp"

namespace pvc5 {

// Hooks fired by the disjoint routine. Every call of the routine on an
// instance is one node; a node whose rule halts is also a leaf.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_run_begin(int /*budget*/) {}
  virtual void on_node(RuleId /*rule*/, int /*budget*/, int /*depth*/) {}
  virtual void on_leaf(bool /*success*/, int /*depth*/) {}
  // A branch whose set is larger than the remaining budget; it is skipped
  // without creating a node.
  virtual void on_prune(int /*depth*/) {}
  virtual void on_run_end(bool /*success*/) {}
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned = 0;
  std::uint64_t max_depth = 0;
  std::map<RuleId, std::uint64_t> per_rule;

  void merge(const SolveStats& other);
};

// Accumulates SolveStats over any number of runs and checks the leaf bound
// leaves <= 3^max(budget, 0) for each run separately.
class StatsCollector : public SearchObserver {
 public:
  void on_run_begin(int budget) override;
  void on_node(RuleId rule, int budget, int depth) override;
  void on_leaf(bool success, int depth) override;
  void on_prune(int depth) override;
  void on_run_end(bool success) override;

  [[nodiscard]] const SolveStats& stats() const { return total_; }
  [[nodiscard]] std::uint64_t runs() const { return runs_; }
  [[nodiscard]] std::uint64_t leaf_bound_violations() const { return violations_; }
  // Largest leaves / 3^budget ratio seen in one run.
  [[nodiscard]] double worst_leaf_ratio() const { return worst_ratio_; }

 private:
  SolveStats total_;
  std::uint64_t runs_ = 0;
  std::uint64_t violations_ = 0;
  double worst_ratio_ = 0.0;
  int run_budget_ = 0;
  std::uint64_t run_leaves_ = 0;
};

// 3^max(k, 0), saturating at the uint64 range.
[[nodiscard]] std::uint64_t leaf_bound(int k);

}  // namespace pvc5

#endif  // PVC5_STATS_HPP_

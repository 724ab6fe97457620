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

#include "pvc5/generators.hpp"
#include "pvc5/instance.hpp"

namespace pvc5 {
namespace {

TEST(InstanceTest, MakeInstanceSplitsRedAndBlue) {
  const auto inst = make_instance(path_graph(5), VertexSet{2}, 1);
  EXPECT_EQ(inst.blue, (VertexSet{0, 1, 3, 4}));
  EXPECT_TRUE(inst.partial_solution.empty());
  EXPECT_NO_THROW(inst.validate());
}

TEST(InstanceTest, ValidateRejectsBadPartitions) {
  EXPECT_THROW((void)make_instance(path_graph(6), VertexSet{0}, 1), std::invalid_argument);
  EXPECT_THROW((void)make_instance(path_graph(5), VertexSet{0, 1, 2, 3, 4}, 1),
               std::invalid_argument);
  auto inst = make_instance(path_graph(5), VertexSet{2}, 1);
  inst.blue.erase(0);
  EXPECT_THROW(inst.validate(), std::invalid_argument);
  inst.blue.insert(0);
  inst.red.insert(0);
  EXPECT_THROW(inst.validate(), std::invalid_argument);
}

TEST(InstanceTest, ReduceAndBranch) {
  const auto inst = make_instance(path_graph(5), VertexSet{2}, 2);
  const auto r = apply_reduce(inst, Reduce{VertexSet{0}, VertexSet{4}});
  EXPECT_FALSE(r.graph.is_alive(0));
  EXPECT_FALSE(r.graph.is_alive(4));
  EXPECT_EQ(r.partial_solution, VertexSet{4});
  EXPECT_EQ(r.blue, (VertexSet{1, 3}));
  EXPECT_EQ(r.budget, 1);
  const auto b = apply_branch(inst, VertexSet{1, 3});
  EXPECT_EQ(b.partial_solution, (VertexSet{1, 3}));
  EXPECT_EQ(b.budget, 0);
  EXPECT_NO_THROW(b.validate());
}

TEST(InstanceTest, Describe) {
  EXPECT_EQ(describe(RuleDecision{Halt{std::nullopt}}), "halt no");
  const RuleFiring f{RuleId::kR2, Branch{{VertexSet{0}, VertexSet{2, 4}}}};
  EXPECT_EQ(describe(f), "R2: branch <{0} | {2,4}>");
}

}  // namespace
}  // namespace pvc5

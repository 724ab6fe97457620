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

#include "pvc5/compression.hpp"
#include "pvc5/disjoint.hpp"
#include "pvc5/generators.hpp"
#include "pvc5/oracles.hpp"
#include "pvc5/p5.hpp"
#include "pvc5/stats.hpp"
#include "support/instances.hpp"

namespace pvc5 {
namespace {

TEST(OracleTest, KnownMinima) {
  EXPECT_EQ(brute_force_min_pvc(path_graph(4)).min_size, 0);
  EXPECT_EQ(brute_force_min_pvc(path_graph(5)).min_size, 1);
  EXPECT_EQ(brute_force_min_pvc(path_graph(10)).min_size, 2);
  EXPECT_EQ(brute_force_min_pvc(cycle_graph(10)).min_size, 2);
  EXPECT_EQ(brute_force_min_pvc(Graph(0)).min_size, 0);
  EXPECT_THROW((void)brute_force_min_pvc(path_graph(kBruteForceLimit + 1)), OracleSizeError);
}

TEST(OracleTest, AgreesWithBitmaskReference) {
  for (int i = 0; i < 96; ++i) {
    const Graph g = testing::suite_graph(i);
    const auto r = brute_force_min_pvc(g);
    EXPECT_EQ(r.min_size, testing::min_pvc_size(g)) << i;
    EXPECT_TRUE(verify_solution(g, r.witness, r.min_size));
  }
}

TEST(OracleTest, VerifySolution) {
  const Graph g = path_graph(5);
  EXPECT_TRUE(verify_solution(g, VertexSet{2}, 1));
  EXPECT_TRUE(verify_solution(g, VertexSet{0}, 1));  // leaves a P4
  EXPECT_FALSE(verify_solution(path_graph(6), VertexSet{0}, 1));
  EXPECT_FALSE(verify_solution(g, VertexSet{1, 2}, 1));
  EXPECT_THROW((void)verify_solution(g, VertexSet{9}, 1), GraphError);
}

TEST(OracleTest, TrivialBranching) {
  EXPECT_FALSE(trivial_branching(path_graph(10), 1));
  SolveStats stats;
  const auto s = trivial_branching(path_graph(10), 2, &stats);
  ASSERT_TRUE(s);
  EXPECT_TRUE(verify_solution(path_graph(10), *s, 2));
  EXPECT_GT(stats.nodes, 0u);
  EXPECT_LE(stats.leaves, stats.nodes);
}

TEST(DisjointTest, MatchesExhaustiveBlueSearch) {
  int done = 0;
  for (std::uint64_t seed = 0; done < 120; ++seed) {
    const auto inst = testing::random_instance(seed);
    if (!inst) continue;
    ++done;
    StatsCollector stats;
    const auto found = disjoint_r(*inst, &stats);
    EXPECT_EQ(found.has_value(), testing::feasible(*inst)) << "seed " << seed;
    if (found) {
      EXPECT_TRUE(found->is_subset_of(inst->blue));
      EXPECT_LE(static_cast<int>(found->size()), inst->budget);
      EXPECT_TRUE(is_p5_free(inst->graph.without(*found)));
    }
    EXPECT_EQ(stats.leaf_bound_violations(), 0u);
    EXPECT_LE(stats.stats().leaves, stats.stats().nodes);
  }
}

TEST(DisjointTest, RejectsInvalidInstance) {
  BipartitionInstance bad{path_graph(5), VertexSet{}, VertexSet{0, 1, 2, 3, 4}, {}, 1};
  EXPECT_THROW((void)disjoint_r(bad), std::invalid_argument);
}

TEST(CompressionTest, Preconditions) {
  const Graph g = path_graph(5);
  EXPECT_THROW((void)compress(g, VertexSet{2}, 1), std::invalid_argument);
  EXPECT_THROW((void)compress(path_graph(10), VertexSet{0, 1}, 1), std::invalid_argument);
  EXPECT_THROW((void)solve_5pvc(g, -1), std::invalid_argument);
  // {1,2} is a solution of size k + 1 = 2; compression shrinks it to one.
  const auto c = compress(g, VertexSet{1, 2}, 1);
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_solution(g, *c, 1));
}

TEST(CompressionTest, SolveAndMin) {
  EXPECT_EQ(solve_5pvc(path_graph(4), 0), VertexSet{});
  EXPECT_FALSE(solve_5pvc(path_graph(5), 0));
  const auto one = solve_5pvc(cycle_graph(5), 1);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size(), 1u);
  for (int i = 0; i < 120; ++i) {
    const Graph g = testing::suite_graph(i);
    StatsCollector stats;
    const MinResult m = min_5pvc(g, &stats);
    EXPECT_EQ(m.size, testing::min_pvc_size(g)) << i;
    EXPECT_TRUE(verify_solution(g, m.witness, m.size));
    EXPECT_EQ(stats.leaf_bound_violations(), 0u);
  }
}

TEST(CompressionTest, LargerThanOracleLimit) {
  // P20 needs 4 deletions; C21 needs ceil(21 / 5) = 5.
  EXPECT_EQ(min_5pvc(path_graph(20)).size, 4);
  EXPECT_EQ(min_5pvc(cycle_graph(21)).size, 5);
}

}  // namespace
}  // namespace pvc5

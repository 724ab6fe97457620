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

#include <algorithm>

#include "pvc5/generators.hpp"
#include "pvc5/p5.hpp"
#include "support/oracles.hpp"

namespace pvc5 {
namespace {

bool is_path(const Graph& g, const Path5& p) {
  for (int i = 0; i < 4; ++i) {
    if (!g.has_edge(p[i], p[i + 1])) return false;
  }
  auto q = p;
  std::sort(q.begin(), q.end());
  return std::adjacent_find(q.begin(), q.end()) == q.end();
}

TEST(P5Test, PathAndCycle) {
  EXPECT_TRUE(is_p5_free(path_graph(4)));
  EXPECT_FALSE(is_p5_free(path_graph(5)));
  EXPECT_FALSE(is_p5_free(cycle_graph(5)));
  EXPECT_EQ(all_p5(path_graph(5)).size(), 1u);
  // Each of the 5 start points, both directions, counted once.
  EXPECT_EQ(all_p5(cycle_graph(5)).size(), 5u);
}

TEST(P5Test, FindReturnsLexFirstPath) {
  const auto p = find_p5(path_graph(6));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Path5{0, 1, 2, 3, 4}));
}

TEST(P5Test, ThroughAndLiesOnAgreeWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gnp_graph(9, 0.25, seed);
    const auto paths = all_p5(g);
    for (const auto& p : paths) EXPECT_TRUE(is_path(g, p));
    EXPECT_EQ(paths.empty(), !testing::has_p5(g));
    for (VertexId v = 0; v < 9; ++v) {
      const bool on = std::any_of(paths.begin(), paths.end(), [&](const Path5& p) {
        return std::find(p.begin(), p.end(), v) != p.end();
      });
      EXPECT_EQ(lies_on_p5(g, v), on) << "seed " << seed << " v " << v;
      const auto through = find_p5_through(g, v);
      EXPECT_EQ(through.has_value(), on);
      if (through) {
        EXPECT_TRUE(is_path(g, *through));
        EXPECT_NE(std::find(through->begin(), through->end(), v), through->end());
      }
    }
  }
}

TEST(P5Test, DeadVertexIsAnError) {
  const Graph g = path_graph(5).without(VertexSet{2});
  EXPECT_THROW((void)lies_on_p5(g, 2), GraphError);
  EXPECT_THROW((void)find_p5_through(g, 2), GraphError);
}

TEST(ClassifyTest, SmallShapes) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(kind_of(classify_component(g, VertexSet{3})), ComponentKind::kIsolatedVertex);
  EXPECT_EQ(kind_of(classify_component(g, VertexSet{0, 1})), ComponentKind::kIsolatedEdge);
  EXPECT_EQ(classify_component(g, VertexSet{0, 1, 2}), (ComponentClass{Triangle{0, 1, 2}}));
  const Graph p = path_graph(3);
  EXPECT_EQ(classify_component(p, VertexSet{0, 1, 2}), (ComponentClass{PathP3{0, 1, 2}}));
}

TEST(ClassifyTest, FourCycleDiagonals) {
  const Graph c4 = cycle_graph(4);
  const auto cls = std::get<FourCycle>(classify_component(c4, c4.vertices()));
  EXPECT_EQ(cls.diagonal_count(), 0);
  Graph k4 = c4;
  k4.add_edge(0, 2);
  k4.add_edge(1, 3);
  EXPECT_EQ(std::get<FourCycle>(classify_component(k4, k4.vertices())).diagonal_count(), 2);
  EXPECT_EQ(kind_name(ComponentKind::kFourCycle), "C4Kind");
}

TEST(ClassifyTest, StarsAndDiStars) {
  const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(classify_component(star, star.vertices()),
            (ComponentClass{Star{0, VertexSet{1, 2, 3}}}));
  const Graph paw = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  EXPECT_EQ(classify_component(paw, paw.vertices()),
            (ComponentClass{StarWithTriangle{0, 1, 2, VertexSet{3}}}));
  const Graph p4 = path_graph(4);
  const auto d = std::get<DiStar>(classify_component(p4, p4.vertices()));
  EXPECT_EQ(VertexSet({d.s, d.s2}), (VertexSet{1, 2}));
}

TEST(ClassifyTest, Rejections) {
  const Graph p5 = path_graph(5);
  EXPECT_THROW((void)classify_component(p5, p5.vertices()), ClassificationError);
  const Graph two = build_graph(2, {});
  EXPECT_THROW((void)classify_component(two, two.vertices()), ClassificationError);
  EXPECT_THROW((void)classify_component(two, VertexSet{}), ClassificationError);
}

}  // namespace
}  // namespace pvc5

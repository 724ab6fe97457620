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
#include "pvc5/graph_io.hpp"

namespace pvc5 {
namespace {

TEST(GraphIoTest, EdgeList) {
  const Graph g = parse_graph("5 4\n0 1\n1 2\n2 3\n3 4");
  EXPECT_EQ(g, path_graph(5));
  const Graph h = parse_graph("# comment\n3 2 # trailing\n\n0 1\n0 1 # duplicate?\n",
                              GraphFormat::kEdgeList);
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(GraphIoTest, Dimacs) {
  const Graph g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g, build_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(detect_format("c x\np edge 1 0\n"), GraphFormat::kDimacs);
  EXPECT_EQ(detect_format("# x\n1 0\n"), GraphFormat::kEdgeList);
}

TEST(GraphIoTest, ErrorsCarryLineNumbers) {
  try {
    (void)parse_graph("2 1\n0 2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
  EXPECT_THROW((void)parse_graph("3 1\n1 1"), ParseError);
  EXPECT_THROW((void)parse_graph("3 2\n0 1"), ParseError);
  EXPECT_THROW((void)parse_graph("x y\n"), ParseError);
  EXPECT_THROW((void)parse_graph("p edge 2 1\ne 0 1\n"), ParseError);
  EXPECT_THROW((void)parse_graph("p edge 2 1\nq 1 2\n"), ParseError);
  EXPECT_THROW((void)parse_graph(""), ParseError);
}

TEST(GraphIoTest, FormatNames) {
  EXPECT_EQ(parse_format_name("edge-list"), GraphFormat::kEdgeList);
  EXPECT_EQ(parse_format_name("dimacs"), GraphFormat::kDimacs);
  EXPECT_EQ(parse_format_name("gml"), std::nullopt);
}

TEST(GraphIoTest, RoundTripBothFormats) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gnp_graph(1 + seed % 15, 0.3, seed);
    for (auto fmt : {GraphFormat::kEdgeList, GraphFormat::kDimacs}) {
      EXPECT_EQ(parse_graph(emit_graph(g, fmt), fmt), g);
      EXPECT_EQ(parse_graph(emit_graph(g, fmt)), g);
    }
  }
}

TEST(GraphIoTest, EdgeListIsBitExact) {
  EXPECT_EQ(emit_graph(path_graph(3)), "3 2\n0 1\n1 2\n");
  EXPECT_EQ(emit_graph(path_graph(3), GraphFormat::kDimacs), "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(GraphIoTest, MissingFile) {
  EXPECT_THROW((void)read_graph_file("/nonexistent/graph.txt"), std::runtime_error);
}

}  // namespace
}  // namespace pvc5

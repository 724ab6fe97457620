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

// Text formats for graphs.
//
// Edge list: '#' starts a comment; the first data line is "n m", followed by
// exactly m lines "u v" with 0-based ids.
// DIMACS: 'c' lines are comments; "p edge n m" header; "e u v" lines with
// 1-based ids.

#ifndef PVC5_GRAPH_IO_HPP_
#define PVC5_GRAPH_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pvc5/graph.hpp"

namespace pvc5 {

enum class GraphFormat { kAuto, kEdgeList, kDimacs };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

[[nodiscard]] std::optional<GraphFormat> parse_format_name(std::string_view name);

// kAuto picks DIMACS when the first meaningful line starts with 'p' or 'c'.
[[nodiscard]] GraphFormat detect_format(std::string_view text);

[[nodiscard]] Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);
[[nodiscard]] Graph read_graph_file(const std::string& path,
                                    GraphFormat format = GraphFormat::kAuto);

// Writes capacity() as the vertex count and the alive edges.
[[nodiscard]] std::string emit_graph(const Graph& g, GraphFormat format = GraphFormat::kEdgeList);

}  // namespace pvc5

#endif  // PVC5_GRAPH_IO_HPP_

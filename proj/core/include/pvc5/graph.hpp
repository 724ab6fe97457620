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

#ifndef PVC5_GRAPH_HPP_
#define PVC5_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pvc5/vertex_set.hpp"

namespace pvc5 {

using Edge = std::pair<VertexId, VertexId>;

// Thrown for malformed graph construction or for operations naming a vertex
// that is not alive.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph over the id space [0, capacity). Removing vertices
// clears them from the alive mask and never renumbers survivors, so a vertex
// keeps its id through any sequence of removals.
//
// Graphs are values: removal returns a new graph and the receiver is left
// untouched.
class Graph {
 public:
  Graph() = default;

  // Ids in [0, capacity) all alive, no edges.
  explicit Graph(std::size_t capacity);

  [[nodiscard]] std::size_t capacity() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t alive_count() const { return alive_count_; }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] bool is_alive(VertexId v) const { return v < alive_.size() && alive_[v]; }

  // Sorted ascending; only alive neighbours. Precondition: v alive.
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const;

  [[nodiscard]] VertexSet vertices() const;
  [[nodiscard]] VertexSet neighbor_set(VertexId v) const;
  // N(X) minus X itself.
  [[nodiscard]] VertexSet open_neighborhood(const VertexSet& xs) const;
  // Edges with u < v, ascending.
  [[nodiscard]] std::vector<Edge> edges() const;

  // Throws GraphError on a self-loop, an out-of-range or a removed endpoint.
  // Duplicate edges are ignored.
  void add_edge(VertexId u, VertexId v);

  // Induced subgraph on the complement of `s`; throws GraphError if some
  // member of `s` is not alive.
  [[nodiscard]] Graph without(const VertexSet& s) const;
  // Induced subgraph on `keep` (which must be alive).
  [[nodiscard]] Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<bool> alive_;
  std::size_t alive_count_ = 0;
  std::size_t edge_count_ = 0;
};

// Builds a graph on ids 0..n-1 with the given edges; duplicates collapse.
[[nodiscard]] Graph build_graph(std::size_t n, std::span<const Edge> edges);
[[nodiscard]] inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

[[nodiscard]] Graph remove_vertices(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, ordered by smallest member.
[[nodiscard]] std::vector<VertexSet> connected_components(const Graph& g);

// N(x) \ {y} == N(y) \ {x}. Throws GraphError if x == y or either is dead.
[[nodiscard]] bool are_twins(const Graph& g, VertexId x, VertexId y);

}  // namespace pvc5

#endif  // PVC5_GRAPH_HPP_

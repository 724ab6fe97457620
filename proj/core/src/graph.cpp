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

#include "pvc5/graph.hpp"

#include <algorithm>
#include <string>

namespace pvc5 {

Graph::Graph(std::size_t capacity)
    : adjacency_(capacity), alive_(capacity, true), alive_count_(capacity) {}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!is_alive(u) || !is_alive(v)) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

VertexSet Graph::vertices() const {
  std::vector<VertexId> ids;
  ids.reserve(alive_count_);
  for (VertexId v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

VertexSet Graph::neighbor_set(VertexId v) const { return VertexSet(adjacency_[v]); }

VertexSet Graph::open_neighborhood(const VertexSet& xs) const {
  std::vector<VertexId> ids;
  for (VertexId x : xs) {
    for (VertexId y : adjacency_[x]) {
      if (!xs.contains(y)) ids.push_back(y);
    }
  }
  return VertexSet(std::move(ids));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    if (!alive_[u]) continue;
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u >= capacity() || v >= capacity()) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an id outside [0," + std::to_string(capacity()) + ")");
  }
  if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
  if (!alive_[u] || !alive_[v]) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") touches a removed vertex");
  }
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

Graph Graph::without(const VertexSet& s) const {
  for (VertexId v : s) {
    if (!is_alive(v)) {
      throw GraphError("cannot remove vertex " + std::to_string(v) + ": not alive");
    }
  }
  if (s.empty()) return *this;
  Graph out = *this;
  for (VertexId v : s) {
    for (VertexId u : out.adjacency_[v]) {
      auto& nu = out.adjacency_[u];
      nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
      --out.edge_count_;
    }
    out.adjacency_[v].clear();
    out.alive_[v] = false;
    --out.alive_count_;
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  for (VertexId v : keep) {
    if (!is_alive(v)) {
      throw GraphError("cannot keep vertex " + std::to_string(v) + ": not alive");
    }
  }
  return without(vertices().minus(keep));
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) { return g.without(s); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.capacity(), false);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.capacity(); ++root) {
    if (!g.is_alive(root) || seen[root]) continue;
    std::vector<VertexId> members;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool are_twins(const Graph& g, VertexId x, VertexId y) {
  if (x == y) throw GraphError("twin test needs two distinct vertices");
  if (!g.is_alive(x) || !g.is_alive(y)) throw GraphError("twin test on a dead vertex");
  VertexSet nx = g.neighbor_set(x);
  VertexSet ny = g.neighbor_set(y);
  nx.erase(y);
  ny.erase(x);
  return nx == ny;
}

}  // namespace pvc5

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

// Detection of 5-vertex paths (not necessarily induced) and the structural
// classification of connected P5-free graphs.

#ifndef PVC5_P5_HPP_
#define PVC5_P5_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "pvc5/graph.hpp"

namespace pvc5 {

// Ordered (p1, ..., p5); consecutive entries adjacent, all distinct.
using Path5 = std::array<VertexId, 5>;

namespace detail {

// Depth-first enumeration of simple 5-vertex paths in lexicographic order of
// the tuple. Only one orientation of each path is produced (p1 < p5).
// `prefix_ok(prefix, len)` may prune a partial path; `visit(path)` returns
// false to stop the enumeration. Returns false iff stopped early.
template <typename PrefixOk, typename Visit>
bool enumerate_p5(const Graph& g, PrefixOk&& prefix_ok, Visit&& visit) {
  Path5 path{};
  std::vector<bool> on_path(g.capacity(), false);
  auto extend = [&](auto&& self, int len) -> bool {
    if (len == 5) {
      if (path[0] < path[4]) return visit(static_cast<const Path5&>(path));
      return true;
    }
    for (VertexId next : g.neighbors(path[len - 1])) {
      if (on_path[next]) continue;
      path[len] = next;
      if (!prefix_ok(static_cast<const Path5&>(path), len + 1)) continue;
      on_path[next] = true;
      bool go_on = self(self, len + 1);
      on_path[next] = false;
      if (!go_on) return false;
    }
    return true;
  };
  for (VertexId start = 0; start < g.capacity(); ++start) {
    if (!g.is_alive(start)) continue;
    path[0] = start;
    if (!prefix_ok(static_cast<const Path5&>(path), 1)) continue;
    on_path[start] = true;
    bool go_on = extend(extend, 1);
    on_path[start] = false;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

// Lexicographically smallest P5 (with p1 < p5), or nullopt iff g is P5-free.
[[nodiscard]] std::optional<Path5> find_p5(const Graph& g);
[[nodiscard]] bool is_p5_free(const Graph& g);

// Lexicographically smallest P5 containing v. Throws GraphError if v is dead.
[[nodiscard]] std::optional<Path5> find_p5_through(const Graph& g, VertexId v);

// Existence-only variant of find_p5_through; much cheaper on large graphs.
[[nodiscard]] bool lies_on_p5(const Graph& g, VertexId v);

// Every P5 in lexicographic order (one orientation each). Intended for tests
// and diagnostics on small graphs.
[[nodiscard]] std::vector<Path5> all_p5(const Graph& g);

enum class ComponentKind {
  kIsolatedVertex,
  kIsolatedEdge,
  kP3,
  kTriangle,
  kFourCycle,
  kStar,
  kStarWithTriangle,
  kDiStar,
};

[[nodiscard]] std::string_view kind_name(ComponentKind kind);

struct IsolatedVertex {
  VertexId v;
  friend bool operator==(const IsolatedVertex&, const IsolatedVertex&) = default;
};

struct IsolatedEdge {
  VertexId u, v;  // u < v
  friend bool operator==(const IsolatedEdge&, const IsolatedEdge&) = default;
};

// Path t - u - v with t < v.
struct PathP3 {
  VertexId t, u, v;
  friend bool operator==(const PathP3&, const PathP3&) = default;
};

struct Triangle {
  VertexId t, u, v;  // ascending
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// A 4-vertex component containing a 4-cycle, i.e. C4, a diamond or K4.
// `cycle` is the lexicographically smallest 4-cycle labelling; diagonal
// pairs are {cycle[0], cycle[2]} and {cycle[1], cycle[3]}.
struct FourCycle {
  std::array<VertexId, 4> cycle;
  bool diagonal_13 = false;
  bool diagonal_24 = false;
  [[nodiscard]] int diagonal_count() const { return int{diagonal_13} + int{diagonal_24}; }
  friend bool operator==(const FourCycle&, const FourCycle&) = default;
};

// Center adjacent to every leaf, at least three leaves, no other edges.
struct Star {
  VertexId center;
  VertexSet leaves;
  friend bool operator==(const Star&, const Star&) = default;
};

// Triangle {center, t1, t2} plus at least one pendant leaf on the center.
struct StarWithTriangle {
  VertexId center;
  VertexId t1, t2;  // t1 < t2
  VertexSet leaves;
  friend bool operator==(const StarWithTriangle&, const StarWithTriangle&) = default;
};

// Two adjacent centers, each with at least one pendant leaf. `s` is the
// smaller-id center; `leaves` hang off `s`, `leaves2` off `s2`.
struct DiStar {
  VertexId s, s2;
  VertexSet leaves, leaves2;
  friend bool operator==(const DiStar&, const DiStar&) = default;
};

using ComponentClass = std::variant<IsolatedVertex, IsolatedEdge, PathP3, Triangle, FourCycle,
                                    Star, StarWithTriangle, DiStar>;

[[nodiscard]] ComponentKind kind_of(const ComponentClass& cls);

class ClassificationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Classifies the connected P5-free component `c` of g. Throws
// ClassificationError if g[c] contains a P5 or is not connected.
[[nodiscard]] ComponentClass classify_component(const Graph& g, const VertexSet& c);

// Edge set implied by the class definition, as sorted (u < v) pairs.
[[nodiscard]] std::vector<Edge> reconstruct_edges(const ComponentClass& cls);
[[nodiscard]] VertexSet class_vertices(const ComponentClass& cls);

}  // namespace pvc5

#endif  // PVC5_P5_HPP_

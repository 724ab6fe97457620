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

#include "pvc5/p5.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace pvc5 {
namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

std::vector<int> bfs_distances(const Graph& g, VertexId source, int limit) {
  std::vector<int> dist(g.capacity(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (dist[v] == limit) continue;
    for (VertexId u : g.neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

// Is there a simple path of `edges` edges starting at v that avoids `used`?
bool has_arm(const Graph& g, VertexId v, int edges, std::vector<bool>& used) {
  if (edges == 0) return true;
  for (VertexId u : g.neighbors(v)) {
    if (used[u]) continue;
    used[u] = true;
    bool found = has_arm(g, u, edges - 1, used);
    used[u] = false;
    if (found) return true;
  }
  return false;
}

// Enumerates arms of exactly `edges` edges from the current tip; at the end
// asks for a disjoint opposite arm of `4 - total` edges from `center`.
bool arm_pair(const Graph& g, VertexId center, VertexId tip, int remaining, int total,
              std::vector<bool>& used) {
  if (remaining == 0) return has_arm(g, center, 4 - total, used);
  for (VertexId u : g.neighbors(tip)) {
    if (used[u]) continue;
    used[u] = true;
    bool found = arm_pair(g, center, u, remaining - 1, total, used);
    used[u] = false;
    if (found) return true;
  }
  return false;
}

}  // namespace

std::optional<Path5> find_p5(const Graph& g) {
  std::optional<Path5> found;
  detail::enumerate_p5(
      g, [](const Path5&, int) { return true; },
      [&](const Path5& p) {
        found = p;
        return false;
      });
  return found;
}

bool is_p5_free(const Graph& g) {
  // Components on at most four vertices cannot hold a P5.
  if (g.alive_count() < 5) return true;
  return !find_p5(g).has_value();
}

std::optional<Path5> find_p5_through(const Graph& g, VertexId v) {
  if (!g.is_alive(v)) throw GraphError("vertex " + std::to_string(v) + " is not alive");
  const std::vector<int> dist = bfs_distances(g, v, 4);
  std::optional<Path5> found;
  detail::enumerate_p5(
      g,
      [&](const Path5& p, int len) {
        for (int i = 0; i < len; ++i) {
          if (p[i] == v) return true;
        }
        return dist[p[len - 1]] <= 5 - len;
      },
      [&](const Path5& p) {
        if (std::find(p.begin(), p.end(), v) == p.end()) return true;
        found = p;
        return false;
      });
  return found;
}

bool lies_on_p5(const Graph& g, VertexId v) {
  if (!g.is_alive(v)) throw GraphError("vertex " + std::to_string(v) + " is not alive");
  std::vector<bool> used(g.capacity(), false);
  used[v] = true;
  // v at position 1, 2 or 3 of the path; positions 4 and 5 are mirror images.
  for (int arm = 4; arm >= 2; --arm) {
    if (arm_pair(g, v, v, arm, arm, used)) return true;
  }
  return false;
}

std::vector<Path5> all_p5(const Graph& g) {
  std::vector<Path5> out;
  detail::enumerate_p5(
      g, [](const Path5&, int) { return true; },
      [&](const Path5& p) {
        out.push_back(p);
        return true;
      });
  return out;
}

std::string_view kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kIsolatedVertex: return "IsolatedVertex";
    case ComponentKind::kIsolatedEdge: return "IsolatedEdge";
    case ComponentKind::kP3: return "P3";
    case ComponentKind::kTriangle: return "Triangle";
    case ComponentKind::kFourCycle: return "C4Kind";
    case ComponentKind::kStar: return "Star";
    case ComponentKind::kStarWithTriangle: return "StarWithTriangle";
    case ComponentKind::kDiStar: return "DiStar";
  }
  return "?";
}

ComponentKind kind_of(const ComponentClass& cls) {
  return static_cast<ComponentKind>(cls.index());
}

namespace {

std::optional<std::array<VertexId, 4>> smallest_four_cycle(const Graph& h,
                                                            const VertexSet& c) {
  std::array<VertexId, 4> perm{c[0], c[1], c[2], c[3]};
  do {
    if (h.has_edge(perm[0], perm[1]) && h.has_edge(perm[1], perm[2]) &&
        h.has_edge(perm[2], perm[3]) && h.has_edge(perm[3], perm[0])) {
      return perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

ComponentClass classify_component(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw ClassificationError("empty component");
  const Graph h = g.induced(c);
  if (connected_components(h).size() != 1) {
    throw ClassificationError("vertex set " + c.to_string() + " is not connected");
  }
  const std::size_t n = c.size();
  const std::size_t m = h.edge_count();

  if (n == 1) return IsolatedVertex{c[0]};
  if (n == 2) return IsolatedEdge{c[0], c[1]};
  if (n == 3) {
    if (m == 3) return Triangle{c[0], c[1], c[2]};
    for (VertexId mid : c) {
      if (h.degree(mid) == 2) {
        VertexSet ends = c;
        ends.erase(mid);
        return PathP3{ends[0], mid, ends[1]};
      }
    }
  }
  if (n >= 5 && !is_p5_free(h)) {
    throw ClassificationError("component " + c.to_string() + " contains a P5");
  }
  if (n == 4) {
    if (auto cycle = smallest_four_cycle(h, c)) {
      const auto& q = *cycle;
      return FourCycle{q, h.has_edge(q[0], q[2]), h.has_edge(q[1], q[3])};
    }
  }

  // What remains is P5-free without a 4-cycle: a star, a star with a triangle
  // or a di-star.
  const auto full_degree = std::find_if(c.begin(), c.end(), [&](VertexId v) {
    return h.degree(v) == n - 1;
  });
  if (m == n - 1) {
    if (full_degree != c.end() && n >= 4) {
      return Star{*full_degree, c.minus(VertexSet::single(*full_degree))};
    }
    std::vector<VertexId> inner;
    for (VertexId v : c) {
      if (h.degree(v) > 1) inner.push_back(v);
    }
    if (inner.size() == 2 && h.has_edge(inner[0], inner[1])) {
      DiStar d{inner[0], inner[1], {}, {}};
      for (VertexId v : h.neighbors(d.s)) {
        if (v != d.s2) d.leaves.insert(v);
      }
      for (VertexId v : h.neighbors(d.s2)) {
        if (v != d.s) d.leaves2.insert(v);
      }
      if (d.leaves.size() + d.leaves2.size() + 2 == n) return d;
    }
  } else if (m == n && full_degree != c.end()) {
    const VertexId s = *full_degree;
    std::vector<VertexId> tri;
    VertexSet leaves;
    for (VertexId v : c) {
      if (v == s) continue;
      if (h.degree(v) == 2) {
        tri.push_back(v);
      } else {
        leaves.insert(v);
      }
    }
    if (tri.size() == 2 && h.has_edge(tri[0], tri[1]) && !leaves.empty()) {
      return StarWithTriangle{s, tri[0], tri[1], std::move(leaves)};
    }
  }
  throw ClassificationError("component " + c.to_string() +
                            " matches no P5-free class (it must contain a P5)");
}

std::vector<Edge> reconstruct_edges(const ComponentClass& cls) {
  std::vector<Edge> out;
  auto add = [&](VertexId a, VertexId b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, IsolatedEdge>) {
          add(k.u, k.v);
        } else if constexpr (std::is_same_v<T, PathP3>) {
          add(k.t, k.u);
          add(k.u, k.v);
        } else if constexpr (std::is_same_v<T, Triangle>) {
          add(k.t, k.u);
          add(k.u, k.v);
          add(k.t, k.v);
        } else if constexpr (std::is_same_v<T, FourCycle>) {
          for (int i = 0; i < 4; ++i) add(k.cycle[i], k.cycle[(i + 1) % 4]);
          if (k.diagonal_13) add(k.cycle[0], k.cycle[2]);
          if (k.diagonal_24) add(k.cycle[1], k.cycle[3]);
        } else if constexpr (std::is_same_v<T, Star>) {
          for (VertexId l : k.leaves) add(k.center, l);
        } else if constexpr (std::is_same_v<T, StarWithTriangle>) {
          add(k.center, k.t1);
          add(k.center, k.t2);
          add(k.t1, k.t2);
          for (VertexId l : k.leaves) add(k.center, l);
        } else if constexpr (std::is_same_v<T, DiStar>) {
          add(k.s, k.s2);
          for (VertexId l : k.leaves) add(k.s, l);
          for (VertexId l : k.leaves2) add(k.s2, l);
        }
      },
      cls);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet class_vertices(const ComponentClass& cls) {
  return std::visit(
      [](const auto& k) -> VertexSet {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, IsolatedVertex>) {
          return VertexSet{k.v};
        } else if constexpr (std::is_same_v<T, IsolatedEdge>) {
          return VertexSet{k.u, k.v};
        } else if constexpr (std::is_same_v<T, PathP3> || std::is_same_v<T, Triangle>) {
          return VertexSet{k.t, k.u, k.v};
        } else if constexpr (std::is_same_v<T, FourCycle>) {
          return VertexSet{k.cycle[0], k.cycle[1], k.cycle[2], k.cycle[3]};
        } else if constexpr (std::is_same_v<T, Star>) {
          return k.leaves.unite(VertexSet{k.center});
        } else if constexpr (std::is_same_v<T, StarWithTriangle>) {
          return k.leaves.unite(VertexSet{k.center, k.t1, k.t2});
        } else {
          return k.leaves.unite(k.leaves2).unite(VertexSet{k.s, k.s2});
        }
      },
      cls);
}

}  // namespace pvc5

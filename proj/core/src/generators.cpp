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

#include "pvc5/generators.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pvc5 {
namespace {

class Builder {
 public:
  VertexId add() { return next_++; }

  std::vector<VertexId> add(int count) {
    std::vector<VertexId> out;
    for (int i = 0; i < count; ++i) out.push_back(add());
    return out;
  }

  VertexId add_red() {
    const VertexId w = add();
    red_.push_back(w);
    return w;
  }

  void edge(VertexId a, VertexId b) { edges_.emplace_back(a, b); }

  // l1 - s - s2 - l2; returned as {l1, s, s2, l2}.
  std::array<VertexId, 4> path4() {
    const auto v = add(4);
    for (int i = 0; i < 3; ++i) edge(v[i], v[i + 1]);
    return {v[0], v[1], v[2], v[3]};
  }

  // Center first, then the leaves.
  std::vector<VertexId> star(int leaves) {
    std::vector<VertexId> v = add(leaves + 1);
    for (int i = 1; i <= leaves; ++i) edge(v[0], v[i]);
    return v;
  }

  struct DiStarIds {
    VertexId s, s2;
    std::vector<VertexId> l, l2;
  };

  DiStarIds di_star(int left, int right) {
    DiStarIds d;
    d.l = add(left);
    d.s = add();
    d.s2 = add();
    d.l2 = add(right);
    edge(d.s, d.s2);
    for (VertexId x : d.l) edge(d.s, x);
    for (VertexId x : d.l2) edge(d.s2, x);
    return d;
  }

  // An outside P4 whose first leaf is attached to w; its own rule (R14.1)
  // comes after every rule a gadget targets except R14.2 and later.
  void outside_path(VertexId w) { edge(w, path4()[0]); }

  // An outside K1,3 with one leaf attached to w (R8.3 on its own).
  void outside_star(VertexId w) { edge(w, star(3)[1]); }

  Gadget finish(RuleId rule) const {
    Gadget out{rule, build_graph(next_, edges_), VertexSet(red_), 3};
    return out;
  }

 private:
  VertexId next_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexId> red_;
};

Gadget canonical_gadget(RuleId rule) {
  using R = RuleId;
  Builder b;
  auto touch = [&](VertexId w, std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) b.edge(w, v);
  };

  switch (rule) {
    case R::kR0: {
      b.path4();
      break;
    }
    case R::kR1:
    case R::kR2:
    case R::kR4: {
      // P5 p0..p4; R1 adds an isolated blue vertex.
      const auto p = b.add(5);
      for (int i = 0; i < 4; ++i) b.edge(p[i], p[i + 1]);
      Gadget g{rule, {}, {}, 3};
      VertexSet red = rule == R::kR2 ? VertexSet{p[1], p[3]} : VertexSet{p[2]};
      std::vector<Edge> edges;
      for (int i = 0; i < 4; ++i) edges.emplace_back(p[i], p[i + 1]);
      g.graph = build_graph(rule == R::kR1 ? 6 : 5, edges);
      g.red = red;
      return g;
    }
    case R::kR3: {
      const VertexId v = b.add();
      const VertexId w = b.add_red();
      b.edge(w, v);
      b.outside_star(w);
      break;
    }
    case R::kR5_1:
    case R::kR5_2:
    case R::kR5_3:
    case R::kR5_4: {
      const auto p = b.add(3);  // t, u, v
      b.edge(p[0], p[1]);
      b.edge(p[1], p[2]);
      const VertexId w = b.add_red();
      if (rule == R::kR5_1) touch(w, {p[2]});
      if (rule == R::kR5_2) touch(w, {p[1], p[2]});
      if (rule == R::kR5_3) touch(w, {p[1]});
      if (rule == R::kR5_4) touch(w, {p[0], p[2]});
      b.outside_star(w);
      break;
    }
    case R::kR6_1:
    case R::kR6_2:
    case R::kR6_3: {
      const auto t = b.add(3);
      b.edge(t[0], t[1]);
      b.edge(t[1], t[2]);
      b.edge(t[0], t[2]);
      const VertexId w = b.add_red();
      if (rule == R::kR6_1) touch(w, {t[2]});
      if (rule == R::kR6_2) touch(w, {t[1], t[2]});
      if (rule == R::kR6_3) touch(w, {t[0], t[1], t[2]});
      b.outside_star(w);
      break;
    }
    case R::kR7_1:
    case R::kR7_2_1:
    case R::kR7_2_2:
    case R::kR7_2_3:
    case R::kR7_2_4:
    case R::kR7_2_5: {
      const auto q = b.add(4);
      for (int i = 0; i < 4; ++i) b.edge(q[i], q[(i + 1) % 4]);
      const bool diamond = rule == R::kR7_2_4 || rule == R::kR7_2_5;
      if (diamond) b.edge(q[0], q[2]);
      const VertexId w = b.add_red();
      if (rule == R::kR7_1) {
        touch(w, {q[0]});
        touch(b.add_red(), {q[0]});
      }
      if (rule == R::kR7_2_1) touch(w, {q[0]});
      if (rule == R::kR7_2_2) touch(w, {q[0], q[2]});
      if (rule == R::kR7_2_3 || diamond) touch(w, {q[0], q[1]});
      if (rule == R::kR7_2_5) b.outside_star(w);
      break;
    }
    case R::kR8_1:
    case R::kR8_2:
    case R::kR8_3: {
      const auto s = b.star(3);
      const VertexId w = b.add_red();
      if (rule == R::kR8_1) touch(w, {s[1], s[2]});
      if (rule == R::kR8_2) touch(w, {s[0]});
      if (rule == R::kR8_3) touch(w, {s[1]});
      if (rule != R::kR8_1) b.outside_path(w);
      break;
    }
    case R::kR9_1:
    case R::kR9_2:
    case R::kR9_3:
    case R::kR9_4: {
      const auto v = b.add(4);  // s, t1, t2, l1
      b.edge(v[0], v[1]);
      b.edge(v[0], v[2]);
      b.edge(v[1], v[2]);
      b.edge(v[0], v[3]);
      const VertexId w = b.add_red();
      if (rule == R::kR9_1) touch(w, {v[1], v[2]});
      if (rule == R::kR9_2) touch(w, {v[1]});
      if (rule == R::kR9_3) touch(w, {v[3]});
      if (rule == R::kR9_4) {
        touch(w, {v[0]});
        b.outside_path(w);
      }
      break;
    }
    case R::kR10: {
      const auto d = b.di_star(2, 1);
      touch(b.add_red(), {d.l[0], d.l[1]});
      break;
    }
    case R::kR11_1_1:
    case R::kR11_1_2:
    case R::kR11_1_3:
    case R::kR11_1_4:
    case R::kR11_2_1:
    case R::kR11_2_2:
    case R::kR11_2_3:
    case R::kR11_2_4:
    case R::kR11_3: {
      const bool r111 = rule >= R::kR11_1_1 && rule <= R::kR11_1_4;
      const auto d = rule == R::kR11_3 ? b.di_star(2, 2) : b.di_star(r111 ? 1 : 2, 1);
      const VertexId w = b.add_red();
      touch(w, {d.s, d.s2});
      if (rule == R::kR11_1_2 || rule == R::kR11_2_2) touch(w, {d.l[0]});
      if (rule == R::kR11_2_3) touch(w, {d.l2[0]});
      if (rule == R::kR11_1_3 || rule == R::kR11_1_4 || rule == R::kR11_2_4) {
        touch(w, {d.l[0], d.l2[0]});
      }
      if (rule == R::kR11_1_3) b.outside_path(w);
      break;
    }
    case R::kR12_1:
    case R::kR12_2:
    case R::kR12_3_1:
    case R::kR12_3_2:
    case R::kR12_3_3:
    case R::kR12_3_4: {
      const int left = rule == R::kR12_3_3 || rule == R::kR12_3_4 ? 2 : 1;
      const int right = rule == R::kR12_3_4 ? 2 : 1;
      const auto d = b.di_star(left, right);
      const VertexId w = b.add_red();
      if (rule == R::kR12_1) touch(w, {d.l[0], d.s});
      if (rule == R::kR12_2) touch(w, {d.l[0], d.s2});
      if (rule >= R::kR12_3_1) touch(w, {d.l[0], d.l2[0]});
      if (rule == R::kR12_3_1) b.outside_path(w);
      break;
    }
    case R::kR13_1:
    case R::kR13_2:
    case R::kR13_3:
    case R::kR13_4: {
      const int left = rule == R::kR13_3 ? 2 : 1;
      const int right = rule == R::kR13_4 ? 2 : 1;
      const auto d = b.di_star(left, right);
      const VertexId w = b.add_red();
      touch(w, {d.l[0], d.s, d.l2[0]});
      if (rule == R::kR13_1) b.outside_path(w);
      break;
    }
    case R::kR14_1: {
      const auto d = b.path4();
      touch(b.add_red(), {d[0]});
      break;
    }
    case R::kR14_2: {
      const auto d = b.path4();
      const VertexId w = b.add_red();
      touch(w, {d[1]});
      // The second P4 is touched at a center too, so it also yields R14.2.
      touch(w, {b.path4()[1]});
      break;
    }
    case R::kR15:
    case R::kR16: {
      const auto d = b.path4();
      touch(b.add_red(), {d[0]});
      touch(b.add_red(), {rule == R::kR15 ? d[0] : d[3]});
      break;
    }
    case R::kR17:
    case R::kR18: {
      const auto d = b.di_star(rule == R::kR17 ? 2 : 1, 1);
      const auto e = b.path4();
      touch(b.add_red(), {d.l[0], e[0]});
      touch(b.add_red(), {d.l2[0], e[3]});
      break;
    }
    default:
      throw UnknownGadget("no gadget for " + std::string(rule_name(rule)) +
                          " (context rules never fire)");
  }
  return b.finish(rule);
}

}  // namespace

double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (uniform_double(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(static_cast<VertexId>(n - 1), 0);
  return g;
}

std::vector<VertexId> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  Graph out(g.capacity());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

BipartitionInstance Gadget::instance() const { return make_instance(graph, red, budget); }

Gadget make_gadget(RuleId rule, std::uint64_t seed) {
  Gadget g = canonical_gadget(rule);
  if (seed == 0) return g;
  const auto perm = random_permutation(g.graph.capacity(), seed);
  g.graph = relabel(g.graph, perm);
  std::vector<VertexId> red;
  for (VertexId w : g.red) red.push_back(perm[w]);
  g.red = VertexSet(std::move(red));
  return g;
}

}  // namespace pvc5

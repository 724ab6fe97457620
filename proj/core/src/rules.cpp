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

#include "pvc5/rules.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pvc5/p5.hpp"

namespace pvc5 {
namespace {

[[noreturn]] void violated(const std::string& what) { throw InvariantViolation(what); }

RuleFiring reduce_delete(RuleId id, VertexId v) {
  return {id, Reduce{{}, VertexSet{v}}};
}

RuleFiring branch(RuleId id, std::vector<VertexSet> sets) {
  return {id, Branch{std::move(sets)}};
}

VertexSet one(VertexId v) { return VertexSet{v}; }

// A blue component together with the red vertices attached to it.
struct Component {
  VertexSet vertices;
  ComponentClass cls;
  std::vector<VertexId> reds;      // ascending
  std::vector<VertexSet> touched;  // touched[i] = N(reds[i]) within the component
};

struct Context {
  const BipartitionInstance& inst;
  std::vector<Component> components;

  explicit Context(const BipartitionInstance& i) : inst(i) {
    const Graph blue_graph = inst.graph.induced(inst.blue);
    for (VertexSet& c : connected_components(blue_graph)) {
      Component comp;
      try {
        comp.cls = classify_component(blue_graph, c);
      } catch (const ClassificationError& e) {
        violated(std::string("blue side is not P5-free: ") + e.what());
      }
      VertexSet reds = inst.graph.open_neighborhood(c).intersect(inst.red);
      for (VertexId w : reds) {
        comp.reds.push_back(w);
        comp.touched.push_back(inst.graph.neighbor_set(w).intersect(c));
      }
      comp.vertices = std::move(c);
      components.push_back(std::move(comp));
    }
  }

  // Neighbours of red w outside component c, ascending.
  [[nodiscard]] VertexSet outside(VertexId w, const Component& c) const {
    return inst.graph.neighbor_set(w).minus(c.vertices).intersect(inst.blue);
  }

  [[nodiscard]] bool confined(VertexId w, const Component& c) const {
    return outside(w, c).empty();
  }

  [[nodiscard]] VertexId outside_vertex(VertexId w, const Component& c, RuleId rule) const {
    VertexSet out = outside(w, c);
    if (out.empty()) {
      violated(std::string(rule_name(rule)) + ": red vertex " + std::to_string(w) +
               " has no neighbour outside component " + c.vertices.to_string());
    }
    return out.min();
  }

  [[nodiscard]] VertexId blue_neighbor(VertexId x, RuleId rule) const {
    VertexSet nb = inst.graph.neighbor_set(x).intersect(inst.blue);
    if (nb.empty()) {
      violated(std::string(rule_name(rule)) + ": blue vertex " + std::to_string(x) +
               " is isolated in the blue side");
    }
    return nb.min();
  }

  // Single attached red vertex, as several rules require.
  [[nodiscard]] std::size_t sole_red(const Component& c, RuleId rule) const {
    if (c.reds.size() != 1) {
      violated(std::string(rule_name(rule)) + ": component " + c.vertices.to_string() + " has " +
               std::to_string(c.reds.size()) + " attached red vertices, expected exactly one");
    }
    return 0;
  }
};

// Keeps the earliest rule; on a tie the earlier component (seen first) wins.
void consider(std::optional<RuleFiring>& best, std::optional<RuleFiring> candidate) {
  if (!candidate) return;
  if (!best || candidate->rule < best->rule) best = std::move(candidate);
}

// ---------------------------------------------------------------- R0 to R2

std::optional<RuleFiring> rule_r0(const BipartitionInstance& inst) {
  if (inst.budget < 0) return RuleFiring{RuleId::kR0, Halt{std::nullopt}};
  if (is_p5_free(inst.graph)) return RuleFiring{RuleId::kR0, Halt{inst.partial_solution}};
  if (inst.budget == 0) return RuleFiring{RuleId::kR0, Halt{std::nullopt}};
  return std::nullopt;
}

std::optional<RuleFiring> rule_r1(const BipartitionInstance& inst) {
  for (VertexId v : inst.graph.vertices()) {
    if (!lies_on_p5(inst.graph, v)) return RuleFiring{RuleId::kR1, Reduce{one(v), {}}};
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule_r2(const BipartitionInstance& inst) {
  std::optional<RuleFiring> out;
  detail::enumerate_p5(
      inst.graph,
      // More than three blue vertices in a prefix can never shrink again.
      [&](const Path5& p, int len) {
        int blue = 0;
        for (int i = 0; i < len; ++i) blue += inst.blue.contains(p[i]) ? 1 : 0;
        return blue <= 3;
      },
      [&](const Path5& p) {
        std::vector<VertexSet> sets;
        for (VertexId v : p) {
          if (inst.blue.contains(v)) sets.push_back(one(v));
        }
        out = branch(RuleId::kR2, std::move(sets));
        return false;
      });
  return out;
}

// ---------------------------------------------------------------- R3 to R6

std::optional<RuleFiring> rule_r3(const Context& ctx, const Component& c) {
  const Graph& g = ctx.inst.graph;
  const VertexId v = c.vertices.min();
  for (VertexId w : g.neighbors(v)) {
    if (!ctx.inst.red.contains(w)) continue;
    for (VertexId x : g.neighbors(w)) {
      if (x == v) continue;
      for (VertexId y : g.neighbors(x)) {
        if (y == v || y == w) continue;
        for (VertexId z : g.neighbors(y)) {
          if (z == v || z == w || z == x) continue;
          return branch(RuleId::kR3, {one(x), one(y), one(z)});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule_r4(const Context& ctx, const Component& c) {
  const auto& e = std::get<IsolatedEdge>(c.cls);
  const std::size_t i = ctx.sole_red(c, RuleId::kR4);
  const VertexId w = c.reds[i];
  const VertexId v = c.touched[i].size() == 1 ? c.touched[i].min() : e.u;
  const VertexId x = ctx.outside_vertex(w, c, RuleId::kR4);
  const VertexId y = ctx.blue_neighbor(x, RuleId::kR4);
  return branch(RuleId::kR4, {one(v), one(x), one(y)});
}

std::optional<RuleFiring> rule_r5(const Context& ctx, const Component& c) {
  const auto& p = std::get<PathP3>(c.cls);
  const std::size_t i = ctx.sole_red(c, RuleId::kR5);
  const VertexId w = c.reds[i];
  const VertexSet& a = c.touched[i];
  const bool center = a.contains(p.u);
  const VertexSet ends = a.minus(one(p.u));
  const VertexId x = ctx.outside_vertex(w, c, RuleId::kR5);
  if (ends.size() == 2) return branch(RuleId::kR5_4, {one(p.u), one(p.t), one(x)});
  if (ends.size() == 1) {
    const VertexId end = ends.min();
    if (center) return branch(RuleId::kR5_2, {one(p.u), one(end), one(x)});
    return branch(RuleId::kR5_1, {one(end), one(x)});
  }
  const VertexId y = ctx.blue_neighbor(x, RuleId::kR5_3);
  return branch(RuleId::kR5_3, {one(p.u), one(x), one(y)});
}

std::optional<RuleFiring> rule_r6(const Context& ctx, const Component& c) {
  const std::size_t i = ctx.sole_red(c, RuleId::kR6);
  const VertexId w = c.reds[i];
  const VertexSet& a = c.touched[i];
  const VertexId x = ctx.outside_vertex(w, c, RuleId::kR6);
  switch (a.size()) {
    case 1:
      return branch(RuleId::kR6_1, {one(a.min()), one(x)});
    case 2:
      return branch(RuleId::kR6_2, {one(c.vertices.minus(a).min()), one(a.min()), one(x)});
    default:
      return branch(RuleId::kR6_3, {one(c.vertices.min()), one(x)});
  }
}

// ---------------------------------------------------------------- R7

std::optional<RuleFiring> rule_r7(const Context& ctx, const Component& c) {
  const auto& q = std::get<FourCycle>(c.cls);
  const Graph& g = ctx.inst.graph;
  if (c.reds.size() >= 2) return reduce_delete(RuleId::kR7_1, c.vertices.min());
  const VertexId w = c.reds.at(0);
  const VertexSet& x_set = c.touched[0];
  if (x_set.size() == 1) return reduce_delete(RuleId::kR7_2_1, x_set.min());

  const int chords = q.diagonal_count();
  // In K4 every pair is diagonal for some 4-cycle labelling; two touched
  // vertices are then labelled as a non-diagonal pair (R7.2.3).
  const bool complete = chords == 2;
  auto is_diagonal = [&](VertexId a, VertexId b) {
    if (complete) return x_set.size() >= 3;
    return (a == q.cycle[0] && b == q.cycle[2]) || (a == q.cycle[2] && b == q.cycle[0]) ||
           (a == q.cycle[1] && b == q.cycle[3]) || (a == q.cycle[3] && b == q.cycle[1]);
  };
  for (std::size_t i = 0; i < x_set.size(); ++i) {
    for (std::size_t j = i + 1; j < x_set.size(); ++j) {
      if (!is_diagonal(x_set[i], x_set[j])) continue;
      const VertexSet rest = c.vertices.minus(VertexSet{x_set[i], x_set[j]});
      return branch(RuleId::kR7_2_2, {one(x_set[i]), one(rest[0]), one(rest[1])});
    }
  }
  if (x_set.size() != 2) violated("R7.2: touched set " + x_set.to_string() + " unhandled");

  // Exactly one non-diagonal (cycle-adjacent) pair {v1, v2}.
  if (chords != 1) {
    const VertexId v1 = x_set[0];
    const VertexId v2 = x_set[1];
    VertexSet rest = c.vertices.minus(x_set);
    VertexId v3 = rest[0];
    VertexId v4 = rest[1];
    // On a plain 4-cycle v3 follows v2.
    if (chords == 0 && !g.has_edge(v2, v3)) std::swap(v3, v4);
    return branch(RuleId::kR7_2_3, {one(v1), one(v3), one(v4)});
  }
  // Diamond: v1 is the touched chord endpoint, v2 the touched rim vertex.
  if (ctx.confined(w, c)) return reduce_delete(RuleId::kR7_2_4, c.vertices.min());
  const VertexId x = ctx.outside_vertex(w, c, RuleId::kR7_2_5);
  const VertexId y = ctx.blue_neighbor(x, RuleId::kR7_2_5);
  return branch(RuleId::kR7_2_5, {x_set, one(x), one(y)});
}

// ---------------------------------------------------------------- R8, R9

std::optional<RuleFiring> rule_r8(const Context& ctx, const Component& c) {
  const auto& star = std::get<Star>(c.cls);
  for (std::size_t i = 0; i < c.reds.size(); ++i) {
    const VertexSet leaves = c.touched[i].intersect(star.leaves);
    if (leaves.size() >= 2) {
      const VertexId l1 = leaves[0];
      const VertexId l2 = leaves[1];
      return branch(RuleId::kR8_1,
                    {one(l1), one(star.center), star.leaves.minus(VertexSet{l1, l2})});
    }
  }
  const std::size_t i = ctx.sole_red(c, RuleId::kR8);
  const VertexId w = c.reds[i];
  const VertexSet leaves = c.touched[i].intersect(star.leaves);
  const VertexId x = ctx.outside_vertex(w, c, RuleId::kR8);
  if (leaves.empty()) {
    const VertexId y = ctx.blue_neighbor(x, RuleId::kR8_2);
    return branch(RuleId::kR8_2, {one(star.center), one(x), one(y)});
  }
  return branch(RuleId::kR8_3, {one(star.center), one(leaves.min()), one(x)});
}

std::optional<RuleFiring> rule_r9(const Context& ctx, const Component& c) {
  const auto& st = std::get<StarWithTriangle>(c.cls);
  const VertexSet tri{st.t1, st.t2};
  for (const VertexSet& a : c.touched) {
    if (tri.is_subset_of(a)) return branch(RuleId::kR9_1, {one(st.t1), one(st.center), st.leaves});
  }
  for (const VertexSet& a : c.touched) {
    const VertexSet hit = a.intersect(tri);
    if (hit.size() == 1) return branch(RuleId::kR9_2, {hit, one(st.center), st.leaves});
  }
  for (const VertexSet& a : c.touched) {
    const VertexSet hit = a.intersect(st.leaves);
    if (!hit.empty()) return branch(RuleId::kR9_3, {one(hit.min()), one(st.center)});
  }
  for (std::size_t i = 0; i < c.reds.size(); ++i) {
    if (c.touched[i] != one(st.center)) continue;
    const VertexSet out = ctx.outside(c.reds[i], c);
    if (!out.empty()) return branch(RuleId::kR9_4, {one(st.center), one(out.min())});
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- R10 to R18

// A di-star with a chosen orientation: `s` owns `l`, `s2` owns `l2`.
struct Oriented {
  VertexId s, s2;
  VertexSet l, l2;

  [[nodiscard]] Oriented flipped() const { return {s2, s, l2, l}; }
  [[nodiscard]] bool big() const { return l.size() >= 2; }
  [[nodiscard]] bool big2() const { return l2.size() >= 2; }
  [[nodiscard]] bool path() const { return !big() && !big2(); }
};

Oriented orient(const DiStar& d) { return {d.s, d.s2, d.leaves, d.leaves2}; }

std::optional<RuleFiring> rule_r10(const Context&, const Component& c) {
  const Oriented d = orient(std::get<DiStar>(c.cls));
  for (const VertexSet& a : c.touched) {
    for (const Oriented& o : {d, d.flipped()}) {
      const VertexSet hit = a.intersect(o.l);
      if (hit.size() >= 2) return branch(RuleId::kR10, {one(hit.min()), one(o.s), one(o.s2)});
    }
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule_r11(const Context& ctx, const Component& c) {
  const Oriented d = orient(std::get<DiStar>(c.cls));
  if (c.reds.size() != 1) return std::nullopt;
  const VertexSet& a = c.touched[0];
  if (!a.contains(d.s) || !a.contains(d.s2)) return std::nullopt;
  const VertexId w = c.reds[0];

  if (d.path()) {
    const VertexId l1 = d.l.min();
    const VertexId l1p = d.l2.min();
    const bool has1 = a.contains(l1);
    const bool has2 = a.contains(l1p);
    if (!has1 && !has2) return branch(RuleId::kR11_1_1, {one(d.s), one(d.s2)});
    if (has1 != has2) {
      const Oriented o = has1 ? d : d.flipped();
      return branch(RuleId::kR11_1_2, {one(o.l.min()), one(o.s), one(o.s2)});
    }
    if (ctx.confined(w, c)) return reduce_delete(RuleId::kR11_1_4, c.vertices.min());
    const VertexId x = ctx.outside_vertex(w, c, RuleId::kR11_1_3);
    const VertexId y = ctx.blue_neighbor(x, RuleId::kR11_1_3);
    return branch(RuleId::kR11_1_3, {one(x), one(y), VertexSet{l1, d.s2}, VertexSet{d.s, l1p},
                                     VertexSet{d.s, d.s2}});
  }
  if (d.big() != d.big2()) {
    const Oriented o = d.big() ? d : d.flipped();
    const VertexSet hit = a.intersect(o.l);
    const bool small_leaf = a.intersects(o.l2);
    if (hit.size() >= 2) return std::nullopt;
    if (hit.empty() && !small_leaf) return branch(RuleId::kR11_2_1, {one(o.s), one(o.s2)});
    if (!small_leaf) return branch(RuleId::kR11_2_2, {hit, one(o.s), one(o.s2)});
    if (hit.empty()) return branch(RuleId::kR11_2_3, {o.l2, one(o.s), one(o.s2)});
    return branch(RuleId::kR11_2_4, {hit, one(o.s), one(o.s2)});
  }
  return branch(RuleId::kR11_3, {d.l, one(d.s), one(d.s2), d.l2});
}

std::optional<RuleFiring> rule_r12(const Context& ctx, const Component& c) {
  const Oriented d = orient(std::get<DiStar>(c.cls));
  if (c.reds.size() != 1 || c.touched[0].size() != 2) return std::nullopt;
  const VertexSet& a = c.touched[0];
  const VertexId w = c.reds[0];
  const bool has_s = a.contains(d.s);
  const bool has_s2 = a.contains(d.s2);
  if (has_s && has_s2) return std::nullopt;
  if (has_s || has_s2) {
    // A center and one leaf.
    const Oriented o = has_s ? d : d.flipped();
    const VertexId leaf = a.minus(one(o.s)).min();
    if (o.l.contains(leaf)) return branch(RuleId::kR12_1, {one(leaf), one(o.s)});
    // Leaf of the other center: relabel so that the leaf hangs off `s`.
    return branch(RuleId::kR12_2, {one(leaf), one(o.s2), one(o.s)});
  }
  const VertexSet left = a.intersect(d.l);
  const VertexSet right = a.intersect(d.l2);
  if (left.size() != 1 || right.size() != 1) return std::nullopt;
  if (d.path()) {
    if (ctx.confined(w, c)) return reduce_delete(RuleId::kR12_3_2, c.vertices.min());
    const VertexId x = ctx.outside_vertex(w, c, RuleId::kR12_3_1);
    const VertexId y = ctx.blue_neighbor(x, RuleId::kR12_3_1);
    return branch(RuleId::kR12_3_1, {one(x), one(y), left.unite(right)});
  }
  if (d.big() && d.big2()) {
    return branch(RuleId::kR12_3_4, {one(d.s), one(d.s2), left.unite(right)});
  }
  const Oriented o = d.big() ? d : d.flipped();
  const VertexSet l1 = a.intersect(o.l);
  const VertexSet l1p = a.intersect(o.l2);
  return branch(RuleId::kR12_3_3, {l1, one(o.s), l1p});
}

std::optional<RuleFiring> rule_r13(const Context& ctx, const Component& c) {
  const Oriented d = orient(std::get<DiStar>(c.cls));
  if (c.reds.size() != 1 || c.touched[0].size() != 3) return std::nullopt;
  const VertexSet& a = c.touched[0];
  const VertexId w = c.reds[0];
  const bool has_s = a.contains(d.s);
  if (has_s == a.contains(d.s2)) return std::nullopt;
  const Oriented o = has_s ? d : d.flipped();
  const VertexSet l1 = a.intersect(o.l);
  const VertexSet l1p = a.intersect(o.l2);
  if (l1.size() != 1 || l1p.size() != 1) return std::nullopt;
  if (o.path()) {
    if (ctx.confined(w, c)) return reduce_delete(RuleId::kR13_2, c.vertices.min());
    const VertexId x = ctx.outside_vertex(w, c, RuleId::kR13_1);
    const VertexId y = ctx.blue_neighbor(x, RuleId::kR13_1);
    return branch(RuleId::kR13_1,
                  {one(x), one(y), l1.unite(one(o.s2)), l1p.unite(one(o.s))});
  }
  if (o.big()) return branch(RuleId::kR13_3, {l1, one(o.s), l1p});
  return branch(RuleId::kR13_4, {l1, one(o.s2), l1p});
}

std::optional<RuleFiring> rule_r14(const Context& ctx, const Component& c) {
  const Oriented d = orient(std::get<DiStar>(c.cls));
  if (c.reds.size() != 1 || c.touched[0].size() != 1) return std::nullopt;
  const VertexId v = c.touched[0].min();
  if (v != d.s && v != d.s2) return reduce_delete(RuleId::kR14_1, v);
  const VertexSet out = ctx.outside(c.reds[0], c);
  if (out.empty()) return std::nullopt;
  return branch(RuleId::kR14_2, {one(v), one(out.min())});
}

// Several red vertices, each touching the di-star in exactly one vertex.
// Returns the union of the touched vertices, or nullopt otherwise.
std::optional<VertexSet> single_edge_attachments(const Component& c) {
  if (c.reds.size() < 2) return std::nullopt;
  VertexSet all;
  for (const VertexSet& a : c.touched) {
    if (a.size() != 1) return std::nullopt;
    all.insert(a.min());
  }
  return all;
}

std::optional<RuleFiring> rule_r15(const Context&, const Component& c) {
  const Oriented d = orient(std::get<DiStar>(c.cls));
  const auto all = single_edge_attachments(c);
  if (!all || all->size() != 1) return std::nullopt;
  const VertexId v = all->min();
  if (v == d.s || v == d.s2) return std::nullopt;
  return reduce_delete(RuleId::kR15, v);
}

// Attachments at exactly two opposite leaves; oriented so that `l` holds the
// first of them.
std::optional<std::pair<Oriented, VertexSet>> opposite_leaves(const Component& c) {
  const Oriented d = orient(std::get<DiStar>(c.cls));
  const auto all = single_edge_attachments(c);
  if (!all || all->size() != 2) return std::nullopt;
  if (!all->intersects(d.l) || !all->intersects(d.l2)) return std::nullopt;
  return std::make_pair(d, *all);
}

std::optional<RuleFiring> rule_r16(const Context& ctx, const Component& c) {
  const auto found = opposite_leaves(c);
  if (!found) return std::nullopt;
  const auto& [d, all] = *found;
  for (const Oriented& o : {d, d.flipped()}) {
    const VertexId l1 = all.intersect(o.l).min();
    bool confined = true;
    for (std::size_t i = 0; i < c.reds.size(); ++i) {
      if (c.touched[i].contains(l1) && !ctx.confined(c.reds[i], c)) confined = false;
    }
    if (confined) return branch(RuleId::kR16, {one(o.s2), all.intersect(o.l2)});
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule_r17(const Context&, const Component& c) {
  const auto found = opposite_leaves(c);
  if (!found) return std::nullopt;
  const auto& [d, all] = *found;
  if (d.path()) return std::nullopt;
  const Oriented o = d.big() ? d : d.flipped();
  return branch(RuleId::kR17, {one(o.s), one(o.s2), all.intersect(o.l2)});
}

std::optional<RuleFiring> rule_r18(const Context&, const Component& c) {
  const auto found = opposite_leaves(c);
  if (!found) return std::nullopt;
  const auto& [d, all] = *found;
  if (!d.path()) return std::nullopt;
  return branch(RuleId::kR18, {all.intersect(d.l), all.intersect(d.l2)});
}

using ComponentRule = std::optional<RuleFiring> (*)(const Context&, const Component&);

// Runs the rule families in order over the components of the given kind;
// the first family with any applicable component decides.
std::optional<RuleFiring> run_families(const Context& ctx,
                                       std::initializer_list<std::pair<ComponentKind,
                                                                       ComponentRule>> families) {
  for (const auto& [kind, rule] : families) {
    std::optional<RuleFiring> best;
    for (const Component& c : ctx.components) {
      if (kind_of(c.cls) == kind) consider(best, rule(ctx, c));
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<RuleFiring> small_rules(const Context& ctx) {
  return run_families(ctx, {{ComponentKind::kIsolatedVertex, rule_r3},
                            {ComponentKind::kIsolatedEdge, rule_r4},
                            {ComponentKind::kP3, rule_r5},
                            {ComponentKind::kTriangle, rule_r6}});
}

std::optional<RuleFiring> cycle_rules(const Context& ctx) {
  return run_families(ctx, {{ComponentKind::kFourCycle, rule_r7}});
}

std::optional<RuleFiring> starry_rules(const Context& ctx) {
  return run_families(ctx, {{ComponentKind::kStar, rule_r8},
                            {ComponentKind::kStarWithTriangle, rule_r9}});
}

std::optional<RuleFiring> di_rules(const Context& ctx) {
  constexpr ComponentKind kD = ComponentKind::kDiStar;
  return run_families(ctx, {{kD, rule_r10},
                            {kD, rule_r11},
                            {kD, rule_r12},
                            {kD, rule_r13},
                            {kD, rule_r14},
                            {kD, rule_r15},
                            {kD, rule_r16},
                            {kD, rule_r17},
                            {kD, rule_r18}});
}

void check_decision(const BipartitionInstance& inst, const RuleFiring& f) {
  auto fail = [&](const std::string& why) {
    violated(std::string(rule_name(f.rule)) + " produced an invalid decision (" + why +
             "): " + describe(f));
  };
  if (const auto* r = std::get_if<Reduce>(&f.decision)) {
    if (r->remove.empty() && r->delete_set.empty()) fail("empty reduction");
    if (!r->delete_set.is_subset_of(inst.blue)) fail("deletes a red vertex");
    if (!r->remove.is_subset_of(inst.graph.vertices())) fail("removes a dead vertex");
  } else if (const auto* b = std::get_if<Branch>(&f.decision)) {
    if (b->branches.size() < 2 && f.rule != RuleId::kR2) fail("fewer than two branches");
    for (const VertexSet& x : b->branches) {
      if (x.empty()) fail("empty branch");
      if (!x.is_subset_of(inst.blue)) fail("branch outside the blue side");
    }
  }
}

}  // namespace

std::optional<RuleFiring> preprocessing_rules(const BipartitionInstance& inst) {
  if (auto f = rule_r0(inst)) return f;
  if (auto f = rule_r1(inst)) return f;
  return rule_r2(inst);
}

std::optional<RuleFiring> small_component_rules(const BipartitionInstance& inst) {
  return small_rules(Context(inst));
}

std::optional<RuleFiring> four_cycle_rules(const BipartitionInstance& inst) {
  return cycle_rules(Context(inst));
}

std::optional<RuleFiring> star_rules(const BipartitionInstance& inst) {
  return starry_rules(Context(inst));
}

std::optional<RuleFiring> distar_rules(const BipartitionInstance& inst) {
  return di_rules(Context(inst));
}

RuleFiring select_rule(const BipartitionInstance& inst) {
  std::optional<RuleFiring> f = preprocessing_rules(inst);
  if (!f) {
    const Context ctx(inst);
    f = small_rules(ctx);
    if (!f) f = cycle_rules(ctx);
    if (!f) f = starry_rules(ctx);
    if (!f) f = di_rules(ctx);
  }
  if (!f) {
    violated("no rule applicable (budget " + std::to_string(inst.budget) + ", red " +
             inst.red.to_string() + ", blue " + inst.blue.to_string() + ")");
  }
  check_decision(inst, *f);
  return *f;
}

bool single_exit_prunable(const BipartitionInstance& inst, const VertexSet& x_set) {
  const VertexSet around = inst.graph.open_neighborhood(x_set);
  if (around.intersects(inst.red)) return false;
  return around.intersect(inst.blue).size() == 1;
}

void check_single_red_property(const BipartitionInstance& inst) {
  for (const Edge& e : inst.graph.edges()) {
    if (inst.red.contains(e.first) && inst.red.contains(e.second)) {
      violated("red vertices " + std::to_string(e.first) + " and " + std::to_string(e.second) +
               " are adjacent");
    }
  }
  for (const Path5& p : all_p5(inst.graph)) {
    int reds = 0;
    for (VertexId v : p) reds += inst.red.contains(v) ? 1 : 0;
    if (reds != 1) {
      violated("a P5 holds " + std::to_string(reds) + " red vertices");
    }
  }
}

}  // namespace pvc5

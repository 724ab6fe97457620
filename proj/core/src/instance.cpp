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

#include "pvc5/instance.hpp"

#include <sstream>

#include "pvc5/p5.hpp"

namespace pvc5 {

void BipartitionInstance::validate() const {
  const VertexSet alive = graph.vertices();
  if (red.intersects(blue)) {
    throw std::invalid_argument("red and blue sets overlap: " + red.intersect(blue).to_string());
  }
  if (red.unite(blue) != alive) {
    throw std::invalid_argument("red and blue do not cover exactly the alive vertices");
  }
  if (partial_solution.intersects(alive)) {
    throw std::invalid_argument("partial solution contains alive vertices");
  }
  if (!is_p5_free(graph.induced(red))) throw std::invalid_argument("red side contains a P5");
  if (!is_p5_free(graph.induced(blue))) throw std::invalid_argument("blue side contains a P5");
}

BipartitionInstance make_instance(Graph graph, VertexSet red, int budget) {
  BipartitionInstance inst;
  inst.blue = graph.vertices().minus(red);
  inst.graph = std::move(graph);
  inst.red = std::move(red);
  inst.budget = budget;
  inst.validate();
  return inst;
}

BipartitionInstance apply_reduce(const BipartitionInstance& inst, const Reduce& r) {
  const VertexSet gone = r.remove.unite(r.delete_set);
  BipartitionInstance out;
  out.graph = inst.graph.without(gone);
  out.red = inst.red.minus(gone);
  out.blue = inst.blue.minus(gone);
  out.partial_solution = inst.partial_solution.unite(r.delete_set);
  out.budget = inst.budget - static_cast<int>(r.delete_set.size());
  return out;
}

BipartitionInstance apply_branch(const BipartitionInstance& inst, const VertexSet& x) {
  return apply_reduce(inst, Reduce{{}, x});
}

std::string describe(const RuleDecision& d) {
  std::ostringstream os;
  if (const auto* h = std::get_if<Halt>(&d)) {
    if (h->answer) {
      os << "halt " << *h->answer;
    } else {
      os << "halt no";
    }
  } else if (const auto* r = std::get_if<Reduce>(&d)) {
    os << "reduce";
    if (!r->remove.empty()) os << " remove " << r->remove;
    if (!r->delete_set.empty()) os << " delete " << r->delete_set;
  } else {
    const auto& b = std::get<Branch>(d);
    os << "branch <";
    for (std::size_t i = 0; i < b.branches.size(); ++i) {
      if (i > 0) os << " | ";
      os << b.branches[i];
    }
    os << '>';
  }
  return os.str();
}

std::string describe(const RuleFiring& f) {
  return std::string(rule_name(f.rule)) + ": " + describe(f.decision);
}

}  // namespace pvc5

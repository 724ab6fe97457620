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

// Deterministic instance generators.
//
// Randomness comes from std::mt19937_64 seeded with the given seed. A
// uniform double is (next() >> 11) * 2^-53. G(n, p) visits the pairs u < v
// in lexicographic order and keeps a pair when its draw is below p.

#ifndef PVC5_GENERATORS_HPP_
#define PVC5_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <span>

#include "pvc5/graph.hpp"
#include "pvc5/instance.hpp"
#include "pvc5/rule_id.hpp"

namespace pvc5 {

[[nodiscard]] double uniform_double(std::mt19937_64& rng);

// Throws std::invalid_argument unless 0 <= p <= 1.
[[nodiscard]] Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);
[[nodiscard]] Graph path_graph(std::size_t n);
[[nodiscard]] Graph cycle_graph(std::size_t n);

// A small graph with a red/blue split on which `rule` is the first rule the
// disjoint routine applies (with the given budget).
struct Gadget {
  RuleId rule;
  Graph graph;
  VertexSet red;
  int budget = 3;

  [[nodiscard]] BipartitionInstance instance() const;
};

class UnknownGadget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Seed 0 gives the canonical labelling; other seeds shuffle the ids.
// Throws UnknownGadget for context rules.
[[nodiscard]] Gadget make_gadget(RuleId rule, std::uint64_t seed = 0);

// Uniform random permutation of 0..n-1 (Fisher-Yates, index = next() % (i+1)).
[[nodiscard]] std::vector<VertexId> random_permutation(std::size_t n, std::uint64_t seed);

// Relabels g by perm: vertex v becomes perm[v].
[[nodiscard]] Graph relabel(const Graph& g, std::span<const VertexId> perm);

}  // namespace pvc5

#endif  // PVC5_GENERATORS_HPP_

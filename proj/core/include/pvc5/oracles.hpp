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

// Independent baselines used to check the main solver.

#ifndef PVC5_ORACLES_HPP_
#define PVC5_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "pvc5/graph.hpp"
#include "pvc5/stats.hpp"

namespace pvc5 {

inline constexpr std::size_t kBruteForceLimit = 16;

class OracleSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleResult {
  int min_size = 0;
  VertexSet witness;
  std::uint64_t subsets_examined = 0;
};

// Exhaustive search by ascending size; the witness is the lexicographically
// first minimum solution. Throws OracleSizeError above kBruteForceLimit
// alive vertices.
[[nodiscard]] OracleResult brute_force_min_pvc(const Graph& g);

// Branches on all five vertices of the lexicographically smallest P5.
// Counts nodes, leaves and depth into `stats` if given.
[[nodiscard]] std::optional<VertexSet> trivial_branching(const Graph& g, int k,
                                                         SolveStats* stats = nullptr);

// |f| <= k and g \ f is P5-free. Throws GraphError if f names a vertex that
// is not alive.
[[nodiscard]] bool verify_solution(const Graph& g, const VertexSet& f, int k);

}  // namespace pvc5

#endif  // PVC5_ORACLES_HPP_

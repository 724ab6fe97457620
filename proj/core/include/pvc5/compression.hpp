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

// Iterative compression for 5-PVC on top of the disjoint routine.

#ifndef PVC5_COMPRESSION_HPP_
#define PVC5_COMPRESSION_HPP_

#include <optional>

#include "pvc5/graph.hpp"
#include "pvc5/stats.hpp"

namespace pvc5 {

// Given a solution f of size k + 1 for g, looks for one of size <= k by
// trying every split f = X ∪ Y with Y nonempty and g[Y] P5-free (Y by
// ascending size, then lexicographically). Returns nullopt iff none exists.
// Throws std::invalid_argument if |f| != k + 1, k < 0, f has dead ids or
// g \ f contains a P5.
[[nodiscard]] std::optional<VertexSet> compress(const Graph& g, const VertexSet& f, int k,
                                                SearchObserver* observer = nullptr);

// A solution of size <= k, or nullopt iff none exists. Vertices are added in
// ascending id order; compression runs whenever the solution reaches k + 1.
// Throws std::invalid_argument for k < 0.
[[nodiscard]] std::optional<VertexSet> solve_5pvc(const Graph& g, int k,
                                                  SearchObserver* observer = nullptr);

struct MinResult {
  int size = 0;
  VertexSet witness;
};

// Smallest k for which solve_5pvc succeeds, with its witness.
[[nodiscard]] MinResult min_5pvc(const Graph& g, SearchObserver* observer = nullptr);

}  // namespace pvc5

#endif  // PVC5_COMPRESSION_HPP_

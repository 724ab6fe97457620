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

#ifndef PVC5_DISJOINT_HPP_
#define PVC5_DISJOINT_HPP_

#include <optional>

#include "pvc5/instance.hpp"
#include "pvc5/stats.hpp"

namespace pvc5 {

// Searches for F with partial_solution ⊆ F, F \ partial_solution ⊆ blue,
// |F \ partial_solution| <= budget and graph \ F P5-free. Branches are
// explored left to right and the first success is returned. Branch sets
// larger than the remaining budget are skipped.
//
// The returned set is checked before returning; a failed check throws
// InvariantViolation. The instance is validated on entry
// (std::invalid_argument).
[[nodiscard]] std::optional<VertexSet> disjoint_r(const BipartitionInstance& inst,
                                                  SearchObserver* observer = nullptr);

}  // namespace pvc5

#endif  // PVC5_DISJOINT_HPP_

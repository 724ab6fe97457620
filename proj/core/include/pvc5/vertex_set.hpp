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

#ifndef PVC5_VERTEX_SET_HPP_
#define PVC5_VERTEX_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pvc5 {

using VertexId = std::uint32_t;

// An ordered set of vertex ids backed by a sorted vector. Iteration is always
// ascending, which keeps every consumer deterministic.
class VertexSet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}
  explicit VertexSet(std::vector<VertexId> ids);
  explicit VertexSet(std::span<const VertexId> ids)
      : VertexSet(std::vector<VertexId>(ids.begin(), ids.end())) {}

  static VertexSet single(VertexId v) { return VertexSet({v}); }

  [[nodiscard]] bool contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  // Precondition: non-empty.
  [[nodiscard]] VertexId min() const { return ids_.front(); }
  [[nodiscard]] VertexId max() const { return ids_.back(); }

  // Returns true if `v` was not already present.
  bool insert(VertexId v);
  bool erase(VertexId v);

  [[nodiscard]] VertexSet unite(const VertexSet& other) const;
  [[nodiscard]] VertexSet minus(const VertexSet& other) const;
  [[nodiscard]] VertexSet intersect(const VertexSet& other) const;
  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
  [[nodiscard]] bool intersects(const VertexSet& other) const;

  [[nodiscard]] const std::vector<VertexId>& ids() const { return ids_; }
  [[nodiscard]] const_iterator begin() const { return ids_.begin(); }
  [[nodiscard]] const_iterator end() const { return ids_.end(); }
  [[nodiscard]] VertexId operator[](std::size_t i) const { return ids_[i]; }

  // "{0,3,7}"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<VertexId> ids_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace pvc5

#endif  // PVC5_VERTEX_SET_HPP_

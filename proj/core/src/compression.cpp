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

#include "pvc5/compression.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "pvc5/disjoint.hpp"
#include "pvc5/instance.hpp"
#include "pvc5/p5.hpp"

namespace pvc5 {
namespace {

// Calls visit(subset) for every size-r subset of items in lexicographic
// order until it returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_combination(const std::vector<VertexId>& items, std::size_t r, Visit&& visit) {
  const std::size_t n = items.size();
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::vector<VertexId> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = items[idx[i]];
    if (visit(VertexSet(std::move(pick)))) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<VertexSet> compress(const Graph& g, const VertexSet& f, int k,
                                  SearchObserver* observer) {
  if (k < 0) throw std::invalid_argument("compression needs k >= 0");
  if (static_cast<int>(f.size()) != k + 1) {
    throw std::invalid_argument("compression needs |f| = k + 1, got |f| = " +
                                std::to_string(f.size()) + ", k = " + std::to_string(k));
  }
  for (VertexId v : f) {
    if (!g.is_alive(v)) throw std::invalid_argument("f names dead vertex " + std::to_string(v));
  }
  if (!is_p5_free(g.without(f))) throw std::invalid_argument("f is not a solution");

  const std::vector<VertexId> items(f.begin(), f.end());
  std::optional<VertexSet> result;
  for (std::size_t r = 1; r <= items.size() && !result; ++r) {
    for_each_combination(items, r, [&](const VertexSet& y) {
      if (!is_p5_free(g.induced(y))) return false;
      const VertexSet x = f.minus(y);
      BipartitionInstance inst = make_instance(g.without(x), y, static_cast<int>(y.size()) - 1);
      if (auto found = disjoint_r(inst, observer)) {
        result = x.unite(*found);
        return true;
      }
      return false;
    });
  }
  return result;
}

std::optional<VertexSet> solve_5pvc(const Graph& g, int k, SearchObserver* observer) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (is_p5_free(g)) return VertexSet{};
  if (k == 0) return std::nullopt;

  const VertexSet all = g.vertices();
  VertexSet active;
  VertexSet solution;
  for (VertexId v : all) {
    active.insert(v);
    solution.insert(v);
    if (static_cast<int>(solution.size()) == k + 1) {
      auto smaller = compress(g.induced(active), solution, k, observer);
      if (!smaller) return std::nullopt;
      solution = std::move(*smaller);
    }
  }
  return solution;
}

MinResult min_5pvc(const Graph& g, SearchObserver* observer) {
  for (int k = 0;; ++k) {
    if (auto f = solve_5pvc(g, k, observer)) return {k, std::move(*f)};
  }
}

}  // namespace pvc5

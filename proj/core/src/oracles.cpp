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

#include "pvc5/oracles.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pvc5/p5.hpp"

namespace pvc5 {
namespace {

std::optional<VertexSet> branch_on_p5(const Graph& g, int k, int depth, SolveStats* stats) {
  if (stats) {
    ++stats->nodes;
    stats->max_depth = std::max<std::uint64_t>(stats->max_depth, static_cast<std::uint64_t>(depth));
  }
  const auto p = find_p5(g);
  if (!p) {
    if (stats) ++stats->leaves;
    return VertexSet{};
  }
  if (k == 0) {
    if (stats) ++stats->leaves;
    return std::nullopt;
  }
  for (VertexId v : *p) {
    if (auto rest = branch_on_p5(g.without(VertexSet{v}), k - 1, depth + 1, stats)) {
      rest->insert(v);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace

OracleResult brute_force_min_pvc(const Graph& g) {
  if (g.alive_count() > kBruteForceLimit) {
    throw OracleSizeError("brute force is limited to " + std::to_string(kBruteForceLimit) +
                          " vertices (graph has " + std::to_string(g.alive_count()) +
                          "); use the iterative compression solver");
  }
  const VertexSet all = g.vertices();
  const std::size_t n = all.size();
  OracleResult out;
  for (std::size_t r = 0; r <= n; ++r) {
    // Lexicographic r-combinations of the alive ids.
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      std::vector<VertexId> pick(r);
      for (std::size_t i = 0; i < r; ++i) pick[i] = all[idx[i]];
      VertexSet candidate(std::move(pick));
      ++out.subsets_examined;
      if (is_p5_free(g.without(candidate))) {
        out.min_size = static_cast<int>(r);
        out.witness = std::move(candidate);
        return out;
      }
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // Unreachable: removing every vertex always works.
  return out;
}

std::optional<VertexSet> trivial_branching(const Graph& g, int k, SolveStats* stats) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  return branch_on_p5(g, k, 0, stats);
}

bool verify_solution(const Graph& g, const VertexSet& f, int k) {
  for (VertexId v : f) {
    if (!g.is_alive(v)) throw GraphError("solution names unknown vertex " + std::to_string(v));
  }
  return static_cast<int>(f.size()) <= k && is_p5_free(g.without(f));
}

}  // namespace pvc5

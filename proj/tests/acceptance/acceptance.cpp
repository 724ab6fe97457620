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

// Runs the eight acceptance checks and prints one line per check:
//   AC<n> PASS|FAIL <summary>
// Exit status is 0 only if every check passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pvc5/branching.hpp"
#include "pvc5/compression.hpp"
#include "pvc5/disjoint.hpp"
#include "pvc5/generators.hpp"
#include "pvc5/oracles.hpp"
#include "pvc5/p5.hpp"
#include "pvc5/rules.hpp"
#include "pvc5/stats.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace pvc5 {
namespace {

constexpr int kSuite1Graphs = 600;
constexpr int kSuite2Instances = 240;
constexpr int kRandomSelectCalls = 10000;

struct Result {
  bool pass = true;
  std::string summary;
};

// Shared across checks: instrumentation of every disjoint run in suites 1-2
// and every "no rule applicable" seen anywhere.
struct Ledger {
  StatsCollector suite1;
  StatsCollector suite2;
  std::uint64_t invariant_violations = 0;
  std::string first_violation;
  std::uint64_t select_calls = 0;
  std::vector<int> minima;  // per suite-1 graph
};

void note_violation(Ledger& ledger, const std::string& where, const std::exception& e) {
  if (ledger.invariant_violations++ == 0) ledger.first_violation = where + ": " + e.what();
}

Result ac1(Ledger& ledger) {
  int mismatches = 0, bad_witness = 0;
  ledger.minima.assign(kSuite1Graphs, -1);
  for (int i = 0; i < kSuite1Graphs; ++i) {
    const Graph g = testing::suite_graph(i);
    const int expected = brute_force_min_pvc(g).min_size;
    if (expected != testing::min_pvc_size(g)) ++mismatches;  // two oracles, one answer
    try {
      const MinResult m = min_5pvc(g, &ledger.suite1);
      ledger.minima[i] = m.size;
      if (m.size != expected) ++mismatches;
      if (!verify_solution(g, m.witness, m.size)) ++bad_witness;
    } catch (const InvariantViolation& e) {
      note_violation(ledger, "suite1 graph " + std::to_string(i), e);
      ++mismatches;
    }
  }
  return {mismatches == 0 && bad_witness == 0,
          std::to_string(kSuite1Graphs) + " graphs, " + std::to_string(mismatches) +
              " size mismatches, " + std::to_string(bad_witness) + " bad witnesses"};
}

Result ac2(Ledger& ledger) {
  int built = 0, mismatches = 0, yes = 0;
  for (std::uint64_t seed = 0; built < kSuite2Instances; ++seed) {
    const auto inst = testing::random_instance(seed);
    if (!inst) continue;
    ++built;
    const bool expected = testing::feasible(*inst);
    yes += expected ? 1 : 0;
    try {
      const auto found = disjoint_r(*inst, &ledger.suite2);
      if (found.has_value() != expected) ++mismatches;
    } catch (const InvariantViolation& e) {
      note_violation(ledger, "suite2 seed " + std::to_string(seed), e);
      ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(built) + " instances (" + std::to_string(yes) +
                               " feasible), " + std::to_string(mismatches) + " mismatches"};
}

Result ac3() {
  int bad = 0;
  double worst = 0.0;
  const auto table = verify_factor_table();
  for (const auto& e : table) {
    if (!e.matches) ++bad;
    if (std::abs(e.computed_lambda - testing::newton_factor(e.vector)) > 1e-9) ++bad;
    worst = std::max(worst, e.computed_lambda);
  }
  const bool worst_is_3 = std::abs(worst - 3.0) < 1e-9;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu rows, %d mismatches, worst factor %.6f", table.size(),
                bad, worst);
  return {bad == 0 && worst_is_3, buf};
}

Result ac4(const Ledger& ledger) {
  const std::uint64_t runs = ledger.suite1.runs() + ledger.suite2.runs();
  const std::uint64_t violations =
      ledger.suite1.leaf_bound_violations() + ledger.suite2.leaf_bound_violations();
  const double worst = std::max(ledger.suite1.worst_leaf_ratio(), ledger.suite2.worst_leaf_ratio());
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu disjoint runs, %llu violations, worst leaves/3^k %.4f",
                static_cast<unsigned long long>(runs), static_cast<unsigned long long>(violations),
                worst);
  return {violations == 0 && runs > 0, buf};
}

// Random descents through the search tree of suite-2 style instances; every
// node asks select_rule for a decision.
void random_select_calls(Ledger& ledger) {
  std::uint64_t seed = 1u << 20;
  while (ledger.select_calls < kRandomSelectCalls) {
    auto inst = testing::random_instance(seed++);
    if (!inst) continue;
    std::mt19937_64 rng(seed);
    for (int depth = 0; depth < 16; ++depth) {
      RuleFiring f;
      try {
        ++ledger.select_calls;
        f = select_rule(*inst);
      } catch (const InvariantViolation& e) {
        note_violation(ledger, "random walk seed " + std::to_string(seed - 1), e);
        break;
      }
      if (std::holds_alternative<Halt>(f.decision)) break;
      if (const auto* r = std::get_if<Reduce>(&f.decision)) {
        *inst = apply_reduce(*inst, *r);
        continue;
      }
      std::vector<VertexSet> fits;
      for (const auto& x : std::get<Branch>(f.decision).branches) {
        if (static_cast<int>(x.size()) <= inst->budget) fits.push_back(x);
      }
      if (fits.empty()) break;
      *inst = apply_branch(*inst, fits[rng() % fits.size()]);
    }
  }
}

Result ac5(Ledger& ledger) {
  random_select_calls(ledger);
  std::string summary = std::to_string(ledger.select_calls) + " random select calls plus " +
                        std::to_string(ledger.suite1.stats().nodes + ledger.suite2.stats().nodes) +
                        " search nodes, " + std::to_string(ledger.invariant_violations) +
                        " with no applicable rule";
  if (ledger.invariant_violations > 0) summary += " (first: " + ledger.first_violation + ")";
  return {ledger.invariant_violations == 0, summary};
}

Result ac6() {
  int connected = 0, free_ok = 0, rejected = 0, bad = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
      for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) pairs.emplace_back(u, v);
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) edges.push_back(pairs[i]);
      }
      const Graph g = build_graph(n, edges);
      if (connected_components(g).size() != 1) continue;
      ++connected;
      const VertexSet all = g.vertices();
      if (testing::has_p5(g)) {
        try {
          (void)classify_component(g, all);
          ++bad;
        } catch (const ClassificationError&) {
          ++rejected;
        }
        continue;
      }
      try {
        const ComponentClass cls = classify_component(g, all);
        if (reconstruct_edges(cls) == g.edges() && class_vertices(cls) == all) {
          ++free_ok;
        } else {
          ++bad;
        }
      } catch (const ClassificationError&) {
        ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(connected) + " connected labelled graphs on n<=6: " +
                        std::to_string(free_ok) + " P5-free classified, " +
                        std::to_string(rejected) + " rejected, " + std::to_string(bad) +
                        " failures"};
}

Result ac7() {
  int fired = 0, wrong = 0;
  for (RuleId rule : leaf_rule_ids()) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      try {
        const RuleFiring f = select_rule(make_gadget(rule, seed).instance());
        (f.rule == rule ? fired : wrong)++;
      } catch (const std::exception&) {
        ++wrong;
      }
    }
  }
  return {wrong == 0, std::to_string(leaf_rule_ids().size()) + " leaf rules x 8 seeds, " +
                          std::to_string(fired) + " fired as named, " + std::to_string(wrong) +
                          " wrong"};
}

Result ac8(const Ledger& ledger) {
  int disagreements = 0, checks = 0;
  for (int i = 0; i < kSuite1Graphs; ++i) {
    const Graph g = testing::suite_graph(i);
    const int m = ledger.minima[i];
    if (m < 0) continue;
    for (int k : {m - 1, m}) {
      if (k < 0) continue;
      ++checks;
      if (trivial_branching(g, k).has_value() != solve_5pvc(g, k).has_value()) ++disagreements;
    }
  }
  // Node counts at k = optimum on gadget graphs, reported only.
  StatsCollector ic;
  SolveStats trivial;
  for (RuleId rule : leaf_rule_ids()) {
    const Graph g = make_gadget(rule).graph;
    const int k = min_5pvc(g).size;
    (void)solve_5pvc(g, k, &ic);
    (void)trivial_branching(g, k, &trivial);
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d feasibility checks, %d disagreements; gadget graphs: ic %llu disjoint "
                "nodes, trivial %llu nodes",
                checks, disagreements, static_cast<unsigned long long>(ic.stats().nodes),
                static_cast<unsigned long long>(trivial.nodes));
  return {disagreements == 0, buf};
}

}  // namespace
}  // namespace pvc5

int main() {
  using pvc5::Result;
  pvc5::Ledger ledger;
  const std::vector<std::pair<const char*, std::function<Result()>>> checks = {
      {"AC1", [&] { return pvc5::ac1(ledger); }},
      {"AC2", [&] { return pvc5::ac2(ledger); }},
      {"AC3", [] { return pvc5::ac3(); }},
      {"AC4", [&] { return pvc5::ac4(ledger); }},
      {"AC5", [&] { return pvc5::ac5(ledger); }},
      {"AC6", [] { return pvc5::ac6(); }},
      {"AC7", [] { return pvc5::ac7(); }},
      {"AC8", [&] { return pvc5::ac8(ledger); }},
  };
  bool all = true;
  for (const auto& [name, check] : checks) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s %s [%.2fs]\n", name, r.pass ? "PASS" : "FAIL", r.summary.c_str(), secs);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

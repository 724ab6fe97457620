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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvc5/branching.hpp"
#include "pvc5/compression.hpp"
#include "pvc5/generators.hpp"
#include "pvc5/graph_io.hpp"
#include "pvc5/oracles.hpp"
#include "pvc5/stats.hpp"

namespace pvc5::cli {
namespace {

using nlohmann::json;

// Input problems (bad file, bad ids, size guard) map to kExitUsage.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string format = "auto";
  std::string algo = "ic";
  std::string stats_path;
  std::string solution;
  int k = -1;

  std::string gen_kind;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string rule;
  std::string out_path;
  std::string out_format = "edgelist";

  bool check = false;
  bool json_out = false;
};

GraphFormat format_or_throw(const std::string& name) {
  auto f = parse_format_name(name);
  if (!f) throw InputError("unknown format '" + name + "'");
  return *f;
}

Graph load(const Options& o) {
  try {
    return read_graph_file(o.file, format_or_throw(o.format));
  } catch (const ParseError& e) {
    throw InputError(o.file + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(o.file + ": " + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

std::string ids_line(const VertexSet& s) {
  std::ostringstream os;
  os << "YES " << s.size();
  for (VertexId v : s) os << ' ' << v;
  return os.str();
}

VertexSet parse_solution(const std::string& text) {
  std::vector<VertexId> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = tok.find_last_not_of(" \t");
    const std::string_view t(tok.data() + first, last - first + 1);
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw InputError("bad vertex id '" + std::string(t) + "' in --solution");
    }
    ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

struct Outcome {
  std::optional<VertexSet> solution;
  int k = 0;
  SolveStats stats;
  std::uint64_t subsets_examined = 0;
};

std::optional<VertexSet> trivial_search(const Graph& g, int k, SolveStats& stats) {
  return trivial_branching(g, k, &stats);
}

Outcome run_decision(const Graph& g, int k, const std::string& algo) {
  Outcome out;
  out.k = k;
  if (algo == "ic") {
    StatsCollector collector;
    out.solution = solve_5pvc(g, k, &collector);
    out.stats = collector.stats();
  } else if (algo == "trivial") {
    out.solution = trivial_search(g, k, out.stats);
  } else {
    OracleResult r;
    try {
      r = brute_force_min_pvc(g);
    } catch (const OracleSizeError& e) {
      throw InputError(e.what());
    }
    out.subsets_examined = r.subsets_examined;
    if (r.min_size <= k) out.solution = r.witness;
  }
  return out;
}

Outcome run_min(const Graph& g, const std::string& algo) {
  if (algo == "ic") {
    Outcome out;
    StatsCollector collector;
    MinResult r = min_5pvc(g, &collector);
    out.solution = r.witness;
    out.k = r.size;
    out.stats = collector.stats();
    return out;
  }
  if (algo == "bruteforce") return run_decision(g, static_cast<int>(g.alive_count()), algo);
  Outcome out;
  for (int k = 0;; ++k) {
    out.solution = trivial_search(g, k, out.stats);
    if (out.solution) {
      out.k = k;
      return out;
    }
  }
}

void write_stats(const Options& o, const Outcome& r, double wall_ms) {
  json per_rule = json::object();
  for (const auto& [rule, count] : r.stats.per_rule) per_rule[std::string(rule_name(rule))] = count;
  json report = {
      {"answer", r.solution ? "yes" : "no"},
      {"k", r.k},
      {"algo", o.algo},
      {"nodes", r.stats.nodes},
      {"leaves", r.stats.leaves},
      {"pruned", r.stats.pruned},
      {"max_depth", r.stats.max_depth},
      {"per_rule", per_rule},
      {"wall_ms", wall_ms},
  };
  if (r.solution) report["solution"] = r.solution->ids();
  if (o.algo == "bruteforce") report["subsets_examined"] = r.subsets_examined;
  std::ofstream f(o.stats_path);
  if (!f) throw InputError("cannot write stats file " + o.stats_path);
  f << report.dump(2) << '\n';
}

int report(const Options& o, const Graph& g, const Outcome& r, double wall_ms,
           std::ostream& out, std::ostream& err) {
  if (r.solution && !verify_solution(g, *r.solution, r.k)) {
    err << "internal error: solver returned an invalid solution " << *r.solution << '\n';
    return kExitInternal;
  }
  out << (r.solution ? ids_line(*r.solution) : std::string("NO")) << '\n';
  if (!o.stats_path.empty()) write_stats(o, r, wall_ms);
  return kExitOk;
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.k < 0) throw InputError("--k must be non-negative");
  const Graph g = load(o);
  Outcome r;
  const double ms = timed([&] { r = run_decision(g, o.k, o.algo); });
  return report(o, g, r, ms, out, err);
}

int cmd_min(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load(o);
  Outcome r;
  const double ms = timed([&] { r = run_min(g, o.algo); });
  return report(o, g, r, ms, out, err);
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.k < 0) throw InputError("--k must be non-negative");
  const Graph g = load(o);
  const VertexSet f = parse_solution(o.solution);
  for (VertexId v : f) {
    if (!g.is_alive(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
  }
  out << (verify_solution(g, f, o.k) ? ids_line(f) : std::string("NO")) << '\n';
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const GraphFormat fmt = format_or_throw(o.out_format);
  if (fmt == GraphFormat::kAuto) throw InputError("--format must be edgelist or dimacs");
  std::string text;
  if (o.gen_kind == "gnp") {
    if (!(o.p >= 0.0 && o.p <= 1.0)) throw InputError("--p must be in [0,1]");
    text = emit_graph(gnp_graph(o.n, o.p, o.seed), fmt);
  } else if (o.gen_kind == "path") {
    text = emit_graph(path_graph(o.n), fmt);
  } else if (o.gen_kind == "cycle") {
    text = emit_graph(cycle_graph(o.n), fmt);
  } else {
    const auto id = parse_rule_id(o.rule);
    if (!id) throw InputError("unknown rule '" + o.rule + "'");
    Gadget gadget;
    try {
      gadget = make_gadget(*id, o.seed);
    } catch (const UnknownGadget& e) {
      throw InputError(e.what());
    }
    const char* c = fmt == GraphFormat::kDimacs ? "c" : "#";
    const VertexId shift = fmt == GraphFormat::kDimacs ? 1 : 0;
    std::ostringstream os;
    os << c << " gadget " << rule_name(gadget.rule) << " seed " << o.seed << '\n';
    os << c << " red";
    for (VertexId w : gadget.red) os << ' ' << w + shift;
    os << '\n' << c << " k " << gadget.budget << '\n';
    os << emit_graph(gadget.graph, fmt);
    text = os.str();
  }
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path);
    if (!f) throw InputError("cannot write " + o.out_path);
    f << text;
  }
  return kExitOk;
}

std::string vector_text(const BranchVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

BranchVector rule_hypothesis(RuleId rule) {
  for (const auto& row : rule_branch_vectors()) {
    if (row.rule == rule) return row.hypothesis_vector;
  }
  return {};
}

int cmd_factors(const Options& o, std::ostream& out) {
  const auto table = verify_factor_table();
  bool all_match = true;
  double worst = 0.0;
  for (const auto& e : table) {
    all_match = all_match && e.matches;
    worst = std::max(worst, e.computed_lambda);
  }
  if (o.json_out) {
    json rows = json::array();
    for (const auto& e : table) {
      rows.push_back({{"rule", std::string(rule_name(e.rule))},
                      {"vector", e.vector},
                      {"computed", e.computed_lambda},
                      {"rounded", e.rounded_lambda},
                      {"table", e.table_lambda},
                      {"residual", e.residual},
                      {"hypothesis", e.hypothesis_lambda},
                      {"matches", e.matches}});
    }
    out << json{{"rows", rows}, {"worst", worst}, {"all_match", all_match}}.dump(2) << '\n';
  } else {
    out << std::left << std::setw(10) << "rule" << std::setw(14) << "vector" << std::setw(11)
        << "computed" << std::setw(9) << "rounded" << std::setw(9) << "table"
        << "match\n";
    out << std::fixed;
    for (const auto& e : table) {
      out << std::setw(10) << rule_name(e.rule) << std::setw(14) << vector_text(e.vector)
          << std::setprecision(6) << std::setw(11) << e.computed_lambda << std::setprecision(3)
          << std::setw(9) << e.rounded_lambda << std::setw(9) << e.table_lambda
          << (e.matches ? "yes" : "NO") << '\n';
    }
    out << "worst " << std::setprecision(6) << worst << '\n';
    out.unsetf(std::ios::fixed);
  }
  if (!o.json_out) {
    out << std::fixed << std::setprecision(3);
    for (const auto& e : table) {
      if (std::abs(e.hypothesis_lambda - e.computed_lambda) > 1e-9) {
        out << "note: " << rule_name(e.rule) << " hypothesis allows "
            << vector_text(rule_hypothesis(e.rule)) << ", factor " << e.hypothesis_lambda << '\n';
      }
    }
    out.unsetf(std::ios::fixed);
    for (RuleId r : branching_rules_without_row()) {
      out << "note: " << rule_name(r) << " branches but has no table row\n";
    }
  }
  if (o.check && !all_match) return kExitCheckFailed;
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"5-path vertex cover solver"};
  app.name(argv.empty() ? "pvc5" : argv[0]);
  app.require_subcommand(1);

  const std::vector<std::string> algos{"ic", "trivial", "bruteforce"};

  auto* solve = app.add_subcommand("solve", "decide whether a 5-PVC of size <= k exists");
  solve->add_option("--k", o.k, "budget")->required();
  solve->add_option("--algo", o.algo)->check(CLI::IsMember(algos));
  solve->add_option("--stats", o.stats_path, "write a JSON run report");
  solve->add_option("--format", o.format, "auto, edgelist or dimacs");
  solve->add_option("file", o.file)->required();

  auto* min = app.add_subcommand("min", "smallest 5-PVC");
  min->add_option("--algo", o.algo)->check(CLI::IsMember(algos));
  min->add_option("--stats", o.stats_path, "write a JSON run report");
  min->add_option("--format", o.format);
  min->add_option("file", o.file)->required();

  auto* verify = app.add_subcommand("verify", "check a candidate solution");
  verify->add_option("--solution", o.solution, "comma separated ids")->required();
  verify->add_option("--k", o.k)->required();
  verify->add_option("--format", o.format);
  verify->add_option("file", o.file)->required();

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->require_subcommand(1);
  gen->add_option("--format", o.out_format, "edgelist or dimacs");
  gen->add_option("--out", o.out_path);
  auto* gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n,p)");
  gnp->add_option("--n", o.n)->required();
  gnp->add_option("--p", o.p)->required();
  gnp->add_option("--seed", o.seed);
  auto* path = gen->add_subcommand("path", "path on n vertices");
  path->add_option("--n", o.n)->required();
  auto* cycle = gen->add_subcommand("cycle", "cycle on n vertices");
  cycle->add_option("--n", o.n)->required();
  auto* gadget = gen->add_subcommand("gadget", "instance on which a given rule fires first");
  gadget->add_option("--rule", o.rule)->required();
  gadget->add_option("--seed", o.seed);
  for (auto* sub : {gnp, path, cycle, gadget}) {
    sub->fallthrough();
    sub->callback([&o, sub] { o.gen_kind = sub->get_name(); });
  }

  auto* factors = app.add_subcommand("factors", "branching factor table");
  factors->add_flag("--check", o.check, "exit 1 unless every row matches");
  factors->add_flag("--json", o.json_out);

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  if (raw.empty()) raw.push_back("pvc5");
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (min->parsed()) return cmd_min(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    return cmd_factors(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace pvc5::cli

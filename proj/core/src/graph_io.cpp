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

#include "pvc5/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace pvc5 {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Visits (line number, content) for every line.
template <typename Visit>
void for_each_line(std::string_view text, Visit&& visit) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    visit(++number, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

void add_checked(Graph& g, long long u, long long v, long long n, int line) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw ParseError(line, "vertex id out of range [0," + std::to_string(n) + ")");
  }
  if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u));
  g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
}

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  long long n = 0;
  long long expected = 0;
  long long seen = 0;
  int last_line = 0;
  for_each_line(text, [&](int number, std::string_view raw) {
    last_line = number;
    std::string_view line = raw.substr(0, raw.find('#'));
    const auto tok = split_ws(line);
    if (tok.empty()) return;
    if (tok.size() != 2) {
      throw ParseError(number, "expected two integers, got " + std::to_string(tok.size()) +
                                   " fields");
    }
    const long long a = to_int(tok[0], number);
    const long long b = to_int(tok[1], number);
    if (!g) {
      if (a < 0 || b < 0) throw ParseError(number, "header 'n m' must be non-negative");
      n = a;
      expected = b;
      g.emplace(static_cast<std::size_t>(n));
      return;
    }
    if (++seen > expected) {
      throw ParseError(number, "more edge lines than the " + std::to_string(expected) +
                                   " announced in the header");
    }
    add_checked(*g, a, b, n, number);
  });
  if (!g) throw ParseError(last_line, "missing 'n m' header");
  if (seen != expected) {
    throw ParseError(last_line, "header announces " + std::to_string(expected) +
                                    " edges but " + std::to_string(seen) + " were given");
  }
  return std::move(*g);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<Graph> g;
  long long n = 0;
  int last_line = 0;
  for_each_line(text, [&](int number, std::string_view line) {
    last_line = number;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (g) throw ParseError(number, "duplicate 'p' line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(number, "malformed header, expected 'p edge n m'");
      }
      n = to_int(tok[2], number);
      if (n < 0 || to_int(tok[3], number) < 0) {
        throw ParseError(number, "header counts must be non-negative");
      }
      g.emplace(static_cast<std::size_t>(n));
      return;
    }
    if (tok[0] == "e") {
      if (!g) throw ParseError(number, "edge line before the 'p' header");
      if (tok.size() != 3) throw ParseError(number, "malformed edge line, expected 'e u v'");
      add_checked(*g, to_int(tok[1], number) - 1, to_int(tok[2], number) - 1, n, number);
      return;
    }
    throw ParseError(number, "unknown line type '" + std::string(tok[0]) + "'");
  });
  if (!g) throw ParseError(last_line, "missing 'p edge n m' header");
  return std::move(*g);
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::optional<GraphFormat> parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  return std::nullopt;
}

GraphFormat detect_format(std::string_view text) {
  GraphFormat found = GraphFormat::kEdgeList;
  bool decided = false;
  for_each_line(text, [&](int, std::string_view line) {
    if (decided) return;
    const auto tok = split_ws(line);
    if (tok.empty()) return;
    decided = true;
    if (tok[0] == "p" || tok[0] == "c") found = GraphFormat::kDimacs;
  });
  return found;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = detect_format(text);
  return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  std::ostringstream os;
  const auto edges = g.edges();
  if (format == GraphFormat::kDimacs) {
    os << "p edge " << g.capacity() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    os << g.capacity() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  }
  return os.str();
}

}  // namespace pvc5

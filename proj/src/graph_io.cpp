// Copyright 2026 The posemi Authors
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

#include <algorithm>
#include <sstream>

#include "posemi/graph.hpp"

namespace posemi {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

VertexId ensure_vertex(SimpleGraph& g, const std::string& name) {
  if (auto id = g.find(name)) return *id;
  return g.add_vertex(name);
}

std::string dot_id(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  SimpleGraph g;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& what) -> GraphError {
      return GraphError("line " + std::to_string(line_no) + ": " + what);
    };
    if (tokens.size() != 2) throw fail("expected \"u v\" or \"vertex w\"");
    if (tokens[0] == "vertex") {
      if (g.find(tokens[1])) throw fail("vertex '" + tokens[1] + "' redeclared");
      g.add_vertex(tokens[1]);
      continue;
    }
    if (tokens[0] == tokens[1]) throw fail("loop at '" + tokens[0] + "'");
    const VertexId u = ensure_vertex(g, tokens[0]);
    const VertexId v = ensure_vertex(g, tokens[1]);
    if (g.has_edge(u, v)) {
      throw fail("duplicate edge '" + tokens[0] + " " + tokens[1] + "'");
    }
    g.add_edge(u, v);
    if (end == text.size()) break;
  }
  return g;
}

std::string format_graph(const SimpleGraph& g) {
  std::ostringstream out;
  for (const auto& name : g.names()) out << "vertex " << name << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << g.name(u) << ' ' << g.name(v) << '\n';
  }
  return out.str();
}

std::string emit_dot(const SimpleGraph& g, std::string_view name) {
  std::vector<std::string> vertices = g.names();
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) {
    auto a = g.name(u), b = g.name(v);
    if (b < a) std::swap(a, b);
    edges.emplace_back(std::move(a), std::move(b));
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& v : vertices) out << "  " << dot_id(v) << ";\n";
  for (const auto& [a, b] : edges) {
    out << "  " << dot_id(a) << " -- " << dot_id(b) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace posemi

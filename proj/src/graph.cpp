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

#include "posemi/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace posemi {

SimpleGraph::SimpleGraph(std::vector<std::string> vertex_names) {
  for (auto& name : vertex_names) add_vertex(std::move(name));
}

VertexId SimpleGraph::add_vertex(std::string name) {
  if (index_.contains(name)) {
    throw GraphError("duplicate vertex '" + name + "'");
  }
  const auto id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  neighbors_.emplace_back();
  grow_adjacency();
  return id;
}

void SimpleGraph::grow_adjacency() {
  const std::size_t n = names_.size();
  std::vector<char> next(n * n, 0);
  const std::size_t old = n - 1;
  for (std::size_t i = 0; i < old; ++i) {
    for (std::size_t j = 0; j < old; ++j) {
      next[i * n + j] = adjacency_[i * old + j];
    }
  }
  adjacency_ = std::move(next);
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  const std::size_t n = names_.size();
  if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loop at vertex '" + names_[u] + "'");
  if (has_edge(u, v)) {
    throw GraphError("duplicate edge '" + names_[u] + " " + names_[v] + "'");
  }
  adjacency_[u * n + v] = 1;
  adjacency_[v * n + u] = 1;
  auto insert_sorted = [](std::vector<VertexId>& list, VertexId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(neighbors_[u], v);
  insert_sorted(neighbors_[v], u);
  ++num_edges_;
}

void SimpleGraph::add_edge(std::string_view u, std::string_view v) {
  const auto a = find(u);
  const auto b = find(v);
  if (!a || !b) throw GraphError("edge refers to an undeclared vertex");
  add_edge(*a, *b);
}

std::optional<VertexId> SimpleGraph::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < names_.size(); ++u) {
    for (VertexId v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const VertexId> vertices) const {
  SimpleGraph out;
  for (VertexId v : vertices) out.add_vertex(names_.at(v));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) {
        out.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return out;
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  return a.names_ == b.names_ && a.adjacency_ == b.adjacency_;
}

std::vector<VertexId> end_vertices(const SimpleGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> bridges(const SimpleGraph& g) {
  // Tarjan low-link, iterative to survive long paths.
  const std::size_t n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<VertexId, VertexId>> out;
  int timer = 0;
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const VertexId w = nbrs[f.next++];
        if (f.v != root && w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) {
            out.emplace_back(std::min(p, done.v), std::max(p, done.v));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph core(const SimpleGraph& g) {
  const auto cut = bridges(g);
  std::vector<char> on_cycle(g.num_vertices(), 0);
  std::vector<std::pair<VertexId, VertexId>> cycle_edges;
  for (const auto& e : g.edges()) {
    if (std::binary_search(cut.begin(), cut.end(), e)) continue;
    on_cycle[e.first] = on_cycle[e.second] = 1;
    cycle_edges.push_back(e);
  }
  SimpleGraph out;
  std::vector<VertexId> renumber(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (on_cycle[v]) renumber[v] = out.add_vertex(g.name(v));
  }
  for (const auto& [u, v] : cycle_edges) out.add_edge(renumber[u], renumber[v]);
  return out;
}

std::map<VertexId, std::vector<VertexId>> horns(const SimpleGraph& g) {
  std::map<VertexId, std::vector<VertexId>> out;
  for (VertexId v : end_vertices(g)) out[g.neighbors(v).front()].push_back(v);
  return out;
}

bool is_triangle_free(const SimpleGraph& g) {
  for (const auto& [u, v] : g.edges()) {
    for (VertexId w : g.neighbors(u)) {
      if (w != v && g.has_edge(v, w)) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> two_coloring(const SimpleGraph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (VertexId w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const SimpleGraph& g) { return two_coloring(g).has_value(); }

bool is_connected(const SimpleGraph& g) {
  if (g.empty()) return false;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

bool is_tree(const SimpleGraph& g) {
  return is_connected(g) && g.num_edges() + 1 == g.num_vertices();
}

namespace {

std::string indexed(std::string_view prefix, std::size_t i) {
  return std::string(prefix) + std::to_string(i);
}

}  // namespace

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(indexed("a", i));
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph complete_bipartite_graph(std::size_t r, std::size_t s) {
  SimpleGraph g;
  for (std::size_t i = 1; i <= r; ++i) g.add_vertex(indexed("x", i));
  for (std::size_t k = 1; k <= s; ++k) g.add_vertex(indexed("y", k));
  for (VertexId i = 0; i < r; ++i) {
    for (VertexId k = 0; k < s; ++k) g.add_edge(i, static_cast<VertexId>(r + k));
  }
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(indexed("p", i));
  for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  SimpleGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(indexed("c", i));
  for (VertexId i = 0; i < n; ++i) {
    g.add_edge(i, static_cast<VertexId>((i + 1) % n));
  }
  return g;
}

SimpleGraph cbh_graph(std::size_t x, std::size_t u, std::size_t y) {
  SimpleGraph g;
  const VertexId v = g.add_vertex("v");
  std::vector<VertexId> xs, us, ys;
  for (std::size_t i = 1; i <= x; ++i) xs.push_back(g.add_vertex(indexed("x", i)));
  for (std::size_t i = 1; i <= y; ++i) ys.push_back(g.add_vertex(indexed("y", i)));
  for (std::size_t i = 1; i <= u; ++i) us.push_back(g.add_vertex(indexed("u", i)));
  for (VertexId a : us) {
    for (VertexId b : xs) g.add_edge(a, b);
    g.add_edge(a, v);
  }
  for (VertexId b : ys) g.add_edge(v, b);
  return g;
}

SimpleGraph clique_with_horns(std::size_t n,
                              const std::vector<std::size_t>& horn_sizes) {
  if (horn_sizes.size() > n) {
    throw GraphError("more horns than clique vertices");
  }
  SimpleGraph g = complete_graph(n);
  // Horn letters follow the constructions: x at a1, y at a2, z at a3.
  static constexpr std::string_view kLetters[] = {"x", "y", "z"};
  for (std::size_t h = 0; h < horn_sizes.size(); ++h) {
    const std::string prefix =
        h < 3 ? std::string(kLetters[h]) : "h" + std::to_string(h + 1) + "_";
    for (std::size_t k = 1; k <= horn_sizes[h]; ++k) {
      const VertexId e = g.add_vertex(indexed(prefix, k));
      g.add_edge(static_cast<VertexId>(h), e);
    }
  }
  return g;
}

SimpleGraph petersen_graph() {
  SimpleGraph g;
  for (int i = 0; i < 10; ++i) g.add_vertex(indexed("q", static_cast<std::size_t>(i)));
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace posemi

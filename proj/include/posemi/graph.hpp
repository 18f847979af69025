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

#ifndef POSEMI_GRAPH_HPP_
#define POSEMI_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace posemi {

using VertexId = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite undirected graph without loops or multiple edges. Vertices carry
// names and are addressed by their insertion index.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> vertex_names);

  VertexId add_vertex(std::string name);
  // Throws GraphError on a loop, a duplicate edge or an unknown endpoint.
  void add_edge(VertexId u, VertexId v);
  void add_edge(std::string_view u, std::string_view v);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return names_.empty(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  bool has_edge(VertexId u, VertexId v) const {
    return adjacency_[static_cast<std::size_t>(u) * names_.size() + v] != 0;
  }
  std::size_t degree(VertexId v) const { return neighbors_[v].size(); }
  // Sorted ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return neighbors_[v];
  }
  // Every edge once as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // Subgraph induced on `vertices`, renumbered in the given order.
  SimpleGraph induced(std::span<const VertexId> vertices) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);

 private:
  void grow_adjacency();

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<char> adjacency_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::size_t num_edges_ = 0;
};

// Degree-1 vertices, ascending.
std::vector<VertexId> end_vertices(const SimpleGraph& g);

// Union of all cycles: the vertices incident to an edge that lies on a
// cycle, together with exactly those edges. Empty for forests.
SimpleGraph core(const SimpleGraph& g);

// Edges lying on no cycle, as (u, v) with u < v.
std::vector<std::pair<VertexId, VertexId>> bridges(const SimpleGraph& g);

// End vertices grouped by their unique neighbour. A K2 component contributes
// each endpoint as the other's horn.
std::map<VertexId, std::vector<VertexId>> horns(const SimpleGraph& g);

bool is_triangle_free(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);

// Two-colouring per component (0/1), or nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const SimpleGraph& g);

// Named families. Vertex names match the element names of the constructions.
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite_graph(std::size_t r, std::size_t s);
SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
// X-U-v-Y: X and U complete bipartite, v joined to all of U, horn Y at v.
SimpleGraph cbh_graph(std::size_t x, std::size_t u, std::size_t y);
// K_n with horns of the given sizes attached to a1, a2, ... in order.
SimpleGraph clique_with_horns(std::size_t n,
                              const std::vector<std::size_t>& horn_sizes);
SimpleGraph petersen_graph();

// Edge-list text: one "u v" edge per line, "vertex w" declares a vertex
// (needed for isolated ones), '#' starts a comment. Vertices are numbered
// in order of first appearance. Throws GraphError with the line number.
SimpleGraph parse_graph(std::string_view text);
// Inverse of parse_graph: all vertices declared first, then edges.
std::string format_graph(const SimpleGraph& g);
// Graphviz DOT; vertices then edges, each sorted by name.
std::string emit_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace posemi

#endif  // POSEMI_GRAPH_HPP_

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

// Independent reference implementations used as test oracles. None of them
// shares code with the library beyond the data types.

#ifndef POSEMI_TESTS_ORACLES_HPP_
#define POSEMI_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "posemi/graph.hpp"
#include "posemi/posemiring.hpp"
#include "posemi/ring.hpp"

namespace oracle {

using posemi::ElementId;
using posemi::SimpleGraph;
using posemi::VertexId;

// Plain adjacency matrix, vertex i named "v<i>".
struct Adj {
  int n = 0;
  std::vector<std::vector<bool>> e;
  explicit Adj(int size) : n(size), e(size, std::vector<bool>(size, false)) {}
  explicit Adj(const SimpleGraph& g) : Adj(static_cast<int>(g.num_vertices())) {
    for (const auto& [u, v] : g.edges()) e[u][v] = e[v][u] = true;
  }
  SimpleGraph graph() const {
    SimpleGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (e[i][j]) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
    return g;
  }
};

// Edge mask under the vertex relabeling perm.
inline std::uint32_t permuted_mask(int n, std::uint32_t mask,
                                   const std::vector<int>& perm) {
  std::uint32_t out = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (!(mask >> bit & 1u)) continue;
      int a = std::min(perm[i], perm[j]), b = std::max(perm[i], perm[j]);
      int idx = a * n - a * (a + 1) / 2 + (b - a - 1);
      out |= 1u << idx;
    }
  }
  return out;
}

// All graphs on exactly n vertices up to isomorphism, by minimum edge mask
// over every permutation.
inline std::vector<Adj> all_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::uint32_t> canon;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::uint32_t best = mask;
    for (const auto& q : perms) best = std::min(best, permuted_mask(n, mask, q));
    canon.insert(best);
  }
  std::vector<Adj> out;
  for (std::uint32_t mask : canon) {
    Adj a(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (mask >> bit & 1u) a.e[i][j] = a.e[j][i] = true;
      }
    }
    out.push_back(a);
  }
  return out;
}

inline bool connected(const Adj& a) {
  if (a.n == 0) return true;
  std::vector<bool> seen(a.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < a.n; ++v) {
      if (a.e[u][v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Does a commutative semigroup on {0} u V exist with 0 absorbing, uv = 0
// exactly on edges (u != v), and every vertex a zero divisor? Plain
// backtracking over the product cells in a fixed order; a branch is cut only
// when some fully assigned associativity triple fails.
inline bool semigroup_exists(const Adj& g, std::vector<int>* table = nullptr) {
  const int n = g.n + 1;  // element 0 is zero, vertex i is element i + 1
  std::vector<int> mul(n * n, -1);
  for (int i = 0; i < n; ++i) mul[i] = mul[i * n] = 0;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  auto assoc_ok = [&]() {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        const int ab = mul[a * n + b];
        if (ab < 0) continue;
        for (int c = 1; c < n; ++c) {
          const int bc = mul[b * n + c];
          if (bc < 0) continue;
          const int l = mul[ab * n + c], r = mul[a * n + bc];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == cells.size()) {
      for (int a = 1; a < n; ++a) {
        bool zd = false;
        for (int b = 1; b < n; ++b) zd = zd || mul[a * n + b] == 0;
        if (!zd) return false;
      }
      if (table) *table = mul;
      return true;
    }
    const auto [i, j] = cells[k];
    const bool edge = i != j && g.e[i - 1][j - 1];
    for (int v = 0; v < n; ++v) {
      if (i != j && edge != (v == 0)) continue;
      mul[i * n + j] = mul[j * n + i] = v;
      if (assoc_ok() && rec(k + 1)) return true;
    }
    mul[i * n + j] = mul[j * n + i] = -1;
    return false;
  };
  return rec(0);
}

// Every simple cycle of g as a vertex list; exponential, small graphs only.
inline std::vector<std::vector<VertexId>> simple_cycles(const SimpleGraph& g) {
  std::vector<std::vector<VertexId>> out;
  const auto n = static_cast<VertexId>(g.num_vertices());
  std::vector<VertexId> path;
  std::vector<bool> on(n, false);
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId u) {
    for (VertexId v : g.neighbors(u)) {
      if (v == start && path.size() >= 3) out.push_back(path);
      if (v <= start || on[v]) continue;
      on[v] = true;
      path.push_back(v);
      dfs(start, v);
      path.pop_back();
      on[v] = false;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    dfs(s, s);
    on[s] = false;
  }
  return out;
}

// Names of vertices incident to an edge that lies on some simple cycle.
inline std::set<std::string> cycle_vertices(const SimpleGraph& g) {
  std::set<std::string> out;
  for (const auto& c : simple_cycles(g)) {
    for (VertexId v : c) out.insert(g.name(v));
  }
  return out;
}

// Ideals as the additive subgroups closed under multiplication. Subgroups
// are enumerated breadth-first: each one is the closure of a smaller one
// plus a single element.
inline std::set<std::vector<ElementId>> subgroup_filter_ideals(
    const posemi::FiniteRing& r) {
  const auto n = static_cast<ElementId>(r.size());
  auto close = [&](std::vector<bool> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (ElementId a = 0; a < n; ++a) {
        if (!s[a]) continue;
        for (ElementId b = 0; b < n; ++b) {
          if (s[b] && !s[r.add(a, b)]) {
            s[r.add(a, b)] = true;
            grew = true;
          }
        }
      }
    }
    return s;
  };
  std::set<std::vector<bool>> groups;
  std::vector<std::vector<bool>> frontier;
  std::vector<bool> zero(n, false);
  zero[0] = true;
  groups.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& s : frontier) {
      for (ElementId a = 0; a < n; ++a) {
        if (s[a]) continue;
        auto t = s;
        t[a] = true;
        t = close(t);
        if (groups.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<ElementId>> out;
  for (const auto& s : groups) {
    bool ideal = true;
    for (ElementId a = 0; a < n && ideal; ++a) {
      if (!s[a]) continue;
      for (ElementId t = 0; t < n && ideal; ++t) ideal = s[r.mul(t, a)];
    }
    if (!ideal) continue;
    std::vector<ElementId> members;
    for (ElementId a = 0; a < n; ++a) {
      if (s[a]) members.push_back(a);
    }
    out.insert(members);
  }
  return out;
}

// The bounded lattice M5 = {0, a, b, c, 1}: join as addition, meet as
// multiplication.
inline posemi::FinitePoSemiring m5() {
  const std::vector<std::string> names{"0", "a", "b", "c", "1"};
  const int n = 5;
  auto join = [](int x, int y) {
    if (x == y) return x;
    if (x == 0) return y;
    if (y == 0) return x;
    return 4;
  };
  auto meet = [](int x, int y) {
    if (x == y) return x;
    if (x == 4) return y;
    if (y == 4) return x;
    return 0;
  };
  std::vector<ElementId> add(n * n), mul(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      add[x * n + y] = static_cast<ElementId>(join(x, y));
      mul[x * n + y] = static_cast<ElementId>(meet(x, y));
    }
  }
  return posemi::FinitePoSemiring(names, 0, 4, add, mul);
}

// Full-table associativity of a multiplication given as a flat table.
inline bool associative(const std::vector<int>& mul, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle

#endif  // POSEMI_TESTS_ORACLES_HPP_

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

#ifndef POSEMI_CLASSIFY_HPP_
#define POSEMI_CLASSIFY_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posemi/graph.hpp"

namespace posemi {

// K_{r,s}, r <= s.
struct CompleteBipartite {
  std::size_t r = 0;
  std::size_t s = 0;
  auto operator<=>(const CompleteBipartite&) const = default;
};

// X-U-v-Y with |X| = x, |U| = u, |Y| = y. When u == 1 the shape reads the
// same from both ends, and x <= y is used.
struct CompleteBipartiteHorn {
  std::size_t x = 0;
  std::size_t u = 0;
  std::size_t y = 0;
  auto operator<=>(const CompleteBipartiteHorn&) const = default;
};

// K_n(m): horn sizes sorted non-increasing, m = horn_sizes.size().
struct CliqueWithHorns {
  std::size_t n = 0;
  std::vector<std::size_t> horn_sizes;
  std::size_t horns() const { return horn_sizes.size(); }
  auto operator<=>(const CliqueWithHorns&) const = default;
};

struct IsolatedVertex {
  auto operator<=>(const IsolatedVertex&) const = default;
};
struct Tree {
  auto operator<=>(const Tree&) const = default;
};
struct TriangleFree {
  auto operator<=>(const TriangleFree&) const = default;
};
struct Bipartite {
  auto operator<=>(const Bipartite&) const = default;
};
struct Other {
  auto operator<=>(const Other&) const = default;
};

using GraphClass =
    std::variant<CompleteBipartite, CompleteBipartiteHorn, CliqueWithHorns,
                 IsolatedVertex, Tree, TriangleFree, Bipartite, Other>;

// "CompleteBipartiteHorn{1,1,1}", "CliqueWithHorns{3,[2,1]}", "Tree", ...
std::string to_string(const GraphClass& c);

enum class Verdict { kYes, kNo, kUnknown };
std::string_view to_string(Verdict v);

struct RuleVerdict {
  Verdict verdict = Verdict::kUnknown;
  // Identifier of the rule that decided, e.g. "clique-horn-realizability".
  std::string citation;
  friend bool operator==(const RuleVerdict&, const RuleVerdict&) = default;
};

struct GraphClassification {
  std::vector<GraphClass> memberships;  // sorted, unique
  std::size_t num_vertices = 0;
  RuleVerdict posemiring;
  RuleVerdict semigroup;
  RuleVerdict annihilating_ideal;

  template <typename T>
  bool contains() const {
    for (const auto& m : memberships) {
      if (std::holds_alternative<T>(m)) return true;
    }
    return false;
  }
  template <typename T>
  std::vector<T> all() const {
    std::vector<T> out;
    for (const auto& m : memberships) {
      if (const T* t = std::get_if<T>(&m)) out.push_back(*t);
    }
    return out;
  }
  bool contains(const GraphClass& c) const;

  friend bool operator==(const GraphClassification&,
                         const GraphClassification&) = default;
};

// Every recognised class the graph belongs to, plus the three verdicts.
GraphClassification classify(const SimpleGraph& g);

// Recognisers used by classify; exposed for testing.
std::optional<CompleteBipartite> recognize_complete_bipartite(
    const SimpleGraph& g);
std::optional<CompleteBipartiteHorn> recognize_cbh(const SimpleGraph& g);
std::vector<CliqueWithHorns> recognize_clique_with_horns(const SimpleGraph& g);

// Realizability as the zero-divisor graph of a po-semiring.
RuleVerdict posemiring_verdict(const GraphClassification& c,
                               std::size_t num_vertices);
// Realizability as the zero-divisor graph of a commutative semigroup.
RuleVerdict semigroup_verdict(const GraphClassification& c);
// Realizability as the annihilating-ideal graph of a commutative ring.
RuleVerdict ag_verdict(const GraphClassification& c);

// Vertex bijection phi (phi[v] in h for v in g) preserving adjacency.
std::optional<std::vector<VertexId>> is_isomorphic(const SimpleGraph& g,
                                                   const SimpleGraph& h);

}  // namespace posemi

#endif  // POSEMI_CLASSIFY_HPP_

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

#ifndef POSEMI_CONSTRUCTIONS_HPP_
#define POSEMI_CONSTRUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posemi/graph.hpp"
#include "posemi/posemiring.hpp"
#include "posemi/search.hpp"

namespace posemi {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ConstructionKind {
  kCompleteBipartite,
  kCbh,
  kCbhAlt,
  kIsolated,
  kKn,
  kKn1,
  kKn2,
  kK33,
};

inline constexpr std::array<ConstructionKind, 8> kAllConstructions = {
    ConstructionKind::kCompleteBipartite, ConstructionKind::kCbh,
    ConstructionKind::kCbhAlt,            ConstructionKind::kIsolated,
    ConstructionKind::kKn,                ConstructionKind::kKn1,
    ConstructionKind::kKn2,               ConstructionKind::kK33};

// "complete_bipartite", "cbh", "cbh_alt", "isolated", "kn", "kn1", "kn2",
// "k33".
std::string_view to_string(ConstructionKind kind);
std::optional<ConstructionKind> parse_construction_kind(std::string_view s);

// Parameter names in order, e.g. {"n", "x", "y"} for kn2.
std::vector<std::string> parameter_names(ConstructionKind kind);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::kIsolated;
  std::vector<std::size_t> params;
};

// Throws ConstructionError on a wrong parameter count or out-of-range value.
FinitePoSemiring build(const ConstructionSpec& spec);
// The graph the construction realizes, named like the builder's vertices.
SimpleGraph target_graph(const ConstructionSpec& spec);

FinitePoSemiring build_complete_bipartite(std::size_t x, std::size_t y);
FinitePoSemiring build_cbh(std::size_t x, std::size_t u, std::size_t y);
FinitePoSemiring build_cbh_alt(std::size_t x, std::size_t u, std::size_t y);
FinitePoSemiring build_isolated();
FinitePoSemiring build_kn(std::size_t n);
FinitePoSemiring build_kn1(std::size_t n, std::size_t x);
// n >= 4. K3(2) is not realizable, so n = 3 is rejected.
FinitePoSemiring build_kn2(std::size_t n, std::size_t x, std::size_t y);
// The printed K_n(2) multiplication with the reconstructed order, without
// the range check; fails the axioms at n = 3.
FinitePoSemiring build_kn2_printed(std::size_t n, std::size_t x, std::size_t y);
FinitePoSemiring build_k33(std::size_t xs, std::size_t ys, std::size_t zs);

// Order requirements used to rebuild the addition of a construction from its
// multiplication alone (chains, covers and grid joins stated with the
// construction). Available for cbh_alt, kn2 and k33.
OrderConstraints reconstruction_constraints(const ConstructionSpec& spec,
                                            const FinitePoSemiring& built);

}  // namespace posemi

#endif  // POSEMI_CONSTRUCTIONS_HPP_

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

#ifndef POSEMI_SEARCH_HPP_
#define POSEMI_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "posemi/graph.hpp"
#include "posemi/posemiring.hpp"
#include "posemi/table_search.hpp"

namespace posemi {

enum class StructureKind { kSemigroup, kPoSemiring };

std::string_view to_string(StructureKind kind);
std::string_view to_string(SearchStatus status);

struct SearchProblem {
  SimpleGraph target;
  StructureKind structure = StructureKind::kSemigroup;
  // Extra elements besides 0, 1 and the vertices. Po-semirings only.
  std::size_t aux_budget = 0;
  bool deterministic = true;
  unsigned threads = 1;
  std::optional<std::uint64_t> node_limit;
};

struct Certificate {
  std::uint64_t nodes = 0;
  std::uint64_t propagation_failures = 0;
  // Size of the symmetry group factored out of the last ground set searched.
  std::uint64_t symmetry_factor = 1;
  std::size_t aux_budget = 0;
  std::string tool_version;
};

// Commutative semigroup with zero; elements[0] is "0".
struct SemigroupTable {
  std::vector<std::string> elements;
  std::vector<ElementId> mul;

  std::size_t size() const { return elements.size(); }
  ElementId at(ElementId a, ElementId b) const { return mul[a * size() + b]; }
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<SemigroupTable> semigroup;
  std::optional<FinitePoSemiring> posemiring;
  Certificate certificate;
  // Ground set of the last search run; root_log indexes into it.
  std::vector<std::string> elements;
  std::vector<ForcedAssignment> root_log;
  // Auxiliary elements in the witness.
  std::size_t aux_used = 0;
};

SearchOutcome search_semigroup(const SearchProblem& problem);
SearchOutcome search_posemiring(const SearchProblem& problem);
SearchOutcome search(const SearchProblem& problem);

// Order requirements for complete_addition. Elements are indices into the
// multiplication table.
struct OrderConstraints {
  std::vector<std::pair<ElementId, ElementId>> leq;
  std::vector<std::tuple<ElementId, ElementId, ElementId>> joins;
  std::vector<std::pair<ElementId, ElementId>> incomparable;
};

// Finds an addition turning (elements, zero, one, mul) into a po-semiring
// that respects the constraints. The witness is in SearchOutcome::posemiring.
SearchOutcome complete_addition(const std::vector<std::string>& elements,
                                ElementId zero, ElementId one,
                                const std::vector<ElementId>& mul,
                                const OrderConstraints& constraints,
                                const SearchOptions& options = {});

// Independent witness checks: full-table laws and an exact zero-divisor
// graph comparison by vertex name.
bool check_semigroup_witness(const SemigroupTable& s, const SimpleGraph& target);
bool check_posemiring_witness(const FinitePoSemiring& a,
                              const SimpleGraph& target);

// Zero-divisor graph of a semigroup with zero.
SimpleGraph semigroup_graph(const SemigroupTable& s);

std::string serialize_semigroup(const SemigroupTable& s);
std::string format_certificate(const SearchOutcome& outcome,
                               StructureKind structure);

// Library version string, e.g. "posemi 0.3.0".
std::string tool_version();

}  // namespace posemi

#endif  // POSEMI_SEARCH_HPP_

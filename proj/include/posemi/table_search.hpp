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

#ifndef POSEMI_TABLE_SEARCH_HPP_
#define POSEMI_TABLE_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posemi/posemiring.hpp"

namespace posemi {

// Backtracking model finder for one or two commutative binary operations on
// the element set {0, ..., n-1}, n <= 64.
//
// The multiplication is always subject to associativity. When the problem
// includes an addition, the addition is subject to associativity and
// multiplication distributes over it. Everything else (identities, zero
// products, order requirements) is expressed through per-cell domains.
//
// Propagation: whenever all but one table cell of an associativity or
// distributivity instance are known, the last one is forced. Conflicts prune.
// Witnesses are always re-checked against the full laws before they are
// reported.

enum class TableOp : std::uint8_t { kMul = 0, kAdd = 1 };

struct TableProblem {
  std::size_t size = 0;
  bool with_addition = false;
  // Bitmask of allowed values per ordered cell i * size + j. The problem is
  // symmetric: domain[i][j] must equal domain[j][i].
  std::vector<std::uint64_t> mul_domain;
  std::vector<std::uint64_t> add_domain;
  // Sets of elements such that every permutation within a set maps the
  // problem to itself. Used to skip isomorphic branches.
  std::vector<std::vector<ElementId>> symmetry_classes;

  static TableProblem unconstrained(std::size_t n, bool with_addition);
  void restrict(TableOp op, ElementId i, ElementId j, std::uint64_t mask);
  void fix(TableOp op, ElementId i, ElementId j, ElementId value);
  std::uint64_t domain(TableOp op, ElementId i, ElementId j) const;
};

enum class SearchStatus { kWitness, kExhausted, kLimitReached };

struct ForcedAssignment {
  TableOp op;
  ElementId left;
  ElementId right;
  ElementId value;
  std::string reason;
};

struct SearchOptions {
  std::optional<std::uint64_t> node_limit;
  // Strictly sequential depth-first order; the witness is the first one in
  // assignment order.
  bool deterministic = true;
  unsigned threads = 1;
  bool symmetry_breaking = true;
};

struct TableSearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::vector<ElementId> mul;  // row-major, filled on kWitness
  std::vector<ElementId> add;  // empty unless the problem has an addition
  std::uint64_t nodes = 0;
  std::uint64_t propagation_failures = 0;
  // Product of the factorials of the symmetry class sizes in use.
  std::uint64_t symmetry_factor = 1;
  // Assignments forced before the first branching decision.
  std::vector<ForcedAssignment> root_log;
};

TableSearchResult run_table_search(const TableProblem& problem,
                                   const SearchOptions& options);

// Full-table law checks, independent of the search machinery.
bool is_commutative(std::span<const ElementId> table, std::size_t n);
bool is_associative(std::span<const ElementId> table, std::size_t n);
bool is_distributive(std::span<const ElementId> mul,
                     std::span<const ElementId> add, std::size_t n);

}  // namespace posemi

#endif  // POSEMI_TABLE_SEARCH_HPP_

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

#ifndef POSEMI_POSEMIRING_HPP_
#define POSEMI_POSEMIRING_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posemi/graph.hpp"

namespace posemi {

using ElementId = std::uint32_t;

// Malformed tables: wrong shape, out-of-range entries, duplicate names.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The relation a <= b :<=> a + b = b is not antisymmetric.
class OrderError : public std::runtime_error {
 public:
  OrderError(const std::string& what, ElementId a, ElementId b)
      : std::runtime_error(what), witness_(a, b) {}
  std::pair<ElementId, ElementId> witness() const { return witness_; }

 private:
  std::pair<ElementId, ElementId> witness_;
};

// A finite commutative semiring candidate given by its operation tables.
// The partial order is never stored: a <= b iff add(a, b) == b.
//
// Construction only checks shape (square tables, valid indices, distinct
// names, zero != one); the algebraic laws are checked by verify_axioms.
class FinitePoSemiring {
 public:
  FinitePoSemiring(std::vector<std::string> elements, ElementId zero,
                   ElementId one, std::vector<ElementId> add,
                   std::vector<ElementId> mul);

  std::size_t size() const { return names_.size(); }
  ElementId zero() const { return zero_; }
  ElementId one() const { return one_; }

  ElementId add(ElementId a, ElementId b) const { return add_[a * size() + b]; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[a * size() + b]; }
  bool leq(ElementId a, ElementId b) const { return add(a, b) == b; }

  const std::string& name(ElementId a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  // Like find, but throws std::out_of_range.
  ElementId at(std::string_view name) const;

  std::span<const ElementId> add_table() const { return add_; }
  std::span<const ElementId> mul_table() const { return mul_; }

  friend bool operator==(const FinitePoSemiring&,
                         const FinitePoSemiring&) = default;

 private:
  std::vector<std::string> names_;
  ElementId zero_;
  ElementId one_;
  std::vector<ElementId> add_;
  std::vector<ElementId> mul_;
};

enum class Axiom : std::uint8_t {
  kAddComm,
  kAddAssoc,
  kAddZero,
  kAddIdem,
  kMulComm,
  kMulAssoc,
  kMulOne,
  kDistrib,
  kAnnihilate,
  kOrderAntisym,
  kBoundedTop,
  kMonoAdd,
  kMonoMul,
};

inline constexpr std::array<Axiom, 13> kAllAxioms = {
    Axiom::kAddComm,     Axiom::kAddAssoc,  Axiom::kAddZero,
    Axiom::kAddIdem,     Axiom::kMulComm,   Axiom::kMulAssoc,
    Axiom::kMulOne,      Axiom::kDistrib,   Axiom::kAnnihilate,
    Axiom::kOrderAntisym, Axiom::kBoundedTop, Axiom::kMonoAdd,
    Axiom::kMonoMul};

// "add-comm", "mono-mul", ...
std::string_view axiom_id(Axiom axiom);

struct AxiomResult {
  Axiom axiom;
  bool passed = true;
  // Lexicographically first violation in element order; empty on pass.
  std::vector<ElementId> witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;  // one per axiom, in kAllAxioms order

  bool all_passed() const;
  const AxiomResult& result(Axiom axiom) const;
  std::vector<Axiom> failed() const;
};

// Exhaustive check over all pairs and triples, O(N^3).
AxiomReport verify_axioms(const FinitePoSemiring& a);

// Reflexive relation a <= b :<=> a + b = b, stored row-major.
class OrderRelation {
 public:
  explicit OrderRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  std::size_t size() const { return n_; }
  bool leq(ElementId a, ElementId b) const { return bits_[a * n_ + b] != 0; }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  void set(ElementId a, ElementId b, bool value) { bits_[a * n_ + b] = value; }

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

// Throws OrderError with the first pair a != b where a <= b and b <= a.
OrderRelation derived_order(const FinitePoSemiring& a);

// Nonzero elements with no nonzero element strictly below them. Throws
// std::logic_error if a minimal element is not a zero divisor although the
// structure has a zero divisor; that cannot happen for a po-semiring.
std::vector<ElementId> minimal_elements(const FinitePoSemiring& a);

// Nonzero a with a * b == 0 for some nonzero b (b == a allowed).
std::vector<ElementId> zero_divisors(const FinitePoSemiring& a);

// Vertices: zero divisors (named as the elements). Edges: distinct a, b with
// a * b == 0.
SimpleGraph zero_divisor_graph(const FinitePoSemiring& a);

// A bijection phi (phi[i] is the image of element i of `a`) preserving
// zero, one and both tables, or nullopt.
std::optional<std::vector<ElementId>> is_isomorphic_posemiring(
    const FinitePoSemiring& a, const FinitePoSemiring& b);

// Paths x - u - y of the zero-divisor graph that lie in no triangle and no
// quadrilateral but whose middle vertex is not minimal. Each entry is the
// element triple (x, u, y). Empty for every po-semiring.
std::vector<std::array<ElementId, 3>> minimal_middle_violations(
    const FinitePoSemiring& a);

// Structured-text file format; see README. Parsing validates shape only.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

FinitePoSemiring parse_posemiring(std::string_view text);
std::string serialize_posemiring(const FinitePoSemiring& a);

}  // namespace posemi

#endif  // POSEMI_POSEMIRING_HPP_

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

#ifndef POSEMI_RING_HPP_
#define POSEMI_RING_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posemi/graph.hpp"
#include "posemi/posemiring.hpp"

namespace posemi {

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxRingSize = 4096;
// Rings up to this order get the exhaustive axiom check on construction.
inline constexpr std::size_t kAxiomCheckLimit = 128;

// Z_n, or F_p[x]/(x^2) with a + bx stored as a + p*b.
struct RingFactor {
  enum class Kind { kIntegers, kDualNumbers };
  Kind kind = Kind::kIntegers;
  std::uint32_t modulus = 2;

  std::size_t size() const {
    return kind == Kind::kIntegers ? modulus : std::size_t{modulus} * modulus;
  }
  std::string spec() const;
};

// Finite commutative ring with identity: a product of factors, elements
// encoded in mixed radix with the first factor most significant.
class FiniteRing {
 public:
  FiniteRing(std::vector<RingFactor> factors, std::string spec);

  std::size_t size() const { return size_; }
  ElementId zero() const { return 0; }
  ElementId one() const { return one_; }
  ElementId add(ElementId a, ElementId b) const;
  ElementId mul(ElementId a, ElementId b) const;
  ElementId neg(ElementId a) const;

  const std::string& spec() const { return spec_; }
  const std::vector<RingFactor>& factors() const { return factors_; }
  std::uint32_t digit(ElementId a, std::size_t factor) const {
    return digits_[a * factors_.size() + factor];
  }
  // "7", "1+2x", "(1,x)".
  std::string element_name(ElementId a) const;
  bool is_zero_divisor(ElementId a) const;

 private:
  ElementId encode(const std::vector<std::uint32_t>& digits) const;

  std::vector<RingFactor> factors_;
  std::string spec_;
  std::size_t size_ = 1;
  ElementId one_ = 0;
  std::vector<std::uint32_t> digits_;
  std::vector<std::size_t> radix_;
};

// Grammar: Term ("x" Term)*, Term = "Z<n>" (n >= 2) | "F<p>[x]/(x^2)".
FiniteRing parse_ring_spec(std::string_view text);

// Exhaustive check of the commutative ring axioms; O(|R|^3).
bool check_ring_axioms(const FiniteRing& r);

// Subset of ring elements as a bitset.
class ElementSet {
 public:
  explicit ElementSet(std::size_t universe = 0);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(ElementId a) const { return (words_[a / 64] >> (a % 64)) & 1u; }
  void insert(ElementId a);
  std::vector<ElementId> elements() const;
  bool subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

 private:
  std::size_t universe_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

using Ideal = ElementSet;

bool is_ideal(const FiniteRing& r, const ElementSet& s);
Ideal zero_ideal(const FiniteRing& r);
Ideal unit_ideal(const FiniteRing& r);
Ideal principal_ideal(const FiniteRing& r, ElementId a);
// Additive subgroup generated by the given elements.
Ideal additive_closure(const FiniteRing& r, const std::vector<ElementId>& gens);
Ideal ideal_sum(const FiniteRing& r, const Ideal& i, const Ideal& j);
Ideal ideal_product(const FiniteRing& r, const Ideal& i, const Ideal& j);
Ideal annihilator(const FiniteRing& r, const Ideal& i);
Ideal ideal_power(const FiniteRing& r, const Ideal& i, std::size_t k);
// Generator-list name: "(2)" in Z12, "(1,0)" in products, "(x)".
std::string ideal_name(const FiniteRing& r, const Ideal& i);

struct IdealLattice {
  // Sorted by size, then by membership; ideals.front() = 0, back() = R.
  std::vector<Ideal> ideals;
  std::vector<std::string> names;
  std::vector<std::size_t> sum;      // index table, row-major
  std::vector<std::size_t> product;  // index table, row-major

  std::size_t size() const { return ideals.size(); }
  std::size_t index_of(const Ideal& i) const;
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t sum_of(std::size_t a, std::size_t b) const {
    return sum[a * size() + b];
  }
  std::size_t product_of(std::size_t a, std::size_t b) const {
    return product[a * size() + b];
  }
  // Proper ideals not contained in another proper ideal.
  std::vector<std::size_t> maximal() const;
  // Nonzero ideals with no nonzero ideal strictly inside.
  std::vector<std::size_t> minimal() const;
};

IdealLattice enumerate_ideals(const FiniteRing& r);

// I(R): ideals under sum and product, 0 and R as zero and one.
FinitePoSemiring ideal_posemiring(const IdealLattice& lattice);

// Vertices: nonzero ideals I with IJ = 0 for some nonzero J; edges between
// distinct I, J with IJ = 0. Computed from the lattice directly.
SimpleGraph ag_graph(const IdealLattice& lattice);

// Decomposition R = Re_1 x ... x Re_k along primitive idempotents.
struct LocalFactor {
  ElementId idempotent = 0;
  Ideal component;
  std::size_t ideal_count = 0;  // ideals of R inside the component
  bool is_field() const { return ideal_count == 2; }
};
std::vector<LocalFactor> local_factors(const FiniteRing& r,
                                       const IdealLattice& lattice);

struct RingCheck {
  std::string id;
  bool applicable = false;
  bool passed = true;
  std::string detail;
};

struct RingCheckReport {
  std::string ring;
  std::vector<RingCheck> checks;

  bool passed() const;
  const RingCheck& check(std::string_view id) const;
};

// Ids: minimal-annihilator-maximal, ag-identity, two-star-shape,
// single-horn-local, no-clique-two-horns, three-horns-six-vertices,
// minimal-middle.
RingCheckReport check_ring_invariants(const FiniteRing& r, const IdealLattice& lattice);

// Spec strings of the ring corpus used by the invariant suites.
std::vector<std::string> ring_corpus();

}  // namespace posemi

#endif  // POSEMI_RING_HPP_

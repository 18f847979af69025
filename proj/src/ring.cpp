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

#include "posemi/ring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>

namespace posemi {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string dual_name(std::uint32_t a0, std::uint32_t a1) {
  if (a1 == 0) return std::to_string(a0);
  const std::string xs = (a1 == 1 ? "" : std::to_string(a1)) + "x";
  return a0 == 0 ? xs : std::to_string(a0) + "+" + xs;
}

}  // namespace

std::string RingFactor::spec() const {
  return kind == Kind::kIntegers
             ? "Z" + std::to_string(modulus)
             : "F" + std::to_string(modulus) + "[x]/(x^2)";
}

FiniteRing::FiniteRing(std::vector<RingFactor> factors, std::string spec)
    : factors_(std::move(factors)), spec_(std::move(spec)) {
  if (factors_.empty()) throw RingError("ring needs at least one factor");
  for (const auto& f : factors_) {
    if (f.modulus < 2) throw RingError("ring factor modulus must be >= 2");
    size_ *= f.size();
    if (size_ > kMaxRingSize) {
      throw RingError("ring order exceeds " + std::to_string(kMaxRingSize));
    }
  }
  const std::size_t k = factors_.size();
  radix_.assign(k, 1);
  for (std::size_t i = k - 1; i > 0; --i) {
    radix_[i - 1] = radix_[i] * factors_[i].size();
  }
  digits_.resize(size_ * k);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      digits_[a * k + i] =
          static_cast<std::uint32_t>((a / radix_[i]) % factors_[i].size());
    }
  }
  std::vector<std::uint32_t> ones(k, 1);
  one_ = encode(ones);
  if (size_ <= kAxiomCheckLimit && !check_ring_axioms(*this)) {
    throw RingError("ring '" + spec_ + "' violates the ring axioms");
  }
}

ElementId FiniteRing::encode(const std::vector<std::uint32_t>& digits) const {
  std::size_t a = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) a += digits[i] * radix_[i];
  return static_cast<ElementId>(a);
}

ElementId FiniteRing::add(ElementId a, ElementId b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::uint32_t x = digit(a, i), y = digit(b, i);
    std::uint32_t d;
    if (f.kind == RingFactor::Kind::kIntegers) {
      d = (x + y) % f.modulus;
    } else {
      const std::uint32_t p = f.modulus;
      d = (x % p + y % p) % p + p * ((x / p + y / p) % p);
    }
    out += d * radix_[i];
  }
  return static_cast<ElementId>(out);
}

ElementId FiniteRing::mul(ElementId a, ElementId b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::uint32_t x = digit(a, i), y = digit(b, i);
    std::uint32_t d;
    if (f.kind == RingFactor::Kind::kIntegers) {
      d = static_cast<std::uint32_t>(std::uint64_t{x} * y % f.modulus);
    } else {
      const std::uint32_t p = f.modulus;
      const std::uint32_t x0 = x % p, x1 = x / p, y0 = y % p, y1 = y / p;
      d = (x0 * y0) % p + p * ((x0 * y1 + x1 * y0) % p);
    }
    out += d * radix_[i];
  }
  return static_cast<ElementId>(out);
}

ElementId FiniteRing::neg(ElementId a) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::uint32_t x = digit(a, i);
    std::uint32_t d;
    if (f.kind == RingFactor::Kind::kIntegers) {
      d = (f.modulus - x) % f.modulus;
    } else {
      const std::uint32_t p = f.modulus;
      d = (p - x % p) % p + p * ((p - x / p) % p);
    }
    out += d * radix_[i];
  }
  return static_cast<ElementId>(out);
}

std::string FiniteRing::element_name(ElementId a) const {
  auto part = [&](std::size_t i) {
    const auto& f = factors_[i];
    const std::uint32_t x = digit(a, i);
    return f.kind == RingFactor::Kind::kIntegers
               ? std::to_string(x)
               : dual_name(x % f.modulus, x / f.modulus);
  };
  if (factors_.size() == 1) return part(0);
  std::string out = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += part(i);
  }
  return out + ")";
}

bool FiniteRing::is_zero_divisor(ElementId a) const {
  if (a == zero()) return false;
  for (ElementId b = 1; b < size_; ++b) {
    if (mul(a, b) == zero()) return true;
  }
  return false;
}

FiniteRing parse_ring_spec(std::string_view text) {
  std::vector<RingFactor> factors;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> RingError {
    return RingError("ring spec '" + std::string(text) + "' at position " +
                     std::to_string(pos) + ": " + what);
  };
  auto number = [&]() {
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > kMaxRingSize) throw fail("number too large");
      ++pos;
    }
    if (pos == start) throw fail("expected a number");
    return static_cast<std::uint32_t>(value);
  };
  std::size_t order = 1;
  while (true) {
    if (pos >= text.size()) throw fail("expected a term");
    RingFactor f;
    if (text[pos] == 'Z') {
      ++pos;
      f.kind = RingFactor::Kind::kIntegers;
      f.modulus = number();
      if (f.modulus < 2) throw fail("Z<n> needs n >= 2");
    } else if (text[pos] == 'F') {
      ++pos;
      f.kind = RingFactor::Kind::kDualNumbers;
      f.modulus = number();
      if (!is_prime(f.modulus)) {
        throw fail("F<p> needs a prime p, got " + std::to_string(f.modulus));
      }
      constexpr std::string_view kTail = "[x]/(x^2)";
      if (text.substr(pos, kTail.size()) != kTail) throw fail("expected [x]/(x^2)");
      pos += kTail.size();
    } else {
      throw fail("expected 'Z' or 'F'");
    }
    order *= f.size();
    if (order > kMaxRingSize) {
      throw fail("ring order exceeds " + std::to_string(kMaxRingSize));
    }
    factors.push_back(f);
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw fail("expected 'x' between terms");
    ++pos;
  }
  return FiniteRing(std::move(factors), std::string(text));
}

bool check_ring_axioms(const FiniteRing& r) {
  const auto n = static_cast<ElementId>(r.size());
  for (ElementId a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a || r.mul(a, r.one()) != a) return false;
    if (r.add(a, r.neg(a)) != r.zero()) return false;
    for (ElementId b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a)) {
        return false;
      }
      for (ElementId c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return false;
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return false;
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
          return false;
        }
      }
    }
  }
  return r.size() >= 2;
}

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

void ElementSet::insert(ElementId a) {
  std::uint64_t& word = words_[a / 64];
  const std::uint64_t mask = std::uint64_t{1} << (a % 64);
  if (!(word & mask)) {
    word |= mask;
    ++count_;
  }
}

std::vector<ElementId> ElementSet::elements() const {
  std::vector<ElementId> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<ElementId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

namespace {

// Additive generators of a subgroup; each one enlarges the span.
std::vector<ElementId> additive_generators(const FiniteRing& r,
                                           const ElementSet& s) {
  std::vector<ElementId> gens;
  ElementSet span(r.size());
  span.insert(r.zero());
  std::vector<ElementId> members{r.zero()};
  for (ElementId g : s.elements()) {
    if (span.contains(g)) continue;
    gens.push_back(g);
    const std::vector<ElementId> base = members;
    for (ElementId m = g; !span.contains(m); m = r.add(m, g)) {
      for (ElementId h : base) {
        const ElementId e = r.add(h, m);
        if (!span.contains(e)) {
          span.insert(e);
          members.push_back(e);
        }
      }
    }
  }
  return gens;
}

}  // namespace

Ideal additive_closure(const FiniteRing& r, const std::vector<ElementId>& gens) {
  ElementSet span(r.size());
  span.insert(r.zero());
  std::vector<ElementId> members{r.zero()};
  for (ElementId g : gens) {
    if (span.contains(g)) continue;
    const std::vector<ElementId> base = members;
    for (ElementId m = g; !span.contains(m); m = r.add(m, g)) {
      for (ElementId h : base) {
        const ElementId e = r.add(h, m);
        if (!span.contains(e)) {
          span.insert(e);
          members.push_back(e);
        }
      }
    }
  }
  return span;
}

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  const auto members = s.elements();
  for (ElementId a : members) {
    for (ElementId b : members) {
      if (!s.contains(r.add(a, b))) return false;
    }
    for (ElementId t = 0; t < r.size(); ++t) {
      if (!s.contains(r.mul(t, a))) return false;
    }
  }
  return true;
}

Ideal zero_ideal(const FiniteRing& r) {
  Ideal i(r.size());
  i.insert(r.zero());
  return i;
}

Ideal unit_ideal(const FiniteRing& r) {
  Ideal i(r.size());
  for (ElementId a = 0; a < r.size(); ++a) i.insert(a);
  return i;
}

Ideal principal_ideal(const FiniteRing& r, ElementId a) {
  Ideal i(r.size());
  for (ElementId t = 0; t < r.size(); ++t) i.insert(r.mul(t, a));
  return i;
}

Ideal ideal_sum(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  auto gens = additive_generators(r, i);
  const auto more = additive_generators(r, j);
  gens.insert(gens.end(), more.begin(), more.end());
  return additive_closure(r, gens);
}

Ideal ideal_product(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  std::vector<ElementId> gens;
  for (ElementId g : additive_generators(r, i)) {
    for (ElementId h : additive_generators(r, j)) gens.push_back(r.mul(g, h));
  }
  return additive_closure(r, gens);
}

Ideal annihilator(const FiniteRing& r, const Ideal& i) {
  const auto gens = additive_generators(r, i);
  Ideal out(r.size());
  for (ElementId t = 0; t < r.size(); ++t) {
    const bool kills = std::all_of(gens.begin(), gens.end(), [&](ElementId g) {
      return r.mul(t, g) == r.zero();
    });
    if (kills) out.insert(t);
  }
  return out;
}

Ideal ideal_power(const FiniteRing& r, const Ideal& i, std::size_t k) {
  Ideal out = unit_ideal(r);
  for (std::size_t e = 0; e < k; ++e) out = ideal_product(r, out, i);
  return out;
}

std::string ideal_name(const FiniteRing& r, const Ideal& i) {
  const auto& factors = r.factors();
  std::string out = "(";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    // Projection onto factor k; ideals of a product are products of ideals.
    std::set<std::uint32_t> proj;
    for (ElementId a : i.elements()) proj.insert(r.digit(a, k));
    if (k) out += ',';
    if (f.kind == RingFactor::Kind::kIntegers) {
      const auto it = proj.upper_bound(0);
      out += it == proj.end() ? "0" : std::to_string(*it);
    } else {
      const std::size_t s = proj.size();
      out += s == 1 ? "0" : s == f.size() ? "1" : "x";
    }
  }
  return out + ")";
}

std::size_t IdealLattice::index_of(const Ideal& i) const {
  auto it = std::lower_bound(
      ideals.begin(), ideals.end(), i, [](const Ideal& a, const Ideal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
      });
  if (it == ideals.end() || *it != i) {
    throw std::out_of_range("not an ideal of this lattice");
  }
  return static_cast<std::size_t>(it - ideals.begin());
}

bool IdealLattice::leq(std::size_t a, std::size_t b) const {
  return ideals[a].subset_of(ideals[b]);
}

std::vector<std::size_t> IdealLattice::maximal() const {
  std::vector<std::size_t> out;
  const std::size_t top = size() - 1;
  for (std::size_t a = 0; a < top; ++a) {
    bool is_max = true;
    for (std::size_t b = 0; b < top && is_max; ++b) {
      if (b != a && leq(a, b)) is_max = false;
    }
    if (is_max) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> IdealLattice::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 1; a < size(); ++a) {
    bool is_min = true;
    for (std::size_t b = 1; b < size() && is_min; ++b) {
      if (b != a && leq(b, a)) is_min = false;
    }
    if (is_min) out.push_back(a);
  }
  return out;
}

IdealLattice enumerate_ideals(const FiniteRing& r) {
  std::set<Ideal> seen;
  std::vector<Ideal> work;
  auto offer = [&](Ideal i) {
    if (seen.insert(i).second) work.push_back(std::move(i));
  };
  for (ElementId a = 0; a < r.size(); ++a) offer(principal_ideal(r, a));
  for (std::size_t p = 0; p < work.size(); ++p) {
    for (std::size_t q = 0; q < p; ++q) offer(ideal_sum(r, work[p], work[q]));
  }

  IdealLattice lattice;
  lattice.ideals = std::move(work);
  std::sort(lattice.ideals.begin(), lattice.ideals.end(),
            [](const Ideal& a, const Ideal& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  const std::size_t n = lattice.size();
  for (const auto& i : lattice.ideals) lattice.names.push_back(ideal_name(r, i));
  lattice.sum.resize(n * n);
  lattice.product.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t s =
          lattice.index_of(ideal_sum(r, lattice.ideals[a], lattice.ideals[b]));
      const std::size_t m = lattice.index_of(
          ideal_product(r, lattice.ideals[a], lattice.ideals[b]));
      lattice.sum[a * n + b] = lattice.sum[b * n + a] = s;
      lattice.product[a * n + b] = lattice.product[b * n + a] = m;
    }
  }
  return lattice;
}

FinitePoSemiring ideal_posemiring(const IdealLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<ElementId> add(n * n), mul(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    add[k] = static_cast<ElementId>(lattice.sum[k]);
    mul[k] = static_cast<ElementId>(lattice.product[k]);
  }
  return FinitePoSemiring(lattice.names, 0, static_cast<ElementId>(n - 1),
                          std::move(add), std::move(mul));
}

SimpleGraph ag_graph(const IdealLattice& lattice) {
  const std::size_t n = lattice.size();
  SimpleGraph g;
  std::vector<VertexId> id(n, 0);
  std::vector<char> vertex(n, 0);
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      if (lattice.product_of(a, b) == 0) vertex[a] = 1;
    }
    if (vertex[a]) id[a] = g.add_vertex(lattice.names[a]);
  }
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (vertex[a] && vertex[b] && lattice.product_of(a, b) == 0) {
        g.add_edge(id[a], id[b]);
      }
    }
  }
  return g;
}

std::vector<LocalFactor> local_factors(const FiniteRing& r,
                                       const IdealLattice& lattice) {
  std::vector<ElementId> idempotents;
  for (ElementId e = 1; e < r.size(); ++e) {
    if (r.mul(e, e) == e) idempotents.push_back(e);
  }
  std::vector<LocalFactor> out;
  for (ElementId e : idempotents) {
    const bool primitive =
        std::none_of(idempotents.begin(), idempotents.end(), [&](ElementId f) {
          return f != e && r.mul(f, e) == f;
        });
    if (!primitive) continue;
    LocalFactor lf;
    lf.idempotent = e;
    lf.component = principal_ideal(r, e);
    for (const auto& i : lattice.ideals) {
      if (i.subset_of(lf.component)) ++lf.ideal_count;
    }
    out.push_back(std::move(lf));
  }
  return out;
}

std::vector<std::string> ring_corpus() {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto offer = [&](const std::string& s) {
    if (seen.insert(s).second) out.push_back(s);
  };
  for (std::uint32_t n = 4; n <= 64; ++n) {
    if (!is_prime(n)) offer("Z" + std::to_string(n));
  }
  const std::vector<std::pair<std::string, std::size_t>> pool = {
      {"Z2", 2}, {"Z3", 3}, {"Z4", 4}, {"Z5", 5},
      {"Z8", 8}, {"Z9", 9}, {"F2[x]/(x^2)", 4}, {"F3[x]/(x^2)", 9}};
  const std::size_t k = pool.size();
  for (std::size_t a = 0; a < k; ++a) {
    offer(pool[a].first);
    for (std::size_t b = a; b < k; ++b) {
      if (pool[a].second * pool[b].second <= 512) {
        offer(pool[a].first + "x" + pool[b].first);
      }
      for (std::size_t c = b; c < k; ++c) {
        if (pool[a].second * pool[b].second * pool[c].second <= 512) {
          offer(pool[a].first + "x" + pool[b].first + "x" + pool[c].first);
        }
      }
    }
  }
  return out;
}

}  // namespace posemi

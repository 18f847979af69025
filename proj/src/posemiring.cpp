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

#include "posemi/posemiring.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

namespace posemi {

FinitePoSemiring::FinitePoSemiring(std::vector<std::string> elements,
                                   ElementId zero, ElementId one,
                                   std::vector<ElementId> add,
                                   std::vector<ElementId> mul)
    : names_(std::move(elements)),
      zero_(zero),
      one_(one),
      add_(std::move(add)),
      mul_(std::move(mul)) {
  const std::size_t n = names_.size();
  if (n < 2) throw StructureError("a po-semiring needs at least two elements");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw StructureError("duplicate element name '" + name + "'");
    }
  }
  if (zero_ >= n || one_ >= n) throw StructureError("zero/one out of range");
  if (zero_ == one_) throw StructureError("zero and one must differ");
  if (add_.size() != n * n || mul_.size() != n * n) {
    throw StructureError("tables must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  auto in_range = [n](ElementId e) { return e < n; };
  if (!std::all_of(add_.begin(), add_.end(), in_range) ||
      !std::all_of(mul_.begin(), mul_.end(), in_range)) {
    throw StructureError("table entry out of range");
  }
}

std::optional<ElementId> FinitePoSemiring::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ElementId>(it - names_.begin());
}

ElementId FinitePoSemiring::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw std::out_of_range("no element named '" + std::string(name) + "'");
}

std::string_view axiom_id(Axiom axiom) {
  switch (axiom) {
    case Axiom::kAddComm: return "add-comm";
    case Axiom::kAddAssoc: return "add-assoc";
    case Axiom::kAddZero: return "add-zero";
    case Axiom::kAddIdem: return "add-idem";
    case Axiom::kMulComm: return "mul-comm";
    case Axiom::kMulAssoc: return "mul-assoc";
    case Axiom::kMulOne: return "mul-one";
    case Axiom::kDistrib: return "distrib";
    case Axiom::kAnnihilate: return "annihilate";
    case Axiom::kOrderAntisym: return "order-antisym";
    case Axiom::kBoundedTop: return "bounded-top";
    case Axiom::kMonoAdd: return "mono-add";
    case Axiom::kMonoMul: return "mono-mul";
  }
  return "?";
}

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::result(Axiom axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return r;
  }
  throw std::out_of_range("axiom missing from report");
}

std::vector<Axiom> AxiomReport::failed() const {
  std::vector<Axiom> out;
  for (const auto& r : results) {
    if (!r.passed) out.push_back(r.axiom);
  }
  return out;
}

namespace {

// Records the first failure in element order, i.e. the lexicographically
// least witness.
struct Check {
  AxiomResult result;
  explicit Check(Axiom axiom) { result.axiom = axiom; }
  bool open() const { return result.passed; }
  void fail(std::initializer_list<ElementId> witness) {
    if (!result.passed) return;
    result.passed = false;
    result.witness.assign(witness);
  }
};

}  // namespace

AxiomReport verify_axioms(const FinitePoSemiring& s) {
  const auto n = static_cast<ElementId>(s.size());
  const ElementId zero = s.zero();
  const ElementId one = s.one();

  Check add_comm(Axiom::kAddComm), add_assoc(Axiom::kAddAssoc),
      add_zero(Axiom::kAddZero), add_idem(Axiom::kAddIdem),
      mul_comm(Axiom::kMulComm), mul_assoc(Axiom::kMulAssoc),
      mul_one(Axiom::kMulOne), distrib(Axiom::kDistrib),
      annihilate(Axiom::kAnnihilate), antisym(Axiom::kOrderAntisym),
      bounded(Axiom::kBoundedTop), mono_add(Axiom::kMonoAdd),
      mono_mul(Axiom::kMonoMul);

  for (ElementId a = 0; a < n; ++a) {
    if (s.add(zero, a) != a || s.add(a, zero) != a) add_zero.fail({a});
    if (s.add(a, a) != a) add_idem.fail({a});
    if (s.mul(one, a) != a || s.mul(a, one) != a) mul_one.fail({a});
    if (s.mul(zero, a) != zero || s.mul(a, zero) != zero) annihilate.fail({a});
    if (s.add(a, one) != one || s.add(zero, a) != a) bounded.fail({a});
  }

  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (s.add(a, b) != s.add(b, a)) add_comm.fail({a, b});
      if (s.mul(a, b) != s.mul(b, a)) mul_comm.fail({a, b});
      if (a != b && s.leq(a, b) && s.leq(b, a)) antisym.fail({a, b});
    }
  }

  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab_sum = s.add(a, b);
      const ElementId ab_prod = s.mul(a, b);
      const bool a_le_b = s.leq(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (add_assoc.open() &&
            s.add(ab_sum, c) != s.add(a, s.add(b, c))) {
          add_assoc.fail({a, b, c});
        }
        if (mul_assoc.open() &&
            s.mul(ab_prod, c) != s.mul(a, s.mul(b, c))) {
          mul_assoc.fail({a, b, c});
        }
        if (distrib.open()) {
          const ElementId bc = s.add(b, c);
          if (s.mul(a, bc) != s.add(s.mul(a, b), s.mul(a, c)) ||
              s.mul(bc, a) != s.add(s.mul(b, a), s.mul(c, a))) {
            distrib.fail({a, b, c});
          }
        }
        if (a_le_b) {
          if (mono_add.open() && !s.leq(s.add(a, c), s.add(b, c))) {
            mono_add.fail({a, b, c});
          }
          // x <= y and 0 <= z imply zx <= zy.
          if (mono_mul.open() && s.leq(zero, c) &&
              !(s.leq(s.mul(c, a), s.mul(c, b)) &&
                s.leq(s.mul(a, c), s.mul(b, c)))) {
            mono_mul.fail({a, b, c});
          }
        }
      }
    }
  }

  AxiomReport report;
  for (Check* c : {&add_comm, &add_assoc, &add_zero, &add_idem, &mul_comm,
                   &mul_assoc, &mul_one, &distrib, &annihilate, &antisym,
                   &bounded, &mono_add, &mono_mul}) {
    report.results.push_back(std::move(c->result));
  }
  return report;
}

OrderRelation derived_order(const FinitePoSemiring& s) {
  const auto n = static_cast<ElementId>(s.size());
  OrderRelation order(n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) order.set(a, b, s.leq(a, b));
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (order.leq(a, b) && order.leq(b, a)) {
        throw OrderError("derived order is not antisymmetric on (" +
                             s.name(a) + ", " + s.name(b) + ")",
                         a, b);
      }
    }
  }
  return order;
}

std::vector<ElementId> zero_divisors(const FinitePoSemiring& s) {
  const auto n = static_cast<ElementId>(s.size());
  const ElementId zero = s.zero();
  std::vector<ElementId> out;
  for (ElementId a = 0; a < n; ++a) {
    if (a == zero) continue;
    for (ElementId b = 0; b < n; ++b) {
      if (b != zero && (s.mul(a, b) == zero || s.mul(b, a) == zero)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::vector<ElementId> minimal_elements(const FinitePoSemiring& s) {
  const auto n = static_cast<ElementId>(s.size());
  const ElementId zero = s.zero();
  std::vector<ElementId> out;
  for (ElementId x = 0; x < n; ++x) {
    if (x == zero) continue;
    bool minimal = true;
    for (ElementId y = 0; y < n && minimal; ++y) {
      if (y != zero && y != x && s.leq(y, x)) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  const auto divisors = zero_divisors(s);
  if (divisors.size() >= 2) {
    for (ElementId m : out) {
      if (!std::binary_search(divisors.begin(), divisors.end(), m)) {
        throw std::logic_error("minimal element '" + s.name(m) +
                               "' is not a zero divisor");
      }
    }
  }
  return out;
}

SimpleGraph zero_divisor_graph(const FinitePoSemiring& s) {
  const auto divisors = zero_divisors(s);
  SimpleGraph g;
  for (ElementId a : divisors) g.add_vertex(s.name(a));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      const ElementId a = divisors[i], b = divisors[j];
      if (s.mul(a, b) == s.zero() || s.mul(b, a) == s.zero()) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return g;
}

namespace {

// Isomorphism-invariant fingerprint of one element.
using Signature = std::tuple<bool, bool, std::size_t, std::size_t, std::size_t,
                             bool, bool, std::vector<std::size_t>>;

std::vector<Signature> signatures(const FinitePoSemiring& s) {
  const auto n = static_cast<ElementId>(s.size());
  std::vector<std::size_t> zero_products(n, 0), below(n, 0), above(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (s.mul(a, b) == s.zero()) ++zero_products[a];
      if (s.leq(b, a)) ++below[a];
      if (s.leq(a, b)) ++above[a];
    }
  }
  std::vector<Signature> out;
  out.reserve(n);
  for (ElementId a = 0; a < n; ++a) {
    std::vector<std::size_t> nbr;
    for (ElementId b = 0; b < n; ++b) {
      if (s.mul(a, b) == s.zero()) nbr.push_back(zero_products[b]);
    }
    std::sort(nbr.begin(), nbr.end());
    out.emplace_back(a == s.zero(), a == s.one(), zero_products[a], below[a],
                     above[a], s.mul(a, a) == a, s.mul(a, a) == s.zero(),
                     std::move(nbr));
  }
  return out;
}

class PoSemiringMatcher {
 public:
  PoSemiringMatcher(const FinitePoSemiring& a, const FinitePoSemiring& b)
      : a_(a), b_(b), n_(static_cast<ElementId>(a.size())) {}

  std::optional<std::vector<ElementId>> run() {
    const auto sig_a = signatures(a_);
    const auto sig_b = signatures(b_);
    {
      auto sa = sig_a, sb = sig_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    candidates_.assign(n_, {});
    for (ElementId i = 0; i < n_; ++i) {
      for (ElementId j = 0; j < n_; ++j) {
        if (sig_a[i] == sig_b[j]) candidates_[i].push_back(j);
      }
    }
    // Most constrained elements first.
    order_.resize(n_);
    for (ElementId i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](ElementId x, ElementId y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    phi_.assign(n_, kUnset);
    used_.assign(n_, 0);
    if (!extend(0)) return std::nullopt;
    return phi_;
  }

 private:
  static constexpr ElementId kUnset = ~ElementId{0};

  bool consistent(ElementId i) const {
    for (ElementId j = 0; j < n_; ++j) {
      if (phi_[j] == kUnset) continue;
      for (int op = 0; op < 2; ++op) {
        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
          const ElementId src = op == 0 ? a_.add(x, y) : a_.mul(x, y);
          const ElementId dst =
              op == 0 ? b_.add(phi_[x], phi_[y]) : b_.mul(phi_[x], phi_[y]);
          if (phi_[src] != kUnset) {
            if (phi_[src] != dst) return false;
          } else if (used_[dst]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const ElementId i = order_[depth];
    for (ElementId j : candidates_[i]) {
      if (used_[j]) continue;
      phi_[i] = j;
      used_[j] = 1;
      if (consistent(i) && extend(depth + 1)) return true;
      phi_[i] = kUnset;
      used_[j] = 0;
    }
    return false;
  }

  const FinitePoSemiring& a_;
  const FinitePoSemiring& b_;
  ElementId n_;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> order_;
  std::vector<ElementId> phi_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<ElementId>> is_isomorphic_posemiring(
    const FinitePoSemiring& a, const FinitePoSemiring& b) {
  if (a.size() != b.size()) return std::nullopt;
  return PoSemiringMatcher(a, b).run();
}

std::vector<std::array<ElementId, 3>> minimal_middle_violations(
    const FinitePoSemiring& s) {
  const auto divisors = zero_divisors(s);
  const SimpleGraph g = zero_divisor_graph(s);
  const auto minimal = minimal_elements(s);
  std::vector<std::array<ElementId, 3>> out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (std::binary_search(minimal.begin(), minimal.end(), divisors[u])) {
      continue;
    }
    const auto& nbrs = g.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const VertexId x = nbrs[i], y = nbrs[j];
        if (g.has_edge(x, y)) continue;  // triangle
        bool square = false;
        for (VertexId w : g.neighbors(x)) {
          if (w != u && g.has_edge(w, y)) {
            square = true;
            break;
          }
        }
        if (!square) out.push_back({divisors[x], divisors[u], divisors[y]});
      }
    }
  }
  return out;
}

}  // namespace posemi

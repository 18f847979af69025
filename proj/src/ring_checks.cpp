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

#include <algorithm>
#include <stdexcept>

#include "posemi/classify.hpp"
#include "posemi/ring.hpp"

namespace posemi {

bool RingCheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RingCheck& c) { return c.passed; });
}

const RingCheck& RingCheckReport::check(std::string_view id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no ring check named " + std::string(id));
}

namespace {

RingCheck minimal_annihilator_maximal(const FiniteRing& r,
                                          const IdealLattice& lattice) {
  RingCheck c{"minimal-annihilator-maximal", true, true, ""};
  const auto maximal = lattice.maximal();
  std::size_t count = 0;
  for (std::size_t m : lattice.minimal()) {
    ++count;
    const std::size_t ann = lattice.index_of(annihilator(r, lattice.ideals[m]));
    if (std::find(maximal.begin(), maximal.end(), ann) == maximal.end()) {
      c.passed = false;
      c.detail += "ann" + lattice.names[m] + " = " + lattice.names[ann] +
                  " is not maximal; ";
    }
  }
  if (c.passed) {
    c.detail = std::to_string(count) + " minimal ideal(s), annihilators maximal";
  }
  return c;
}

RingCheck two_star_shape(const GraphClassification& cls,
                             const std::vector<LocalFactor>& factors) {
  RingCheck c{"two-star-shape", false, true, ""};
  const auto cbh = cls.all<CompleteBipartiteHorn>();
  if (cbh.empty()) return c;
  c.applicable = true;
  for (const auto& h : cbh) {
    if (h.x != 1 || h.u != 1 || h.y != 1) {
      c.passed = false;
      c.detail = "complete bipartite graph with a horn is not P4: " +
                 to_string(GraphClass{h});
      return c;
    }
  }
  const bool shape =
      factors.size() == 2 &&
      ((factors[0].is_field() && factors[1].ideal_count == 3) ||
       (factors[1].is_field() && factors[0].ideal_count == 3));
  if (!shape) {
    c.passed = false;
    c.detail = "AG(R) is P4 but R is not a field times a ring with a unique "
               "non-trivial ideal";
    return c;
  }
  c.detail = "AG(R) is P4 and R is a field times a ring with one non-trivial ideal";
  return c;
}

RingCheck single_horn_local(const FiniteRing& r, const IdealLattice& lattice,
                                const GraphClassification& cls) {
  RingCheck c{"single-horn-local", false, true, ""};
  const auto kn = cls.all<CliqueWithHorns>();
  const bool fires = std::any_of(kn.begin(), kn.end(), [](const auto& k) {
    return k.n >= 3 && k.horns() == 1;
  });
  if (!fires) return c;
  c.applicable = true;
  ElementSet z(r.size());
  z.insert(r.zero());
  for (ElementId a = 1; a < r.size(); ++a) {
    if (r.is_zero_divisor(a)) z.insert(a);
  }
  if (!is_ideal(r, z)) {
    c.passed = false;
    c.detail = "Z(R) is not an ideal";
    return c;
  }
  const std::size_t zi = lattice.index_of(z);
  const auto maximal = lattice.maximal();
  if (std::find(maximal.begin(), maximal.end(), zi) == maximal.end()) {
    c.passed = false;
    c.detail = "Z(R) = " + lattice.names[zi] + " is not maximal";
    return c;
  }
  std::size_t index = 1;
  Ideal power = z;
  while (power != zero_ideal(r) && index < 5) {
    power = ideal_product(r, power, z);
    ++index;
  }
  if (power != zero_ideal(r)) {
    c.passed = false;
    c.detail = "Z(R)^5 != 0";
    return c;
  }
  c.detail = "Z(R) = " + lattice.names[zi] + " maximal, nilpotency index " +
             std::to_string(index);
  return c;
}

RingCheck no_clique_two_horns(const GraphClassification& cls) {
  RingCheck c{"no-clique-two-horns", true, true, "no K_n(2) with n >= 3"};
  for (const auto& k : cls.all<CliqueWithHorns>()) {
    if (k.n >= 3 && k.horns() == 2) {
      c.passed = false;
      c.detail = "AG(R) is " + to_string(GraphClass{k});
    }
  }
  return c;
}

RingCheck three_horns_six_vertices(const GraphClassification& cls,
                                       std::size_t vertices) {
  RingCheck c{"three-horns-six-vertices", false, true, ""};
  for (const auto& k : cls.all<CliqueWithHorns>()) {
    if (k.n != 3 || k.horns() != 3) continue;
    c.applicable = true;
    const bool unit = std::all_of(k.horn_sizes.begin(), k.horn_sizes.end(),
                                  [](std::size_t s) { return s == 1; });
    if (!unit || vertices != 6) {
      c.passed = false;
      c.detail = "AG(R) is " + to_string(GraphClass{k}) + " with " +
                 std::to_string(vertices) + " vertices";
      return c;
    }
    c.detail = "K3(3) with unit horns and 6 vertices";
  }
  return c;
}

RingCheck minimal_middle(const FinitePoSemiring& ir) {
  RingCheck c{"minimal-middle", true, true, ""};
  const auto bad = minimal_middle_violations(ir);
  if (bad.empty()) {
    c.detail = "every isolated path has a minimal middle vertex";
    return c;
  }
  c.passed = false;
  const auto& t = bad.front();
  c.detail = "path " + ir.name(t[0]) + " - " + ir.name(t[1]) + " - " +
             ir.name(t[2]) + " has a non-minimal middle";
  return c;
}

}  // namespace

RingCheckReport check_ring_invariants(const FiniteRing& r, const IdealLattice& lattice) {
  RingCheckReport report;
  report.ring = r.spec();
  const FinitePoSemiring ir = ideal_posemiring(lattice);
  const SimpleGraph ag = ag_graph(lattice);
  const GraphClassification cls = classify(ag);
  const auto factors = local_factors(r, lattice);

  report.checks.push_back(minimal_annihilator_maximal(r, lattice));
  RingCheck identity{"ag-identity", true, true, ""};
  identity.passed = ag == zero_divisor_graph(ir);
  identity.detail = identity.passed ? "AG(R) = zero-divisor graph of I(R)"
                                    : "AG(R) differs from the zero-divisor graph of I(R)";
  report.checks.push_back(std::move(identity));
  report.checks.push_back(two_star_shape(cls, factors));
  report.checks.push_back(single_horn_local(r, lattice, cls));
  report.checks.push_back(no_clique_two_horns(cls));
  report.checks.push_back(three_horns_six_vertices(cls, ag.num_vertices()));
  report.checks.push_back(minimal_middle(ir));
  return report;
}

}  // namespace posemi

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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "posemi/constructions.hpp"
#include "posemi/posemiring.hpp"

namespace posemi {
namespace {

std::vector<std::string> names(const FinitePoSemiring& a,
                               const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (ElementId id : ids) out.push_back(a.name(id));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(VerifyAxioms, CompleteBipartiteUnitPasses) {
  const auto a = build_complete_bipartite(1, 1);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_TRUE(verify_axioms(a).all_passed());
}

TEST(VerifyAxioms, M5FailsOnlyDistributivity) {
  const auto m5 = oracle::m5();
  const auto report = verify_axioms(m5);
  ASSERT_EQ(report.failed(), std::vector<Axiom>{Axiom::kDistrib});
  const auto& w = report.result(Axiom::kDistrib).witness;
  ASSERT_EQ(w.size(), 3u);
  const ElementId x = w[0], y = w[1], z = w[2];
  EXPECT_NE(m5.mul(x, m5.add(y, z)), m5.add(m5.mul(x, y), m5.mul(x, z)));
}

TEST(VerifyAxioms, NonIdempotentAdditionFails) {
  // {0, 1, a} with a + a = 1.
  std::vector<ElementId> add{0, 1, 2, 1, 1, 1, 2, 1, 1};
  std::vector<ElementId> mul{0, 0, 0, 0, 1, 2, 0, 2, 0};
  FinitePoSemiring a({"0", "1", "a"}, 0, 1, add, mul);
  const auto report = verify_axioms(a);
  EXPECT_FALSE(report.result(Axiom::kAddIdem).passed);
  EXPECT_EQ(report.result(Axiom::kAddIdem).witness, std::vector<ElementId>{2});
}

TEST(VerifyAxioms, WitnessIsLexicographicallyFirst) {
  const auto m5 = oracle::m5();
  const auto& w = verify_axioms(m5).result(Axiom::kDistrib).witness;
  const auto n = static_cast<ElementId>(m5.size());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        const std::vector<ElementId> t{x, y, z};
        if (t >= w) continue;
        EXPECT_EQ(m5.mul(x, m5.add(y, z)), m5.add(m5.mul(x, y), m5.mul(x, z)));
      }
    }
  }
}

TEST(DerivedOrder, KnChainIsTotal) {
  const auto a = build_kn(3);
  const auto order = derived_order(a);
  const std::vector<std::string> chain{"0", "a1", "a2", "a3", "1"};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      EXPECT_EQ(order.leq(a.at(chain[i]), a.at(chain[j])), i <= j);
    }
  }
}

TEST(DerivedOrder, ZeroIsLeastOneIsGreatest) {
  const auto a = build_cbh(2, 1, 2);
  const auto order = derived_order(a);
  for (ElementId x = 0; x < a.size(); ++x) {
    EXPECT_TRUE(order.leq(a.zero(), x));
    EXPECT_TRUE(order.leq(x, a.one()));
  }
}

TEST(DerivedOrder, K33AtomsPairwiseIncomparable) {
  const auto a = build_k33(1, 1, 1);
  const auto order = derived_order(a);
  const std::vector<std::string> atoms{"a1", "a2", "a3"};
  for (const auto& p : atoms) {
    for (const auto& q : atoms) {
      if (p != q) EXPECT_FALSE(order.leq(a.at(p), a.at(q)));
    }
  }
}

TEST(DerivedOrder, ThrowsOnNonAntisymmetricRelation) {
  // a + b = b and b + a = a.
  std::vector<ElementId> add{0, 1, 2, 3, 1, 1, 1, 1, 2, 1, 2, 3, 3, 1, 2, 3};
  std::vector<ElementId> mul(16, 0);
  FinitePoSemiring a({"0", "1", "a", "b"}, 0, 1, add, mul);
  EXPECT_THROW(derived_order(a), OrderError);
}

TEST(MinimalElements, K33UnitHorns) {
  const auto a = build_k33(1, 1, 1);
  EXPECT_EQ(names(a, minimal_elements(a)),
            (std::vector<std::string>{"a1", "a2", "a3"}));
}

TEST(MinimalElements, ChainHasOneAtom) {
  const auto a = build_kn(4);
  EXPECT_EQ(names(a, minimal_elements(a)), std::vector<std::string>{"a1"});
}

TEST(MinimalElements, CbhUnitSetsByOrderScan) {
  const auto a = build_cbh(1, 1, 1);
  const auto order = derived_order(a);
  std::vector<std::string> expected;
  for (ElementId x = 0; x < a.size(); ++x) {
    if (x == a.zero()) continue;
    bool minimal = true;
    for (ElementId y = 0; y < a.size(); ++y) {
      if (y != a.zero() && y != x && order.leq(y, x)) minimal = false;
    }
    if (minimal) expected.push_back(a.name(x));
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(expected, (std::vector<std::string>{"u1", "v"}));
  EXPECT_EQ(names(a, minimal_elements(a)), expected);
}

TEST(ZeroDivisors, CompleteBipartiteExcludesW) {
  const auto a = build_complete_bipartite(2, 2);
  EXPECT_EQ(names(a, zero_divisors(a)),
            (std::vector<std::string>{"x1", "x2", "y1", "y2"}));
}

TEST(ZeroDivisors, IsolatedVertex) {
  const auto a = build_isolated();
  EXPECT_EQ(names(a, zero_divisors(a)), std::vector<std::string>{"a"});
}

TEST(ZeroDivisors, NoZeroProducts) {
  // Chain 0 < a < 1 with a * a = a.
  std::vector<ElementId> add{0, 1, 2, 1, 1, 1, 2, 1, 2};
  std::vector<ElementId> mul{0, 0, 0, 0, 1, 2, 0, 2, 2};
  FinitePoSemiring a({"0", "1", "a"}, 0, 1, add, mul);
  EXPECT_TRUE(verify_axioms(a).all_passed());
  EXPECT_TRUE(zero_divisors(a).empty());
}

TEST(ZeroDivisorGraph, IsolatedHasNoLoop) {
  const auto g = zero_divisor_graph(build_isolated());
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(ZeroDivisorGraph, KnIsComplete) {
  const auto g = zero_divisor_graph(build_kn(4));
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 6u);
}

TEST(ZeroDivisorGraph, K33HasSixVertices) {
  const auto g = zero_divisor_graph(build_k33(1, 1, 1));
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 6u);
}

TEST(PoSemiringIsomorphism, IdentityAndRelabeling) {
  const auto a = build_cbh(2, 1, 1);
  const auto phi = is_isomorphic_posemiring(a, a);
  ASSERT_TRUE(phi);
  for (ElementId i = 0; i < a.size(); ++i) EXPECT_EQ((*phi)[i], i);

  // Reverse the element order.
  const std::size_t n = a.size();
  auto r = [&](ElementId x) { return static_cast<ElementId>(n - 1 - x); };
  std::vector<std::string> names_rev(n);
  std::vector<ElementId> add(n * n), mul(n * n);
  for (ElementId x = 0; x < n; ++x) {
    names_rev[r(x)] = a.name(x);
    for (ElementId y = 0; y < n; ++y) {
      add[r(x) * n + r(y)] = r(a.add(x, y));
      mul[r(x) * n + r(y)] = r(a.mul(x, y));
    }
  }
  FinitePoSemiring b(names_rev, r(a.zero()), r(a.one()), add, mul);
  EXPECT_TRUE(is_isomorphic_posemiring(a, b));
}

TEST(PoSemiringIsomorphism, CbhVersusAlternative) {
  const auto a = build_cbh(2, 1, 2);
  const auto b = build_cbh_alt(2, 1, 2);
  EXPECT_EQ(a.size(), 9u);
  EXPECT_EQ(b.size(), 12u);
  EXPECT_FALSE(is_isomorphic_posemiring(a, b));
}

TEST(FileFormat, RoundTrip) {
  for (const auto& a : {build_isolated(), build_cbh(1, 2, 1), build_k33(2, 1, 1)}) {
    const std::string text = serialize_posemiring(a);
    const auto b = parse_posemiring(text);
    EXPECT_EQ(a, b);
    EXPECT_EQ(serialize_posemiring(b), text);
  }
}

TEST(FileFormat, IsolatedHasThreeElements) {
  const auto a = parse_posemiring(serialize_posemiring(build_isolated()));
  EXPECT_EQ(a.size(), 3u);
}

TEST(FileFormat, MissingOneIsAnError) {
  const std::string text = R"({"elements": ["0", "a"], "zero": "0",
    "add": [["0", "a"], ["a", "a"]], "mul": [["0", "0"], ["0", "a"]]})";
  EXPECT_THROW(parse_posemiring(text), ParseError);
}

TEST(FileFormat, UnknownElementIsAnError) {
  const std::string text = R"({"elements": ["0", "1"], "zero": "0", "one": "1",
    "add": [["0", "1"], ["1", "q"]], "mul": [["0", "0"], ["0", "1"]]})";
  EXPECT_THROW(parse_posemiring(text), ParseError);
}

TEST(FileFormat, DuplicateNamesAreAnError) {
  const std::string text = R"({"elements": ["0", "0"], "zero": "0", "one": "0",
    "add": [["0", "0"], ["0", "0"]], "mul": [["0", "0"], ["0", "0"]]})";
  EXPECT_THROW(parse_posemiring(text), ParseError);
}

TEST(FileFormat, SyntaxErrorReportsLine) {
  try {
    parse_posemiring("{\n  \"elements\": [\"0\",\n  ]\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 2u);
  }
}

TEST(Structure, RejectsBadShapes) {
  std::vector<ElementId> t{0, 0, 0, 0};
  EXPECT_THROW(FinitePoSemiring({"0", "1"}, 0, 0, t, t), StructureError);
  EXPECT_THROW(FinitePoSemiring({"0", "1"}, 0, 1, {0, 0, 0}, t), StructureError);
  EXPECT_THROW(FinitePoSemiring({"0", "1"}, 0, 1, {0, 1, 1, 5}, t), StructureError);
}

TEST(MinimalMiddle, NoViolationsOnBuilders) {
  for (const auto& a : {build_cbh(2, 2, 2), build_k33(1, 2, 1), build_kn1(4, 2)}) {
    EXPECT_TRUE(minimal_middle_violations(a).empty());
  }
}

}  // namespace
}  // namespace posemi

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

#include <random>

#include "oracles.hpp"
#include "posemi/classify.hpp"
#include "posemi/constructions.hpp"
#include "posemi/ring.hpp"
#include "posemi/search.hpp"

namespace posemi {
namespace {

// Every structure produced anywhere in the library, small parameters.
std::vector<FinitePoSemiring> corpus() {
  std::vector<FinitePoSemiring> out{build_isolated()};
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      out.push_back(build_complete_bipartite(a, b));
      for (std::size_t c = 1; c <= 2; ++c) {
        out.push_back(build_cbh(a, b, c));
        out.push_back(build_cbh_alt(a, b, c));
        out.push_back(build_k33(a, b, c));
      }
    }
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    out.push_back(build_kn(n));
    out.push_back(build_kn1(n, 2));
    if (n >= 4) out.push_back(build_kn2(n, 2, 1));
  }
  for (const char* spec : {"Z12", "Z32", "Z2xZ2xZ2", "F3[x]/(x^2)xZ2", "Z4xZ9", "Z8xZ2"}) {
    out.push_back(ideal_posemiring(enumerate_ideals(parse_ring_spec(spec))));
  }
  return out;
}

// Independent formulation: (A, +, 0) a join-semilattice with bottom 0 and
// top 1, (A, *, 1) a commutative monoid with absorbing 0, distributivity and
// monotone multiplication.
bool oracle_is_posemiring(const FinitePoSemiring& s) {
  const auto n = static_cast<ElementId>(s.size());
  auto le = [&](ElementId a, ElementId b) { return s.add(a, b) == b; };
  for (ElementId a = 0; a < n; ++a) {
    if (s.add(a, a) != a || s.add(s.zero(), a) != a || s.add(a, s.one()) != s.one()) {
      return false;
    }
    if (s.mul(s.one(), a) != a || s.mul(s.zero(), a) != s.zero()) return false;
    for (ElementId b = 0; b < n; ++b) {
      if (s.add(a, b) != s.add(b, a) || s.mul(a, b) != s.mul(b, a)) return false;
      if (a != b && le(a, b) && le(b, a)) return false;
      for (ElementId c = 0; c < n; ++c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) return false;
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) return false;
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) return false;
        if (le(a, b) && (!le(s.add(a, c), s.add(b, c)) || !le(s.mul(a, c), s.mul(b, c)))) {
          return false;
        }
      }
    }
  }
  return true;
}

FinitePoSemiring relabel(const FinitePoSemiring& a, const std::vector<ElementId>& p) {
  const std::size_t n = a.size();
  std::vector<std::string> names(n);
  std::vector<ElementId> add(n * n), mul(n * n);
  for (ElementId x = 0; x < n; ++x) {
    names[p[x]] = a.name(x);
    for (ElementId y = 0; y < n; ++y) {
      add[p[x] * n + p[y]] = p[a.add(x, y)];
      mul[p[x] * n + p[y]] = p[a.mul(x, y)];
    }
  }
  return FinitePoSemiring(names, p[a.zero()], p[a.one()], add, mul);
}

TEST(Properties, CorpusPassesAxioms) {
  for (const auto& a : corpus()) {
    EXPECT_TRUE(verify_axioms(a).all_passed());
    EXPECT_TRUE(oracle_is_posemiring(a));
  }
}

TEST(Properties, DioidIdentities) {
  for (const auto& a : corpus()) {
    for (ElementId x = 0; x < a.size(); ++x) {
      EXPECT_EQ(a.add(x, x), x);
      EXPECT_EQ(a.add(x, a.one()), a.one());
      EXPECT_EQ(a.add(a.zero(), x), x);
      EXPECT_EQ(a.mul(a.zero(), x), a.zero());
    }
  }
}

TEST(Properties, Monotonicity) {
  for (const auto& a : corpus()) {
    const auto n = static_cast<ElementId>(a.size());
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (!a.leq(x, y)) continue;
        for (ElementId z = 0; z < n; ++z) {
          EXPECT_TRUE(a.leq(a.add(x, z), a.add(y, z)));
          EXPECT_TRUE(a.leq(a.mul(x, z), a.mul(y, z)));
        }
      }
    }
  }
}

TEST(Properties, MinimalMiddleVertex) {
  for (const auto& a : corpus()) EXPECT_TRUE(minimal_middle_violations(a).empty());
}

TEST(Properties, MinimalElementsAreZeroDivisors) {
  for (const auto& a : corpus()) {
    const auto zd = zero_divisors(a);
    if (zd.size() < 2) continue;
    for (ElementId m : minimal_elements(a)) {
      EXPECT_TRUE(std::find(zd.begin(), zd.end(), m) != zd.end()) << a.name(m);
    }
  }
}

TEST(Properties, GraphIsSimple) {
  for (const auto& a : corpus()) {
    const auto g = zero_divisor_graph(a);
    for (VertexId v = 0; v < g.num_vertices(); ++v) EXPECT_FALSE(g.has_edge(v, v));
    EXPECT_EQ(g.edges().size(), g.num_edges());
  }
}

TEST(Properties, TriangleFreeBipartiteEquivalence) {
  for (const auto& a : corpus()) {
    const auto g = zero_divisor_graph(a);
    if (g.num_vertices() < 2) continue;
    const auto c = classify(g);
    const bool cb = c.contains<CompleteBipartite>() || c.contains<CompleteBipartiteHorn>();
    EXPECT_EQ(is_triangle_free(g), is_bipartite(g));
    EXPECT_EQ(is_bipartite(g), cb);
  }
}

TEST(Properties, RelabelingPreservesEverything) {
  std::mt19937 rng(42);
  for (const auto& a : corpus()) {
    std::vector<ElementId> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const auto b = relabel(a, p);
    EXPECT_TRUE(verify_axioms(b).all_passed());
    EXPECT_TRUE(is_isomorphic_posemiring(a, b));
    EXPECT_TRUE(is_isomorphic(zero_divisor_graph(a), zero_divisor_graph(b)));
  }
}

TEST(Properties, VerifyMatchesOracleOnMutations) {
  std::mt19937 rng(1234);
  const auto base = corpus();
  int failures = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto& a = base[rng() % base.size()];
    const std::size_t n = a.size();
    std::vector<ElementId> add(a.add_table().begin(), a.add_table().end());
    std::vector<ElementId> mul(a.mul_table().begin(), a.mul_table().end());
    const ElementId x = rng() % n, y = rng() % n, v = rng() % n;
    auto& table = rng() % 2 ? add : mul;
    table[x * n + y] = v;
    if (rng() % 2) table[y * n + x] = v;
    const FinitePoSemiring m(a.names(), a.zero(), a.one(), add, mul);
    const bool ok = verify_axioms(m).all_passed();
    EXPECT_EQ(ok, oracle_is_posemiring(m));
    failures += !ok;
  }
  EXPECT_GT(failures, 100);
}

TEST(Properties, IdealLatticeIsBoundedLattice) {
  for (const auto& spec : ring_corpus()) {
    const auto r = parse_ring_spec(spec);
    if (r.size() > 100) continue;
    const auto l = enumerate_ideals(r);
    const std::size_t n = l.size();
    EXPECT_EQ(l.ideals.front(), zero_ideal(r));
    EXPECT_EQ(l.ideals.back(), unit_ideal(r));
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_TRUE(is_ideal(r, l.ideals[a]));
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t s = l.sum_of(a, b);
        EXPECT_TRUE(l.leq(a, s) && l.leq(b, s));
        for (std::size_t c = 0; c < n; ++c) {
          if (l.leq(a, c) && l.leq(b, c)) EXPECT_TRUE(l.leq(s, c));
        }
        EXPECT_TRUE(l.leq(l.product_of(a, b), a));
      }
    }
  }
}

TEST(Properties, AgIdentityOnCorpus) {
  for (const auto& spec : ring_corpus()) {
    const auto l = enumerate_ideals(parse_ring_spec(spec));
    EXPECT_EQ(ag_graph(l), zero_divisor_graph(ideal_posemiring(l))) << spec;
  }
}

TEST(Properties, SearchWitnessesReverify) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    oracle::Adj a(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 2) a.e[i][j] = a.e[j][i] = true;
      }
    }
    SearchProblem p;
    p.target = a.graph();
    const auto out = search_semigroup(p);
    if (!out.semigroup) continue;
    std::vector<int> mul(out.semigroup->mul.begin(), out.semigroup->mul.end());
    EXPECT_TRUE(oracle::associative(mul, static_cast<int>(out.semigroup->size())));
    EXPECT_TRUE(is_isomorphic(semigroup_graph(*out.semigroup), p.target));
  }
}

}  // namespace
}  // namespace posemi

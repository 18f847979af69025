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
#include <random>

#include "oracles.hpp"
#include "posemi/classify.hpp"
#include "posemi/constructions.hpp"
#include "posemi/graph.hpp"

namespace posemi {
namespace {

std::vector<std::string> names(const SimpleGraph& g,
                               const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph p4() { return parse_graph("a b\nb c\nc d\n"); }

TEST(EndVertices, Examples) {
  EXPECT_EQ(names(p4(), end_vertices(p4())), (std::vector<std::string>{"a", "d"}));
  EXPECT_TRUE(end_vertices(complete_graph(3)).empty());
  const auto k33 = clique_with_horns(3, {1, 1, 1});
  EXPECT_EQ(names(k33, end_vertices(k33)),
            (std::vector<std::string>{"x1", "y1", "z1"}));
}

TEST(Core, TreeIsEmpty) {
  EXPECT_TRUE(core(path_graph(5)).empty());
  EXPECT_TRUE(core(complete_bipartite_graph(1, 4)).empty());
}

TEST(Core, CliqueWithTwoHornsMatchesCycleOracle) {
  const auto g = clique_with_horns(3, {2, 1});
  const auto c = core(g);
  const std::set<std::string> got(c.names().begin(), c.names().end());
  EXPECT_EQ(got, oracle::cycle_vertices(g));
  EXPECT_EQ(got, (std::set<std::string>{"a1", "a2", "a3"}));
  EXPECT_EQ(c.num_edges(), 3u);
}

TEST(Core, CycleIsItsOwnCore) {
  const auto c4 = cycle_graph(4);
  EXPECT_EQ(core(c4), c4);
}

TEST(Core, AgreesWithCycleEnumerationOnRandomGraphs) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    oracle::Adj a(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) a.e[i][j] = a.e[j][i] = true;
      }
    }
    const auto g = a.graph();
    const auto c = core(g);
    const std::set<std::string> got(c.names().begin(), c.names().end());
    EXPECT_EQ(got, oracle::cycle_vertices(g)) << format_graph(g);
  }
}

TEST(Horns, Examples) {
  const auto star = complete_bipartite_graph(1, 4);
  const auto h = horns(star);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.begin()->second.size(), 4u);

  const auto k32 = clique_with_horns(3, {2, 1});
  std::vector<std::size_t> sizes;
  for (const auto& [center, ends] : horns(k32)) sizes.push_back(ends.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2}));

  EXPECT_TRUE(horns(complete_graph(4)).empty());
}

TEST(TriangleFreeBipartite, Examples) {
  EXPECT_TRUE(is_triangle_free(cycle_graph(5)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_FALSE(is_triangle_free(complete_graph(3)));
  EXPECT_FALSE(is_bipartite(complete_graph(3)));
  EXPECT_TRUE(is_triangle_free(complete_bipartite_graph(2, 3)));
  EXPECT_TRUE(is_bipartite(complete_bipartite_graph(2, 3)));
}

TEST(GraphIo, ParsesPathAndRoundTrips) {
  const auto g = parse_graph("a b\nb c\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(parse_graph(format_graph(g)), g);
  const auto h = parse_graph("# comment\nvertex w\na b  # trailing\n");
  EXPECT_EQ(h.num_vertices(), 3u);
  EXPECT_EQ(h.num_edges(), 1u);
}

TEST(GraphIo, Errors) {
  EXPECT_THROW(parse_graph("a a\n"), GraphError);
  EXPECT_THROW(parse_graph("a b\nb a\n"), GraphError);
  EXPECT_THROW(parse_graph("a b c\n"), GraphError);
}

TEST(GraphIo, DotIsSortedAndStable) {
  SimpleGraph g;
  g.add_vertex("b");
  g.add_vertex("a");
  g.add_edge("b", "a");
  EXPECT_EQ(emit_dot(g), "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
}

TEST(Classify, P4) {
  const auto c = classify(p4());
  const std::vector<GraphClass> expected{
      CompleteBipartiteHorn{1, 1, 1}, CliqueWithHorns{2, {1, 1}}, Tree{},
      TriangleFree{}, Bipartite{}};
  for (const auto& m : expected) EXPECT_TRUE(c.contains(m)) << to_string(m);
  EXPECT_EQ(c.memberships.size(), expected.size());
  EXPECT_EQ(c.posemiring.verdict, Verdict::kYes);
  EXPECT_EQ(c.annihilating_ideal.verdict, Verdict::kYes);
}

TEST(Classify, K23) {
  const auto c = classify(complete_bipartite_graph(2, 3));
  EXPECT_TRUE(c.contains(CompleteBipartite{2, 3}));
  EXPECT_TRUE(c.contains(Bipartite{}));
  EXPECT_TRUE(c.contains(TriangleFree{}));
  EXPECT_FALSE(c.contains<Tree>());
  EXPECT_FALSE(c.contains<CliqueWithHorns>());
}

TEST(Classify, TriangleWithOneHorn) {
  const auto c = classify(clique_with_horns(3, {1}));
  EXPECT_EQ(c.memberships, std::vector<GraphClass>{(CliqueWithHorns{3, {1}})});
}

TEST(Classify, IsolatedVertex) {
  const auto c = classify(parse_graph("vertex a\n"));
  EXPECT_TRUE(c.contains(IsolatedVertex{}));
  EXPECT_EQ(c.posemiring.verdict, Verdict::kYes);
}

TEST(Classify, CbhEdgeCount) {
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t u = 1; u <= 3; ++u) {
      for (std::size_t y = 1; y <= 3; ++y) {
        const auto g = cbh_graph(x, u, y);
        const auto c = classify(g);
        const auto cbh = c.all<CompleteBipartiteHorn>();
        ASSERT_FALSE(cbh.empty());
        for (const auto& h : cbh) {
          EXPECT_EQ(g.num_edges(), h.x * h.u + h.u + h.y);
        }
      }
    }
  }
}

TEST(Classify, CliqueWithHornsCounts) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t m = 0; m <= std::min<std::size_t>(n, 3); ++m) {
      std::vector<std::size_t> sizes(m, 2);
      if (m) sizes[0] = 3;
      const auto g = clique_with_horns(n, sizes);
      const auto ks = classify(g).all<CliqueWithHorns>();
      ASSERT_EQ(ks.size(), 1u);
      std::size_t total = 0;
      for (auto s : ks[0].horn_sizes) total += s;
      EXPECT_EQ(g.num_vertices(), ks[0].n + total);
      EXPECT_EQ(g.num_edges(), ks[0].n * (ks[0].n - 1) / 2 + total);
    }
  }
}

TEST(Classify, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    oracle::Adj a(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 2) a.e[i][j] = a.e[j][i] = true;
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    oracle::Adj b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b.e[perm[i]][perm[j]] = a.e[i][j];
    }
    auto ca = classify(a.graph());
    auto cb = classify(b.graph());
    EXPECT_EQ(ca, cb);
  }
}

TEST(Isomorphism, Examples) {
  const auto g = clique_with_horns(3, {2, 1});
  const auto h = parse_graph("p q\nq r\nr p\nr s\nr t\np u\n");
  const auto phi = is_isomorphic(g, h);
  ASSERT_TRUE(phi);
  for (const auto& [u, v] : g.edges()) EXPECT_TRUE(h.has_edge((*phi)[u], (*phi)[v]));
  EXPECT_FALSE(is_isomorphic(complete_bipartite_graph(2, 2), path_graph(4)));
  EXPECT_TRUE(is_isomorphic(zero_divisor_graph(build_k33(1, 1, 1)),
                            clique_with_horns(3, {1, 1, 1})));
}

TEST(Isomorphism, PetersenAutomorphicImage) {
  const auto g = petersen_graph();
  EXPECT_TRUE(is_isomorphic(g, g));
  EXPECT_FALSE(is_isomorphic(g, cycle_graph(10)));
}

TEST(PoSemiringVerdict, Examples) {
  EXPECT_EQ(classify(cycle_graph(6)).posemiring.verdict, Verdict::kNo);
  EXPECT_EQ(classify(clique_with_horns(5, {1, 1})).posemiring.verdict, Verdict::kYes);
  EXPECT_EQ(classify(clique_with_horns(4, {1, 1, 1})).posemiring.verdict, Verdict::kNo);
  EXPECT_EQ(classify(clique_with_horns(3, {1, 1, 1})).posemiring.verdict, Verdict::kYes);
  EXPECT_EQ(classify(path_graph(5)).posemiring.verdict, Verdict::kNo);
}

TEST(PoSemiringVerdict, TriangleWithTwoHornsIsNo) {
  const auto v = classify(clique_with_horns(3, {1, 1})).posemiring;
  EXPECT_EQ(v.verdict, Verdict::kNo);
  EXPECT_EQ(v.citation, "k3-two-horns-obstruction");
}

TEST(SemigroupVerdict, Examples) {
  EXPECT_EQ(classify(clique_with_horns(4, {1, 1, 1, 1})).semigroup.verdict, Verdict::kNo);
  EXPECT_EQ(classify(clique_with_horns(3, {1, 1, 1})).semigroup.verdict, Verdict::kYes);
  EXPECT_EQ(classify(petersen_graph()).semigroup.verdict, Verdict::kUnknown);
}

TEST(AgVerdict, Examples) {
  EXPECT_EQ(classify(clique_with_horns(5, {1, 1})).annihilating_ideal.verdict, Verdict::kNo);
  EXPECT_EQ(classify(clique_with_horns(3, {1, 1, 1})).annihilating_ideal.verdict,
            Verdict::kYes);
  EXPECT_EQ(classify(clique_with_horns(3, {2, 1, 1})).annihilating_ideal.verdict,
            Verdict::kNo);
  EXPECT_EQ(classify(cbh_graph(1, 2, 2)).annihilating_ideal.verdict, Verdict::kNo);
}

TEST(Verdicts, ConsistentWithMemberships) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : oracle::all_graphs(n)) {
      const auto c = classify(a.graph());
      const bool cb = c.contains<CompleteBipartite>() ||
                      c.contains<CompleteBipartiteHorn>() ||
                      c.contains<IsolatedVertex>();
      if (cb) EXPECT_EQ(c.posemiring.verdict, Verdict::kYes);
      if (c.posemiring.verdict == Verdict::kYes &&
          !c.contains<CliqueWithHorns>()) {
        EXPECT_TRUE(cb);
      }
      if (c.contains<Bipartite>() && n >= 2 && !cb) {
        EXPECT_EQ(c.posemiring.verdict, Verdict::kNo);
      }
    }
  }
}

}  // namespace
}  // namespace posemi

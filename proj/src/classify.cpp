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

#include "posemi/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace posemi {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string to_string(const GraphClass& c) {
  return std::visit(
      Overloaded{
          [](const CompleteBipartite& k) {
            return "CompleteBipartite{" + std::to_string(k.r) + "," +
                   std::to_string(k.s) + "}";
          },
          [](const CompleteBipartiteHorn& k) {
            return "CompleteBipartiteHorn{" + std::to_string(k.x) + "," +
                   std::to_string(k.u) + "," + std::to_string(k.y) + "}";
          },
          [](const CliqueWithHorns& k) {
            std::string out = "CliqueWithHorns{" + std::to_string(k.n) + ",[";
            for (std::size_t i = 0; i < k.horn_sizes.size(); ++i) {
              if (i) out += ',';
              out += std::to_string(k.horn_sizes[i]);
            }
            return out + "]}";
          },
          [](const IsolatedVertex&) { return std::string("IsolatedVertex"); },
          [](const Tree&) { return std::string("Tree"); },
          [](const TriangleFree&) { return std::string("TriangleFree"); },
          [](const Bipartite&) { return std::string("Bipartite"); },
          [](const Other&) { return std::string("Other"); },
      },
      c);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

bool GraphClassification::contains(const GraphClass& c) const {
  return std::find(memberships.begin(), memberships.end(), c) !=
         memberships.end();
}

std::optional<CompleteBipartite> recognize_complete_bipartite(
    const SimpleGraph& g) {
  if (g.num_vertices() < 2 || !is_connected(g)) return std::nullopt;
  const auto colors = two_coloring(g);
  if (!colors) return std::nullopt;
  const auto r = static_cast<std::size_t>(
      std::count(colors->begin(), colors->end(), 0));
  const std::size_t s = g.num_vertices() - r;
  if (g.num_edges() != r * s) return std::nullopt;
  return CompleteBipartite{std::min(r, s), std::max(r, s)};
}

std::optional<CompleteBipartiteHorn> recognize_cbh(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 4) return std::nullopt;
  std::optional<CompleteBipartiteHorn> best;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<char> role(n, 'x');  // x, u, y or v
    role[v] = 'v';
    std::size_t ys = 0, us = 0;
    for (VertexId w : g.neighbors(v)) {
      if (g.degree(w) == 1) {
        role[w] = 'y';
        ++ys;
      } else {
        role[w] = 'u';
        ++us;
      }
    }
    const std::size_t xs = n - 1 - ys - us;
    if (ys == 0 || us == 0 || xs == 0) continue;
    if (g.num_edges() != xs * us + us + ys) continue;
    bool ok = true;
    for (VertexId w = 0; w < n && ok; ++w) {
      if (role[w] == 'x') {
        // N(x) = U exactly; the edge count then pins the rest.
        if (g.degree(w) != us) ok = false;
        for (VertexId t : g.neighbors(w)) {
          if (role[t] != 'u') ok = false;
        }
      } else if (role[w] == 'u') {
        if (g.degree(w) != xs + 1) ok = false;
      }
    }
    if (!ok) continue;
    CompleteBipartiteHorn found{xs, us, ys};
    if (us == 1 && found.x > found.y) std::swap(found.x, found.y);
    if (!best || found < *best) best = found;
  }
  return best;
}

std::vector<CliqueWithHorns> recognize_clique_with_horns(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<CliqueWithHorns> out;
  if (n == 0) return out;

  auto try_clique = [&](const std::vector<char>& in_clique) {
    std::vector<VertexId> clique;
    for (VertexId v = 0; v < n; ++v) {
      if (in_clique[v]) clique.push_back(v);
    }
    if (clique.empty()) return;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!g.has_edge(clique[i], clique[j])) return;
      }
    }
    std::vector<std::size_t> horn_count(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (in_clique[v]) continue;
      if (g.degree(v) != 1 || !in_clique[g.neighbors(v).front()]) return;
      ++horn_count[g.neighbors(v).front()];
    }
    const std::size_t k = clique.size();
    if (g.num_edges() != k * (k - 1) / 2 + (n - k)) return;
    CliqueWithHorns found{k, {}};
    for (VertexId v : clique) {
      if (horn_count[v] > 0) found.horn_sizes.push_back(horn_count[v]);
    }
    std::sort(found.horn_sizes.rbegin(), found.horn_sizes.rend());
    out.push_back(std::move(found));
  };

  if (n <= 3) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<char> in_clique(n, 0);
      for (VertexId v = 0; v < n; ++v) in_clique[v] = (mask >> v) & 1u;
      try_clique(in_clique);
    }
  } else {
    std::vector<char> in_clique(n, 0);
    for (VertexId v = 0; v < n; ++v) in_clique[v] = g.degree(v) != 1;
    try_clique(in_clique);
  }

  // A star K1(s) is also K2(1) with one leaf promoted into the clique.
  const std::size_t found = out.size();
  for (std::size_t i = 0; i < found; ++i) {
    if (out[i].n == 1 && out[i].horns() == 1 && out[i].horn_sizes[0] >= 2) {
      CliqueWithHorns k2{2, {out[i].horn_sizes[0] - 1}};
      out.push_back(std::move(k2));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// K3(2) has no realizing po-semiring for any horn sizes.
bool k3_two_horns(const CliqueWithHorns& k) {
  return k.n == 3 && k.horns() == 2;
}

bool realizable_clique_horns(const CliqueWithHorns& k) {
  const std::size_t m = k.horns();
  if (k3_two_horns(k)) return false;
  return m <= std::min<std::size_t>(2, k.n) || (k.n == 3 && m == 3);
}

bool semigroup_obstructed(const CliqueWithHorns& k) {
  return k.n >= 4 && k.horns() >= 3 && k.horns() <= k.n;
}

}  // namespace

RuleVerdict posemiring_verdict(const GraphClassification& c,
                               std::size_t num_vertices) {
  if (c.contains<IsolatedVertex>()) {
    return {Verdict::kYes, "isolated-vertex-construction"};
  }
  if (c.contains<CompleteBipartite>()) {
    return {Verdict::kYes, "complete-bipartite-construction"};
  }
  if (c.contains<CompleteBipartiteHorn>()) {
    return {Verdict::kYes, "bipartite-horn-construction"};
  }
  for (const auto& k : c.all<CliqueWithHorns>()) {
    if (realizable_clique_horns(k)) {
      return {Verdict::kYes, "clique-horn-realizability"};
    }
  }
  for (const auto& k : c.all<CliqueWithHorns>()) {
    if (semigroup_obstructed(k)) {
      return {Verdict::kNo, "clique-horn-realizability"};
    }
    if (k3_two_horns(k)) return {Verdict::kNo, "k3-two-horns-obstruction"};
  }
  if (c.contains<Tree>()) {
    return {Verdict::kNo, "tree-realizability"};
  }
  if (c.contains<Bipartite>() && num_vertices >= 2) {
    return {Verdict::kNo, "bipartite-realizability"};
  }
  return {Verdict::kUnknown, ""};
}

RuleVerdict semigroup_verdict(const GraphClassification& c) {
  for (const auto& k : c.all<CliqueWithHorns>()) {
    if (semigroup_obstructed(k)) {
      return {Verdict::kNo, "clique-horn-semigroup-obstruction"};
    }
  }
  const RuleVerdict ps = posemiring_verdict(c, c.num_vertices);
  if (ps.verdict == Verdict::kYes) {
    return {Verdict::kYes, "multiplicative-reduct:" + ps.citation};
  }
  return {Verdict::kUnknown, ""};
}

RuleVerdict ag_verdict(const GraphClassification& c) {
  for (const auto& k : c.all<CliqueWithHorns>()) {
    if (k.n >= 3 && k.horns() == 2) {
      return {Verdict::kNo, "ag-no-clique-with-two-horns"};
    }
  }
  for (const auto& k : c.all<CliqueWithHorns>()) {
    if (k.n == 3 && k.horns() == 3) {
      const bool unit = std::all_of(k.horn_sizes.begin(), k.horn_sizes.end(),
                                    [](std::size_t s) { return s == 1; });
      return unit ? RuleVerdict{Verdict::kYes, "ag-three-fields"}
                  : RuleVerdict{Verdict::kNo, "ag-three-fields-six-vertices"};
    }
  }
  for (const auto& h : c.all<CompleteBipartiteHorn>()) {
    if (h == CompleteBipartiteHorn{1, 1, 1}) {
      return {Verdict::kYes, "ag-domain-times-local"};
    }
    return {Verdict::kNo, "ag-domain-times-local"};
  }
  return {Verdict::kUnknown, ""};
}

GraphClassification classify(const SimpleGraph& g) {
  GraphClassification c;
  c.num_vertices = g.num_vertices();
  auto& m = c.memberships;
  bool structural = false;
  if (auto k = recognize_complete_bipartite(g)) {
    m.emplace_back(*k);
    structural = true;
  }
  if (auto k = recognize_cbh(g)) {
    m.emplace_back(*k);
    structural = true;
  }
  for (auto& k : recognize_clique_with_horns(g)) {
    m.emplace_back(std::move(k));
    structural = true;
  }
  if (g.num_vertices() == 1) {
    m.emplace_back(IsolatedVertex{});
    structural = true;
  }
  if (is_tree(g)) m.emplace_back(Tree{});
  if (is_triangle_free(g)) m.emplace_back(TriangleFree{});
  if (is_bipartite(g)) m.emplace_back(Bipartite{});
  if (!structural) m.emplace_back(Other{});
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());

  c.posemiring = posemiring_verdict(c, c.num_vertices);
  c.semigroup = semigroup_verdict(c);
  c.annihilating_ideal = ag_verdict(c);
  return c;
}

}  // namespace posemi

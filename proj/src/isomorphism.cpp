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
#include <map>

#include "posemi/classify.hpp"

namespace posemi {

namespace {

// Colour refinement on the disjoint union of g and h, starting from degrees.
// Colours are comparable across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const SimpleGraph& g,
                                                     const SimpleGraph& h) {
  const std::size_t ng = g.num_vertices();
  const std::size_t nh = h.num_vertices();
  std::vector<int> color(ng + nh);
  for (VertexId v = 0; v < ng; ++v) color[v] = static_cast<int>(g.degree(v));
  for (VertexId v = 0; v < nh; ++v) {
    color[ng + v] = static_cast<int>(h.degree(v));
  }
  auto neighbors = [&](std::size_t i) -> const std::vector<VertexId>& {
    return i < ng ? g.neighbors(static_cast<VertexId>(i))
                  : h.neighbors(static_cast<VertexId>(i - ng));
  };
  auto offset = [&](std::size_t i) { return i < ng ? 0 : ng; };

  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(color.size());
    for (std::size_t i = 0; i < color.size(); ++i) {
      std::vector<int> sig;
      for (VertexId w : neighbors(i)) sig.push_back(color[offset(i) + w]);
      std::sort(sig.begin(), sig.end());
      auto key = std::make_pair(color[i], std::move(sig));
      auto it = ids.try_emplace(std::move(key), static_cast<int>(ids.size()));
      next[i] = it.first->second;
    }
    color = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<int>(color.begin(), color.begin() + ng),
          std::vector<int>(color.begin() + ng, color.end())};
}

class GraphMatcher {
 public:
  GraphMatcher(const SimpleGraph& g, const SimpleGraph& h) : g_(g), h_(h) {}

  std::optional<std::vector<VertexId>> run() {
    auto [cg, ch] = refine(g_, h_);
    {
      auto sg = cg, sh = ch;
      std::sort(sg.begin(), sg.end());
      std::sort(sh.begin(), sh.end());
      if (sg != sh) return std::nullopt;
    }
    const std::size_t n = g_.num_vertices();
    candidates_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w = 0; w < n; ++w) {
        if (cg[v] == ch[w]) candidates_[v].push_back(w);
      }
    }
    // Smallest colour class first, then prefer vertices adjacent to already
    // ordered ones so adjacency checks bite early.
    std::vector<char> placed(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::optional<VertexId> best;
      long best_score = 0;
      for (VertexId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        long linked = 0;
        for (VertexId w : g_.neighbors(v)) linked += placed[w];
        const long score =
            linked * 1000 - static_cast<long>(candidates_[v].size());
        if (!best || score > best_score) {
          best = v;
          best_score = score;
        }
      }
      placed[*best] = 1;
      order_.push_back(*best);
    }
    phi_.assign(n, kUnset);
    used_.assign(n, 0);
    if (!extend(0)) return std::nullopt;
    return phi_;
  }

 private:
  static constexpr VertexId kUnset = ~VertexId{0};

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId v = order_[depth];
    for (VertexId w : candidates_[v]) {
      if (used_[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const VertexId u = order_[d];
        if (g_.has_edge(u, v) != h_.has_edge(phi_[u], w)) ok = false;
      }
      if (!ok) continue;
      phi_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      phi_[v] = kUnset;
      used_[w] = 0;
    }
    return false;
  }

  const SimpleGraph& g_;
  const SimpleGraph& h_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<VertexId> order_;
  std::vector<VertexId> phi_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<VertexId>> is_isomorphic(const SimpleGraph& g,
                                                   const SimpleGraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
    return std::nullopt;
  }
  return GraphMatcher(g, h).run();
}

}  // namespace posemi

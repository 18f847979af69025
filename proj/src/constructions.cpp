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

#include "posemi/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace posemi {

namespace {

// Generated element: kind is one of 0 1 w v a x y z u g, where g(i, j) is
// the grid element x_i + y_j.
struct E {
  char k = '0';
  std::size_t i = 0;
  std::size_t j = 0;
};

E zero() { return {'0'}; }
E one() { return {'1'}; }
E w() { return {'w'}; }
E v() { return {'v'}; }
E a(std::size_t i) { return {'a', i}; }
E x(std::size_t i) { return {'x', i}; }
E y(std::size_t i) { return {'y', i}; }
E z(std::size_t i) { return {'z', i}; }
E u(std::size_t i) { return {'u', i}; }
E g(std::size_t i, std::size_t j) { return {'g', i, j}; }

std::string name_of(const E& e) {
  switch (e.k) {
    case '0': return "0";
    case '1': return "1";
    case 'w': return "w";
    case 'v': return "v";
    case 'g': return "x" + std::to_string(e.i) + "+y" + std::to_string(e.j);
    case 'a':
      if (e.i == 0) return "a";
      break;
  }
  return std::string(1, e.k) + std::to_string(e.i);
}

int rank(char k) {
  static constexpr std::string_view kOrder = "01wvaxyzug";
  return static_cast<int>(kOrder.find(k));
}

using Rule = std::function<E(const E&, const E&)>;

// Elements, covers and a multiplication rule; the addition is the least
// upper bound in the order generated by the covers.
class Draft {
 public:
  Draft() {
    put(zero());
    put(one());
  }

  void put(const E& e) {
    index_.emplace(name_of(e), static_cast<ElementId>(elems_.size()));
    elems_.push_back(e);
  }

  // a < b; the bottom and top are added automatically.
  void cover(const E& lo, const E& hi) { covers_.emplace_back(lo, hi); }
  void chain(const std::vector<E>& c) {
    for (std::size_t k = 0; k + 1 < c.size(); ++k) cover(c[k], c[k + 1]);
  }

  FinitePoSemiring finish(const Rule& rule) const {
    const std::size_t n = elems_.size();
    std::vector<char> leq(n * n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      leq[p * n + p] = 1;
      leq[0 * n + p] = 1;
      leq[p * n + 1] = 1;
    }
    for (const auto& [lo, hi] : covers_) leq[id(lo) * n + id(hi)] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t p = 0; p < n; ++p) {
        if (!leq[p * n + k]) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (leq[k * n + q]) leq[p * n + q] = 1;
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (leq[p * n + q] && leq[q * n + p]) {
          throw std::logic_error("construction order has a cycle");
        }
      }
    }
    std::vector<ElementId> add(n * n), mul(n * n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        std::optional<std::size_t> lub;
        for (std::size_t c = 0; c < n; ++c) {
          if (!leq[p * n + c] || !leq[q * n + c]) continue;
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d) {
            if (leq[p * n + d] && leq[q * n + d] && !leq[c * n + d]) {
              least = false;
            }
          }
          if (least) lub = c;
        }
        if (!lub) throw std::logic_error("construction order is not a join");
        add[p * n + q] = static_cast<ElementId>(*lub);

        const E& ep = elems_[p];
        const E& eq = elems_[q];
        const bool swap = rank(eq.k) < rank(ep.k);
        const E& lo = swap ? eq : ep;
        const E& hi = swap ? ep : eq;
        E prod;
        if (lo.k == '0') {
          prod = zero();
        } else if (lo.k == '1') {
          prod = hi;
        } else {
          prod = rule(lo, hi);
        }
        mul[p * n + q] = id(prod);
      }
    }
    std::vector<std::string> names;
    for (const auto& e : elems_) names.push_back(name_of(e));
    return FinitePoSemiring(std::move(names), 0, 1, std::move(add),
                            std::move(mul));
  }

 private:
  ElementId id(const E& e) const {
    auto it = index_.find(name_of(e));
    if (it == index_.end()) {
      throw std::logic_error("construction refers to missing element " +
                             name_of(e));
    }
    return it->second;
  }

  std::vector<E> elems_;
  std::map<std::string, ElementId> index_;
  std::vector<std::pair<E, E>> covers_;
};

[[noreturn]] void unexpected(const E& p, const E& q) {
  throw std::logic_error("no product rule for " + name_of(p) + "*" +
                         name_of(q));
}

void require_positive(std::initializer_list<std::size_t> values,
                      std::string_view what) {
  for (std::size_t value : values) {
    if (value < 1) {
      throw ConstructionError(std::string(what) + ": sizes must be >= 1");
    }
  }
}

std::vector<E> run(char k, std::size_t count) {
  std::vector<E> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back({k, i});
  return out;
}

void put_all(Draft& d, const std::vector<E>& es) {
  for (const auto& e : es) d.put(e);
}

void put_grid(Draft& d, std::size_t nx, std::size_t ny) {
  for (std::size_t i = 1; i <= nx; ++i) {
    for (std::size_t j = 1; j <= ny; ++j) d.put(g(i, j));
  }
  for (std::size_t i = 1; i <= nx; ++i) d.cover(x(i), g(i, 1));
  for (std::size_t j = 1; j <= ny; ++j) d.cover(y(j), g(1, j));
  for (std::size_t i = 1; i <= nx; ++i) {
    for (std::size_t j = 1; j <= ny; ++j) {
      if (i < nx) d.cover(g(i, j), g(i + 1, j));
      if (j < ny) d.cover(g(i, j), g(i, j + 1));
    }
  }
}

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kCompleteBipartite: return "complete_bipartite";
    case ConstructionKind::kCbh: return "cbh";
    case ConstructionKind::kCbhAlt: return "cbh_alt";
    case ConstructionKind::kIsolated: return "isolated";
    case ConstructionKind::kKn: return "kn";
    case ConstructionKind::kKn1: return "kn1";
    case ConstructionKind::kKn2: return "kn2";
    case ConstructionKind::kK33: return "k33";
  }
  return "?";
}

std::optional<ConstructionKind> parse_construction_kind(std::string_view s) {
  for (ConstructionKind k : kAllConstructions) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::vector<std::string> parameter_names(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kCompleteBipartite: return {"x", "y"};
    case ConstructionKind::kCbh:
    case ConstructionKind::kCbhAlt: return {"x", "u", "y"};
    case ConstructionKind::kIsolated: return {};
    case ConstructionKind::kKn: return {"n"};
    case ConstructionKind::kKn1: return {"n", "x"};
    case ConstructionKind::kKn2: return {"n", "x", "y"};
    case ConstructionKind::kK33: return {"xs", "ys", "zs"};
  }
  return {};
}

FinitePoSemiring build_complete_bipartite(std::size_t nx, std::size_t ny) {
  require_positive({nx, ny}, "complete_bipartite");
  Draft d;
  d.put(w());
  const auto xs = run('x', nx), ys = run('y', ny);
  put_all(d, xs);
  put_all(d, ys);
  d.chain(xs);
  d.chain(ys);
  d.cover(xs.back(), w());
  d.cover(ys.back(), w());
  return d.finish([](const E& p, const E& q) -> E {
    if (p.k == 'w') {
      if (q.k == 'w') return w();
      if (q.k == 'x') return x(1);
      if (q.k == 'y') return y(1);
    }
    if (p.k == 'x' && q.k == 'x') return x(1);
    if (p.k == 'x' && q.k == 'y') return zero();
    if (p.k == 'y' && q.k == 'y') return y(1);
    unexpected(p, q);
  });
}

FinitePoSemiring build_cbh(std::size_t nx, std::size_t nu, std::size_t ny) {
  require_positive({nx, nu, ny}, "cbh");
  Draft d;
  d.put(w());
  d.put(v());
  const auto xs = run('x', nx), ys = run('y', ny), us = run('u', nu);
  put_all(d, xs);
  put_all(d, ys);
  put_all(d, us);
  d.cover(v(), xs.front());
  d.chain(xs);
  d.cover(xs.back(), w());
  d.cover(v(), ys.front());
  d.chain(ys);
  d.cover(ys.back(), w());
  d.chain(us);
  d.cover(us.back(), ys.front());
  return d.finish([](const E& p, const E& q) -> E {
    switch (p.k) {
      case 'w':
        switch (q.k) {
          case 'w': return w();
          case 'v': return v();
          case 'x': return x(1);
          case 'y': return y(1);
          case 'u': return u(1);
        }
        break;
      case 'v':
        switch (q.k) {
          case 'v': return zero();
          case 'x': return v();
          case 'y': return zero();
          case 'u': return zero();
        }
        break;
      case 'x':
        switch (q.k) {
          case 'x': return x(1);
          case 'y': return v();
          case 'u': return zero();
        }
        break;
      case 'y':
        if (q.k == 'y' || q.k == 'u') return u(1);
        break;
      case 'u':
        if (q.k == 'u') return u(1);
        break;
    }
    unexpected(p, q);
  });
}

FinitePoSemiring build_cbh_alt(std::size_t nx, std::size_t nu,
                               std::size_t ny) {
  require_positive({nx, nu, ny}, "cbh_alt");
  Draft d;
  d.put(v());
  const auto xs = run('x', nx), ys = run('y', ny), us = run('u', nu);
  put_all(d, xs);
  put_all(d, ys);
  put_all(d, us);
  d.cover(v(), xs.front());
  d.chain(xs);
  d.cover(v(), ys.front());
  d.chain(ys);
  d.chain(us);
  d.cover(us.back(), ys.front());
  put_grid(d, nx, ny);
  return d.finish([](const E& p, const E& q) -> E {
    switch (p.k) {
      case 'v':
        switch (q.k) {
          case 'v': return zero();
          case 'x': return v();
          case 'y': return zero();
          case 'u': return zero();
          case 'g': return v();
        }
        break;
      case 'x':
        switch (q.k) {
          case 'x': return x(std::min(p.i, q.i));
          case 'y': return v();
          case 'u': return zero();
          case 'g': return x(std::min(p.i, q.i));
        }
        break;
      case 'y':
        switch (q.k) {
          case 'y':
          case 'u': return u(1);
          case 'g': return y(1);
        }
        break;
      case 'u':
        if (q.k == 'u' || q.k == 'g') return u(1);
        break;
      case 'g':
        if (q.k == 'g') return g(std::min(p.i, q.i), 1);
        break;
    }
    unexpected(p, q);
  });
}

FinitePoSemiring build_isolated() {
  Draft d;
  d.put({'a'});
  return d.finish([](const E& p, const E& q) -> E {
    if (p.k == 'a' && q.k == 'a') return zero();
    unexpected(p, q);
  });
}

FinitePoSemiring build_kn(std::size_t n) {
  if (n < 3) throw ConstructionError("kn: n must be >= 3");
  Draft d;
  const auto as = run('a', n);
  put_all(d, as);
  d.chain(as);
  return d.finish([](const E& p, const E& q) -> E {
    if (p.k == 'a' && q.k == 'a') return zero();
    unexpected(p, q);
  });
}

FinitePoSemiring build_kn1(std::size_t n, std::size_t nx) {
  if (n < 3) throw ConstructionError("kn1: n must be >= 3");
  require_positive({nx}, "kn1");
  Draft d;
  const auto as = run('a', n), xs = run('x', nx);
  put_all(d, as);
  put_all(d, xs);
  d.chain(as);
  d.cover(as.back(), xs.front());
  d.chain(xs);
  return d.finish([](const E& p, const E& q) -> E {
    if (p.k == 'a' && q.k == 'a') return zero();
    if (p.k == 'a' && q.k == 'x') return p.i == 1 ? zero() : p;
    if (p.k == 'x' && q.k == 'x') return x(1);
    unexpected(p, q);
  });
}

FinitePoSemiring build_kn2_printed(std::size_t n, std::size_t nx,
                                   std::size_t ny) {
  if (n < 3) throw ConstructionError("kn2: n must be >= 3");
  require_positive({nx, ny}, "kn2");
  Draft d;
  const auto as = run('a', n), xs = run('x', nx), ys = run('y', ny);
  put_all(d, as);
  put_all(d, xs);
  put_all(d, ys);
  d.cover(a(1), a(3));
  d.cover(a(2), a(3));
  d.chain(std::vector<E>(as.begin() + 2, as.end()));
  d.cover(a(n), xs.front());
  d.chain(xs);
  d.cover(a(n), ys.front());
  d.chain(ys);
  put_grid(d, nx, ny);
  return d.finish([n](const E& p, const E& q) -> E {
    if (p.k == 'a') {
      const std::size_t i = p.i;
      switch (q.k) {
        case 'a': return (i == n && q.i == n) ? a(n) : zero();
        case 'x':
          if (i == n) return a(n);
          return i == 1 ? zero() : a(2);
        case 'y':
          if (i == n) return a(n);
          return i == 2 ? zero() : a(1);
        case 'g':
          if (i == n) return a(n);
          if (i == 1 || i == 2) return p;
          return a(3);
      }
    }
    if (p.k == 'x' && q.k == 'x') return x(1);
    if (p.k == 'x' && q.k == 'y') return a(n);
    if (p.k == 'x' && q.k == 'g') return x(1);
    if (p.k == 'y' && (q.k == 'y' || q.k == 'g')) return y(1);
    if (p.k == 'g' && q.k == 'g') return g(1, 1);
    unexpected(p, q);
  });
}

FinitePoSemiring build_kn2(std::size_t n, std::size_t nx, std::size_t ny) {
  if (n == 3) {
    throw ConstructionError(
        "kn2: K3(2) has no realizing po-semiring; n must be >= 4");
  }
  if (n < 3) throw ConstructionError("kn2: n must be >= 4");
  return build_kn2_printed(n, nx, ny);
}

FinitePoSemiring build_k33(std::size_t nx, std::size_t ny, std::size_t nz) {
  require_positive({nx, ny, nz}, "k33");
  Draft d;
  d.put(w());
  const auto as = run('a', 3), xs = run('x', nx), ys = run('y', ny),
             zs = run('z', nz);
  put_all(d, as);
  put_all(d, xs);
  put_all(d, ys);
  put_all(d, zs);
  d.cover(a(1), z(1));
  d.cover(a(2), z(1));
  d.chain(zs);
  d.cover(zs.back(), w());
  d.cover(a(2), x(1));
  d.cover(a(3), x(1));
  d.chain(xs);
  d.cover(xs.back(), w());
  d.cover(a(1), y(1));
  d.cover(a(3), y(1));
  d.chain(ys);
  d.cover(ys.back(), w());
  return d.finish([](const E& p, const E& q) -> E {
    if (p.k == 'w') {
      switch (q.k) {
        case 'w': return w();
        case 'a': return q;
        case 'x': return x(1);
        case 'y': return y(1);
        case 'z': return z(1);
      }
    }
    if (p.k == 'a') {
      // a_i annihilates the horn with the same index.
      static constexpr char kHorn[] = {0, 'x', 'y', 'z'};
      if (q.k == 'a') return p.i == q.i ? p : zero();
      return q.k == kHorn[p.i] ? zero() : p;
    }
    if (p.k == q.k) return {p.k, 1};
    if (p.k == 'x' && q.k == 'y') return a(3);
    if (p.k == 'x' && q.k == 'z') return a(2);
    if (p.k == 'y' && q.k == 'z') return a(1);
    unexpected(p, q);
  });
}

namespace {

void check_count(const ConstructionSpec& spec) {
  const auto names = parameter_names(spec.kind);
  if (spec.params.size() != names.size()) {
    throw ConstructionError(std::string(to_string(spec.kind)) + " takes " +
                            std::to_string(names.size()) + " parameter(s), " +
                            std::to_string(spec.params.size()) + " given");
  }
}

}  // namespace

FinitePoSemiring build(const ConstructionSpec& spec) {
  check_count(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case ConstructionKind::kCompleteBipartite:
      return build_complete_bipartite(p[0], p[1]);
    case ConstructionKind::kCbh: return build_cbh(p[0], p[1], p[2]);
    case ConstructionKind::kCbhAlt: return build_cbh_alt(p[0], p[1], p[2]);
    case ConstructionKind::kIsolated: return build_isolated();
    case ConstructionKind::kKn: return build_kn(p[0]);
    case ConstructionKind::kKn1: return build_kn1(p[0], p[1]);
    case ConstructionKind::kKn2: return build_kn2(p[0], p[1], p[2]);
    case ConstructionKind::kK33: return build_k33(p[0], p[1], p[2]);
  }
  throw ConstructionError("unknown construction");
}

SimpleGraph target_graph(const ConstructionSpec& spec) {
  check_count(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case ConstructionKind::kCompleteBipartite:
      return complete_bipartite_graph(p[0], p[1]);
    case ConstructionKind::kCbh:
    case ConstructionKind::kCbhAlt: return cbh_graph(p[0], p[1], p[2]);
    case ConstructionKind::kIsolated: {
      SimpleGraph g;
      g.add_vertex("a");
      return g;
    }
    case ConstructionKind::kKn: return complete_graph(p[0]);
    case ConstructionKind::kKn1: return clique_with_horns(p[0], {p[1]});
    case ConstructionKind::kKn2: return clique_with_horns(p[0], {p[1], p[2]});
    case ConstructionKind::kK33:
      return clique_with_horns(3, {p[0], p[1], p[2]});
  }
  throw ConstructionError("unknown construction");
}

OrderConstraints reconstruction_constraints(const ConstructionSpec& spec,
                                            const FinitePoSemiring& built) {
  check_count(spec);
  OrderConstraints c;
  auto id = [&](const E& e) { return built.at(name_of(e)); };
  auto lt = [&](const E& lo, const E& hi) { c.leq.emplace_back(id(lo), id(hi)); };
  auto chain = [&](char k, std::size_t count) {
    for (std::size_t i = 1; i < count; ++i) lt({k, i}, {k, i + 1});
  };
  auto grid_joins = [&](std::size_t nx, std::size_t ny) {
    for (std::size_t i = 1; i <= nx; ++i) {
      for (std::size_t j = 1; j <= ny; ++j) {
        c.joins.emplace_back(id(x(i)), id(y(j)), id(g(i, j)));
      }
    }
  };
  const auto& p = spec.params;
  switch (spec.kind) {
    case ConstructionKind::kCbhAlt:
      chain('x', p[0]);
      chain('u', p[1]);
      chain('y', p[2]);
      lt(v(), x(1));
      lt(u(p[1]), y(1));
      grid_joins(p[0], p[2]);
      return c;
    case ConstructionKind::kKn2:
      chain('x', p[1]);
      chain('y', p[2]);
      for (std::size_t i = 3; i < p[0]; ++i) lt(a(i), a(i + 1));
      lt(a(p[0]), x(1));
      lt(a(p[0]), y(1));
      grid_joins(p[1], p[2]);
      return c;
    case ConstructionKind::kK33:
      lt(a(1), z(1));
      lt(a(2), z(1));
      chain('z', p[2]);
      lt(z(p[2]), w());
      lt(a(2), x(1));
      lt(a(3), x(1));
      chain('x', p[0]);
      lt(x(p[0]), w());
      lt(a(1), y(1));
      lt(a(3), y(1));
      chain('y', p[1]);
      lt(y(p[1]), w());
      return c;
    default:
      throw ConstructionError("no reconstruction constraints for " +
                              std::string(to_string(spec.kind)));
  }
}

}  // namespace posemi

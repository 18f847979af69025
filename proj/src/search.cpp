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

#include "posemi/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifndef POSEMI_VERSION
#define POSEMI_VERSION "0.0.0"
#endif

namespace posemi {

std::string tool_version() { return std::string("posemi ") + POSEMI_VERSION; }

std::string_view to_string(StructureKind kind) {
  return kind == StructureKind::kSemigroup ? "semigroup" : "posemiring";
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kWitness: return "witness";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kLimitReached: return "limit-reached";
  }
  return "?";
}

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Ground set layout: [0] [1]? vertices... aux...
struct Ground {
  std::vector<std::string> names;
  std::size_t first_vertex = 1;
  std::size_t num_vertices = 0;
  std::size_t first_aux = 0;
  std::size_t num_aux = 0;
  bool has_one = false;

  bool is_vertex(std::size_t e) const {
    return e >= first_vertex && e < first_vertex + num_vertices;
  }
};

Ground make_ground(const SimpleGraph& g, bool with_one, std::size_t aux) {
  Ground gr;
  gr.names.push_back("0");
  if (with_one) gr.names.push_back("1");
  gr.has_one = with_one;
  gr.first_vertex = gr.names.size();
  gr.num_vertices = g.num_vertices();
  std::set<std::string> taken(gr.names.begin(), gr.names.end());
  for (const auto& name : g.names()) {
    if (!taken.insert(name).second) {
      throw std::invalid_argument("vertex name '" + name +
                                  "' clashes with a reserved element name");
    }
    gr.names.push_back(name);
  }
  gr.first_aux = gr.names.size();
  gr.num_aux = aux;
  for (std::size_t k = 1; k <= aux; ++k) {
    std::string name = "e" + std::to_string(k);
    while (taken.count(name)) name = "_" + name;
    taken.insert(name);
    gr.names.push_back(name);
  }
  if (gr.names.size() > 64) {
    throw std::invalid_argument("search supports at most 64 elements");
  }
  return gr;
}

// Vertex classes whose members can be permuted freely: same open
// neighbourhood (non-adjacent twins) or same closed neighbourhood.
std::vector<std::vector<ElementId>> twin_classes(const SimpleGraph& g,
                                                 std::size_t offset) {
  std::map<std::vector<VertexId>, std::vector<ElementId>> open, closed;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto n = g.neighbors(v);
    open[n].push_back(static_cast<ElementId>(v + offset));
    n.push_back(v);
    std::sort(n.begin(), n.end());
    closed[n].push_back(static_cast<ElementId>(v + offset));
  }
  std::vector<std::vector<ElementId>> out;
  for (auto* m : {&open, &closed}) {
    for (auto& [key, members] : *m) {
      if (members.size() >= 2) out.push_back(members);
    }
  }
  return out;
}

// Products for the zero-divisor semigroup part of the problem: fixed zeros
// on edges, nonzero on non-edges, and the annihilator filter: if c*a = 0 is
// required then c*(ab) = 0 must be satisfiable.
void add_graph_constraints(TableProblem& p, const SimpleGraph& g,
                           const Ground& gr) {
  const std::size_t n = gr.names.size();
  std::vector<std::uint64_t> ann(n, 0);  // statically required annihilators
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::size_t e = v + gr.first_vertex;
    for (VertexId w : g.neighbors(v)) ann[e] |= bit(w + gr.first_vertex);
    if (g.degree(v) == 0) ann[e] |= bit(e);
  }
  for (std::size_t a = 0; a < n; ++a) p.fix(TableOp::kMul, 0, a, 0);
  if (gr.has_one) {
    for (std::size_t a = 0; a < n; ++a) p.fix(TableOp::kMul, 1, a, a);
  }
  for (std::size_t a = gr.first_vertex; a < gr.first_aux; ++a) {
    for (std::size_t b = a; b < gr.first_aux; ++b) {
      if (a == b) {
        if (ann[a] & bit(a)) p.fix(TableOp::kMul, a, a, 0);
      } else if (ann[a] & bit(b)) {
        p.fix(TableOp::kMul, a, b, 0);
      } else {
        p.restrict(TableOp::kMul, a, b, ~bit(0));
      }
    }
  }
  std::uint64_t units = 0;  // elements that must not be zero divisors
  if (gr.has_one) units |= bit(1);
  for (std::size_t k = 0; k < gr.num_aux; ++k) units |= bit(gr.first_aux + k);
  for (std::size_t a = gr.first_aux; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      p.restrict(TableOp::kMul, a, b, ~bit(0));
      if (units & bit(b)) p.restrict(TableOp::kMul, a, b, units);
    }
  }
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const std::uint64_t need = ann[a] | ann[b];
      std::uint64_t mask = bit(0);
      for (std::size_t v = 1; v < n; ++v) {
        if ((need & ~bit(v) & ~ann[v]) != 0) continue;
        if ((need & bit(v)) && !(p.domain(TableOp::kMul, v, v) & bit(0))) {
          continue;
        }
        mask |= bit(v);
      }
      p.restrict(TableOp::kMul, a, b, mask);
    }
  }
}

void add_semilattice_constraints(TableProblem& p, std::size_t zero,
                                 std::size_t one) {
  const std::size_t n = p.size;
  for (std::size_t a = 0; a < n; ++a) {
    p.fix(TableOp::kAdd, zero, a, a);
    p.fix(TableOp::kAdd, one, a, one);
    p.fix(TableOp::kAdd, a, a, a);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != zero && b != zero) p.restrict(TableOp::kAdd, a, b, ~bit(zero));
    }
  }
}

FinitePoSemiring to_posemiring(const std::vector<std::string>& names,
                               ElementId zero, ElementId one,
                               const TableSearchResult& r) {
  return FinitePoSemiring(names, zero, one, r.add, r.mul);
}

void accumulate(Certificate& c, const TableSearchResult& r) {
  c.nodes += r.nodes;
  c.propagation_failures += r.propagation_failures;
  c.symmetry_factor = r.symmetry_factor;
}

SearchOptions options_for(const SearchProblem& problem,
                          std::uint64_t nodes_used) {
  SearchOptions o;
  o.deterministic = problem.deterministic;
  o.threads = problem.threads;
  if (problem.node_limit) {
    o.node_limit = *problem.node_limit > nodes_used
                       ? *problem.node_limit - nodes_used
                       : 0;
  }
  return o;
}

}  // namespace

SimpleGraph semigroup_graph(const SemigroupTable& s) {
  const std::size_t n = s.size();
  std::vector<char> zd(n, 0);
  for (ElementId a = 1; a < n; ++a) {
    for (ElementId b = 1; b < n; ++b) {
      if (s.at(a, b) == 0) zd[a] = 1;
    }
  }
  SimpleGraph g;
  std::vector<VertexId> id(n, 0);
  for (ElementId a = 1; a < n; ++a) {
    if (zd[a]) id[a] = g.add_vertex(s.elements[a]);
  }
  for (ElementId a = 1; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (zd[a] && zd[b] && s.at(a, b) == 0) g.add_edge(id[a], id[b]);
    }
  }
  return g;
}

namespace {

bool same_graph_by_name(const SimpleGraph& g, const SimpleGraph& target) {
  if (g.num_vertices() != target.num_vertices() ||
      g.num_edges() != target.num_edges()) {
    return false;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!target.find(g.name(v))) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (!target.has_edge(*target.find(g.name(u)), *target.find(g.name(v)))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool check_semigroup_witness(const SemigroupTable& s,
                             const SimpleGraph& target) {
  const std::size_t n = s.size();
  if (s.mul.size() != n * n || n == 0) return false;
  for (ElementId a = 0; a < n; ++a) {
    if (s.at(0, a) != 0 || s.at(a, 0) != 0) return false;
  }
  if (!is_commutative(s.mul, n) || !is_associative(s.mul, n)) return false;
  return same_graph_by_name(semigroup_graph(s), target);
}

bool check_posemiring_witness(const FinitePoSemiring& a,
                              const SimpleGraph& target) {
  if (!verify_axioms(a).all_passed()) return false;
  return same_graph_by_name(zero_divisor_graph(a), target);
}

SearchOutcome search_semigroup(const SearchProblem& problem) {
  const SimpleGraph& g = problem.target;
  if (g.num_vertices() == 0) {
    throw std::invalid_argument("search needs at least one vertex");
  }
  const Ground gr = make_ground(g, false, 0);
  TableProblem p = TableProblem::unconstrained(gr.names.size(), false);
  add_graph_constraints(p, g, gr);
  p.symmetry_classes = twin_classes(g, gr.first_vertex);

  const auto r = run_table_search(p, options_for(problem, 0));
  SearchOutcome out;
  out.status = r.status;
  out.elements = gr.names;
  out.root_log = r.root_log;
  out.certificate.tool_version = tool_version();
  accumulate(out.certificate, r);
  if (r.status == SearchStatus::kWitness) {
    SemigroupTable s{gr.names, r.mul};
    if (!check_semigroup_witness(s, g)) {
      throw std::logic_error("search produced a table that fails re-check");
    }
    out.semigroup = std::move(s);
  }
  return out;
}

SearchOutcome search_posemiring(const SearchProblem& problem) {
  const SimpleGraph& g = problem.target;
  if (g.num_vertices() == 0) {
    throw std::invalid_argument("search needs at least one vertex");
  }
  SearchOutcome out;
  out.certificate.tool_version = tool_version();
  out.certificate.aux_budget = problem.aux_budget;
  for (std::size_t k = 0; k <= problem.aux_budget; ++k) {
    const Ground gr = make_ground(g, true, k);
    TableProblem p = TableProblem::unconstrained(gr.names.size(), true);
    add_graph_constraints(p, g, gr);
    add_semilattice_constraints(p, 0, 1);
    p.symmetry_classes = twin_classes(g, gr.first_vertex);
    if (k >= 2) {
      std::vector<ElementId> aux;
      for (std::size_t e = gr.first_aux; e < gr.names.size(); ++e) {
        aux.push_back(static_cast<ElementId>(e));
      }
      p.symmetry_classes.push_back(std::move(aux));
    }
    const auto r =
        run_table_search(p, options_for(problem, out.certificate.nodes));
    accumulate(out.certificate, r);
    out.elements = gr.names;
    out.root_log = r.root_log;
    out.status = r.status;
    if (r.status == SearchStatus::kWitness) {
      auto a = to_posemiring(gr.names, 0, 1, r);
      if (!check_posemiring_witness(a, g)) {
        throw std::logic_error("search produced a table that fails re-check");
      }
      out.posemiring = std::move(a);
      out.aux_used = k;
      return out;
    }
    if (r.status == SearchStatus::kLimitReached) return out;
  }
  return out;
}

SearchOutcome search(const SearchProblem& problem) {
  return problem.structure == StructureKind::kSemigroup
             ? search_semigroup(problem)
             : search_posemiring(problem);
}

SearchOutcome complete_addition(const std::vector<std::string>& elements,
                                ElementId zero, ElementId one,
                                const std::vector<ElementId>& mul,
                                const OrderConstraints& constraints,
                                const SearchOptions& options) {
  const std::size_t n = elements.size();
  if (mul.size() != n * n) {
    throw std::invalid_argument("multiplication table has the wrong shape");
  }
  TableProblem p = TableProblem::unconstrained(n, true);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul[a * n + b] != mul[b * n + a] || mul[a * n + b] >= n) {
        throw std::invalid_argument("multiplication table is not commutative");
      }
      p.fix(TableOp::kMul, a, b, mul[a * n + b]);
    }
  }
  add_semilattice_constraints(p, zero, one);
  for (auto [a, b] : constraints.leq) p.fix(TableOp::kAdd, a, b, b);
  for (auto [a, b, c] : constraints.joins) p.fix(TableOp::kAdd, a, b, c);
  for (auto [a, b] : constraints.incomparable) {
    p.restrict(TableOp::kAdd, a, b, ~(bit(a) | bit(b)));
  }

  const auto r = run_table_search(p, options);
  SearchOutcome out;
  out.status = r.status;
  out.elements = elements;
  out.root_log = r.root_log;
  out.certificate.tool_version = tool_version();
  accumulate(out.certificate, r);
  if (r.status == SearchStatus::kWitness) {
    auto a = to_posemiring(elements, zero, one, r);
    if (!verify_axioms(a).all_passed()) {
      throw std::logic_error("completed addition fails the axioms");
    }
    out.posemiring = std::move(a);
  }
  return out;
}

std::string serialize_semigroup(const SemigroupTable& s) {
  nlohmann::ordered_json j;
  j["elements"] = s.elements;
  j["zero"] = s.elements.at(0);
  auto rows = nlohmann::ordered_json::array();
  for (ElementId a = 0; a < s.size(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (ElementId b = 0; b < s.size(); ++b) row.push_back(s.elements[s.at(a, b)]);
    rows.push_back(std::move(row));
  }
  j["mul"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string format_certificate(const SearchOutcome& outcome,
                               StructureKind structure) {
  std::ostringstream os;
  const auto& c = outcome.certificate;
  os << "status: " << to_string(outcome.status) << "\n"
     << "structure: " << to_string(structure) << "\n"
     << "ground_size: " << outcome.elements.size() << "\n";
  if (structure == StructureKind::kPoSemiring) {
    os << "aux_budget: " << c.aux_budget << "\n";
    if (outcome.status == SearchStatus::kWitness) {
      os << "aux_used: " << outcome.aux_used << "\n";
    }
  }
  os << "nodes: " << c.nodes << "\n"
     << "propagation_failures: " << c.propagation_failures << "\n"
     << "symmetry_factor: " << c.symmetry_factor << "\n"
     << "tool_version: " << c.tool_version << "\n";
  return os.str();
}

}  // namespace posemi

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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "posemi/classify.hpp"
#include "posemi/cli.hpp"
#include "posemi/constructions.hpp"
#include "posemi/graph.hpp"
#include "posemi/posemiring.hpp"
#include "posemi/ring.hpp"
#include "posemi/search.hpp"

namespace py = pybind11;
using namespace posemi;

namespace {

py::dict verdict_dict(const RuleVerdict& v) {
  py::dict d;
  d["verdict"] = std::string(to_string(v.verdict));
  d["citation"] = v.citation;
  return d;
}

py::dict classification_dict(const GraphClassification& c) {
  py::list memberships;
  for (const auto& m : c.memberships) memberships.append(to_string(m));
  py::dict d;
  d["memberships"] = memberships;
  d["posemiring"] = verdict_dict(c.posemiring);
  d["semigroup"] = verdict_dict(c.semigroup);
  d["annihilating_ideal"] = verdict_dict(c.annihilating_ideal);
  return d;
}

py::dict axiom_dict(const AxiomReport& report) {
  py::dict d;
  for (const auto& r : report.results) {
    d[py::str(std::string(axiom_id(r.axiom)))] = r.passed;
  }
  return d;
}

SimpleGraph graph_from_edges(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<std::string>& vertices) {
  SimpleGraph g;
  for (const auto& v : vertices) {
    if (!g.find(v)) g.add_vertex(v);
  }
  for (const auto& [u, v] : edges) {
    if (!g.find(u)) g.add_vertex(u);
    if (!g.find(v)) g.add_vertex(v);
    g.add_edge(u, v);
  }
  return g;
}

py::dict run_search(const SimpleGraph& g, const std::string& structure,
                    std::size_t aux_budget, std::optional<std::uint64_t> limit,
                    unsigned threads) {
  SearchProblem p;
  p.target = g;
  if (structure == "semigroup") {
    p.structure = StructureKind::kSemigroup;
  } else if (structure == "posemiring") {
    p.structure = StructureKind::kPoSemiring;
  } else {
    throw py::value_error("structure must be 'semigroup' or 'posemiring'");
  }
  p.aux_budget = aux_budget;
  p.node_limit = limit;
  p.threads = std::max(1u, threads);
  p.deterministic = p.threads == 1;
  SearchOutcome out;
  {
    py::gil_scoped_release release;
    out = search(p);
  }
  py::dict d;
  d["status"] = std::string(to_string(out.status));
  d["nodes"] = out.certificate.nodes;
  d["propagation_failures"] = out.certificate.propagation_failures;
  d["symmetry_factor"] = out.certificate.symmetry_factor;
  d["certificate"] = format_certificate(out, p.structure);
  if (out.semigroup) d["witness"] = serialize_semigroup(*out.semigroup);
  if (out.posemiring) d["witness"] = serialize_posemiring(*out.posemiring);
  if (!out.semigroup && !out.posemiring) d["witness"] = py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_posemi, m) {
  m.doc() = "Finite po-semirings, zero-divisor graphs and ideal lattices";
  m.attr("__version__") = POSEMI_VERSION;

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("edges"),
           py::arg("vertices") = std::vector<std::string>{})
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_property_readonly("vertices", &SimpleGraph::names)
      .def_property_readonly("num_edges", &SimpleGraph::num_edges)
      .def("edges",
           [](const SimpleGraph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [u, v] : g.edges()) out.emplace_back(g.name(u), g.name(v));
             return out;
           })
      .def("format", [](const SimpleGraph& g) { return format_graph(g); })
      .def("dot", [](const SimpleGraph& g) { return emit_dot(g); })
      .def("__len__", &SimpleGraph::num_vertices)
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; });

  py::class_<FinitePoSemiring>(m, "PoSemiring")
      .def_static("parse", [](const std::string& text) { return parse_posemiring(text); })
      .def("serialize", [](const FinitePoSemiring& a) { return serialize_posemiring(a); })
      .def_property_readonly("elements", &FinitePoSemiring::names)
      .def("__len__", &FinitePoSemiring::size)
      .def("add", [](const FinitePoSemiring& a, const std::string& x, const std::string& y) {
        return a.name(a.add(a.at(x), a.at(y)));
      })
      .def("mul", [](const FinitePoSemiring& a, const std::string& x, const std::string& y) {
        return a.name(a.mul(a.at(x), a.at(y)));
      })
      .def("verify", [](const FinitePoSemiring& a) { return axiom_dict(verify_axioms(a)); })
      .def("zero_divisor_graph", &zero_divisor_graph);

  m.def("classify", [](const SimpleGraph& g) { return classification_dict(classify(g)); },
        py::arg("graph"));
  m.def("is_isomorphic",
        [](const SimpleGraph& g, const SimpleGraph& h) { return is_isomorphic(g, h).has_value(); });

  m.def("construction_kinds", [] {
    std::vector<std::string> out;
    for (auto k : kAllConstructions) out.emplace_back(to_string(k));
    return out;
  });
  m.def(
      "build",
      [](const std::string& kind, const std::vector<std::size_t>& params) {
        const auto k = parse_construction_kind(kind);
        if (!k) throw py::value_error("unknown construction kind '" + kind + "'");
        return build(ConstructionSpec{*k, params});
      },
      py::arg("kind"), py::arg("params"));
  m.def(
      "target_graph",
      [](const std::string& kind, const std::vector<std::size_t>& params) {
        const auto k = parse_construction_kind(kind);
        if (!k) throw py::value_error("unknown construction kind '" + kind + "'");
        return target_graph(ConstructionSpec{*k, params});
      },
      py::arg("kind"), py::arg("params"));

  m.def("search", &run_search, py::arg("graph"), py::arg("structure") = "semigroup",
        py::arg("aux_budget") = 0, py::arg("node_limit") = py::none(),
        py::arg("threads") = 1u);

  m.def(
      "ring",
      [](const std::string& spec) {
        const FiniteRing r = parse_ring_spec(spec);
        const IdealLattice lattice = enumerate_ideals(r);
        const SimpleGraph ag = ag_graph(lattice);
        py::dict d;
        d["order"] = r.size();
        d["ideals"] = lattice.names;
        d["posemiring"] = ideal_posemiring(lattice);
        d["ag"] = ag;
        d["classification"] = classification_dict(classify(ag));
        py::dict checks;
        for (const auto& c : check_ring_invariants(r, lattice).checks) {
          checks[py::str(c.id)] = c.applicable ? py::object(py::bool_(c.passed)) : py::none();
        }
        d["checks"] = checks;
        return d;
      },
      py::arg("spec"));
  m.def("ring_corpus", &ring_corpus);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<RingError>(m, "RingError", PyExc_ValueError);
}

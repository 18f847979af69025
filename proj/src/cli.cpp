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

#include "posemi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "posemi/classify.hpp"
#include "posemi/constructions.hpp"
#include "posemi/graph.hpp"
#include "posemi/posemiring.hpp"
#include "posemi/ring.hpp"
#include "posemi/search.hpp"

namespace posemi::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

SimpleGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

FinitePoSemiring load_posemiring(const std::string& path) {
  try {
    return parse_posemiring(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": " + e.what());
  }
}

std::vector<std::string> names_of(const FinitePoSemiring& a,
                                  const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (ElementId id : ids) out.push_back(a.name(id));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> vertex_names(const SimpleGraph& g,
                                      const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

std::vector<std::string> membership_names(const GraphClassification& c) {
  std::vector<std::string> out;
  for (const auto& m : c.memberships) out.push_back(to_string(m));
  return out;
}

Json verdict_json(const RuleVerdict& v) {
  return Json{{"verdict", std::string(to_string(v.verdict))},
              {"citation", v.citation}};
}

struct Context {
  bool structured = false;
  std::ostream& out;
};

void emit(const Context& ctx, const Json& j, const std::string& text) {
  if (ctx.structured) {
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << text;
  }
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string dot;
};

int cmd_verify(const Context& ctx, const VerifyArgs& args) {
  const FinitePoSemiring a = load_posemiring(args.file);
  const AxiomReport report = verify_axioms(a);
  const SimpleGraph g = zero_divisor_graph(a);
  if (!args.dot.empty()) write_file(args.dot, emit_dot(g, "Gamma"));

  std::ostringstream text;
  Json axioms = Json::array();
  text << "elements: " << a.size() << "\n";
  for (const auto& r : report.results) {
    const std::string id(axiom_id(r.axiom));
    const auto witness = names_of(a, r.witness);
    text << "axiom " << id << ": " << (r.passed ? "pass" : "fail");
    if (!r.passed) text << " (" << join(witness, ", ") << ")";
    text << "\n";
    Json entry{{"id", id}, {"passed", r.passed}};
    if (!r.passed) entry["witness"] = witness;
    axioms.push_back(std::move(entry));
  }
  text << "zero-divisor graph: " << g.num_vertices() << " vertices, "
       << g.num_edges() << " edges\n"
       << "result: " << (report.all_passed() ? "pass" : "fail") << "\n";
  emit(ctx,
       Json{{"elements", a.size()},
            {"axioms", axioms},
            {"graph", Json{{"vertices", g.names()},
                           {"edges", g.num_edges()}}},
            {"passed", report.all_passed()}},
       text.str());
  return report.all_passed() ? kOk : kNegative;
}

// graph -------------------------------------------------------------------

struct GraphArgs {
  std::string file;
  bool from_posemiring = false;
  std::string dot;
};

int cmd_graph(const Context& ctx, const GraphArgs& args) {
  const SimpleGraph g = args.from_posemiring
                            ? zero_divisor_graph(load_posemiring(args.file))
                            : load_graph(args.file);
  if (!args.dot.empty()) write_file(args.dot, emit_dot(g));

  const SimpleGraph c = core(g);
  std::vector<std::string> bridge_names;
  for (const auto& [u, v] : bridges(g)) {
    bridge_names.push_back(g.name(u) + " " + g.name(v));
  }
  Json horn_json = Json::object();
  std::ostringstream horn_text;
  for (const auto& [center, ends] : horns(g)) {
    const auto names = vertex_names(g, ends);
    horn_json[g.name(center)] = names;
    horn_text << " " << g.name(center) << ":[" << join(names, ",") << "]";
  }
  const auto ends = vertex_names(g, end_vertices(g));

  std::ostringstream text;
  text << "vertices: " << g.num_vertices() << "\n"
       << "edges: " << g.num_edges() << "\n"
       << "end vertices: " << join(ends, " ") << "\n"
       << "horns:" << horn_text.str() << "\n"
       << "core: " << join(c.names(), " ") << "\n"
       << "bridges: " << join(bridge_names, ", ") << "\n"
       << "connected: " << (is_connected(g) ? "yes" : "no") << "\n"
       << "tree: " << (is_tree(g) ? "yes" : "no") << "\n"
       << "triangle-free: " << (is_triangle_free(g) ? "yes" : "no") << "\n"
       << "bipartite: " << (is_bipartite(g) ? "yes" : "no") << "\n";
  emit(ctx,
       Json{{"vertices", g.names()},
            {"edges", g.num_edges()},
            {"end_vertices", ends},
            {"horns", horn_json},
            {"core", c.names()},
            {"bridges", bridge_names},
            {"connected", is_connected(g)},
            {"tree", is_tree(g)},
            {"triangle_free", is_triangle_free(g)},
            {"bipartite", is_bipartite(g)}},
       text.str());
  return kOk;
}

// construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::vector<std::size_t> params;
  std::string output;
  std::string dot;
  bool check = false;
};

int cmd_construct(const Context& ctx, const ConstructArgs& args) {
  const auto kind = parse_construction_kind(args.kind);
  if (!kind) throw UsageError("unknown construction kind '" + args.kind + "'");
  const ConstructionSpec spec{*kind, args.params};
  FinitePoSemiring a = [&] {
    try {
      return build(spec);
    } catch (const ConstructionError& e) {
      throw UsageError(e.what());
    }
  }();
  const std::string file = serialize_posemiring(a);
  if (!args.output.empty()) write_file(args.output, file);
  if (!args.dot.empty()) write_file(args.dot, emit_dot(zero_divisor_graph(a)));
  if (!args.check) {
    if (args.output.empty()) ctx.out << file;
    return kOk;
  }

  const AxiomReport report = verify_axioms(a);
  const bool iso =
      is_isomorphic(zero_divisor_graph(a), target_graph(spec)).has_value();
  std::vector<std::string> failed;
  for (Axiom ax : report.failed()) failed.emplace_back(axiom_id(ax));
  const bool ok = report.all_passed() && iso;
  std::ostringstream text;
  text << "construction: " << args.kind << "\n"
       << "elements: " << a.size() << "\n"
       << "axioms: " << (report.all_passed() ? "pass" : "fail");
  if (!failed.empty()) text << " (" << join(failed, ", ") << ")";
  text << "\n"
       << "graph isomorphic to target: " << (iso ? "yes" : "no") << "\n"
       << "result: " << (ok ? "pass" : "fail") << "\n";
  emit(ctx,
       Json{{"construction", args.kind},
            {"params", args.params},
            {"elements", a.size()},
            {"axioms_passed", report.all_passed()},
            {"failed_axioms", failed},
            {"isomorphic", iso},
            {"passed", ok}},
       text.str());
  return ok ? kOk : kNegative;
}

// classify ----------------------------------------------------------------

int cmd_classify(const Context& ctx, const std::string& path) {
  const SimpleGraph g = load_graph(path);
  const GraphClassification c = classify(g);
  const auto memberships = membership_names(c);
  std::ostringstream text;
  text << "vertices: " << g.num_vertices() << "\n"
       << "memberships: " << join(memberships, " ") << "\n"
       << "posemiring: " << to_string(c.posemiring.verdict) << " ("
       << c.posemiring.citation << ")\n"
       << "semigroup: " << to_string(c.semigroup.verdict) << " ("
       << c.semigroup.citation << ")\n"
       << "annihilating_ideal: " << to_string(c.annihilating_ideal.verdict)
       << " (" << c.annihilating_ideal.citation << ")\n";
  emit(ctx,
       Json{{"vertices", g.num_vertices()},
            {"memberships", memberships},
            {"posemiring", verdict_json(c.posemiring)},
            {"semigroup", verdict_json(c.semigroup)},
            {"annihilating_ideal", verdict_json(c.annihilating_ideal)}},
       text.str());
  return c.posemiring.verdict == Verdict::kNo ? kNegative : kOk;
}

// search ------------------------------------------------------------------

struct SearchArgs {
  std::string file;
  std::string structure = "semigroup";
  std::size_t aux = 0;
  std::optional<std::uint64_t> limit;
  bool deterministic = false;
  unsigned threads = 1;
  bool log = false;
  std::string witness;
};

int cmd_search(const Context& ctx, const SearchArgs& args) {
  SearchProblem problem;
  problem.target = load_graph(args.file);
  problem.structure = args.structure == "posemiring" ? StructureKind::kPoSemiring
                                                     : StructureKind::kSemigroup;
  problem.aux_budget = args.aux;
  problem.node_limit = args.limit;
  problem.threads = args.deterministic ? 1 : std::max(1u, args.threads);
  problem.deterministic = args.deterministic || problem.threads == 1;
  const SearchOutcome outcome = search(problem);

  std::string witness_text;
  if (outcome.semigroup) witness_text = serialize_semigroup(*outcome.semigroup);
  if (outcome.posemiring) witness_text = serialize_posemiring(*outcome.posemiring);
  if (!args.witness.empty() && !witness_text.empty()) {
    write_file(args.witness, witness_text);
  }
  const bool bounded_negative = problem.structure == StructureKind::kPoSemiring &&
                                outcome.status == SearchStatus::kExhausted;
  const std::string note =
      bounded_negative ? "no witness with \xe2\x89\xa4 " + std::to_string(args.aux) +
                             " auxiliary elements"
                       : "";

  const RuleVerdict verdict = bounded_negative
                                  ? classify(problem.target).posemiring
                                  : RuleVerdict{};
  const bool ruled_out = verdict.verdict == Verdict::kNo;

  std::ostringstream text;
  text << format_certificate(outcome, problem.structure);
  if (!note.empty()) text << note << "\n";
  if (ruled_out) text << "verdict: no (" << verdict.citation << ")\n";
  Json log = Json::array();
  for (const auto& f : outcome.root_log) {
    const std::string op = f.op == TableOp::kMul ? "*" : "+";
    const std::string line = outcome.elements[f.left] + " " + op + " " +
                             outcome.elements[f.right] + " = " +
                             outcome.elements[f.value] + "  [" + f.reason + "]";
    if (args.log) text << "forced: " << line << "\n";
    log.push_back(line);
  }
  if (!witness_text.empty()) text << "witness:\n" << witness_text;

  const auto& c = outcome.certificate;
  Json j{{"status", std::string(to_string(outcome.status))},
         {"structure", std::string(to_string(problem.structure))},
         {"ground_size", outcome.elements.size()},
         {"certificate", Json{{"nodes", c.nodes},
                              {"propagation_failures", c.propagation_failures},
                              {"symmetry_factor", c.symmetry_factor},
                              {"aux_budget", c.aux_budget},
                              {"tool_version", c.tool_version}}}};
  if (!note.empty()) j["note"] = note;
  if (ruled_out) j["verdict"] = verdict_json(verdict);
  if (args.log) j["forced"] = log;
  if (!witness_text.empty()) j["witness"] = Json::parse(witness_text);
  emit(ctx, j, text.str());

  switch (outcome.status) {
    case SearchStatus::kWitness:
      return kOk;
    case SearchStatus::kExhausted:
      return kNegative;
    case SearchStatus::kLimitReached:
      return kLimit;
  }
  return kLimit;
}

// ring --------------------------------------------------------------------

struct RingArgs {
  std::string spec;
  bool ideals = false;
  std::string posemiring;
  std::string ag;
  bool checks = false;
};

int cmd_ring(const Context& ctx, const RingArgs& args) {
  const FiniteRing r = [&] {
    try {
      return parse_ring_spec(args.spec);
    } catch (const RingError& e) {
      throw UsageError(e.what());
    }
  }();
  const IdealLattice lattice = enumerate_ideals(r);
  const SimpleGraph ag = ag_graph(lattice);
  const GraphClassification cls = classify(ag);
  if (!args.posemiring.empty()) {
    write_file(args.posemiring, serialize_posemiring(ideal_posemiring(lattice)));
  }
  if (!args.ag.empty()) write_file(args.ag, emit_dot(ag, "AG"));

  std::ostringstream text;
  Json j{{"ring", r.spec()},
         {"order", r.size()},
         {"ideal_count", lattice.size()},
         {"ag", Json{{"vertices", ag.names()},
                     {"edges", ag.num_edges()},
                     {"memberships", membership_names(cls)}}}};
  text << "ring: " << r.spec() << "\n"
       << "order: " << r.size() << "\n"
       << "ideals: " << lattice.size() << "\n";
  if (args.ideals) {
    Json list = Json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      text << "  " << lattice.names[i] << " size " << lattice.ideals[i].size()
           << "\n";
      list.push_back(Json{{"name", lattice.names[i]},
                          {"size", lattice.ideals[i].size()}});
    }
    j["ideals"] = list;
  }
  text << "AG(R): " << ag.num_vertices() << " vertices, " << ag.num_edges()
       << " edges\n"
       << "memberships: " << join(membership_names(cls), " ") << "\n";

  int code = kOk;
  if (args.checks) {
    const RingCheckReport report = check_ring_invariants(r, lattice);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      const std::string state =
          !c.applicable ? "n/a" : c.passed ? "pass" : "fail";
      text << "check " << c.id << ": " << state;
      if (c.applicable) text << " (" << c.detail << ")";
      text << "\n";
      checks.push_back(Json{{"id", c.id},
                            {"applicable", c.applicable},
                            {"passed", c.passed},
                            {"detail", c.detail}});
    }
    text << "result: " << (report.passed() ? "pass" : "fail") << "\n";
    j["checks"] = checks;
    j["passed"] = report.passed();
    if (!report.passed()) code = kNegative;
  }
  emit(ctx, j, text.str());
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite po-semirings, zero-divisor graphs and ideal lattices",
               "posemi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());
  std::string format = "text";
  app.add_option("--format", format, "Report style")
      ->check(CLI::IsMember({"text", "structured"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the po-semiring axioms");
  verify->add_option("file", verify_args.file, "Po-semiring file")->required();
  verify->add_option("--dot", verify_args.dot, "Write the zero-divisor graph");

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Structural report for a graph");
  graph->add_option("file", graph_args.file, "Edge-list file")->required();
  graph->add_flag("--from-posemiring", graph_args.from_posemiring,
                  "Read a po-semiring file and use its zero-divisor graph");
  graph->add_option("--dot", graph_args.dot, "Write the graph as DOT");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a realizing po-semiring");
  construct->add_option("kind", construct_args.kind, "Construction kind")
      ->required();
  construct->add_option("--params", construct_args.params, "Sizes, e.g. 4,1,1")
      ->delimiter(',');
  construct->add_option("-o,--output", construct_args.output,
                        "Write the po-semiring file here");
  construct->add_option("--dot", construct_args.dot,
                        "Write the zero-divisor graph as DOT");
  construct->add_flag("--check", construct_args.check,
                      "Verify the axioms and the target graph");

  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "Graph classes and verdicts");
  classify_cmd->add_option("file", classify_file, "Edge-list file")->required();

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Bounded realizability search");
  search_cmd->add_option("file", search_args.file, "Edge-list file")->required();
  search_cmd->add_option("--structure", search_args.structure, "Structure sought")
      ->check(CLI::IsMember({"semigroup", "posemiring"}));
  search_cmd->add_option("--aux", search_args.aux, "Auxiliary element budget");
  search_cmd->add_option("--limit", search_args.limit, "Node limit");
  search_cmd->add_flag("--deterministic", search_args.deterministic,
                       "Sequential depth-first search");
  search_cmd->add_option("--threads", search_args.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--log", search_args.log, "Print root-level forced cells");
  search_cmd->add_option("--witness", search_args.witness,
                         "Write the witness table here");

  RingArgs ring_args;
  auto* ring = app.add_subcommand("ring", "Ideal lattice and AG(R) of a ring");
  ring->add_option("spec", ring_args.spec, "Ring spec, e.g. Z2xZ2xZ2")->required();
  ring->add_flag("--ideals", ring_args.ideals, "List the ideals");
  ring->add_option("--posemiring", ring_args.posemiring,
                   "Write I(R) as a po-semiring file");
  ring->add_option("--ag", ring_args.ag, "Write AG(R) as DOT");
  ring->add_flag("--check", ring_args.checks,
                 "Run the ring-theoretic consistency checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Context ctx{format == "structured", out};
  try {
    if (*verify) return cmd_verify(ctx, verify_args);
    if (*graph) return cmd_graph(ctx, graph_args);
    if (*construct) return cmd_construct(ctx, construct_args);
    if (*classify_cmd) return cmd_classify(ctx, classify_file);
    if (*search_cmd) return cmd_search(ctx, search_args);
    if (*ring) return cmd_ring(ctx, ring_args);
  } catch (const UsageError& e) {
    err << "posemi: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "posemi: " << e.what() << "\n";
    return kUsage;
  } catch (const StructureError& e) {
    err << "posemi: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace posemi::cli

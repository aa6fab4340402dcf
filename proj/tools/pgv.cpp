// pgv: command-line front end for the group and graph library.
// Exit codes: 0 success, 1 claim failure, 2 input error, 3 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pgv/automorphism.hpp"
#include "pgv/config.hpp"
#include "pgv/coset.hpp"
#include "pgv/errors.hpp"
#include "pgv/families.hpp"
#include "pgv/graph.hpp"
#include "pgv/perm_group.hpp"
#include "pgv/report.hpp"
#include "pgv/symmetry.hpp"

namespace {

using pgv::Json;

constexpr int exit_claims = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

// Distinguishes malformed input files from internal failures.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<pgv::Permutation> parse_generators(const Json& list, std::size_t degree, const std::string& what) {
  if (!list.is_array()) throw InputError(what + ": expected a list of cycle strings");
  std::vector<pgv::Permutation> gens;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_string()) throw InputError(what + "[" + std::to_string(i) + "]: expected a cycle string");
    try {
      gens.push_back(pgv::parse_cycles(list[i].get<std::string>(), degree));
    } catch (const pgv::ParseError& e) {
      throw InputError(what + "[" + std::to_string(i) + "], column " + std::to_string(e.column()) + ": " + e.what());
    }
  }
  if (gens.empty()) gens.push_back(pgv::Permutation::identity(degree));
  return gens;
}

std::size_t read_degree(const Json& doc) {
  if (!doc.is_object() || !doc.contains("degree") || !doc["degree"].is_number_unsigned() || doc["degree"] == 0)
    throw InputError("expected a positive integer field \"degree\"");
  return doc["degree"].get<std::size_t>();
}

pgv::SymGraph read_graph(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() > 3 && path.substr(path.size() - 3) == ".g6") {
    std::string line = text.substr(0, text.find('\n'));
    return pgv::from_graph6(line);
  }
  std::istringstream in(text);
  return pgv::read_edge_list(in);
}

Json one_based(const std::vector<std::vector<pgv::Vertex>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) {
    Json row = Json::array();
    for (const auto v : s) row.push_back(v + 1);
    out.push_back(std::move(row));
  }
  return out;
}

void emit(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    pgv::write_file_atomically(out_path, text);
  }
}

struct BudgetFlags {
  pgv::RunConfig config = pgv::default_config();

  void attach(CLI::App* cmd) {
    cmd->add_option("--vertex-budget", config.vertex_budget, "Largest coset space to enumerate");
    cmd->add_option("--aut-vertex-limit", config.aut_vertex_limit, "Largest graph for the automorphism search");
    cmd->add_option("--enumeration-bound", config.enumeration_bound, "Largest group to list element by element");
    cmd->add_option("--simplicity-budget", config.simplicity_budget, "Largest group for the exhaustive simplicity sweep");
    cmd->add_option("--threads", config.threads, "Worker threads (0: PGV_THREADS or all cores)");
  }
};

int cmd_group(const std::string& path, const std::string& out) {
  const Json doc = read_json(path);
  const std::size_t degree = read_degree(doc);
  if (!doc.contains("generators")) throw InputError("missing field \"generators\"");
  const pgv::PermGroup g(parse_generators(doc["generators"], degree, "generators"));
  std::vector<std::vector<pgv::Vertex>> orbits;
  for (const auto& o : g.orbits()) orbits.emplace_back(o.begin(), o.end());
  const pgv::DerivedSeries series = pgv::derived_series(g);
  Json report{{"degree", degree},
              {"order", pgv::to_decimal(g.order())},
              {"orbits", one_based(orbits)},
              {"transitive", g.is_transitive()},
              {"solvable", series.is_solvable()},
              {"perfect", series.is_perfect()}};
  emit(report, out);
  return 0;
}

struct BuildOptions {
  std::string family;
  std::uint64_t p = 0;
  bool deep = false;
  std::string input;
  std::string edges_path = "graph.txt";
  std::string graph6_path;
  std::string action_path;
};

Json action_record(const pgv::GroupAction& action, const std::vector<std::string>& names) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < action.generator_images.size(); ++i) {
    gens.push_back({{"name", i < names.size() ? names[i] : "g" + std::to_string(i + 1)},
                    {"image", pgv::to_cycle_string(action.generator_images[i])}});
  }
  return Json{{"points", action.space_size}, {"generators", gens}};
}

int cmd_build(const BuildOptions& opt, const pgv::RunConfig& config) {
  config.validate();
  pgv::PermGroup group = pgv::PermGroup::trivial(1);
  pgv::PermGroup subgroup = pgv::PermGroup::trivial(1);
  pgv::Permutation t;
  std::vector<std::string> names;
  std::string label;
  if (!opt.family.empty()) {
    const auto family = pgv::parse_family(opt.family);
    if (!family) throw InputError("unknown family " + opt.family);
    pgv::FamilySpec spec{*family, opt.p, opt.deep};
    spec.validate();
    if (!spec.graph_allowed()) {
      throw pgv::BudgetExceeded("vertex_budget", "more than 10^6 vertices (pass --deep and raise --vertex-budget)",
                                std::to_string(config.vertex_budget));
    }
    pgv::FamilyBundle b = pgv::build_family(spec);
    group = b.T;
    subgroup = b.H;
    t = b.t;
    label = pgv::to_string(*family);
  } else if (!opt.input.empty()) {
    const Json doc = read_json(opt.input);
    const std::size_t degree = read_degree(doc);
    if (!doc.contains("G") || !doc.contains("H") || !doc.contains("t") || !doc["t"].is_string())
      throw InputError("build input needs fields \"G\", \"H\" and \"t\"");
    group = pgv::PermGroup(parse_generators(doc["G"], degree, "G"));
    subgroup = pgv::PermGroup(parse_generators(doc["H"], degree, "H"));
    t = parse_generators(Json::array({doc["t"]}), degree, "t").front();
    if (!group.contains(t)) throw InputError("t is not in G");
    label = opt.input;
  } else {
    throw InputError("build needs --family or --input");
  }
  for (std::size_t i = 0; i < group.generators().size(); ++i) names.push_back("g" + std::to_string(i + 1));

  const pgv::DoubleCosetSet d = pgv::double_coset(subgroup, t, config.enumeration_bound);
  const pgv::CosetGraph cg = pgv::coset_graph(group, subgroup, d, config);
  pgv::write_stream_atomically(opt.edges_path, [&](std::ostream& out) { pgv::write_edge_list(out, cg.graph); });
  if (!opt.graph6_path.empty()) pgv::write_file_atomically(opt.graph6_path, pgv::to_graph6(cg.graph) + "\n");
  if (!opt.action_path.empty()) {
    pgv::write_stream_atomically(opt.action_path,
                                 [&](std::ostream& out) { out << action_record(cg.action, names).dump() << "\n"; });
  }
  const auto valency = cg.graph.valency();
  Json summary{{"source", label},
               {"vertices", cg.graph.vertex_count()},
               {"edges", cg.graph.edge_count()},
               {"valency", valency ? Json(*valency) : Json("irregular")},
               {"edge_list", opt.edges_path}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& family_name, std::uint64_t p, bool deep, const std::string& out,
               pgv::RunConfig config, bool timings) {
  const auto family = pgv::parse_family(family_name);
  if (!family) throw InputError("unknown family " + family_name);
  config.include_timings = timings;
  const pgv::VerificationReport report = pgv::verify_family(pgv::FamilySpec{*family, p, deep}, config);
  emit(report.to_json(), out);
  for (const auto& c : report.claims) {
    if (!c.pass) std::cerr << "FAIL " << c.name << ": expected " << c.expected.dump() << ", computed " << c.computed.dump() << "\n";
  }
  for (const auto& n : report.budget_notes) std::cerr << "skipped " << n << "\n";
  return report.all_pass() ? 0 : exit_claims;
}

int cmd_aut(const std::string& path, const std::string& out, const pgv::RunConfig& config) {
  const pgv::SymGraph graph = read_graph(path);
  const pgv::AutResult aut = pgv::automorphism_group(graph, config.aut_vertex_limit);
  Json gens = Json::array();
  for (const auto& g : aut.group.generators()) gens.push_back(pgv::to_cycle_string(g));
  const pgv::PermGroup stab = aut.group.point_stabilizer(0);
  Json stabilizer{{"order", pgv::to_decimal(stab.order())}, {"solvable", pgv::is_solvable(stab)}};
  Json profile = nullptr;
  const auto valency = graph.valency();
  if (aut.vertex_transitive && valency && *valency >= 5 && pgv::is_prime(*valency) && pgv::is_solvable(stab) &&
      pgv::is_arc_transitive(graph, pgv::natural_action(aut.group))) {
    const pgv::StabilizerProfile s = pgv::stabilizer_profile(stab, graph, 0, config.enumeration_bound);
    profile = {{"p", s.p}, {"k", pgv::to_json(s.k)}, {"ell", pgv::to_json(s.ell)}};
  }
  stabilizer["profile"] = profile;
  Json report{{"vertices", graph.vertex_count()},
              {"order", pgv::to_decimal(aut.group.order())},
              {"generators", gens},
              {"vertex_transitive", aut.vertex_transitive},
              {"stabilizer", stabilizer},
              {"canonical_fingerprint", aut.fingerprint}};
  emit(report, out);
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& blocks_path, const std::string& action_path,
                 const std::string& out) {
  const pgv::SymGraph graph = read_graph(path);
  std::vector<std::vector<pgv::Vertex>> blocks;
  if (!blocks_path.empty()) {
    const Json doc = read_json(blocks_path);
    if (!doc.is_array()) throw InputError("blocks: expected a list of vertex lists");
    for (const auto& row : doc) {
      if (!row.is_array()) throw InputError("blocks: expected a list of vertex lists");
      std::vector<pgv::Vertex> block;
      for (const auto& v : row) {
        if (!v.is_number_unsigned() || v == 0 || v.get<std::size_t>() > graph.vertex_count())
          throw InputError("blocks: vertex ids are 1-based and at most " + std::to_string(graph.vertex_count()));
        block.push_back(v.get<pgv::Vertex>() - 1);
      }
      blocks.push_back(std::move(block));
    }
  } else if (!action_path.empty()) {
    // Orbits of the group generated by the given vertex permutations.
    const Json doc = read_json(action_path);
    if (!doc.contains("generators")) throw InputError("action: missing field \"generators\"");
    Json strings = Json::array();
    for (const auto& g : doc["generators"]) strings.push_back(g.is_object() ? Json(g.value("image", "")) : g);
    const pgv::PermGroup n(parse_generators(strings, graph.vertex_count(), "generators"));
    for (const auto& o : n.orbits()) blocks.emplace_back(o.begin(), o.end());
  } else {
    throw InputError("quotient needs --blocks or --action");
  }
  const pgv::QuotientResult q = pgv::quotient_graph(graph, blocks);
  const auto before = graph.valency();
  const auto after = q.graph.valency();
  Json report{{"blocks", blocks.size()},
              {"edges", q.graph.edge_count()},
              {"valency", after ? Json(*after) : Json("irregular")},
              {"valency_preserved", before && after && *before == *after},
              {"loops_discarded", q.loops_discarded},
              {"multi_edges_collapsed", q.multi_edges_collapsed}};
  if (!out.empty()) pgv::write_stream_atomically(out, [&](std::ostream& o) { pgv::write_edge_list(o, q.graph); });
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation groups, coset graphs and symmetric graph verification"};
  app.require_subcommand(1);

  std::string group_file, group_out;
  auto* group = app.add_subcommand("group", "Order, orbits, solvability and perfectness of a generated group");
  group->add_option("file", group_file, "JSON {degree, generators: [cycle strings]}")->required();
  group->add_option("--out", group_out, "Write the report here instead of stdout");

  BuildOptions build_opt;
  BudgetFlags build_budget;
  auto* build = app.add_subcommand("build", "Build a coset graph Cos(G, H, HtH) and write it to disk");
  build->add_option("--family", build_opt.family, "psl2-11, psl2-29, m23 or alt-p");
  build->add_option("--p", build_opt.p, "Prime valency for alt-p");
  build->add_flag("--deep", build_opt.deep, "Allow alt-p graphs with p >= 11");
  build->add_option("--input", build_opt.input, "JSON {degree, G: [...], H: [...], t: cycle string}");
  build->add_option("--edges", build_opt.edges_path, "Edge-list output path")->capture_default_str();
  build->add_option("--graph6", build_opt.graph6_path, "Also write graph6 here");
  build->add_option("--action", build_opt.action_path, "Write the G-action record here");
  build_budget.attach(build);

  std::string verify_family;
  std::uint64_t verify_p = 0;
  bool verify_deep = false, verify_timings = false;
  std::string verify_out;
  BudgetFlags verify_budget;
  auto* verify = app.add_subcommand("verify", "Check every claim for one family and write the report");
  verify->add_option("--family", verify_family, "psl2-11, psl2-29, m23 or alt-p")->required();
  verify->add_option("--p", verify_p, "Prime valency for alt-p");
  verify->add_flag("--deep", verify_deep, "Run the expensive checks too");
  verify->add_option("--out", verify_out, "Report path (stdout when omitted)");
  verify->add_flag("--timings", verify_timings, "Include stage timings (reports are then not reproducible)");
  verify_budget.attach(verify);

  std::string aut_file, aut_out;
  BudgetFlags aut_budget;
  auto* aut = app.add_subcommand("aut", "Automorphism group of a graph (edge list, or graph6 if the name ends in .g6)");
  aut->add_option("file", aut_file, "Graph file")->required();
  aut->add_option("--out", aut_out, "Write the report here instead of stdout");
  aut_budget.attach(aut);

  std::string q_file, q_blocks, q_action, q_out;
  auto* quotient = app.add_subcommand("quotient", "Quotient graph by a vertex partition or by group orbits");
  quotient->add_option("file", q_file, "Graph file")->required();
  quotient->add_option("--blocks", q_blocks, "JSON list of 1-based vertex lists");
  quotient->add_option("--action", q_action, "JSON {generators: [cycle strings on vertices]}");
  quotient->add_option("--out", q_out, "Write the quotient edge list here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*group) return cmd_group(group_file, group_out);
    if (*build) return cmd_build(build_opt, build_budget.config);
    if (*verify) return cmd_verify(verify_family, verify_p, verify_deep, verify_out, verify_budget.config, verify_timings);
    if (*aut) return cmd_aut(aut_file, aut_out, aut_budget.config);
    if (*quotient) return cmd_quotient(q_file, q_blocks, q_action, q_out);
  } catch (const pgv::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return exit_budget;
  } catch (const pgv::ParseError& e) {
    std::cerr << "input: " << e.what() << "\n";
    return exit_input;
  } catch (const InputError& e) {
    std::cerr << "input: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input: " << e.what() << "\n";
    return exit_input;
  } catch (const pgv::VerificationError& e) {
    std::cerr << "verification: " << e.what() << "\n";
    return exit_claims;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_claims;
  }
  return exit_input;
}

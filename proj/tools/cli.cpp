#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "comgraph/commuting_graph.hpp"
#include "comgraph/errors.hpp"
#include "comgraph/matrix_io.hpp"
#include "comgraph/matrix_space.hpp"
#include "comgraph/parallel.hpp"
#include "comgraph/semiring.hpp"
#include "comgraph/verification.hpp"

namespace comgraph::cli {

namespace {

// Misuse that is not a CLI11 parse error (bad semiring name, oversize graph).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kMiB = std::uint64_t{1} << 20;
// Adjacency larger than this needs --allow-large (M_4(B) needs 512 MiB).
constexpr std::uint64_t kLargeAdjacencyBytes = 256 * kMiB;

struct GraphArgs {
  std::string semiring;
  std::size_t n = 0;
  std::string mode = "materialized";
  std::uint64_t memory_cap_mib = 1024;
  unsigned workers = default_worker_count();
  bool allow_large = false;
  bool json = false;
};

SemiringPtr resolve_semiring(const std::string& source) {
  if (source == "tropical") {
    throw UsageError("the tropical semiring is infinite; this command needs a finite semiring");
  }
  if (source == "boolean") return boolean_semiring();
  if (auto spec = parse_builtin_name(source)) return make_semiring(builtin_semiring(*spec));
  if (std::filesystem::is_regular_file(source)) {
    SemiringTable table = parse_semiring_file(source);
    const AxiomReport report = validate_axioms(table);
    if (!report.valid()) {
      throw UsageError("semiring file '" + source + "' violates " + report.violations.front().axiom +
                       "; run `semiring check` for details");
    }
    return make_semiring(std::move(table));
  }
  throw UsageError("unknown semiring '" + source + "' (expected boolean, modular:<m>, chain:<k> or a table file)");
}

Matrix load_matrix(const std::string& path, const SemiringPtr& s) { return parse_matrix_file(path, s); }

// Semiring named by the matrix file header unless given explicitly.
SemiringPtr semiring_for(const std::string& explicit_source, const std::string& matrix_path) {
  if (!explicit_source.empty()) return resolve_semiring(explicit_source);
  return resolve_semiring(matrix_semiring_name(read_text_file(matrix_path)));
}

GraphOptions graph_options(const GraphArgs& a, std::uint64_t space_size) {
  GraphOptions go;
  go.mode = a.mode == "implicit" ? GraphMode::kImplicit : GraphMode::kMaterialized;
  go.memory_cap_bytes = a.memory_cap_mib * kMiB;
  go.workers = a.workers;
  if (go.mode == GraphMode::kMaterialized && !a.allow_large) {
    const std::uint64_t words = (space_size + 63) / 64;
    const std::uint64_t bytes = space_size * words * sizeof(std::uint64_t);
    if (bytes > kLargeAdjacencyBytes) {
      throw UsageError("materialized adjacency would need about " + std::to_string(bytes / kMiB) +
                       " MiB; pass --allow-large, use --mode implicit, or use certify-ge4");
    }
  }
  return go;
}

struct LoadedGraph {
  SemiringPtr semiring;
  std::shared_ptr<const MatrixSpace> space;
  std::optional<CommutingGraph> graph;
};

LoadedGraph load_graph(const GraphArgs& a, bool require_materialized) {
  LoadedGraph lg;
  lg.semiring = resolve_semiring(a.semiring);
  lg.space = std::make_shared<const MatrixSpace>(lg.semiring, a.n);
  GraphOptions go = graph_options(a, lg.space->size());
  if (require_materialized && go.mode == GraphMode::kImplicit) {
    throw UsageError("this command needs --mode materialized");
  }
  lg.graph.emplace(CommutingGraph::build(lg.space, go));
  return lg;
}

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--semiring", a.semiring, "boolean, modular:<m>, chain:<k> or a semiring table file")->required();
  cmd->add_option("--n", a.n, "matrix dimension")->required()->check(CLI::Range(1, 8));
  cmd->add_option("--mode", a.mode, "graph storage")->check(CLI::IsMember({"materialized", "implicit"}));
  cmd->add_option("--memory-cap", a.memory_cap_mib, "adjacency memory cap in MiB")->check(CLI::Range(64, 1 << 20));
  cmd->add_option("--workers", a.workers, "worker threads (default: COMGRAPH_WORKERS or hardware)")
      ->check(CLI::Range(1, 1024));
  cmd->add_flag("--allow-large", a.allow_large, "permit materialized adjacency above 256 MiB");
  cmd->add_flag("--json", a.json, "machine-readable output");
}

std::string distance_text(const DistanceResult& d) { return d.infinite() ? "inf" : std::to_string(*d.value); }

ordered_json path_json(const CommutingGraph& g, const DistanceResult& d) {
  ordered_json path = ordered_json::array();
  for (VertexId v : d.path) path.push_back(matrix_json(g.matrix(v)));
  return path;
}

void print_path(std::ostream& out, const CommutingGraph& g, const DistanceResult& d) {
  for (std::size_t i = 0; i < d.path.size(); ++i) {
    out << (i == 0 ? "path " : " - ") << compact_string(g.matrix(d.path[i]));
  }
  if (!d.path.empty()) out << '\n';
}

// -- subcommands -----------------------------------------------------------

int semiring_check(const std::string& source, bool json, std::ostream& out) {
  std::optional<SemiringTable> table;
  if (source == "tropical") throw UsageError("the tropical semiring has no finite table to check");
  if (auto spec = parse_builtin_name(source)) {
    table.emplace(builtin_semiring(*spec));
  } else {
    table.emplace(parse_semiring_file(source));
  }
  const AxiomReport report = validate_axioms(*table);
  std::optional<SemiringProperties> props;
  if (report.valid()) props = classify(*table);

  if (json) {
    ordered_json j;
    j["semiring"] = table->name();
    j["order"] = table->order();
    j["valid"] = report.valid();
    ordered_json vs = ordered_json::array();
    for (const auto& v : report.violations) {
      ordered_json w = ordered_json::array();
      for (auto e : v.witness) w.push_back(table->name_of(e));
      vs.push_back({{"axiom", v.axiom}, {"message", v.message}, {"witness", w}});
    }
    j["violations"] = vs;
    if (props) {
      j["properties"] = {{"commutative", props->commutative},
                         {"entire", props->entire},
                         {"antinegative", props->antinegative},
                         {"division", props->division}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "semiring " << table->name() << " order " << table->order() << '\n';
    if (report.valid()) {
      out << "axioms: ok\n";
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      out << "commutative: " << yn(props->commutative) << '\n'
          << "entire: " << yn(props->entire) << '\n'
          << "antinegative: " << yn(props->antinegative) << '\n'
          << "division: " << yn(props->division) << '\n';
    } else {
      out << "axioms: violated\n";
      for (const auto& v : report.violations) {
        out << "  " << v.axiom << ": " << v.message << " [witness";
        for (auto e : v.witness) out << ' ' << table->name_of(e);
        out << "]\n";
      }
    }
  }
  return report.valid() ? kExitOk : kExitClaimFailed;
}

int graph_diameter(const GraphArgs& a, std::ostream& out) {
  const LoadedGraph lg = load_graph(a, true);
  const CommutingGraph& g = *lg.graph;
  const DiameterResult d = diameter(g);
  if (a.json) {
    ordered_json j;
    j["semiring"] = lg.semiring->name();
    j["n"] = a.n;
    j["vertices"] = g.vertex_count();
    j["diameter"] = d.distance.infinite() ? ordered_json("inf") : ordered_json(*d.distance.value);
    j["from"] = matrix_json(g.matrix(d.from));
    j["to"] = matrix_json(g.matrix(d.to));
    j["path"] = path_json(g, d.distance);
    out << j.dump(2) << '\n';
  } else {
    out << distance_text(d.distance) << '\n';
    out << "vertices " << g.vertex_count() << '\n';
    out << "pair " << compact_string(g.matrix(d.from)) << ' ' << compact_string(g.matrix(d.to)) << '\n';
    print_path(out, g, d.distance);
  }
  return kExitOk;
}

int graph_distance(const GraphArgs& a, const std::string& a_path, const std::string& b_path, std::ostream& out) {
  const LoadedGraph lg = load_graph(a, false);
  const CommutingGraph& g = *lg.graph;
  const Matrix ma = load_matrix(a_path, lg.semiring);
  const Matrix mb = load_matrix(b_path, lg.semiring);
  const DistanceResult d = distance(g, ma, mb);
  if (a.json) {
    ordered_json j;
    j["distance"] = d.infinite() ? ordered_json("inf") : ordered_json(*d.value);
    j["path"] = path_json(g, d);
    out << j.dump(2) << '\n';
  } else {
    out << distance_text(d) << '\n';
    print_path(out, g, d);
  }
  return kExitOk;
}

int graph_components(const GraphArgs& a, std::ostream& out) {
  const LoadedGraph lg = load_graph(a, false);
  const CommutingGraph& g = *lg.graph;
  const auto comps = connected_components(g);
  if (a.json) {
    ordered_json j;
    j["vertices"] = g.vertex_count();
    ordered_json cs = ordered_json::array();
    for (const auto& c : comps) cs.push_back({{"size", c.size()}, {"least", matrix_json(g.matrix(c.front()))}});
    j["components"] = cs;
    out << j.dump(2) << '\n';
  } else {
    out << "components " << comps.size() << '\n';
    for (const auto& c : comps) out << c.size() << ' ' << compact_string(g.matrix(c.front())) << '\n';
  }
  return kExitOk;
}

int graph_export(const GraphArgs& a, const std::string& format, const std::string& output, std::ostream& out) {
  const LoadedGraph lg = load_graph(a, true);
  const ExportFormat f = format == "dot" ? ExportFormat::kDot : ExportFormat::kCsvEdges;
  if (output.empty() || output == "-") {
    export_graph(*lg.graph, f, out);
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + output + "'");
    export_graph(*lg.graph, f, file);
  }
  return kExitOk;
}

int certify(const std::string& semiring, const std::string& a_path, const std::string& b_path, unsigned workers,
            bool json, std::ostream& out) {
  const SemiringPtr s = semiring_for(semiring, a_path);
  const Matrix a = load_matrix(a_path, s);
  const Matrix b = load_matrix(b_path, s);
  if (a.dim() != b.dim()) throw StructuralError("matrices have different dimensions");
  const MatrixSpace space(s, a.dim());
  const DistanceCertificate cert = certify_distance_ge4(space, a, b, workers);
  if (json) {
    ordered_json j;
    j["holds"] = cert.holds;
    j["scanned"] = cert.scanned;
    j["neighbors_a"] = cert.neighbors_a;
    j["neighbors_b"] = cert.neighbors_b;
    j["common_neighbors"] = cert.common_neighbors;
    j["cross_pairs_checked"] = cert.cross_pairs_checked;
    j["cross_pairs_commuting"] = cert.cross_pairs_commuting;
    if (cert.counterexample) {
      j["counterexample"] = ordered_json::array(
          {matrix_json(space.decode(cert.counterexample->first)), matrix_json(space.decode(cert.counterexample->second))});
    }
    out << j.dump(2) << '\n';
  } else {
    out << (cert.holds ? "distance >= 4: certified" : "distance >= 4: not certified") << '\n'
        << "scanned " << cert.scanned << '\n'
        << "neighbors_a " << cert.neighbors_a << '\n'
        << "neighbors_b " << cert.neighbors_b << '\n'
        << "common_neighbors " << cert.common_neighbors << '\n'
        << "cross_pairs_checked " << cert.cross_pairs_checked << '\n'
        << "cross_pairs_commuting " << cert.cross_pairs_commuting << '\n';
    if (cert.counterexample) {
      out << "counterexample " << compact_string(space.decode(cert.counterexample->first)) << ' '
          << compact_string(space.decode(cert.counterexample->second)) << '\n';
    }
  }
  return cert.holds ? kExitOk : kExitClaimFailed;
}

int run_verify(const std::string& id, const VerifyOptions& options, bool timing, std::ostream& out) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = theorem_ids();
  } else {
    ids.push_back(id);
  }
  bool all_pass = true;
  ordered_json reports = ordered_json::array();
  for (const auto& t : ids) {
    const VerificationReport r = verify(t, options);
    all_pass = all_pass && r.status == CheckStatus::kPass;
    reports.push_back(to_json(r, timing));
  }
  out << (id == "all" ? reports : reports.front()).dump(2) << '\n';
  return all_pass ? kExitOk : kExitClaimFailed;
}

int centralizer(const std::string& semiring, const std::string& path, std::uint64_t budget, bool json,
                std::ostream& out) {
  const SemiringPtr s = semiring_for(semiring, path);
  const Matrix a = load_matrix(path, s);
  const auto members = centralizer_enumerate(a, budget);
  if (json) {
    ordered_json j;
    j["size"] = members.size();
    ordered_json ms = ordered_json::array();
    for (const auto& m : members) ms.push_back(matrix_json(m));
    j["members"] = ms;
    out << j.dump(2) << '\n';
  } else {
    out << "size " << members.size() << '\n';
    for (const auto& m : members) out << compact_string(m) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting graphs of matrices over semirings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "comgraph 0.1.0");

  // semiring check
  auto* semiring_cmd = app.add_subcommand("semiring", "semiring tables");
  semiring_cmd->require_subcommand(1);
  auto* check_cmd = semiring_cmd->add_subcommand("check", "validate axioms and classify a semiring");
  std::string check_source;
  bool check_json = false;
  check_cmd->add_option("source", check_source, "table file or builtin name")->required();
  check_cmd->add_flag("--json", check_json, "machine-readable output");

  // graph ...
  auto* graph_cmd = app.add_subcommand("graph", "commuting graph of M_n(S)");
  graph_cmd->require_subcommand(1);
  GraphArgs diameter_args, distance_args, components_args, export_args;
  auto* diameter_cmd = graph_cmd->add_subcommand("diameter", "exact diameter with a realizing pair");
  add_graph_options(diameter_cmd, diameter_args);
  auto* distance_cmd = graph_cmd->add_subcommand("distance", "shortest path between two matrices");
  add_graph_options(distance_cmd, distance_args);
  std::string dist_a, dist_b;
  distance_cmd->add_option("--a", dist_a, "matrix file")->required()->check(CLI::ExistingFile);
  distance_cmd->add_option("--b", dist_b, "matrix file")->required()->check(CLI::ExistingFile);
  auto* components_cmd = graph_cmd->add_subcommand("components", "connected components");
  add_graph_options(components_cmd, components_args);
  auto* export_cmd = graph_cmd->add_subcommand("export", "write the graph as DOT or CSV edges");
  add_graph_options(export_cmd, export_args);
  std::string export_format = "csv", export_output;
  export_cmd->add_option("--format", export_format, "dot or csv")->check(CLI::IsMember({"dot", "csv"}));
  export_cmd->add_option("--output,-o", export_output, "output file (default stdout)");

  // certify-ge4
  auto* certify_cmd = app.add_subcommand("certify-ge4", "certify d(A,B) >= 4 by neighborhood scan");
  std::string cert_semiring, cert_a, cert_b;
  unsigned cert_workers = default_worker_count();
  bool cert_json = false;
  certify_cmd->add_option("--semiring", cert_semiring, "semiring (default: from the matrix header)");
  certify_cmd->add_option("--a", cert_a, "matrix file")->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--b", cert_b, "matrix file")->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--workers", cert_workers, "worker threads")->check(CLI::Range(1, 1024));
  certify_cmd->add_flag("--json", cert_json, "machine-readable output");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the checks for one claim, or all");
  std::string verify_id;
  VerifyOptions vopts;
  vopts.workers = default_worker_count();
  std::uint64_t verify_cap_mib = vopts.memory_cap_bytes / kMiB;
  bool no_timing = false;
  std::vector<std::string> ids = theorem_ids();
  ids.push_back("all");
  verify_cmd->add_option("theorem", verify_id, "claim id or all")->required()->check(CLI::IsMember(ids));
  verify_cmd->add_option("--seed", vopts.seed, "seed for randomized checks");
  verify_cmd->add_option("--budget", vopts.budget, "largest matrix set to enumerate")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--workers", vopts.workers, "worker threads")->check(CLI::Range(1, 1024));
  verify_cmd->add_option("--memory-cap", verify_cap_mib, "adjacency memory cap in MiB")->check(CLI::Range(64, 1 << 20));
  verify_cmd->add_flag("--no-timing", no_timing, "omit elapsed_ms so output is byte-stable");

  // centralizer
  auto* centralizer_cmd = app.add_subcommand("centralizer", "all matrices commuting with the given one");
  std::string cent_semiring, cent_matrix;
  std::uint64_t cent_budget = kDefaultEnumerationBudget;
  bool cent_json = false;
  centralizer_cmd->add_option("--semiring", cent_semiring, "semiring (default: from the matrix header)");
  centralizer_cmd->add_option("--matrix", cent_matrix, "matrix file")->required()->check(CLI::ExistingFile);
  centralizer_cmd->add_option("--budget", cent_budget, "largest matrix set to enumerate")->check(CLI::PositiveNumber);
  centralizer_cmd->add_flag("--json", cent_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return semiring_check(check_source, check_json, out);
    if (diameter_cmd->parsed()) return graph_diameter(diameter_args, out);
    if (distance_cmd->parsed()) return graph_distance(distance_args, dist_a, dist_b, out);
    if (components_cmd->parsed()) return graph_components(components_args, out);
    if (export_cmd->parsed()) return graph_export(export_args, export_format, export_output, out);
    if (certify_cmd->parsed()) return certify(cert_semiring, cert_a, cert_b, cert_workers, cert_json, out);
    if (verify_cmd->parsed()) {
      vopts.memory_cap_bytes = verify_cap_mib * kMiB;
      return run_verify(verify_id, vopts, !no_timing, out);
    }
    if (centralizer_cmd->parsed()) return centralizer(cent_semiring, cent_matrix, cent_budget, cent_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace comgraph::cli

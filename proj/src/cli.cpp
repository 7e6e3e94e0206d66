#include "gclab/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "gclab/claims.hpp"
#include "gclab/coloring.hpp"
#include "gclab/edge_coloring.hpp"
#include "gclab/errors.hpp"
#include "gclab/families.hpp"
#include "gclab/graph.hpp"
#include "gclab/line_graph.hpp"
#include "gclab/nordhaus_gaddum.hpp"
#include "json.hpp"

namespace gclab {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CliConfig {
  std::string format = "text";
  std::uint64_t budget = SolverOptions{}.node_budget;
  int workers = 1;

  std::string input;
  std::string out_path;
  std::string family;
  std::vector<int> params;
  std::string method = "auto";
  std::vector<long long> triple;
  int max = 0;
  std::string expected;
};

// Usage problems detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_edge_list(in);
}

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

void emit_graph(const Graph& g, const std::string& out_path, std::ostream& out,
                const std::string& header = {}) {
  std::ostringstream text;
  text << header;
  write_edge_list(text, g);
  if (out_path.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw UsageError("cannot write '" + out_path + "'");
  file << text.str();
}

void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format '" + cfg.format + "' is not supported by this subcommand");
}

std::string vertex_witness_json(const VertexColoring& c) {
  ordered_json j;
  j["colors"] = c.num_colors;
  j["assignment"] = c.color_of;
  return j.dump();
}

std::string edge_witness_json(const Graph& g, const EdgeColoring& c) {
  ordered_json j;
  j["colors"] = c.num_colors;
  auto arr = ordered_json::array();
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) arr.push_back({edges[i].u, edges[i].v, c.color_of[i]});
  j["assignment"] = std::move(arr);
  return j.dump();
}

void print_edge_coloring(const CliConfig& cfg, const Graph& g, const EdgeColoring& c,
                         std::ostream& out) {
  if (cfg.format == "json") {
    out << edge_witness_json(g, c) << '\n';
    return;
  }
  out << c.num_colors << '\n';
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << edges[i].u << ' ' << edges[i].v << ' ' << c.color_of[i] << '\n';
  }
}

int cmd_family(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  const FamilySpec spec{parse_family(cfg.family), cfg.params};
  emit_graph(generate(spec), cfg.out_path, out);
  return kExitOk;
}

int cmd_linegraph(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  const auto lg = line_graph(load_graph(cfg.input));
  std::string header;
  for (std::size_t i = 0; i < lg.edge_of_vertex.size(); ++i) {
    header += "# " + std::to_string(i) + " = " + std::to_string(lg.edge_of_vertex[i].u) + " " +
              std::to_string(lg.edge_of_vertex[i].v) + "\n";
  }
  emit_graph(lg.graph, cfg.out_path, out, header);
  return kExitOk;
}

int cmd_chi(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const auto result = chromatic_number(load_graph(cfg.input), {cfg.budget});
  if (cfg.format == "json") {
    out << vertex_witness_json(result.witness) << '\n';
  } else {
    out << result.value << '\n';
  }
  return kExitOk;
}

int cmd_chi_index(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const Graph g = load_graph(cfg.input);
  const auto result = chromatic_index(g, {cfg.budget});
  if (cfg.format == "json") {
    out << edge_witness_json(g, result.witness) << '\n';
  } else {
    out << result.value << '\n';
  }
  return kExitOk;
}

// Family parameter n such that g is exactly generate({family, n}), if any.
std::optional<int> labeled_member(const Graph& g, Family family) {
  int n = 0;
  switch (family) {
    case Family::kComplete: n = g.order(); break;
    case Family::kWheel: n = g.order(); break;
    case Family::kFan: n = g.order() - 1; break;
    case Family::kHelm:
      if (g.order() % 2 == 0) return std::nullopt;
      n = (g.order() - 1) / 2;
      break;
    default: return std::nullopt;
  }
  if (n < family_min_param(family)) return std::nullopt;
  if (generate({family, {n}}) != g) return std::nullopt;
  return n;
}

EdgeColoring construct_for(Family family, int n) {
  switch (family) {
    case Family::kComplete: return edge_color_complete(n);
    case Family::kWheel: return edge_color_wheel(n);
    case Family::kHelm: return edge_color_helm(n);
    case Family::kFan: return edge_color_fan(n);
    default: break;
  }
  throw UsageError("no construction for family");
}

int cmd_edge_color(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.input.empty() == cfg.family.empty()) {
    throw UsageError("edge-color needs exactly one of <file> or --family");
  }
  const Graph g =
      cfg.input.empty() ? generate({parse_family(cfg.family), cfg.params}) : load_graph(cfg.input);

  static const std::map<std::string, Family> kConstructive{{"complete", Family::kComplete},
                                                           {"wheel", Family::kWheel},
                                                           {"helm", Family::kHelm},
                                                           {"fan", Family::kFan}};
  EdgeColoring coloring;
  if (auto it = kConstructive.find(cfg.method); it != kConstructive.end()) {
    auto n = labeled_member(g, it->second);
    if (!n) {
      throw UsageError("input is not " + cfg.method + "(n) in the generator's labeling");
    }
    coloring = construct_for(it->second, *n);
  } else if (cfg.method == "konig") {
    coloring = edge_color_bipartite_konig(g);
  } else if (cfg.method == "misra-gries") {
    coloring = edge_color_misra_gries(g);
  } else if (cfg.method == "exact") {
    coloring = chromatic_index(g, {cfg.budget}).witness;
  } else {
    // auto: an optimal construction when one applies, otherwise exact.
    std::optional<EdgeColoring> chosen;
    for (auto family : {Family::kComplete, Family::kWheel, Family::kHelm, Family::kFan}) {
      if (chosen) break;
      if (auto n = labeled_member(g, family)) {
        try {
          chosen = construct_for(family, *n);
        } catch (const ConstructionInfeasible&) {
        }
      }
    }
    if (!chosen && g.edge_count() > 0 && bipartition(g)) chosen = edge_color_bipartite_konig(g);
    coloring = chosen ? std::move(*chosen) : chromatic_index(g, {cfg.budget}).witness;
  }
  print_edge_coloring(cfg, g, coloring, out);
  return kExitOk;
}

int cmd_ng_check(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const auto r = ng_check(load_graph(cfg.input), {cfg.budget});
  const long long n = r.order;
  if (cfg.format == "json") {
    ordered_json j;
    j["order"] = r.order;
    j["chi"] = r.chi;
    j["chi_complement"] = r.chi_comp;
    j["sum"] = r.sum;
    j["product"] = r.product;
    j["lower_sum"] = {{"sum_squared", r.sum * r.sum}, {"four_n", 4 * n}, {"ok", r.lower_sum_ok}};
    j["upper_sum"] = {{"sum", r.sum}, {"n_plus_1", n + 1}, {"ok", r.upper_sum_ok}};
    j["lower_product"] = {{"product", r.product}, {"n", n}, {"ok", r.lower_prod_ok}};
    j["upper_product"] = {{"four_product", 4 * r.product},
                          {"n_plus_1_squared", (n + 1) * (n + 1)},
                          {"ok", r.upper_prod_ok}};
    out << j.dump() << '\n';
  } else {
    auto ok = [](bool b) { return b ? "ok" : "VIOLATED"; };
    out << "order " << r.order << '\n'
        << "chi " << r.chi << '\n'
        << "chi_complement " << r.chi_comp << '\n'
        << "sum " << r.sum << '\n'
        << "product " << r.product << '\n'
        << "lower_sum sum^2=" << r.sum * r.sum << " >= 4n=" << 4 * n << ' ' << ok(r.lower_sum_ok) << '\n'
        << "upper_sum sum=" << r.sum << " <= n+1=" << n + 1 << ' ' << ok(r.upper_sum_ok) << '\n'
        << "lower_product product=" << r.product << " >= n=" << n << ' ' << ok(r.lower_prod_ok) << '\n'
        << "upper_product 4*product=" << 4 * r.product << " <= (n+1)^2=" << (n + 1) * (n + 1) << ' '
        << ok(r.upper_prod_ok) << '\n';
  }
  return r.all_ok() ? kExitOk : kExitFindings;
}

int cmd_ng_feasible(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const bool feasible = ng_feasible(cfg.triple[0], cfg.triple[1], cfg.triple[2]);
  out << (feasible ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_ng_construct(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  for (long long v : cfg.triple) {
    if (v > 100000) throw UsageError("n, a, b must be <= 100000");
  }
  emit_graph(ng_construct(static_cast<int>(cfg.triple[0]), static_cast<int>(cfg.triple[1]),
                          static_cast<int>(cfg.triple[2])),
             cfg.out_path, out);
  return kExitOk;
}

struct AuditTarget {
  std::string name;
  int default_max;
};

// Report order for `audit --family all`.
const std::vector<AuditTarget> kAuditTargets{
    {"complete", 8}, {"complete_bipartite", 5}, {"star", 8}, {"bistar", 4},
    {"wheel", 9},    {"helm", 7},               {"fan", 8},  {"bipartite", 5},
};

int cmd_audit(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ReportFormat format = ReportFormat::kMarkdown;
  if (cfg.format == "csv") {
    format = ReportFormat::kCsv;
  } else if (cfg.format == "json") {
    format = ReportFormat::kJson;
  }

  std::vector<Expectation> expected;
  if (!cfg.expected.empty()) {
    std::ifstream in(cfg.expected);
    if (!in) throw UsageError("cannot open '" + cfg.expected + "'");
    expected = parse_expectations(in);
  }

  const AuditOptions opts{{cfg.budget}, cfg.workers};
  std::vector<AuditRow> rows;
  auto audit_one = [&](const std::string& name, int max) {
    std::vector<AuditRow> part;
    if (name == "bipartite") {
      part = audit_bipartite_bounds(max, opts);
    } else {
      const Family f = parse_family(name);
      part = audit_family(f, audit_min_param(f), max, opts);
    }
    rows.insert(rows.end(), part.begin(), part.end());
  };

  if (cfg.family == "all") {
    for (const auto& t : kAuditTargets) audit_one(t.name, cfg.max > 0 ? cfg.max : t.default_max);
  } else {
    int max = cfg.max;
    if (max <= 0) {
      max = 8;
      for (const auto& t : kAuditTargets) {
        if (t.name == cfg.family) max = t.default_max;
      }
    }
    if (cfg.family != "bipartite") parse_family(cfg.family);
    audit_one(cfg.family, max);
  }

  out << render_report(rows, format);

  const auto budget_rows = std::count_if(rows.begin(), rows.end(), [](const AuditRow& r) {
    return r.verdict == Verdict::kBudgetExceeded;
  });
  if (budget_rows > 0) {
    err << budget_rows << " row(s) exceeded the solver budget\n";
    return kExitBudget;
  }
  const auto unexplained = unexplained_mismatches(rows, expected);
  if (!unexplained.empty()) {
    err << unexplained.size() << " unexplained MISMATCH row(s)\n";
    return kExitFindings;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Graph coloring laboratory: families, line graphs, exact solvers, "
               "edge-coloring constructions, Nordhaus-Gaddum tools, claims audit"};
  app.name("gclab");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
  app.add_option("--budget", cfg.budget, "Exact solver node budget")->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "Emit a family graph as an edge list");
  family->add_option("--name", cfg.family, "Family name")->required();
  family->add_option("--params", cfg.params, "Parameters, comma separated")
      ->required()
      ->delimiter(',');
  family->add_option("--out", cfg.out_path, "Write to file instead of stdout");

  auto* linegraph = app.add_subcommand("linegraph", "Line graph of an edge-list file");
  linegraph->add_option("file", cfg.input, "Edge-list file ('-' for stdin)")->required();
  linegraph->add_option("--out", cfg.out_path, "Write to file instead of stdout");

  auto* chi = app.add_subcommand("chi", "Exact chromatic number");
  chi->add_option("file", cfg.input, "Edge-list file ('-' for stdin)")->required();

  auto* chi_index = app.add_subcommand("chi-index", "Exact chromatic index");
  chi_index->add_option("file", cfg.input, "Edge-list file ('-' for stdin)")->required();

  auto* edge_color = app.add_subcommand("edge-color", "Edge coloring by a chosen method");
  edge_color->add_option("file", cfg.input, "Edge-list file ('-' for stdin)");
  edge_color->add_option("--family", cfg.family, "Generate the input from a family");
  edge_color->add_option("--params", cfg.params, "Family parameters")->delimiter(',');
  edge_color->add_option("--method", cfg.method, "Coloring method")
      ->check(CLI::IsMember(
          {"auto", "konig", "complete", "wheel", "helm", "fan", "misra-gries", "exact"}));

  auto* ng = app.add_subcommand("ng", "Nordhaus-Gaddum tools");
  ng->require_subcommand(1, 1);
  auto* ng_check_cmd = ng->add_subcommand("check", "Check the four bounds on a graph");
  ng_check_cmd->add_option("file", cfg.input, "Edge-list file ('-' for stdin)")->required();
  auto* ng_feasible_cmd = ng->add_subcommand("feasible", "Is (n, a, b) realizable?");
  ng_feasible_cmd->add_option("n_a_b", cfg.triple, "Order n and target chromatic numbers a, b")->required()->expected(3);
  auto* ng_construct_cmd = ng->add_subcommand("construct", "Graph realizing (n, a, b)");
  ng_construct_cmd->add_option("n_a_b", cfg.triple, "Order n and target chromatic numbers a, b")->required()->expected(3);
  ng_construct_cmd->add_option("--out", cfg.out_path, "Write to file instead of stdout");

  auto* audit = app.add_subcommand("audit", "Audit closed-form claims against exact values");
  cfg.family = "";
  audit->add_option("--family", cfg.family, "Family name, 'bipartite', or 'all'");
  audit->add_option("--max", cfg.max, "Largest parameter (order for 'bipartite')")
      ->check(CLI::PositiveNumber);
  audit->add_option("--expected", cfg.expected, "Known-errata fingerprint file");
  audit->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*family) return cmd_family(cfg, out);
    if (*linegraph) return cmd_linegraph(cfg, out);
    if (*chi) return cmd_chi(cfg, out);
    if (*chi_index) return cmd_chi_index(cfg, out);
    if (*edge_color) return cmd_edge_color(cfg, out);
    if (*ng_check_cmd) return cmd_ng_check(cfg, out);
    if (*ng_feasible_cmd) return cmd_ng_feasible(cfg, out);
    if (*ng_construct_cmd) return cmd_ng_construct(cfg, out);
    if (*audit) {
      if (cfg.family.empty()) cfg.family = "all";
      return cmd_audit(cfg, out, err);
    }
  } catch (const ConstructionInfeasible& e) {
    err << "error: " << e.what() << " (exact chromatic index " << e.exact_chromatic_index()
        << ")\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace gclab

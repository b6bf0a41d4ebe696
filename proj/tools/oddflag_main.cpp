#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "oddflag/curve_nbhd.hpp"
#include "oddflag/moment_graph.hpp"
#include "oddflag/notation.hpp"
#include "oddflag/verify.hpp"

namespace {

using namespace oddflag;

constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

std::size_t default_size_cap() {
  if (const char* env = std::getenv("ODDFLAG_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
      throw std::invalid_argument("ODDFLAG_SIZE_CAP must be a positive integer");
    return static_cast<std::size_t>(value);
  }
  return 100000;
}

Notation parse_notation(const std::string& name) {
  if (name == "bar") return Notation::Bar;
  if (name == "raw") return Notation::Raw;
  throw std::invalid_argument("notation must be 'bar' or 'raw'");
}

// Writes to the path, or to stdout when the path is empty.
int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return kExitIo;
  }
  return 0;
}

struct EnumerateArgs {
  int n = 0;
  int m = 0;
  bool odd = false;
  std::string notation = "bar";
  std::size_t size_cap = 0;
};

struct GraphArgs {
  int n = 0;
  int m = 0;
  std::string kind = "odd";
  std::string format = "json";
  std::string out;
  std::string notation = "bar";
  int workers = 1;
  std::size_t size_cap = 0;
};

struct NeighborhoodArgs {
  int n = 0;
  int m = 0;
  std::string lambda;
  std::string degree;
  std::string out;
  std::string notation = "bar";
  int workers = 1;
  std::size_t size_cap = 0;
};

struct VerifyArgs {
  std::string grid = "1..5";
  int m_filter = 0;
  std::string format = "table";
  std::string notation = "bar";
  int workers = 1;
  std::size_t size_cap = 0;
};

struct ReportArgs {
  int n = 0;
  int m = 0;
  std::string notation = "bar";
  int workers = 1;
  std::size_t size_cap = 0;
};

int cmd_enumerate(const EnumerateArgs& args) {
  const FlagContext ctx(args.n, args.m);
  const Notation notation = parse_notation(args.notation);
  if (wp_size_saturated(ctx, args.size_cap) > args.size_cap)
    throw SizeCapExceeded("|W^P| exceeds the size cap of " +
                          std::to_string(args.size_cap) + " at n=" +
                          std::to_string(ctx.n) + ", m=" + std::to_string(ctx.m));
  const std::vector<CosetRep> reps =
      args.odd ? enumerate_wodd(ctx) : enumerate_wp(ctx);
  std::string out;
  for (const CosetRep& rep : reps) {
    out += render_rep(rep, ctx, notation);
    out += '\t';
    out += std::to_string(schubert_dim(rep, ctx));
    out += '\n';
  }
  return write_output("", out);
}

int cmd_graph(const GraphArgs& args) {
  const FlagContext ctx(args.n, args.m);
  const Notation notation = parse_notation(args.notation);
  GraphKind kind;
  if (args.kind == "even") kind = GraphKind::Even;
  else if (args.kind == "odd") kind = GraphKind::Odd;
  else throw std::invalid_argument("kind must be 'even' or 'odd'");

  const BuildOptions opts{args.workers, args.size_cap};
  const MomentGraph g = build_moment_graph(ctx, kind, opts);
  std::string content;
  if (args.format == "dot") content = export_dot(g, notation);
  else if (args.format == "json") content = export_json(g, notation);
  else throw std::invalid_argument("format must be 'dot' or 'json'");
  return write_output(args.out, content);
}

int cmd_neighborhood(const NeighborhoodArgs& args) {
  const FlagContext ctx(args.n, args.m);
  const Notation notation = parse_notation(args.notation);
  const CosetRep lambda = parse_rep(args.lambda, ctx);
  const DegreeVector degree = parse_degree(args.degree, ctx);
  const BuildOptions opts{args.workers, args.size_cap};
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd, opts);
  const NeighborhoodResult result = gamma(g, lambda, degree);
  return write_output(args.out, neighborhood_json(result, ctx, notation));
}

int cmd_verify(const VerifyArgs& args) {
  const Notation notation = parse_notation(args.notation);
  const std::size_t sep = args.grid.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("grid must look like 'n_min..n_max'");
  int n_min = 0, n_max = 0;
  try {
    std::size_t used_lo = 0, used_hi = 0;
    n_min = std::stoi(args.grid.substr(0, sep), &used_lo);
    n_max = std::stoi(args.grid.substr(sep + 2), &used_hi);
    if (used_lo != sep || used_hi != args.grid.size() - sep - 2)
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must look like 'n_min..n_max'");
  }
  std::optional<int> m_filter;
  if (args.m_filter > 0) m_filter = args.m_filter;

  const BuildOptions opts{args.workers, args.size_cap};
  const std::vector<CheckReport> reports = run_grid_checks(n_min, n_max, m_filter, opts);
  const std::string content = args.format == "json" ? checks_json(reports, notation)
                                                    : checks_table(reports, notation);
  const int rc = write_output("", content);
  if (rc != 0) return rc;
  return all_passed(reports) ? 0 : kExitVerifyFail;
}

int cmd_report(const ReportArgs& args) {
  const FlagContext ctx(args.n, args.m);
  const Notation notation = parse_notation(args.notation);
  const BuildOptions opts{args.workers, args.size_cap};
  const QuantumReport report = quantum_report(ctx, opts);
  const int rc = write_output("", render_text(report, notation));
  if (rc != 0) return rc;
  return report.verified ? 0 : kExitVerifyFail;
}

void add_common_flags(CLI::App* sub, std::string& notation, int& workers,
                      std::size_t& size_cap) {
  sub->add_option("--notation", notation, "value rendering: bar or raw")
      ->default_val("bar");
  sub->add_option("--workers", workers, "worker thread count")
      ->default_val(1)
      ->check(CLI::Range(1, 256));
  sub->add_option("--size-cap", size_cap, "maximum admitted |W^P|");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment graphs and curve neighborhoods of odd symplectic partial flag varieties"};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "list W^P or W^odd with Schubert dimensions");
  enum_cmd->add_option("-n", enum_args.n, "rank parameter n")->required();
  enum_cmd->add_option("-m", enum_args.m, "number of flag steps m")->required();
  enum_cmd->add_flag("--odd", enum_args.odd, "restrict to W^odd");
  enum_cmd->add_option("--notation", enum_args.notation, "value rendering: bar or raw")
      ->default_val("bar");
  enum_cmd->add_option("--size-cap", enum_args.size_cap, "maximum admitted |W^P|");

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("graph", "export the degree-labeled moment graph");
  graph_cmd->add_option("-n", graph_args.n, "rank parameter n")->required();
  graph_cmd->add_option("-m", graph_args.m, "number of flag steps m")->required();
  graph_cmd->add_option("--kind", graph_args.kind, "graph kind: even or odd")
      ->default_val("odd");
  graph_cmd->add_option("--format", graph_args.format, "output format: dot or json")
      ->default_val("json");
  graph_cmd->add_option("--out", graph_args.out, "output path (stdout when absent)");
  add_common_flags(graph_cmd, graph_args.notation, graph_args.workers, graph_args.size_cap);

  NeighborhoodArgs nbhd_args;
  auto* nbhd_cmd = app.add_subcommand("neighborhood",
                                      "curve neighborhood of a Schubert variety");
  nbhd_cmd->add_option("-n", nbhd_args.n, "rank parameter n")->required();
  nbhd_cmd->add_option("-m", nbhd_args.m, "number of flag steps m")->required();
  nbhd_cmd->add_option("--lambda", nbhd_args.lambda, "coset rep, e.g. '1|b2|3'")->required();
  nbhd_cmd->add_option("--degree", nbhd_args.degree, "degree vector, e.g. '1,1' or '1^m'")
      ->required();
  nbhd_cmd->add_option("--out", nbhd_args.out, "output path (stdout when absent)");
  add_common_flags(nbhd_cmd, nbhd_args.notation, nbhd_args.workers, nbhd_args.size_cap);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run all checks over a parameter grid");
  verify_cmd->add_option("--grid", verify_args.grid, "n range, e.g. '1..5'")
      ->default_val("1..5");
  verify_cmd->add_option("--m", verify_args.m_filter, "restrict to a single m");
  verify_cmd->add_option("--format", verify_args.format, "output format: table or json")
      ->default_val("table");
  add_common_flags(verify_cmd, verify_args.notation, verify_args.workers,
                   verify_args.size_cap);

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand("report", "quantum product structure report");
  report_cmd->add_option("-n", report_args.n, "rank parameter n")->required();
  report_cmd->add_option("-m", report_args.m, "number of flag steps m")->required();
  add_common_flags(report_cmd, report_args.notation, report_args.workers,
                   report_args.size_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    const std::size_t cap_default = default_size_cap();
    if (enum_args.size_cap == 0) enum_args.size_cap = cap_default;
    if (graph_args.size_cap == 0) graph_args.size_cap = cap_default;
    if (nbhd_args.size_cap == 0) nbhd_args.size_cap = cap_default;
    if (verify_args.size_cap == 0) verify_args.size_cap = cap_default;
    if (report_args.size_cap == 0) report_args.size_cap = cap_default;

    if (enum_cmd->parsed()) return cmd_enumerate(enum_args);
    if (graph_cmd->parsed()) return cmd_graph(graph_args);
    if (nbhd_cmd->parsed()) return cmd_neighborhood(nbhd_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (report_cmd->parsed()) return cmd_report(report_args);
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

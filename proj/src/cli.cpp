#include "cpm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cpm/cover.hpp"
#include "cpm/errors.hpp"
#include "cpm/graph.hpp"
#include "cpm/kclique.hpp"
#include "cpm/onmi.hpp"
#include "cpm/oracle.hpp"
#include "cpm/percolation.hpp"
#include "cpm/stats.hpp"

namespace cpm {

namespace {

Graph read_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph file " + path);
  return load_edgelist(in);
}

// One clique per line, external ids. Each line must be a k-clique of `g`.
std::vector<CliqueKey> read_order(const std::string& path, const Graph& g, unsigned k) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open order file " + path);
  std::vector<CliqueKey> cliques;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    CliqueKey clique;
    while (tokens >> token) {
      if (clique.empty() && (token.front() == '#' || token.front() == '%')) break;
      ExternalId ext = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), ext);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("invalid vertex id '" + token + "'", line_no);
      }
      const auto v = g.internal_id(ext);
      if (!v) throw ParseError("vertex " + token + " is not in the graph", line_no);
      clique.push_back(*v);
    }
    if (clique.empty()) continue;
    std::sort(clique.begin(), clique.end());
    if (clique.size() != k || !is_canonical(clique)) {
      throw ParseError("expected " + std::to_string(k) + " distinct vertices", line_no);
    }
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!g.has_edge(clique[i], clique[j])) throw ParseError("not a clique of the graph", line_no);
      }
    }
    cliques.push_back(std::move(clique));
  }
  return cliques;
}

void emit_cover(const Cover& cover, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_cover(cover, out);
  } else {
    write_cover(cover, std::filesystem::path(path));
  }
}

struct PercolationArgs {
  unsigned k = 0;
  unsigned z = 0;
  std::string graph;
  std::string output;
  std::string stats;
  std::string order;
  bool json = false;
  bool no_timing = false;
  bool rss = false;
  bool strict_reduce = false;
  std::uint64_t limit_mem = 0;
};

void add_percolation_options(CLI::App* cmd, PercolationArgs& args) {
  cmd->add_option("-k", args.k, "Clique size")->required()->check(CLI::Range(2u, 64u));
  cmd->add_option("graph", args.graph, "Edge-list file")->required();
  cmd->add_option("-o,--output", args.output, "Community file (stdout when omitted)");
  cmd->add_option("--stats", args.stats, "Write a run report to this file");
  cmd->add_flag("--json", args.json, "Write the report as JSON");
  cmd->add_flag("--no-timing", args.no_timing, "Report wall_time as 0");
  cmd->add_flag("--rss", args.rss, "Include peak resident memory in the report");
  cmd->add_option("--limit-mem", args.limit_mem,
                  "Abort when key storage would exceed this many bytes");
  cmd->add_option("--order", args.order,
                  "Process the k-cliques listed in this file, in file order");
}

void run_percolation(Mode mode, const PercolationArgs& args, std::ostream& out) {
  const Graph g = read_graph(args.graph);
  PercolationOptions options;
  options.strict_reduce = args.strict_reduce;
  if (args.limit_mem > 0) options.memory_limit_bytes = args.limit_mem;

  PercResult result;
  if (!args.order.empty()) {
    const auto cliques = read_order(args.order, g, args.k);
    result = mode == Mode::cpm ? run_cpm(cliques, args.k, options)
                               : run_cpmz(cliques, args.k, args.z, options);
  } else {
    const Dag dag(g, degeneracy_ordering(g));
    result = mode == Mode::cpm ? run_cpm(dag, args.k, options)
                               : run_cpmz(dag, args.k, args.z, options);
  }

  if (!args.stats.empty()) {
    ReportOptions report_options;
    report_options.include_timing = !args.no_timing;
    report_options.include_rss = args.rss;
    if (mode == Mode::cpmz) report_options.n_k_minus_1 = count_kcliques(g, args.k - 1);
    const auto doc = report(result, report_options);
    std::ofstream stats(args.stats, std::ios::binary);
    if (!stats) throw IoError("cannot open stats file " + args.stats);
    if (args.json) {
      stats << doc.dump(2) << '\n';
    } else {
      write_report_text(doc, stats);
    }
  }
  emit_cover(extract(result, g.external_ids()), args.output, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique percolation communities (exact and z-relaxed)"};
  app.require_subcommand(1);

  unsigned count_k = 0;
  std::string count_graph;
  auto* count = app.add_subcommand("count", "Print the number of k-cliques");
  count->add_option("-k", count_k, "Clique size")->required()->check(CLI::Range(2u, 64u));
  count->add_option("graph", count_graph, "Edge-list file")->required();

  PercolationArgs cpm_args;
  auto* cpm = app.add_subcommand("cpm", "Exact clique percolation communities");
  add_percolation_options(cpm, cpm_args);

  PercolationArgs cpmz_args;
  auto* cpmz = app.add_subcommand("cpmz", "Relaxed communities tracked through z-cliques");
  add_percolation_options(cpmz, cpmz_args);
  cpmz->add_option("-z", cpmz_args.z, "Size of the tracked sub-cliques (2 <= z <= k-2)")
      ->required();
  cpmz->add_flag("--strict-reduce", cpmz_args.strict_reduce,
                 "Reduce every z-subclique even after an empty intersection");

  std::string onmi_a;
  std::string onmi_b;
  bool onmi_verbose = false;
  auto* onmi_cmd = app.add_subcommand("onmi", "Overlapping NMI between two community files");
  onmi_cmd->add_option("a", onmi_a, "First community file")->required();
  onmi_cmd->add_option("b", onmi_b, "Second community file")->required();
  onmi_cmd->add_flag("-v,--verbose", onmi_verbose, "Describe the node universe on stderr");

  unsigned oracle_k = 0;
  std::string oracle_graph;
  std::string oracle_output;
  auto* oracle = app.add_subcommand("oracle", "Brute-force communities (small graphs)");
  oracle->group("");
  oracle->add_option("-k", oracle_k, "Clique size")->required()->check(CLI::Range(2u, 64u));
  oracle->add_option("graph", oracle_graph, "Edge-list file")->required();
  oracle->add_option("-o,--output", oracle_output, "Community file (stdout when omitted)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      out << count_kcliques(read_graph(count_graph), count_k) << '\n';
    } else if (cpm->parsed()) {
      run_percolation(Mode::cpm, cpm_args, out);
    } else if (cpmz->parsed()) {
      if (cpmz_args.z < 2 || cpmz_args.z + 2 > cpmz_args.k) {
        err << "cpmz: -z must satisfy 2 <= z <= k-2\n";
        return kExitUsage;
      }
      run_percolation(Mode::cpmz, cpmz_args, out);
    } else if (onmi_cmd->parsed()) {
      const Cover a = read_cover(std::filesystem::path(onmi_a));
      const Cover b = read_cover(std::filesystem::path(onmi_b));
      if (onmi_verbose) {
        err << "universe: " << covered_nodes(a, b)
            << " nodes covered by either file (uncovered nodes are excluded)\n";
      }
      out << std::fixed << std::setprecision(6) << onmi(a, b) << '\n';
    } else if (oracle->parsed()) {
      emit_cover(brute_force_cpm(read_graph(oracle_graph), oracle_k), oracle_output, out);
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace cpm

// Command-line front end: corpus ingestion and generation, batch analysis,
// structural verification campaigns, and the conjecture scan, with
// JSON-lines output on stdout and a human summary on stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pdm/corpus.hpp"
#include "pdm/report.hpp"
#include "pdm/skeleton.hpp"

namespace {

struct CorpusFlags {
  std::string input_file;
  std::string edge_list_file;
  int all_connected = -1;
  std::string random_spec;            // n,p,count,seed
  std::string random_bipartite_spec;  // n,p,count,seed
  bool spanner = false;
  std::string skeleton_spec;  // k[,seed]
};

struct CommonFlags {
  CorpusFlags corpus;
  std::string checks = "";
  int jobs = 1;
  int max_edges = 64;
  long time_limit_ms = 0;
  bool keep_going = false;
  bool strict_viii = false;
  bool json_only = false;
  bool summary_only = false;
  bool timing = false;
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& c) {
  cmd->add_option("--input", c.input_file, "file of graph6 lines");
  cmd->add_option("--edge-list", c.edge_list_file,
                  "file holding one graph as an edge list (\"n <count>\" header)");
  cmd->add_option("--all-connected", c.all_connected,
                  "all connected graphs with at most N vertices (N <= 8)");
  cmd->add_option("--random", c.random_spec, "random corpus: n,p,count,seed");
  cmd->add_option("--random-bipartite", c.random_bipartite_spec,
                  "random bipartite corpus: n,p,count,seed");
  cmd->add_flag("--spanner", c.spanner, "the spanner graph");
  cmd->add_option("--skeleton", c.skeleton_spec, "generated skeleton: k[,seed]");
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  add_corpus_flags(cmd, f.corpus);
  cmd->add_option("--checks", f.checks, "comma-separated check names");
  cmd->add_option("--jobs", f.jobs, "worker threads (default 1)");
  cmd->add_option("--max-edges", f.max_edges,
                  "skip graphs with more edges (default 64)");
  cmd->add_option("--time-limit-per-graph", f.time_limit_ms,
                  "per-graph wall-clock limit in ms (0 = off; limits break "
                  "reproducibility near the boundary)");
  cmd->add_flag("--keep-going", f.keep_going,
                "report malformed input lines and continue");
  cmd->add_flag("--strict-viii", f.strict_viii,
                "literal even-edge reading of the alternating-cycle matching");
  cmd->add_flag("--json", f.json_only, "machine output only");
  cmd->add_flag("--summary", f.summary_only, "human summary only");
  cmd->add_flag("--timing", f.timing,
                "include elapsed micros per graph (non-deterministic)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

struct ParsedRandom {
  int n = 0;
  double p = 0;
  int count = 0;
  std::uint32_t seed = 0;
};

ParsedRandom parse_random_spec(const std::string& spec) {
  auto parts = split(spec, ',');
  if (parts.size() != 4)
    throw CLI::ValidationError("--random", "expected n,p,count,seed");
  ParsedRandom r;
  r.n = std::stoi(parts[0]);
  r.p = std::stod(parts[1]);
  r.count = std::stoi(parts[2]);
  r.seed = static_cast<std::uint32_t>(std::stoul(parts[3]));
  if (r.n < 0 || r.p < 0 || r.p > 1 || r.count < 0)
    throw CLI::ValidationError("--random", "parameters out of range");
  return r;
}

// Returns 0 on success; emits error lines / messages and may exit with 2.
int load_corpus(const CommonFlags& f, std::vector<pdm::Graph>& graphs,
                std::vector<std::string>& error_lines) {
  const CorpusFlags& c = f.corpus;
  int sources = !c.input_file.empty() + !c.edge_list_file.empty() +
                (c.all_connected >= 0) + !c.random_spec.empty() +
                !c.random_bipartite_spec.empty() + c.spanner +
                !c.skeleton_spec.empty();
  if (sources == 0) {
    std::cerr << "error: no corpus given (try --input, --edge-list, --all-connected, "
                 "--random, --random-bipartite, --spanner or --skeleton)\n";
    return 2;
  }
  if (!c.input_file.empty()) {
    std::ifstream in(c.input_file);
    if (!in) {
      std::cerr << "error: cannot open " << c.input_file << "\n";
      return 2;
    }
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '>') {
        if (line.rfind(">>graph6<<", 0) == 0 && line.size() > 10) {
          line = line.substr(10);
        } else {
          continue;
        }
      }
      try {
        graphs.push_back(pdm::parse_graph6(line));
      } catch (const pdm::ParseError& e) {
        if (!f.keep_going) {
          std::cerr << "error: line " << line_no << ": " << e.what() << "\n";
          return 2;
        }
        error_lines.push_back(pdm::error_json_line(e.what(), line_no));
      }
    }
  }
  if (!c.edge_list_file.empty()) {
    std::ifstream in(c.edge_list_file);
    if (!in) {
      std::cerr << "error: cannot open " << c.edge_list_file << "\n";
      return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      graphs.push_back(pdm::parse_edge_list(buffer.str()));
    } catch (const pdm::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (c.all_connected >= 0) {
    if (c.all_connected < 1 || c.all_connected > 8) {
      std::cerr << "error: --all-connected supports 1..8 (exhaustive "
                   "isomorphism rejection is quadratic-factorial beyond)\n";
      return 2;
    }
    for (pdm::Graph& g : pdm::connected_graphs_up_to(c.all_connected))
      graphs.push_back(std::move(g));
  }
  if (!c.random_spec.empty()) {
    ParsedRandom r = parse_random_spec(c.random_spec);
    for (pdm::Graph& g : pdm::random_corpus(r.n, r.p, r.count, r.seed))
      graphs.push_back(std::move(g));
  }
  if (!c.random_bipartite_spec.empty()) {
    ParsedRandom r = parse_random_spec(c.random_bipartite_spec);
    for (pdm::Graph& g : pdm::random_corpus(r.n, r.p, r.count, r.seed, true))
      graphs.push_back(std::move(g));
  }
  if (c.spanner) graphs.push_back(pdm::generate_spanner());
  if (!c.skeleton_spec.empty()) {
    auto parts = split(c.skeleton_spec, ',');
    int k = std::stoi(parts[0]);
    unsigned seed = parts.size() > 1 ? std::stoul(parts[1]) : 0;
    graphs.push_back(pdm::generate_k_skeleton(k, seed));
  }
  return 0;
}

int run_pipeline(const CommonFlags& f, pdm::RunMode mode) {
  pdm::RunOptions opts;
  opts.mode = mode;
  opts.jobs = f.jobs;
  opts.max_edges = f.max_edges;
  opts.time_limit_ms = f.time_limit_ms;
  opts.strict_viii = f.strict_viii;
  opts.timing = f.timing;
  if (mode == pdm::RunMode::Verify) {
    opts.checks = f.checks.empty() ? pdm::check_registry()
                                   : split(f.checks, ',');
  } else if (!f.checks.empty()) {
    opts.checks = split(f.checks, ',');
  }
  for (const std::string& name : opts.checks)
    if (!pdm::is_registered_check(name)) {
      std::cerr << "error: unknown check \"" << name << "\"\n";
      return 2;
    }

  std::vector<pdm::Graph> graphs;
  std::vector<std::string> error_lines;
  if (int rc = load_corpus(f, graphs, error_lines); rc != 0) return rc;

  std::vector<pdm::GraphReport> reports = pdm::run_corpus(graphs, opts);
  if (!f.summary_only) {
    for (const std::string& line : error_lines) std::cout << line << "\n";
    for (const pdm::GraphReport& r : reports)
      std::cout << pdm::report_json_line(r, opts) << "\n";
  }
  pdm::RunSummary summary = pdm::summarize(reports);
  summary.errors += static_cast<long>(error_lines.size());
  if (!f.json_only) std::cerr << pdm::summary_table(summary, mode);

  if (mode == pdm::RunMode::Conjecture) return 0;  // findings are not failures
  return summary.failures > 0 || summary.errors > 0 ? 1 : 0;
}

struct GenerateFlags {
  bool spanner = false;
  std::string skeleton_spec;
  int all_connected = -1;
  std::string random_spec;
  std::string random_bipartite_spec;
  bool dot = false;
};

int run_generate(const GenerateFlags& f) {
  int sources = f.spanner + !f.skeleton_spec.empty() + (f.all_connected >= 0) +
                !f.random_spec.empty() + !f.random_bipartite_spec.empty();
  if (sources != 1) {
    std::cerr << "error: generate needs exactly one of --spanner, --skeleton, "
                 "--all-connected, --random, --random-bipartite\n";
    return 2;
  }
  auto emit = [&](const pdm::Graph& g) {
    if (f.dot)
      std::cout << pdm::to_dot(g);
    else
      std::cout << pdm::to_graph6(g) << "\n";
  };
  if (f.spanner) {
    emit(pdm::generate_spanner());
    return 0;
  }
  if (!f.skeleton_spec.empty()) {
    auto parts = split(f.skeleton_spec, ',');
    int k = std::stoi(parts[0]);
    unsigned seed = parts.size() > 1 ? std::stoul(parts[1]) : 0;
    emit(pdm::generate_k_skeleton(k, seed));
    return 0;
  }
  if (f.all_connected >= 0) {
    if (f.all_connected < 1 || f.all_connected > 8) {
      std::cerr << "error: --all-connected supports 1..8\n";
      return 2;
    }
    for (const pdm::Graph& g : pdm::all_connected_graphs(f.all_connected))
      emit(g);
    return 0;
  }
  ParsedRandom r = parse_random_spec(!f.random_spec.empty()
                                         ? f.random_spec
                                         : f.random_bipartite_spec);
  for (const pdm::Graph& g :
       pdm::random_corpus(r.n, r.p, r.count, r.seed, !f.random_bipartite_spec.empty()))
    emit(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of pairs of disjoint matchings in small graphs"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, verify_flags, conjecture_flags;
  GenerateFlags generate_flags;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "matching and decomposition parameters per graph");
  add_common_flags(analyze, analyze_flags);

  CLI::App* verify = app.add_subcommand(
      "verify", "run structural checks; exit 1 on any failure");
  add_common_flags(verify, verify_flags);

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "scan for leaf-conjecture counterexamples");
  add_common_flags(conjecture, conjecture_flags);

  CLI::App* generate = app.add_subcommand("generate", "emit graph6 corpora");
  generate->add_flag("--spanner", generate_flags.spanner, "the spanner");
  generate->add_option("--skeleton", generate_flags.skeleton_spec, "k[,seed]");
  generate->add_option("--all-connected", generate_flags.all_connected,
                       "connected classes on exactly N vertices (N <= 8)");
  generate->add_option("--random", generate_flags.random_spec, "n,p,count,seed");
  generate->add_option("--random-bipartite", generate_flags.random_bipartite_spec,
                       "n,p,count,seed");
  generate->add_flag("--dot", generate_flags.dot, "emit DOT instead of graph6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_pipeline(analyze_flags, pdm::RunMode::Analyze);
    if (verify->parsed()) return run_pipeline(verify_flags, pdm::RunMode::Verify);
    if (conjecture->parsed())
      return run_pipeline(conjecture_flags, pdm::RunMode::Conjecture);
    if (generate->parsed()) return run_generate(generate_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

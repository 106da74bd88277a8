#pragma once
// Per-graph analysis pipeline behind the command-line tool: parameter
// reports, the registry of named checks, JSON-lines rendering, and a
// deterministic work pool for corpora.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdm/alternating.hpp"
#include "pdm/graph.hpp"
#include "pdm/matchings.hpp"
#include "pdm/pec.hpp"
#include "pdm/skeleton.hpp"

namespace pdm {

enum class RunMode { Analyze, Verify, Conjecture };

struct RunOptions {
  RunMode mode = RunMode::Analyze;
  std::vector<std::string> checks;  // names from check_registry()
  int jobs = 1;
  int max_edges = 64;
  std::uint64_t node_budget = 4'000'000'000ULL;  // deterministic, per graph
  long time_limit_ms = 0;                        // 0 = none (wall clock)
  bool strict_viii = false;  // literal even-edge matching in condition (viii)
  bool timing = false;       // emit elapsed micros (breaks byte determinism)
};

// pec-identities, lemma-4.2, lemma-4.3, lemma-6.1, lemma-6.2, thm-5.3,
// thm-5.4, prop-5.2, conjecture.
const std::vector<std::string>& check_registry();
bool is_registered_check(const std::string& name);

struct CheckOutcome {
  enum class Status { Pass, Fail, Skip };
  Status status = Status::Skip;
  // Skip details are prefixed "n/a:" (vacuous) or "budget:" (resources).
  std::string detail;
};

struct GraphReport {
  std::string graph6;
  int n = 0, m = 0;
  std::string error;  // unparseable input or internal failure

  std::optional<ParamReport> params;
  std::optional<PecMinima> pec;
  std::optional<bool> saturated;
  enum class SkeletonState { NotRun, Found, Absent, Unknown };
  SkeletonState skeleton_state = SkeletonState::NotRun;
  int skeleton_k = 0;

  std::vector<std::pair<std::string, CheckOutcome>> verdicts;
  std::vector<std::string> skips;
  std::optional<ConjectureScanResult> conjecture;
  long long elapsed_micros = 0;

  bool any_failure() const;
};

GraphReport analyze_graph(const Graph& g, const RunOptions& opts);

// Work pool over graphs; output re-sequenced to input order, so results are
// byte-identical for any job count.
std::vector<GraphReport> run_corpus(const std::vector<Graph>& graphs,
                                    const RunOptions& opts);

std::string report_json_line(const GraphReport& r, const RunOptions& opts);
std::string error_json_line(const std::string& message, long line_no);

struct RunSummary {
  long graphs = 0, errors = 0, failures = 0, budget_skips = 0;
  std::map<std::string, std::array<long, 3>> per_check;  // pass, fail, skip
  long conjecture_applicable = 0, conjecture_holds = 0, conjecture_violations = 0;
};
RunSummary summarize(const std::vector<GraphReport>& reports);
std::string summary_table(const RunSummary& s, RunMode mode);

}  // namespace pdm

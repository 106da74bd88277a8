#include "pdm/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace pdm {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> names{
      "pec-identities", "lemma-4.2", "lemma-4.3", "lemma-6.1", "lemma-6.2",
      "thm-5.3",        "thm-5.4",   "prop-5.2",  "conjecture"};
  return names;
}

bool is_registered_check(const std::string& name) {
  const auto& reg = check_registry();
  return std::find(reg.begin(), reg.end(), name) != reg.end();
}

bool GraphReport::any_failure() const {
  if (!error.empty()) return true;
  for (const auto& [name, outcome] : verdicts)
    if (outcome.status == CheckOutcome::Status::Fail) return true;
  return false;
}

namespace {

SearchBudget make_budget(const RunOptions& opts) {
  SearchBudget b(opts.node_budget);
  if (opts.time_limit_ms > 0) {
    b.has_deadline = true;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(opts.time_limit_ms);
  }
  return b;
}

bool wants(const RunOptions& opts, const std::string& name) {
  return std::find(opts.checks.begin(), opts.checks.end(), name) !=
         opts.checks.end();
}

CheckOutcome pass_outcome() { return {CheckOutcome::Status::Pass, ""}; }
CheckOutcome fail_outcome(std::string detail) {
  return {CheckOutcome::Status::Fail, std::move(detail)};
}
CheckOutcome skip_outcome(std::string detail) {
  return {CheckOutcome::Status::Skip, std::move(detail)};
}

// The two triple-level check suites share one enumeration pass.
void run_triple_checks(const Graph& g, const RunOptions& opts,
                       const SearchBudget& budget, GraphReport& out) {
  bool want42 = wants(opts, "lemma-4.2"), want43 = wants(opts, "lemma-4.3");
  if (!want42 && !want43) return;
  CheckOutcome o42 = pass_outcome(), o43 = pass_outcome();
  try {
    for_each_maximally_intersecting(g, budget, [&](const MatchingTriple& t) {
      if (o42.status == CheckOutcome::Status::Pass) {
        MhChainReport r = check_mh_chains(g, t);
        if (!r.all()) o42 = fail_outcome(r.detail);
      }
      if (o43.status == CheckOutcome::Status::Pass) {
        HhChainReport r = check_hh_chains(g, t);
        if (!r.all()) o43 = fail_outcome(r.detail);
      }
      return o42.status == CheckOutcome::Status::Pass ||
             o43.status == CheckOutcome::Status::Pass;
    });
  } catch (const BudgetExceeded& e) {
    o42 = o43 = skip_outcome(std::string("budget: ") + e.what());
  }
  if (want42) out.verdicts.push_back({"lemma-4.2", o42});
  if (want43) out.verdicts.push_back({"lemma-4.3", o43});
}

void run_pair_checks(const Graph& g, const RunOptions& opts,
                     const SearchBudget& budget, GraphReport& out) {
  bool want61 = wants(opts, "lemma-6.1"), want62 = wants(opts, "lemma-6.2");
  if (!want61 && !want62) return;
  CheckOutcome o61 = pass_outcome(), o62 = pass_outcome();
  try {
    int lambda = max_pec_size(g, budget);
    MuReport mu = mu_and_pairs(g, 8'000'000, budget);
    if (mu.overflowed) throw BudgetExceeded("too many optimal pairs");
    for (const DisjointPair& pair : mu.pairs) {
      PairAdjacencyReport r = check_pair_adjacency_with(g, pair, lambda, mu.mu);
      if (!r.unsaturated_rule && o61.status == CheckOutcome::Status::Pass)
        o61 = fail_outcome(r.detail);
      if (!r.even_end_rule && o62.status == CheckOutcome::Status::Pass)
        o62 = fail_outcome(r.detail);
      if (o61.status != CheckOutcome::Status::Pass &&
          o62.status != CheckOutcome::Status::Pass)
        break;
    }
  } catch (const BudgetExceeded& e) {
    o61 = o62 = skip_outcome(std::string("budget: ") + e.what());
  }
  if (want61) out.verdicts.push_back({"lemma-6.1", o61});
  if (want62) out.verdicts.push_back({"lemma-6.2", o62});
}

void run_skeleton_checks(const Graph& g, const RunOptions& opts,
                         const SearchBudget& budget, GraphReport& out) {
  bool want53 = wants(opts, "thm-5.3"), want54 = wants(opts, "thm-5.4");
  bool want52 = wants(opts, "prop-5.2");
  if (!want53 && !want54 && !want52) return;
  OutsideMatchingRule rule = opts.strict_viii ? OutsideMatchingRule::EvenEdges
                                              : OutsideMatchingRule::OddEdges;
  CheckOutcome o53, o54, o52;
  try {
    TheoremReport tr = verify_skeleton_theorems(g, rule, budget);
    if (tr.skipped) {
      o53 = o54 = o52 = skip_outcome("budget: " + tr.skip_reason);
    } else {
      auto direction = [](const TheoremReport::Direction& d,
                          const std::string& vac) {
        if (!d.applicable) return skip_outcome("n/a: " + vac);
        return d.pass ? pass_outcome() : fail_outcome(d.detail);
      };
      o53 = direction(tr.recognized_gap, "not recognized as a skeleton");
      o54 = direction(tr.gap_recognized, "mu = nu or not saturated");
      if (want52) {
        if (tr.recognized_gap.applicable) {
          PerfectMatchingReport pm = perfect_matchings(g);
          o52 = pm.unique_perfect
                    ? pass_outcome()
                    : fail_outcome("skeleton with " +
                                   std::to_string(pm.matchings.size()) +
                                   " perfect matchings");
        } else {
          o52 = skip_outcome("n/a: not recognized as a skeleton");
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    o53 = o54 = o52 = skip_outcome(std::string("budget: ") + e.what());
  }
  if (want53) out.verdicts.push_back({"thm-5.3", o53});
  if (want54) out.verdicts.push_back({"thm-5.4", o54});
  if (want52) out.verdicts.push_back({"prop-5.2", o52});
}

}  // namespace

GraphReport analyze_graph(const Graph& g, const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  GraphReport out;
  out.graph6 = to_graph6(g);
  out.n = g.vertex_count();
  out.m = g.edge_count();
  SearchBudget budget = make_budget(opts);

  bool solvable = g.fits_mask() && g.vertex_count() <= 64;
  if (!solvable || g.edge_count() > opts.max_edges) {
    out.skips.push_back(solvable ? "budget: edge count above --max-edges"
                                 : "budget: beyond the 64-vertex/64-edge solver range");
    for (const std::string& name : opts.checks)
      out.verdicts.push_back({name, {CheckOutcome::Status::Skip,
                                     "budget: " + out.skips.back().substr(8)}});
    out.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    return out;
  }

  if (opts.mode == RunMode::Analyze) {
    try {
      out.params = param_report(g, budget);
    } catch (const BudgetExceeded& e) {
      out.skips.push_back(std::string("params: ") + e.what());
    }
    try {
      out.pec = pec_minima(g, budget);
    } catch (const BudgetExceeded& e) {
      out.skips.push_back(std::string("pec: ") + e.what());
    }
    try {
      out.saturated = is_saturated(g, budget).saturated;
    } catch (const BudgetExceeded& e) {
      out.skips.push_back(std::string("saturated: ") + e.what());
    }
    try {
      OutsideMatchingRule rule = opts.strict_viii
                                     ? OutsideMatchingRule::EvenEdges
                                     : OutsideMatchingRule::OddEdges;
      SkeletonSearch s = find_skeleton_decomposition(g, rule, budget);
      switch (s.status) {
        case SkeletonSearch::Status::Found:
          out.skeleton_state = GraphReport::SkeletonState::Found;
          out.skeleton_k = s.witness->k;
          break;
        case SkeletonSearch::Status::Absent:
          out.skeleton_state = GraphReport::SkeletonState::Absent;
          break;
        case SkeletonSearch::Status::Unknown:
          out.skeleton_state = GraphReport::SkeletonState::Unknown;
          break;
      }
    } catch (const BudgetExceeded& e) {
      out.skips.push_back(std::string("skeleton: ") + e.what());
      out.skeleton_state = GraphReport::SkeletonState::Unknown;
    }
  }

  if (opts.mode == RunMode::Conjecture || wants(opts, "conjecture")) {
    try {
      out.conjecture = conjecture_scan(g, budget);
      if (wants(opts, "conjecture"))
        out.verdicts.push_back({"conjecture", pass_outcome()});
    } catch (const BudgetExceeded& e) {
      if (wants(opts, "conjecture"))
        out.verdicts.push_back(
            {"conjecture", skip_outcome(std::string("budget: ") + e.what())});
      else
        out.skips.push_back(std::string("conjecture: ") + e.what());
    }
  }

  if (wants(opts, "pec-identities")) {
    CheckOutcome o;
    try {
      PecIdentityReport r = check_pec_identities(g, budget);
      if (r.all_pass) {
        o = pass_outcome();
      } else {
        std::string detail;
        for (const auto& e : r.entries)
          if (!e.pass)
            detail += (detail.empty() ? "" : "; ") + e.name + ": " +
                      std::to_string(e.lhs) + " vs " + std::to_string(e.rhs);
        o = fail_outcome(detail);
      }
    } catch (const BudgetExceeded& e) {
      o = skip_outcome(std::string("budget: ") + e.what());
    }
    out.verdicts.push_back({"pec-identities", o});
  }
  run_triple_checks(g, opts, budget, out);
  run_pair_checks(g, opts, budget, out);
  run_skeleton_checks(g, opts, budget, out);

  // Report verdicts in registry order regardless of computation order.
  std::stable_sort(out.verdicts.begin(), out.verdicts.end(),
                   [](const auto& a, const auto& b) {
                     const auto& reg = check_registry();
                     return std::find(reg.begin(), reg.end(), a.first) <
                            std::find(reg.begin(), reg.end(), b.first);
                   });
  out.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return out;
}

std::vector<GraphReport> run_corpus(const std::vector<Graph>& graphs,
                                    const RunOptions& opts) {
  std::vector<GraphReport> results(graphs.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = analyze_graph(graphs[i], opts);
    } catch (const std::exception& e) {
      results[i] = GraphReport{};
      results[i].graph6 = to_graph6(graphs[i]);
      results[i].n = graphs[i].vertex_count();
      results[i].m = graphs[i].edge_count();
      results[i].error = e.what();
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || graphs.size() <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= graphs.size()) return;
          work(i);
        }
      });
    for (auto& t : pool) t.join();
  }
  return results;
}

namespace {

const char* status_word(CheckOutcome::Status s) {
  switch (s) {
    case CheckOutcome::Status::Pass: return "pass";
    case CheckOutcome::Status::Fail: return "fail";
    default: return "skip";
  }
}

std::string ratio_string(const std::optional<std::pair<long, long>>& r) {
  if (!r) return "undefined";
  return std::to_string(r->first) + "/" + std::to_string(r->second);
}

std::string mask_string(const std::string& g6, EdgeMask bits) {
  // Edges rendered against a decoded copy so reports stay self-contained.
  Graph g = parse_graph6(g6);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < g.edge_count(); ++i)
    if ((bits >> i) & 1) {
      os << (first ? "" : " ") << g.edge(i).u << "-" << g.edge(i).v;
      first = false;
    }
  return os.str();
}

}  // namespace

std::string report_json_line(const GraphReport& r, const RunOptions& opts) {
  ordered_json j;
  j["graph6"] = r.graph6;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j.dump();
  }
  if (opts.mode == RunMode::Analyze) {
    j["n"] = r.n;
    j["m"] = r.m;
    if (r.params) {
      j["params"] = {{"nu", r.params->nu},
                     {"lambda", r.params->lambda},
                     {"mu", r.params->mu},
                     {"muPrime", r.params->mu_prime},
                     {"ratio", ratio_string(r.params->ratio)}};
    } else {
      j["params"] = nullptr;
    }
    if (r.pec)
      j["pec"] = {{"p", r.pec->p}, {"e", r.pec->e}, {"ep", r.pec->ep}};
    else
      j["pec"] = nullptr;
    if (r.saturated)
      j["saturated"] = *r.saturated;
    else
      j["saturated"] = nullptr;
    switch (r.skeleton_state) {
      case GraphReport::SkeletonState::Found:
        j["skeleton"] = {{"status", "found"}, {"k", r.skeleton_k}};
        break;
      case GraphReport::SkeletonState::Absent:
        j["skeleton"] = {{"status", "absent"}};
        break;
      case GraphReport::SkeletonState::Unknown:
        j["skeleton"] = {{"status", "unknown"}};
        break;
      case GraphReport::SkeletonState::NotRun:
        j["skeleton"] = nullptr;
        break;
    }
  }
  if (opts.mode == RunMode::Conjecture) {
    j["applicable"] = r.conjecture && r.conjecture->applicable;
    if (r.conjecture && r.conjecture->applicable) {
      j["holds"] = r.conjecture->holds;
      j["triplesChecked"] = r.conjecture->triples_checked;
      ordered_json violations = ordered_json::array();
      if (r.conjecture->violation) {
        const MatchingTriple& t = *r.conjecture->violation;
        violations.push_back(
            {{"vertex", r.conjecture->violating_vertex},
             {"m", mask_string(r.graph6, t.m.bits())},
             {"h", mask_string(r.graph6, t.pair.h.bits())},
             {"hPrime", mask_string(r.graph6, t.pair.h_prime.bits())}});
      }
      j["violations"] = violations;
    } else {
      j["holds"] = nullptr;
    }
  }
  if (!r.verdicts.empty() || opts.mode == RunMode::Verify) {
    ordered_json verdicts;
    ordered_json failures = ordered_json::array();
    ordered_json skipped = ordered_json::array();
    for (const auto& [name, outcome] : r.verdicts) {
      verdicts[name] = status_word(outcome.status);
      if (outcome.status == CheckOutcome::Status::Fail)
        failures.push_back({{"check", name}, {"detail", outcome.detail}});
      else if (outcome.status == CheckOutcome::Status::Skip &&
               !outcome.detail.empty())
        skipped.push_back({{"check", name}, {"detail", outcome.detail}});
    }
    j["verdicts"] = verdicts;
    j["failures"] = failures;
    if (!skipped.empty()) j["skipped"] = skipped;
  }
  if (!r.skips.empty()) j["skips"] = r.skips;
  if (opts.timing) j["elapsedMicros"] = r.elapsed_micros;
  return j.dump();
}

std::string error_json_line(const std::string& message, long line_no) {
  ordered_json j;
  j["error"] = message;
  j["line"] = line_no;
  return j.dump();
}

RunSummary summarize(const std::vector<GraphReport>& reports) {
  RunSummary s;
  for (const GraphReport& r : reports) {
    ++s.graphs;
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    for (const auto& [name, outcome] : r.verdicts) {
      auto& cell = s.per_check[name];
      switch (outcome.status) {
        case CheckOutcome::Status::Pass: ++cell[0]; break;
        case CheckOutcome::Status::Fail: ++cell[1]; ++s.failures; break;
        case CheckOutcome::Status::Skip:
          ++cell[2];
          if (outcome.detail.rfind("budget:", 0) == 0) ++s.budget_skips;
          break;
      }
    }
    for (const std::string& skip : r.skips)
      if (skip.find("budget") != std::string::npos) ++s.budget_skips;
    if (r.conjecture && r.conjecture->applicable) {
      ++s.conjecture_applicable;
      if (r.conjecture->holds)
        ++s.conjecture_holds;
      else
        ++s.conjecture_violations;
    }
  }
  return s;
}

std::string summary_table(const RunSummary& s, RunMode mode) {
  std::ostringstream os;
  os << "graphs: " << s.graphs << "  errors: " << s.errors
     << "  failures: " << s.failures << "  budget-skips: " << s.budget_skips
     << "\n";
  if (!s.per_check.empty()) {
    os << "  " << std::string(44, '-') << "\n";
    for (const auto& [name, cell] : s.per_check) {
      os << "  " << name;
      for (std::size_t i = name.size(); i < 16; ++i) os << ' ';
      os << "pass " << cell[0] << "  fail " << cell[1] << "  skip " << cell[2]
         << "\n";
    }
  }
  if (mode == RunMode::Conjecture)
    os << "  applicable: " << s.conjecture_applicable
       << "  holds: " << s.conjecture_holds
       << "  violations: " << s.conjecture_violations << "\n";
  return os.str();
}

}  // namespace pdm

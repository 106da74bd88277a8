#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "pdm/corpus.hpp"
#include "pdm/report.hpp"
#include "pdm/skeleton.hpp"

using namespace pdm;
using nlohmann::json;

TEST_CASE("registry names") {
  CHECK(check_registry().size() == 9);
  CHECK(is_registered_check("pec-identities"));
  CHECK(is_registered_check("thm-5.4"));
  CHECK_FALSE(is_registered_check("nonsense"));
}

TEST_CASE("analyze line for the spanner") {
  RunOptions opts;
  GraphReport r = analyze_graph(generate_spanner(), opts);
  json j = json::parse(report_json_line(r, opts));
  CHECK(j["graph6"] == to_graph6(generate_spanner()));
  CHECK(j["params"]["nu"] == 5);
  CHECK(j["params"]["lambda"] == 8);
  CHECK(j["params"]["mu"] == 4);
  CHECK(j["params"]["muPrime"] == 4);
  CHECK(j["params"]["ratio"] == "4/5");
  CHECK(j["pec"]["p"] == 2);
  CHECK(j["pec"]["e"] == 0);
  CHECK(j["pec"]["ep"] == 2);
  CHECK(j["saturated"] == true);
  CHECK(j["skeleton"]["status"] == "found");
  CHECK(j["skeleton"]["k"] == 1);
  CHECK_FALSE(j.contains("elapsedMicros"));  // timing is opt-in
}

TEST_CASE("verify lines carry verdicts in registry order") {
  RunOptions opts;
  opts.mode = RunMode::Verify;
  opts.checks = check_registry();
  GraphReport r = analyze_graph(generate_spanner(), opts);
  REQUIRE(r.verdicts.size() == check_registry().size());
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    CHECK(r.verdicts[i].first == check_registry()[i]);
    CHECK(r.verdicts[i].second.status == CheckOutcome::Status::Pass);
  }
  CHECK_FALSE(r.any_failure());
  json j = json::parse(report_json_line(r, opts));
  CHECK(j["verdicts"]["lemma-4.3"] == "pass");
  CHECK(j["failures"].empty());
}

TEST_CASE("edge budget turns checks into skips") {
  RunOptions opts;
  opts.mode = RunMode::Verify;
  opts.checks = {"pec-identities"};
  opts.max_edges = 3;
  GraphReport r = analyze_graph(oracle::cycle(5), opts);
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts[0].second.status == CheckOutcome::Status::Skip);
  RunSummary s = summarize({r});
  CHECK(s.budget_skips > 0);
  CHECK(s.failures == 0);
}

TEST_CASE("node budget is reported as a budget skip") {
  RunOptions opts;
  opts.mode = RunMode::Verify;
  opts.checks = {"lemma-4.2"};
  opts.node_budget = 4;
  GraphReport r = analyze_graph(generate_spanner(), opts);
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts[0].second.status == CheckOutcome::Status::Skip);
  CHECK(r.verdicts[0].second.detail.rfind("budget:", 0) == 0);
}

TEST_CASE("worker pools produce byte-identical streams") {
  std::vector<Graph> graphs = connected_graphs_up_to(5);
  for (Graph& g : random_corpus(8, 0.3, 20, 555)) graphs.push_back(std::move(g));

  RunOptions serial;
  serial.mode = RunMode::Verify;
  serial.checks = check_registry();
  RunOptions parallel = serial;
  parallel.jobs = 4;

  auto rs = run_corpus(graphs, serial);
  auto rp = run_corpus(graphs, parallel);
  REQUIRE(rs.size() == rp.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    CHECK(report_json_line(rs[i], serial) == report_json_line(rp[i], parallel));
}

TEST_CASE("conjecture mode reports applicability and findings") {
  RunOptions opts;
  opts.mode = RunMode::Conjecture;
  GraphReport r = analyze_graph(generate_spanner(), opts);
  json j = json::parse(report_json_line(r, opts));
  CHECK(j["applicable"] == true);
  CHECK(j["holds"] == true);
  CHECK(j["violations"].empty());

  GraphReport r3 = analyze_graph(oracle::cycle(3), opts);
  json j3 = json::parse(report_json_line(r3, opts));
  CHECK(j3["applicable"] == false);
  CHECK(j3["holds"].is_null());
}

TEST_CASE("summaries count outcomes") {
  RunOptions opts;
  opts.mode = RunMode::Verify;
  opts.checks = {"pec-identities", "thm-5.3"};
  std::vector<Graph> graphs = {generate_spanner(), oracle::cycle(4)};
  RunSummary s = summarize(run_corpus(graphs, opts));
  CHECK(s.graphs == 2);
  CHECK(s.failures == 0);
  CHECK(s.per_check["pec-identities"][0] == 2);
  CHECK(s.per_check["thm-5.3"][0] == 1);  // vacuous skip on C4
  CHECK(s.per_check["thm-5.3"][2] == 1);
  std::string table = summary_table(s, RunMode::Verify);
  CHECK(table.find("pec-identities") != std::string::npos);
}

TEST_CASE("error lines") {
  json j = json::parse(error_json_line("bad input", 7));
  CHECK(j["error"] == "bad input");
  CHECK(j["line"] == 7);
}

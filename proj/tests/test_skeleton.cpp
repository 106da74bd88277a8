#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "pdm/corpus.hpp"
#include "pdm/skeleton.hpp"

using namespace pdm;

namespace {

EdgeMask mask_of(const Graph& g, std::initializer_list<std::pair<int, int>> edges) {
  EdgeMask out = 0;
  for (auto [u, v] : edges) {
    int ei = g.edge_index(u, v);
    REQUIRE(ei >= 0);
    out |= EdgeMask{1} << ei;
  }
  return out;
}

EdgeMask central_path(const Graph& spanner) {
  return mask_of(spanner, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

}  // namespace

TEST_CASE("the spanner with its central path is a 1-skeleton") {
  Graph g = generate_spanner();
  SkeletonWitness w = check_skeleton(g, central_path(g));
  CHECK(w.pass);
  CHECK(w.k == 1);
  // The one rich edge joins the two 3-vertices.
  CHECK(w.rich_edges == mask_of(g, {{2, 3}}));
  CHECK(std::popcount(w.g_double_prime) == 8);
}

TEST_CASE("empty and short candidates fail the path condition") {
  Graph g = generate_spanner();
  SkeletonWitness empty = check_skeleton(g, 0);
  CHECK_FALSE(empty.pass);
  CHECK_FALSE(empty.verdicts[1].pass);

  Graph c6 = oracle::cycle(6);
  SkeletonWitness one_edge = check_skeleton(c6, EdgeMask{1});
  CHECK_FALSE(one_edge.pass);
  CHECK_FALSE(one_edge.verdicts[1].pass);

  CHECK_THROWS_AS(check_skeleton(c6, EdgeMask{1} << 20), std::invalid_argument);
}

TEST_CASE("degree above three fails the preamble") {
  // A 4-star with pendant tails, whatever the candidate.
  Graph star(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
  SkeletonWitness w = check_skeleton(star, star.full_mask() & 0x3);
  CHECK_FALSE(w.verdicts[0].pass);
  CHECK_FALSE(w.pass);
}

TEST_CASE("recognizer outcomes") {
  SkeletonSearch sp = find_skeleton_decomposition(generate_spanner());
  REQUIRE(sp.status == SkeletonSearch::Status::Found);
  CHECK(sp.witness->k == 1);

  // No leaves at all.
  CHECK(find_skeleton_decomposition(oracle::cycle(4)).status ==
        SkeletonSearch::Status::Absent);
  // A candidate path exists but has no 3-vertex.
  CHECK(find_skeleton_decomposition(oracle::path(6)).status ==
        SkeletonSearch::Status::Absent);
  // Tiny budget reports unknown instead of silently failing.
  SkeletonSearch tight =
      find_skeleton_decomposition(generate_spanner(),
                                  OutsideMatchingRule::OddEdges, SearchBudget{3});
  CHECK(tight.status == SkeletonSearch::Status::Unknown);
}

TEST_CASE("perfect matching enumeration") {
  PerfectMatchingReport sp = perfect_matchings(generate_spanner());
  CHECK(sp.unique_perfect);
  REQUIRE(sp.matchings.size() == 1);
  CHECK(sp.matchings[0].size() == 5);

  CHECK(perfect_matchings(oracle::cycle(4)).matchings.size() == 2);
  CHECK(perfect_matchings(oracle::cycle(6)).matchings.size() == 2);
  CHECK_FALSE(perfect_matchings(oracle::cycle(6)).unique_perfect);
  CHECK(perfect_matchings(oracle::path(3)).matchings.empty());  // odd order
}

TEST_CASE("alternating cycle detection against a matching") {
  Graph c4 = oracle::cycle(4);
  EdgeMask pm = mask_of(c4, {{0, 1}, {2, 3}});
  auto cyc = find_alternating_cycle(c4, pm);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 4);

  // One matched edge cannot alternate around the square.
  CHECK_FALSE(find_alternating_cycle(c4, mask_of(c4, {{0, 1}})).has_value());

  Graph c6 = oracle::cycle(6);
  CHECK(find_alternating_cycle(c6, mask_of(c6, {{0, 1}, {2, 3}, {4, 5}}))
            .has_value());

  // Trees have no cycles at all.
  Graph sp = generate_spanner();
  CHECK_FALSE(find_alternating_cycle(sp, max_matching(sp).bits()).has_value());
}

TEST_CASE("the explicit triple of a recognized skeleton") {
  Graph g = generate_spanner();
  SkeletonWitness w = check_skeleton(g, central_path(g));
  REQUIRE(w.pass);
  SkeletonMatchings sm = skeleton_matchings(g, w);
  CHECK(sm.m.size() == 5);
  CHECK(sm.h.size() == 4);
  CHECK(sm.h_prime.size() == 4);
  CHECK((sm.m.bits() | sm.h.bits() | sm.h_prime.bits()) == g.full_mask());
  CHECK((sm.h.bits() & sm.h_prime.bits()) == 0);

  // The construction yields a maximally intersecting triple: compare its
  // objective against the exhaustive search.
  MatchingTriple best = maximally_intersecting(g);
  MatchingTriple built;
  built.m = sm.m;
  built.pair = DisjointPair(g, sm.h.bits(), sm.h_prime.bits());
  CHECK(built.stats().m_meet_union == best.stats().m_meet_union);
  CHECK(built.stats().m_meet_h == best.stats().m_meet_h);

  for (int k = 2; k <= 3; ++k) {
    Graph sk = generate_k_skeleton(k);
    SkeletonSearch found = find_skeleton_decomposition(sk);
    REQUIRE(found.status == SkeletonSearch::Status::Found);
    SkeletonMatchings m = skeleton_matchings(sk, *found.witness);
    CHECK(m.m.size() - m.h.size() == k);
    CHECK((m.m.bits() | m.h.bits() | m.h_prime.bits()) == sk.full_mask());
    CHECK(saturation(sk, DisjointPair(sk, m.h.bits(), m.h_prime.bits()))
              .all_saturated);
  }
}

TEST_CASE("skeleton theorems hold on the generators and stay vacuous on C4") {
  TheoremReport sp = verify_skeleton_theorems(generate_spanner());
  CHECK(sp.recognized_gap.applicable);
  CHECK(sp.recognized_gap.pass);
  CHECK(sp.gap_recognized.applicable);
  CHECK(sp.gap_recognized.pass);

  TheoremReport c4 = verify_skeleton_theorems(oracle::cycle(4));
  CHECK_FALSE(c4.recognized_gap.applicable);
  CHECK_FALSE(c4.gap_recognized.applicable);
}

TEST_CASE("spanner generator output") {
  Graph g = generate_spanner();
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 9);
  ParamReport r = param_report(g);
  CHECK(r.ratio == std::pair<long, long>{4, 5});
  CHECK(basic_queries(g).leaves.size() == 4);
}

TEST_CASE("k-skeleton generator") {
  // k = 1 reproduces the spanner exactly, not just up to isomorphism.
  CHECK(generate_k_skeleton(1) == generate_spanner());
  CHECK(generate_k_skeleton(1, 77) == generate_spanner());

  for (int k = 2; k <= 3; ++k) {
    for (unsigned seed : {0u, 1u, 2u, 3u}) {
      Graph g = generate_k_skeleton(k, seed);
      ParamReport r = param_report(g);
      CHECK(r.nu - r.mu == k);
      CHECK(perfect_matchings(g).unique_perfect);
      SkeletonSearch s = find_skeleton_decomposition(g);
      REQUIRE(s.status == SkeletonSearch::Status::Found);
      CHECK(s.witness->k == k);
    }
    // Same seed, same graph.
    CHECK(generate_k_skeleton(k, 5) == generate_k_skeleton(k, 5));
  }
  CHECK_THROWS_AS(generate_k_skeleton(0), std::invalid_argument);
  CHECK_THROWS_AS(generate_k_skeleton(9), std::invalid_argument);
}

TEST_CASE("k-skeletons are saturated") {
  for (int k = 1; k <= 3; ++k)
    CHECK(is_saturated(generate_k_skeleton(k)).saturated);
}

TEST_CASE("both matching rules agree on recognition") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      SkeletonSearch a = find_skeleton_decomposition(g, OutsideMatchingRule::OddEdges);
      SkeletonSearch b = find_skeleton_decomposition(g, OutsideMatchingRule::EvenEdges);
      CHECK(a.status == b.status);
    }
  for (int k = 1; k <= 3; ++k) {
    Graph g = generate_k_skeleton(k);
    SkeletonSearch a = find_skeleton_decomposition(g, OutsideMatchingRule::OddEdges);
    SkeletonSearch b = find_skeleton_decomposition(g, OutsideMatchingRule::EvenEdges);
    REQUIRE(a.status == SkeletonSearch::Status::Found);
    REQUIRE(b.status == SkeletonSearch::Status::Found);
    CHECK(a.witness->k == b.witness->k);
  }
}

TEST_CASE("witness description is a readable record") {
  Graph g = generate_spanner();
  SkeletonWitness w = check_skeleton(g, central_path(g));
  std::string text = w.describe(g);
  CHECK(text.find("skeleton k=1") != std::string::npos);
  CHECK(text.find("path 0-1-2-3-4-5") != std::string::npos);
  CHECK(text.find("rich edges: 2-3") != std::string::npos);
}

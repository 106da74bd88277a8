#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "pdm/corpus.hpp"
#include "pdm/pec.hpp"
#include "pdm/skeleton.hpp"

using namespace pdm;

TEST_CASE("decomposition enumeration counts") {
  PecList k2 = enumerate_pec(Graph(2, {{0, 1}}), 100);
  CHECK(k2.items.size() == 2);  // nothing, or the edge

  PecList c3 = enumerate_pec(oracle::cycle(3), 100);
  CHECK(c3.items.size() == 7);  // all subsets except the full odd cycle

  PecList c4 = enumerate_pec(oracle::cycle(4), 100);
  CHECK(c4.items.size() == 16);  // every subset; the full C4 is an even cycle

  PecList capped = enumerate_pec(oracle::cycle(4), 5);
  CHECK(capped.items.size() == 5);
  CHECK(capped.overflowed);
}

TEST_CASE("enumeration agrees with subset filtering") {
  std::mt19937 rng(17);
  std::vector<Graph> pool;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_connected_graphs(n)) pool.push_back(g);
  for (int i = 0; i < 10; ++i) pool.push_back(random_graph(6, 0.4, rng));

  for (const Graph& g : pool) {
    std::vector<EdgeMask> expected = oracle::brute_pec_subsets(g);
    std::vector<EdgeMask> got;
    for_each_pec(g, [&](EdgeMask mask, int p, int e) {
      got.push_back(mask);
      oracle::PecCounts c = oracle::count_pec(g, mask);
      CHECK(c.paths == p);
      CHECK(c.even_paths == e);
      return true;
    });
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
}

TEST_CASE("decomposition minima") {
  PecMinima sp = pec_minima(generate_spanner());
  CHECK(sp.p == 2);
  CHECK(sp.e == 0);
  CHECK(sp.ep == 2);

  PecMinima c4 = pec_minima(oracle::cycle(4));
  CHECK(c4.p == 0);
  CHECK(c4.e == 0);
  CHECK(c4.ep == 0);

  PecMinima p3 = pec_minima(oracle::path(3));
  CHECK(p3.p == 1);
  CHECK(p3.e == 1);
  CHECK(p3.ep == 1);

  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      oracle::PecMinimaOracle expect = oracle::brute_pec_minima(g);
      PecMinima got = pec_minima(g);
      CHECK(got.p == expect.p);
      CHECK(got.e == expect.e);
      CHECK(got.ep == expect.ep);
      // Witnesses attain their minima.
      CHECK(oracle::count_pec(g, got.p_witness).paths == got.p);
      CHECK(oracle::count_pec(g, got.e_witness).even_paths == got.e);
      oracle::PecCounts cw = oracle::count_pec(g, got.ep_witness);
      CHECK(cw.paths == got.p);
      CHECK(cw.even_paths == got.ep);
    }
}

TEST_CASE("minima parity and ordering invariants") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      PecMinima m = pec_minima(g);
      CHECK(m.ep >= m.e);
      CHECK((g.vertex_count() - m.e) % 2 == 0);
      CHECK((g.vertex_count() - m.ep) % 2 == 0);
    }
}

TEST_CASE("maximum subgraphs all have maximum size") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      int lambda = max_pec_size(g);
      int count = 0;
      for_each_max_pec(g, [&](EdgeMask mask, int, int) {
        CHECK(std::popcount(mask) == lambda);
        ++count;
        return true;
      });
      CHECK(count > 0);
    }
}

TEST_CASE("every decomposition satisfies the subgraph identities") {
  // On the subgraph (V, E'): matching number is (n - e)/2 and the best
  // disjoint-pair total is |E'| itself.
  std::mt19937 rng(23);
  for (int i = 0; i < 12; ++i) {
    Graph g = random_graph(7, 0.4, rng);
    for_each_pec(g, [&](EdgeMask mask, int p, int e) {
      std::vector<std::pair<int, int>> edges;
      for (int ei = 0; ei < g.edge_count(); ++ei)
        if ((mask >> ei) & 1)
          edges.push_back({g.edge(ei).u, g.edge(ei).v});
      Graph sub(g.vertex_count(), edges);
      CHECK(2 * max_matching_size(sub) == g.vertex_count() - e);
      CHECK(max_pec_size(sub) == static_cast<int>(edges.size()));
      CHECK(static_cast<int>(edges.size()) == g.vertex_count() - p);
      return true;
    });
  }
}

TEST_CASE("identity report on the named graphs and a small corpus") {
  PecIdentityReport sp = check_pec_identities(generate_spanner());
  CHECK(sp.all_pass);
  // nu = (10 - 0)/2 = 5, lambda = 10 - 2 = 8, mu = (10 - 2)/2 = 4.
  CHECK(sp.entries[0].lhs == 10);
  CHECK(sp.entries[0].rhs == 10);
  CHECK(sp.entries[1].lhs == 8);

  CHECK(check_pec_identities(Graph(2, {{0, 1}})).all_pass);
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_connected_graphs(n))
      CHECK(check_pec_identities(g).all_pass);
}

TEST_CASE("decomposition from a maximum matching") {
  Graph spanner = generate_spanner();
  PecDecomposition d = pec_from_matching(spanner, max_matching(spanner));
  CHECK(d.census.odd_paths == 5);
  CHECK(d.even_paths == 0);

  Graph k2(2, {{0, 1}});
  PecDecomposition dk = pec_from_matching(k2, max_matching(k2));
  CHECK(dk.census.odd_paths == 1);
  CHECK(dk.even_paths == 0);

  Graph c4 = oracle::cycle(4);
  PecDecomposition dc = pec_from_matching(c4, max_matching(c4));
  CHECK(dc.census.odd_paths == 2);
  CHECK(dc.even_paths == 0);

  // A non-maximum matching is rejected.
  Matching single(c4, EdgeMask{1});
  CHECK_THROWS_AS(pec_from_matching(c4, single), std::invalid_argument);
}

TEST_CASE("decomposition from an optimal pair") {
  Graph spanner = generate_spanner();
  MuReport mu = mu_and_pairs(spanner, 16);
  REQUIRE_FALSE(mu.pairs.empty());
  PecDecomposition d = pec_from_pair(spanner, mu.pairs.front());
  CHECK(d.paths == 2);
  CHECK(d.even_paths == 2);
  for (const Component& c : d.census.components) {
    CHECK(c.kind == Component::Kind::Path);
    CHECK(c.edge_count == 4);  // two paths of length 4
  }

  Graph c4 = oracle::cycle(4);
  MuReport muc = mu_and_pairs(c4, 16);
  PecDecomposition dc = pec_from_pair(c4, muc.pairs.front());
  CHECK(dc.paths == 0);  // the full cycle

  Graph k2(2, {{0, 1}});
  PecDecomposition dk =
      pec_from_pair(k2, DisjointPair(k2, EdgeMask{1}, EdgeMask{0}));
  CHECK(dk.census.odd_paths == 1);

  // A pair below lambda is rejected.
  CHECK_THROWS_AS(pec_from_pair(c4, DisjointPair(c4, EdgeMask{1}, EdgeMask{0})),
                  std::invalid_argument);
}

TEST_CASE("pairs never produce an odd cycle") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      LambdaReport lr = lambda_and_pairs(g, 1 << 16);
      for (const DisjointPair& pair : lr.pairs) {
        ComponentCensus census = components(g, pair.union_bits());
        CHECK(census.odd_cycles == 0);
        CHECK(census.others == 0);
      }
    }
}

#include <doctest.h>

#include "oracles.hpp"
#include "pdm/corpus.hpp"
#include "pdm/graph.hpp"

using namespace pdm;

namespace {
Graph spanner_like() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                    {2, 6}, {6, 7}, {3, 8}, {8, 9}});
}
}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  Graph g(3, {{2, 0}, {0, 1}});
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(1).v == 2);
  CHECK(g.edge_index(2, 0) == 1);
  CHECK(g.edge_index(1, 2) == -1);
}

TEST_CASE("graph6 decodes the basic shapes") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.has_edge(0, 1));

  Graph one = parse_graph6("@");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);

  Graph c4 = parse_graph6(to_graph6(oracle::cycle(4)));
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
}

TEST_CASE("graph6 accepts the optional file header") {
  Graph k2 = parse_graph6(">>graph6<<A_");
  CHECK(k2.edge_count() == 1);
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);     // too short
  CHECK_THROWS_AS(parse_graph6("A_x"), ParseError);   // trailing garbage
  CHECK_THROWS_AS(parse_graph6("A\x1f"), ParseError); // char below range
  try {
    parse_graph6("A_x");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.where() == 2);
  }
  // Nonzero padding bits: K2 has a single data chunk with 5 pad bits.
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
}

TEST_CASE("graph6 round trips over a corpus") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      Graph back = parse_graph6(to_graph6(g));
      CHECK(back == g);
    }
  std::mt19937 rng(7);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_graph(13, 0.4, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge lists parse and reject bad lines") {
  Graph k2 = parse_edge_list("n 2\n0 1\n");
  CHECK(k2.edge_count() == 1);
  Graph p3 = parse_edge_list("n 3\n0 1\n1 2\n");
  CHECK(p3.edge_count() == 2);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), ParseError);
  try {
    parse_edge_list("n 3\n0 1\n0 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.where() == 3);
  }
  CHECK(parse_edge_list(to_edge_list(spanner_like())) == spanner_like());
}

TEST_CASE("component census classifies paths, cycles and junctions") {
  Graph c4 = oracle::cycle(4);
  ComponentCensus census = components(c4);
  CHECK(census.even_cycles == 1);
  CHECK(census.paths() == 0);

  // K2 plus an isolated vertex: one odd path, one trivial even path.
  Graph g(3, {{0, 1}});
  census = components(g);
  CHECK(census.odd_paths == 1);
  CHECK(census.even_paths == 1);

  // The spanner as a whole has 3-vertices, so it is no path/cycle union.
  census = components(spanner_like());
  CHECK(census.others >= 1);
  CHECK(census.components[0].branch_vertex >= 0);
}

TEST_CASE("component census partitions the vertex set") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_graph(9, 0.3, rng);
    EdgeMask sub = rng() & g.full_mask();
    ComponentCensus census = components(g, sub);
    std::size_t total = 0;
    for (const Component& c : census.components) total += c.vertices.size();
    CHECK(total == 9);
  }
}

TEST_CASE("basic queries: bipartiteness, witnesses, leaves, connectivity") {
  BasicQueries q3 = basic_queries(oracle::cycle(3));
  CHECK_FALSE(q3.bipartite);
  CHECK(q3.odd_cycle.size() == 3);

  BasicQueries qs = basic_queries(spanner_like());
  CHECK(qs.connected);
  CHECK(qs.bipartite);
  CHECK(qs.leaves == std::vector<int>{0, 5, 7, 9});

  BasicQueries qe = basic_queries(Graph(3, {}));
  CHECK_FALSE(qe.connected);
  CHECK(qe.bipartite);

  // The odd-cycle witness is a genuine odd cycle of the graph.
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(8, 0.4, rng);
    BasicQueries q = basic_queries(g);
    if (q.bipartite) continue;
    CHECK(q.odd_cycle.size() % 2 == 1);
    for (std::size_t j = 0; j < q.odd_cycle.size(); ++j)
      CHECK(g.has_edge(q.odd_cycle[j], q.odd_cycle[(j + 1) % q.odd_cycle.size()]));
  }
}

TEST_CASE("leaf count equals independent degree-1 count") {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_graph(10, 0.25, rng);
    BasicQueries q = basic_queries(g);
    int ones = 0;
    for (int v = 0; v < 10; ++v) ones += g.degree(v) == 1;
    CHECK(static_cast<int>(q.leaves.size()) == ones);
  }
}

TEST_CASE("remove_vertices relabels densely and maps back") {
  Graph c4 = oracle::cycle(4);
  InducedSubgraph empty_drop = remove_vertices(c4, {});
  CHECK(empty_drop.graph == c4);
  CHECK(empty_drop.to_original == std::vector<int>{0, 1, 2, 3});

  InducedSubgraph one = remove_vertices(Graph(2, {{0, 1}}), {1});
  CHECK(one.graph.vertex_count() == 1);
  CHECK(one.graph.edge_count() == 0);

  InducedSubgraph p = remove_vertices(c4, {2});
  CHECK(p.graph.vertex_count() == 3);
  CHECK(p.graph.edge_count() == 2);
  CHECK(p.to_original == std::vector<int>{0, 1, 3});
  CHECK_THROWS_AS(remove_vertices(c4, {4}), std::invalid_argument);
}

TEST_CASE("dot export lists every vertex and edge") {
  std::string dot = to_dot(Graph(3, {{0, 2}}));
  CHECK(dot.find("graph g {") == 0);
  CHECK(dot.find("0 -- 2;") != std::string::npos);
  CHECK(dot.find("  1;\n") != std::string::npos);
}

#pragma once
// Small-graph corpora: exhaustive generation of one representative per
// isomorphism class (via lexicographically minimal adjacency bit strings)
// and seed-deterministic random graphs.

#include <cstdint>
#include <random>
#include <vector>

#include "pdm/graph.hpp"

namespace pdm {

// Upper-triangle adjacency bits in column-major order, packed MSB-first so
// that integer order equals lexicographic order. Limited to n <= 11
// (55 bits); enough for the exhaustive range and the generated spanner.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph from_canonical(const CanonicalForm& form);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// One canonical representative per isomorphism class, ordered by canonical
// form. Exhaustive augmentation; practical for n <= 8.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);
// Connected classes for 1 <= vertex count <= n, smaller sizes first.
std::vector<Graph> connected_graphs_up_to(int n);

// G(n, p) with a fixed, portable bit-extraction recipe: the draw for pair
// (u, v) consumes one engine word, pairs in canonical order.
Graph random_graph(int n, double edge_prob, std::mt19937& rng);
// Random bipartition (one side bit per vertex), then G(n, p) across sides.
Graph random_bipartite_graph(int n, double edge_prob, std::mt19937& rng);

std::vector<Graph> random_corpus(int n, double edge_prob, int count,
                                 std::uint32_t seed, bool bipartite = false);

}  // namespace pdm

#pragma once
// Alternating chains between two edge sets and the executable checkers for
// the structural facts about maximally intersecting triples, Lambda_mu
// pairs, and the leaf conjecture for bipartite graphs.

#include <functional>
#include <optional>
#include <string>

#include "pdm/budget.hpp"
#include "pdm/graph.hpp"
#include "pdm/matchings.hpp"

namespace pdm {

struct AlternatingChain {
  // Path: length()+1 vertices, ends first/last. Cycle: length() vertices in
  // cyclic order, canonical rotation (minimum vertex first, smaller
  // neighbor second).
  std::vector<int> vertices;
  std::vector<int> edges;    // edge indices along the chain
  std::vector<char> in_a;    // per edge: 1 = A\B, 0 = B\A
  bool cycle = false;

  int length() const { return static_cast<int>(edges.size()); }
  bool odd() const { return length() % 2 == 1; }
  int front_edge() const { return edges.front(); }
  int back_edge() const { return edges.back(); }
  std::string describe(const Graph& g) const;
};

// Maximal chains alternating between A\B and B\A. When both classes put at
// most one edge at each vertex (always true for the matchings this library
// feeds in), the result is exactly the set of maximal alternating paths and
// cycles, each edge of (A\B) ∪ (B\A) on exactly one of them. Ambiguous
// extensions (possible for non-matching inputs) resolve to the least edge
// index, deterministically.
std::vector<AlternatingChain> maximal_chains(const Graph& g, EdgeMask a,
                                             EdgeMask b);

// --- triple checkers --------------------------------------------------------

// Facts about maximal M-H chains of a maximally intersecting triple:
// they are odd paths with end-edges in M; those end-edges lie in H';
// every vertex on such a path is incident to H'.
struct MhChainReport {
  bool odd_paths_matched_ends = true;
  bool end_edges_in_h_prime = true;
  bool vertices_touch_h_prime = true;
  std::string detail;  // first counterexample
  bool all() const {
    return odd_paths_matched_ends && end_edges_in_h_prime && vertices_touch_h_prime;
  }
};
MhChainReport check_mh_chains(const Graph& g, const MatchingTriple& t);

// Facts about maximal H-H' chains of a maximally intersecting triple.
struct HhChainReport {
  bool odd_ends_in_h = true;          // odd paths end in H
  bool mh_ends_start_even = true;     // M-H end-edges end even H-H' paths
  bool mh_inner_stay_inner = true;    // inner M-H vertices are inner here too
  bool even_balance = true;           // |H∩M| >= |H'∩M| on even chains
  bool h_ends_in_m = true;            // end-edges in H are also in M
  std::string detail;
  bool all() const {
    return odd_ends_in_h && mh_ends_start_even && mh_inner_stay_inner &&
           even_balance && h_ends_in_m;
  }
};
HhChainReport check_hh_chains(const Graph& g, const MatchingTriple& t);

// --- pair checkers ----------------------------------------------------------

struct SaturationMap {
  std::vector<char> saturated;  // deg in H∪H' == min(2, deg in G)
  bool all_saturated = true;
};
SaturationMap saturation(const Graph& g, const DisjointPair& pair);

// Adjacency restrictions for a Lambda_mu pair. Rule 1: an edge outside
// H ∪ H' never joins two unsaturated vertices, except the two ends of one
// even maximal H-H' path. Rule 2: an end-vertex of an even maximal path
// never neighbors an even-position inner vertex of a different even
// maximal path. Both scopes are exactly what the swap arguments support;
// wider readings have small counterexamples (see the tests).
// Throws std::invalid_argument if the pair is not in Lambda_mu.
struct PairAdjacencyReport {
  bool unsaturated_rule = true;
  bool even_end_rule = true;
  std::string detail;
  bool all() const { return unsaturated_rule && even_end_rule; }
};
PairAdjacencyReport check_pair_adjacency(const Graph& g, const DisjointPair& pair,
                                         const SearchBudget& budget = {});
// Same checks with lambda/mu supplied by the caller (corpus runs).
PairAdjacencyReport check_pair_adjacency_with(const Graph& g,
                                              const DisjointPair& pair,
                                              int lambda, int mu);

// Swap H and H' along one maximal H-H' chain; preserves the pair total.
DisjointPair swap_chain(const Graph& g, const DisjointPair& pair,
                        const AlternatingChain& chain);

// --- conjecture ---------------------------------------------------------------

// For connected bipartite graphs with mu < nu: are the end-vertices of the
// maximal M-H alternating paths always leaves? Violations are findings,
// not errors.
struct ConjectureScanResult {
  bool applicable = false;
  bool holds = true;
  std::optional<MatchingTriple> violation;
  int violating_vertex = -1;
  long triples_checked = 0;
};
ConjectureScanResult conjecture_scan(const Graph& g,
                                     const SearchBudget& budget = {});

}  // namespace pdm

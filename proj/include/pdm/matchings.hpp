#pragma once
// Exact solvers for the matching parameters of a graph: the matching number
// nu, the best total lambda of a pair of disjoint matchings, the largest H
// in such a pair (mu), and maximally intersecting triples (M, H, H').

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pdm/budget.hpp"
#include "pdm/graph.hpp"

namespace pdm {

struct Matching {
  EdgeSubset set;
  Matching() = default;
  Matching(const Graph& g, EdgeMask bits) : set(g, bits) {}
  int size() const { return set.size(); }
  EdgeMask bits() const { return set.bits; }
};

bool is_matching(const Graph& g, EdgeMask edges);

// Ordered pair (H, H') of edge-disjoint matchings.
struct DisjointPair {
  Matching h, h_prime;
  DisjointPair() = default;
  DisjointPair(const Graph& g, EdgeMask hb, EdgeMask hpb)
      : h(g, hb), h_prime(g, hpb) {}
  int total() const { return h.size() + h_prime.size(); }
  EdgeMask union_bits() const { return h.bits() | h_prime.bits(); }
};

struct TripleStats {
  int size_m = 0, size_h = 0, size_h_prime = 0;
  int m_meet_union = 0;  // |M ∩ (H ∪ H')|
  int m_meet_h = 0;      // |M ∩ H|
};

struct MatchingTriple {
  Matching m;
  DisjointPair pair;
  TripleStats stats() const;
  EdgeMask cover_bits() const { return m.bits() | pair.union_bits(); }
};

struct ParamReport {
  int nu = 0, lambda = 0, mu = 0, mu_prime = 0;
  // mu/nu in lowest terms; absent when nu == 0.
  std::optional<std::pair<long, long>> ratio;
  Matching max_matching_witness;
  DisjointPair pair_witness;
};

// --- solvers ---------------------------------------------------------------

// Exact maximum matching (augmenting paths with blossom contraction).
int max_matching_size(const Graph& g);
Matching max_matching(const Graph& g);

struct MatchingList {
  std::vector<Matching> items;
  bool overflowed = false;
};
// All matchings of maximum size, in ascending bitset order. Truncated at
// `cap` with the overflow flag set; never silently.
MatchingList enumerate_maximum_matchings(const Graph& g, std::size_t cap,
                                         const SearchBudget& budget = {});

struct LambdaReport {
  int lambda = 0;
  std::vector<DisjointPair> pairs;  // the set Lambda(G), ascending (H, H')
  bool overflowed = false;
};
LambdaReport lambda_and_pairs(const Graph& g, std::size_t cap,
                              const SearchBudget& budget = {});

struct MuReport {
  int mu = 0, mu_prime = 0;
  std::vector<DisjointPair> pairs;  // the set Lambda_mu(G)
  bool overflowed = false;
};
MuReport mu_and_pairs(const Graph& g, std::size_t cap,
                      const SearchBudget& budget = {});

// Visit every optimum of the lexicographic objective
//   (|M ∩ (H ∪ H')|, |M ∩ H|)  over maximum matchings M and Lambda_mu pairs,
// in ascending (M, H, H') bitset order. Stops early when fn returns false.
void for_each_maximally_intersecting(
    const Graph& g, const SearchBudget& budget,
    const std::function<bool(const MatchingTriple&)>& fn);

// The canonical (bitset-least) optimum.
MatchingTriple maximally_intersecting(const Graph& g,
                                      const SearchBudget& budget = {});

struct SaturationReport {
  bool saturated = false;  // some optimal triple covers every edge
  std::optional<MatchingTriple> witness;
  bool all_triples_agree = true;  // "some" and "all" coincide here
};
SaturationReport is_saturated(const Graph& g, const SearchBudget& budget = {});

ParamReport param_report(const Graph& g, const SearchBudget& budget = {});

}  // namespace pdm

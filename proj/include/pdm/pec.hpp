#pragma once
// Decompositions of a graph into spanning subgraphs whose components are
// paths and even cycles, and the minima p (paths), e (even paths) and
// e_p (even paths among path-minimal decompositions). These mirror the
// matching parameters: nu = (n - e)/2, lambda = n - p, mu = (n - e_p)/2.

#include <functional>
#include <string>

#include "pdm/budget.hpp"
#include "pdm/graph.hpp"
#include "pdm/matchings.hpp"

namespace pdm {

struct PecDecomposition {
  EdgeSubset base;
  ComponentCensus census;
  int paths = 0;       // path components (isolated vertices included)
  int even_paths = 0;  // components that are even paths
};

// Classify a spanning subgraph; throws std::invalid_argument if some
// component is neither a path nor an even cycle.
PecDecomposition make_pec(const Graph& g, EdgeMask subset);

// Enumerate every spanning subgraph with maximum degree 2 and no odd cycle.
// fn(mask, paths, even_paths); return false from fn to stop the walk.
// Returns the number of subgraphs visited.
std::size_t for_each_pec(const Graph& g,
                         const std::function<bool(EdgeMask, int, int)>& fn,
                         const SearchBudget& budget = {});

struct PecList {
  std::vector<PecDecomposition> items;
  bool overflowed = false;
};
PecList enumerate_pec(const Graph& g, std::size_t cap,
                      const SearchBudget& budget = {});

// Largest size of such a subgraph; equals lambda(G).
int max_pec_size(const Graph& g, const SearchBudget& budget = {});

// Visit every maximum-size subgraph (these realize p(G) = n - lambda).
void for_each_max_pec(const Graph& g,
                      const std::function<bool(EdgeMask, int, int)>& fn,
                      const SearchBudget& budget = {});

struct PecMinima {
  int p = 0, e = 0, ep = 0;
  EdgeMask p_witness = 0, e_witness = 0, ep_witness = 0;
};
PecMinima pec_minima(const Graph& g, const SearchBudget& budget = {});

struct PecIdentityReport {
  struct Entry {
    std::string name;
    long lhs = 0, rhs = 0;
    bool pass = false;
  };
  std::vector<Entry> entries;
  bool all_pass = true;
  std::string graph6;  // reproducer
};
// Recomputes nu/lambda/mu/mu' from matchings and p/e/e_p from the
// decomposition minima and checks the five identities relating them.
PecIdentityReport check_pec_identities(const Graph& g,
                                       const SearchBudget& budget = {});

// The spanning subgraph (V, M) of a maximum matching M; its even-path count
// equals e(G). Throws std::invalid_argument when M is not maximum.
PecDecomposition pec_from_matching(const Graph& g, const Matching& m,
                                   const SearchBudget& budget = {});

// The spanning subgraph (V, H ∪ H') of a pair attaining lambda; its path
// count equals p(G), and its even-path count equals e_p(G) when the pair is
// in Lambda_mu. Throws std::invalid_argument when the pair is not optimal.
PecDecomposition pec_from_pair(const Graph& g, const DisjointPair& pair,
                               const SearchBudget& budget = {});

}  // namespace pdm

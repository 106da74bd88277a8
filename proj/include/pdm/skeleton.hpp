#pragma once
// Recognition and generation of skeletons: connected degree-<=3 graphs
// carrying a subgraph G' of vertex-disjoint odd leaf-to-leaf paths (length
// >= 5) subject to eight structural conditions. A recognized k-skeleton has
// nu - mu = k and is saturated; conversely every saturated graph with
// mu < nu decomposes this way.

#include <array>
#include <optional>
#include <string>

#include "pdm/alternating.hpp"
#include "pdm/budget.hpp"
#include "pdm/graph.hpp"
#include "pdm/matchings.hpp"

namespace pdm {

// Condition (viii) tests alternating cycles against a matching M built from
// the decomposition. The odd edges of the paths outside G' make M the
// unique perfect matching; a literal variant takes the even edges instead.
enum class OutsideMatchingRule { OddEdges, EvenEdges };

struct ConditionVerdict {
  bool pass = false;
  std::string note;
};

// A cycle alternating strictly between matching edges and non-matching
// edges, as a vertex sequence, if one exists.
std::optional<std::vector<int>> find_alternating_cycle(const Graph& g,
                                                       EdgeMask matching_bits);

struct SkeletonWitness {
  EdgeSubset g_prime;
  std::vector<char> in_v_prime;            // vertex membership in V'
  std::vector<std::vector<int>> paths;     // G' path components, vertex order
  EdgeMask rich_edges = 0;                 // odd G'-edges with two 3-vertices
  EdgeMask g_double_prime = 0;             // E minus the rich edges
  int k = 0;                               // number of G' paths
  // verdicts[0] is the degree/connectivity preamble; [1..8] the conditions.
  std::array<ConditionVerdict, 9> verdicts;
  bool pass = false;

  std::string describe(const Graph& g) const;
};

// Evaluate all conditions for a candidate G'. Throws std::invalid_argument
// if g_prime is not a subset of the graph's edges.
SkeletonWitness check_skeleton(const Graph& g, EdgeMask g_prime,
                               OutsideMatchingRule rule = OutsideMatchingRule::OddEdges);

struct SkeletonSearch {
  enum class Status { Found, Absent, Unknown };
  Status status = Status::Absent;
  std::optional<SkeletonWitness> witness;
  std::string note;
};

// Search for a G' satisfying every condition: first the candidate derived
// from a maximally intersecting triple (the union of its long M-H
// alternating paths), then a backtracking search over unions of
// vertex-disjoint odd leaf-to-leaf paths. Absent means the full candidate
// space was exhausted; Unknown means the budget ran out.
SkeletonSearch find_skeleton_decomposition(
    const Graph& g, OutsideMatchingRule rule = OutsideMatchingRule::OddEdges,
    const SearchBudget& budget = {});

struct PerfectMatchingReport {
  std::vector<Matching> matchings;
  bool unique_perfect = false;
  bool overflowed = false;
};
PerfectMatchingReport perfect_matchings(const Graph& g, std::size_t cap = 1 << 20);

struct SkeletonMatchings {
  Matching m, h, h_prime;
};

// The explicit triple of a recognized skeleton: M the unique perfect
// matching; H the even edges of the G' paths plus the odd edges of the
// outside paths; H' the non-rich odd G' edges, the even outside edges, and
// every edge crossing between the two. All invariants are re-verified and
// any failure raises std::logic_error naming the graph.
SkeletonMatchings skeleton_matchings(const Graph& g, const SkeletonWitness& w);

struct TheoremReport {
  struct Direction {
    bool applicable = false;
    bool pass = true;
    std::string detail;
  };
  Direction recognized_gap;   // recognized k-skeleton => nu - mu = k, saturated
  Direction gap_recognized;   // mu < nu and saturated => recognized, k = nu - mu
  bool skipped = false;
  std::string skip_reason;
};
TheoremReport verify_skeleton_theorems(
    const Graph& g, OutsideMatchingRule rule = OutsideMatchingRule::OddEdges,
    const SearchBudget& budget = {});

// The 10-vertex tree attaining mu/nu = 4/5: a length-5 leaf-to-leaf path
// whose two inner 3-vertices carry pendant length-2 paths. Parameters are
// re-verified on every call.
Graph generate_spanner();

// A validated k-skeleton: the spanner for k = 1; for larger k a chain of
// one length-5 and k-1 length-7 paths joined by length-3 connectors, with
// pendant length-2 paths filling the remaining 3-vertex slots. The seed
// picks among the valid attachment orientations. Emission fails loudly if
// the result does not pass check_skeleton with k components.
Graph generate_k_skeleton(int k, unsigned seed = 0);

}  // namespace pdm

#pragma once
// Immutable simple undirected graphs with dense vertex labels 0..n-1 and a
// canonical edge ordering (lexicographic by endpoints), so edge subsets can
// be carried as fixed-index bitsets and every computation is reproducible.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdm {

// Bit i corresponds to canonical edge i of the parent graph. Only usable
// when the graph has at most 64 edges; all exact solvers enforce that.
using EdgeMask = std::uint64_t;

struct Edge {
  int u = -1, v = -1;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on out-of-range endpoints, self-loops or
  // duplicate edges. Edge input order is irrelevant: edges are sorted.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  // (neighbor, edge index) pairs, sorted by neighbor.
  const std::vector<std::pair<int, int>>& adjacency(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int edge_index(int u, int v) const;  // -1 if absent
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int max_degree() const;

  bool fits_mask() const { return edge_count() <= 64; }
  EdgeMask full_mask() const;
  // Mask of edges incident to v. Requires fits_mask().
  EdgeMask incident_mask(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<EdgeMask> incident_;  // only filled when edge_count() <= 64
};

// Subset of a parent graph's edges, bitset semantics.
struct EdgeSubset {
  const Graph* graph = nullptr;
  EdgeMask bits = 0;

  EdgeSubset() = default;
  EdgeSubset(const Graph& g, EdgeMask b) : graph(&g), bits(b) {}

  int size() const;
  bool contains(int edge_idx) const { return (bits >> edge_idx) & 1; }
  std::vector<Edge> edge_list() const;
  bool valid() const;  // bits only reference existing parent edges
};

// Thrown by the text parsers; `where` names the byte offset (graph6) or
// line number (edge lists) of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, long where)
      : std::runtime_error(message), where_(where) {}
  long where() const { return where_; }

 private:
  long where_;
};

// Standard graph6: optional ">>graph6<<" prefix, N(n) header, then the
// upper triangle in column-major order packed into 6-bit chunks offset by 63.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// First line "n <count>", then one "u v" line per edge.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

std::string to_dot(const Graph& g);

// --- connected components of a (spanning) subgraph ----------------------

struct Component {
  enum class Kind { Path, Cycle, Other };
  Kind kind = Kind::Path;
  // Path: endpoints first/last. Cycle: cyclic order, canonical rotation.
  // Other: sorted vertex list.
  std::vector<int> vertices;
  int edge_count = 0;
  int branch_vertex = -1;  // a vertex of degree >= 3 when kind == Other
  bool even() const { return edge_count % 2 == 0; }
};

struct ComponentCensus {
  std::vector<Component> components;
  int odd_paths = 0;
  int even_paths = 0;  // isolated vertices count here (length-0 paths)
  int even_cycles = 0;
  int odd_cycles = 0;
  int others = 0;
  int paths() const { return odd_paths + even_paths; }
  // True when every component is a path or an even cycle.
  bool paths_and_even_cycles() const { return others == 0 && odd_cycles == 0; }
};

// Census of the spanning subgraph (V, subset). Components are ordered by
// their minimum vertex.
ComponentCensus components(const Graph& g, EdgeMask subset);
ComponentCensus components(const Graph& g);

// --- elementary structure queries ----------------------------------------

struct BasicQueries {
  std::vector<int> degrees;
  std::vector<int> leaves;  // vertices of degree 1, ascending
  bool connected = false;
  bool bipartite = false;
  // When bipartite: side assignment 0/1 per vertex (-1 unused, none here).
  // When not: a witness odd cycle as a vertex sequence.
  std::vector<int> side;
  std::vector<int> odd_cycle;
};

BasicQueries basic_queries(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new label -> original label
};

// Induced subgraph on V minus `drop` (need not be sorted; duplicates and
// out-of-range vertices are rejected).
InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& drop);

}  // namespace pdm

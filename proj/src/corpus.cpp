#include "pdm/corpus.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace pdm {

namespace {

constexpr int kCanonicalLimit = 11;  // 55 triangle bits fit one word

// Backtracking minimization of the adjacency bit string over all vertex
// placements. Bit b of the string sits at word position 63 - b, so plain
// integer comparison is lexicographic comparison. Prefix pruning against
// the incumbent keeps this fast at the sizes we enumerate.
struct Minimizer {
  int n;
  std::vector<std::uint32_t> row;  // adjacency masks
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> placed;
  std::vector<char> used;

  explicit Minimizer(const Graph& g)
      : n(g.vertex_count()), row(n, 0), used(n, 0) {
    for (const Edge& e : g.edges()) {
      row[e.u] |= std::uint32_t{1} << e.v;
      row[e.v] |= std::uint32_t{1} << e.u;
    }
    placed.reserve(n);
  }

  // Bits the candidate vertex contributes at placement position k.
  std::uint64_t column_bits(int cand, int k, int offset) const {
    std::uint64_t bits = 0;
    for (int j = 0; j < k; ++j)
      if ((row[cand] >> placed[j]) & 1)
        bits |= std::uint64_t{1} << (63 - (offset + j));
    return bits;
  }

  void search(int k, int offset, std::uint64_t cur) {
    if (k == n) {
      best = std::min(best, cur);
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      std::uint64_t next = cur | column_bits(cand, k, offset);
      int prefix_len = offset + k;
      if (prefix_len > 0 && prefix_len < 64) {
        std::uint64_t mask = ~((std::uint64_t{1} << (64 - prefix_len)) - 1);
        if ((next & mask) > (best & mask)) continue;
      } else if (prefix_len >= 64 && next > best) {
        continue;
      }
      used[cand] = 1;
      placed.push_back(cand);
      search(k + 1, offset + k, next);
      placed.pop_back();
      used[cand] = 0;
    }
  }

  // Greedy seed: repeatedly place the vertex contributing the smallest
  // column, ties by label. Gives the incumbent a head start.
  std::uint64_t greedy() {
    std::uint64_t cur = 0;
    int offset = 0;
    for (int k = 0; k < n; ++k) {
      int best_cand = -1;
      std::uint64_t best_bits = 0;
      for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        std::uint64_t bits = column_bits(cand, k, offset);
        if (best_cand < 0 || bits < best_bits) {
          best_cand = cand;
          best_bits = bits;
        }
      }
      used[best_cand] = 1;
      placed.push_back(best_cand);
      cur |= best_bits;
      offset += k;
    }
    for (int v : placed) used[v] = 0;
    placed.clear();
    return cur;
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.vertex_count() > kCanonicalLimit)
    throw std::invalid_argument("canonical form limited to 11 vertices");
  Minimizer mini(g);
  mini.best = mini.greedy();
  mini.search(0, 0, 0);
  return {g.vertex_count(), mini.best};
}

Graph from_canonical(const CanonicalForm& form) {
  std::vector<std::pair<int, int>> edges;
  int b = 0;
  for (int v = 1; v < form.n; ++v)
    for (int u = 0; u < v; ++u, ++b)
      if ((form.bits >> (63 - b)) & 1) edges.push_back({u, v});
  return Graph(form.n, std::move(edges));
}

Graph canonical_graph(const Graph& g) { return from_canonical(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > kCanonicalLimit)
    throw std::invalid_argument("exhaustive generation supports 1 <= n <= 11");
  // Grow by one apex vertex at a time, deduplicating canonically. Every
  // class on t vertices arises from some class on t-1 by deleting the
  // highest-numbered vertex, so the augmentation is complete.
  std::vector<std::uint64_t> level{0};  // the 1-vertex graph
  for (int t = 2; t <= n; ++t) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t parent_bits : level) {
      Graph parent = from_canonical({t - 1, parent_bits});
      std::vector<std::pair<int, int>> base;
      for (const Edge& e : parent.edges()) base.push_back({e.u, e.v});
      for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (t - 1)); ++nb) {
        auto edges = base;
        for (int v = 0; v < t - 1; ++v)
          if ((nb >> v) & 1) edges.push_back({v, t - 1});
        seen.insert(canonical_form(Graph(t, edges)).bits);
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t bits : level) out.push_back(from_canonical({n, bits}));
  return out;
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (basic_queries(g).connected) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int t = 1; t <= n; ++t)
    for (Graph& g : all_connected_graphs(t)) out.push_back(std::move(g));
  return out;
}

namespace {

bool draw(std::mt19937& rng, double p) {
  // Fixed recipe: one 32-bit word per pair, compared against p * 2^32.
  double scaled = p * 4294967296.0;
  std::uint64_t threshold =
      scaled <= 0 ? 0
                  : (scaled >= 4294967296.0 ? std::uint64_t{1} << 32
                                            : static_cast<std::uint64_t>(scaled));
  return rng() < threshold;
}

}  // namespace

Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (draw(rng, edge_prob)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph random_bipartite_graph(int n, double edge_prob, std::mt19937& rng) {
  std::vector<int> side(n);
  for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() & 1);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      bool crosses = side[u] != side[v];
      // Consume the word either way so the stream layout is independent of
      // the bipartition drawn above.
      bool take = draw(rng, edge_prob);
      if (crosses && take) edges.push_back({u, v});
    }
  return Graph(n, std::move(edges));
}

std::vector<Graph> random_corpus(int n, double edge_prob, int count,
                                 std::uint32_t seed, bool bipartite) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(bipartite ? random_bipartite_graph(n, edge_prob, rng)
                            : random_graph(n, edge_prob, rng));
  return out;
}

}  // namespace pdm

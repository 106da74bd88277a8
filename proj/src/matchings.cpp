#include "pdm/matchings.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pdm/pec.hpp"

namespace pdm {

namespace {

constexpr std::size_t kInternalCap = 4'000'000;

// Maximum matching by augmenting-path search with blossom contraction.
struct BlossomSolver {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, p, base;
  std::vector<char> used, blos;

  explicit BlossomSolver(int n_)
      : n(n_), adj(n_), match(n_, -1), p(n_), base(n_), used(n_), blos(n_) {}

  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  int lca(int a, int b) {
    std::vector<char> mark(n, 0);
    for (;;) {
      a = base[a];
      mark[a] = 1;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = p[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blos[base[v]] = 1;
      blos[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  }

  bool find_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          // Odd cycle reached: contract the blossom.
          int cur_base = lca(v, to);
          std::fill(blos.begin(), blos.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (blos[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) {
            for (int u = to; u != -1;) {
              int pv = p[u], ppv = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return false;
  }

  int solve() {
    int pairs = 0;
    for (int v = 0; v < n; ++v)
      if (match[v] == -1)
        for (int to : adj[v])
          if (match[to] == -1) {
            match[v] = to;
            match[to] = v;
            ++pairs;
            break;
          }
    for (int v = 0; v < n; ++v)
      if (match[v] == -1 && find_path(v)) ++pairs;
    return pairs;
  }
};

// Matching number of the subgraph with edge set `allowed`, skipping any
// edge touching `blocked` vertices. Used as the exact pruning bound while
// enumerating maximum matchings.
int masked_matching_number(const Graph& g, int first_edge, EdgeMask allowed,
                           std::uint64_t blocked) {
  BlossomSolver solver(g.vertex_count());
  for (int j = first_edge; j < g.edge_count(); ++j) {
    if (!((allowed >> j) & 1)) continue;
    const Edge& e = g.edge(j);
    if ((blocked >> e.u) & 1 || (blocked >> e.v) & 1) continue;
    solver.add_edge(e.u, e.v);
  }
  return solver.solve();
}

void require_solver_size(const Graph& g) {
  if (!g.fits_mask() || g.vertex_count() > 64)
    throw std::invalid_argument(
        "exact solvers handle at most 64 vertices and 64 edges");
}

struct MaxMatchingEnum {
  const Graph& g;
  const int nu;
  BudgetMeter meter;
  std::vector<EdgeMask>& out;
  std::size_t cap;
  bool overflow = false;

  MaxMatchingEnum(const Graph& graph, int target, const SearchBudget& budget,
                  std::vector<EdgeMask>& sink, std::size_t cap_)
      : g(graph), nu(target), meter(budget), out(sink), cap(cap_) {}

  void run(int i, EdgeMask cur, std::uint64_t used_vertices) {
    if (overflow) return;
    meter.tick();
    if (std::popcount(cur) == nu) {
      if (out.size() >= cap) {
        overflow = true;
        return;
      }
      out.push_back(cur);
      return;
    }
    if (i == g.edge_count()) return;
    int bound = masked_matching_number(g, i, g.full_mask(), used_vertices);
    if (std::popcount(cur) + bound < nu) return;
    const Edge& e = g.edge(i);
    if (!((used_vertices >> e.u) & 1) && !((used_vertices >> e.v) & 1))
      run(i + 1, cur | (EdgeMask{1} << i),
          used_vertices | (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
    run(i + 1, cur, used_vertices);
  }
};

// Alternation classes of one component of a subgraph in which every
// component is a path or an even cycle. Class 0 holds the edges at odd
// positions along the component (both end-edges of an odd path).
struct SplitComponent {
  EdgeMask cls[2] = {0, 0};
  int edge_total = 0;
  bool odd_path = false;
};

std::vector<SplitComponent> split_components(const Graph& g,
                                             const ComponentCensus& census) {
  std::vector<SplitComponent> out;
  for (const Component& c : census.components) {
    if (c.edge_count == 0) continue;
    SplitComponent sc;
    sc.edge_total = c.edge_count;
    const auto& vs = c.vertices;
    const int k = static_cast<int>(vs.size());
    const int limit = c.kind == Component::Kind::Cycle ? k : k - 1;
    for (int i = 0; i < limit; ++i) {
      int a = vs[i], b = vs[(i + 1) % k];
      int ei = g.edge_index(a, b);
      sc.cls[i % 2] |= EdgeMask{1} << ei;  // position i+1; odd positions first
    }
    sc.odd_path = c.kind == Component::Kind::Path && c.edge_count % 2 == 1;
    out.push_back(sc);
  }
  return out;
}

int best_h_size(const std::vector<SplitComponent>& comps) {
  int total = 0;
  for (const SplitComponent& sc : comps) total += (sc.edge_total + 1) / 2;
  return total;
}

}  // namespace

bool is_matching(const Graph& g, EdgeMask edges) {
  std::uint64_t used = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!((edges >> i) & 1)) continue;
    const Edge& e = g.edge(i);
    std::uint64_t mask =
        (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if (used & mask) return false;
    used |= mask;
  }
  return true;
}

TripleStats MatchingTriple::stats() const {
  TripleStats s;
  s.size_m = m.size();
  s.size_h = pair.h.size();
  s.size_h_prime = pair.h_prime.size();
  s.m_meet_union = std::popcount(m.bits() & pair.union_bits());
  s.m_meet_h = std::popcount(m.bits() & pair.h.bits());
  return s;
}

int max_matching_size(const Graph& g) {
  BlossomSolver solver(g.vertex_count());
  for (const Edge& e : g.edges()) solver.add_edge(e.u, e.v);
  return solver.solve();
}

Matching max_matching(const Graph& g) {
  require_solver_size(g);
  BlossomSolver solver(g.vertex_count());
  for (const Edge& e : g.edges()) solver.add_edge(e.u, e.v);
  solver.solve();
  EdgeMask bits = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (solver.match[v] > v)
      bits |= EdgeMask{1} << g.edge_index(v, solver.match[v]);
  return Matching(g, bits);
}

MatchingList enumerate_maximum_matchings(const Graph& g, std::size_t cap,
                                         const SearchBudget& budget) {
  require_solver_size(g);
  MatchingList out;
  std::vector<EdgeMask> masks;
  MaxMatchingEnum search(g, max_matching_size(g), budget, masks, cap);
  search.run(0, 0, 0);
  out.overflowed = search.overflow;
  std::sort(masks.begin(), masks.end());
  out.items.reserve(masks.size());
  for (EdgeMask b : masks) out.items.emplace_back(g, b);
  return out;
}

namespace {

// mu(G): the largest |H| over optimal-size subgraph splits.
int compute_mu(const Graph& g, const SearchBudget& budget) {
  int mu = 0;
  for_each_max_pec(
      g,
      [&](EdgeMask mask, int, int) {
        mu = std::max(mu, best_h_size(split_components(g, components(g, mask))));
        return true;
      },
      budget);
  return mu;
}

// Streams Lambda(G) (all_splits) or Lambda_mu(G) (largest-H splits only).
// Emission order is unspecified; callers sort or reduce.
template <typename Fn>
void for_each_pair_split(const Graph& g, bool all_splits,
                         const SearchBudget& budget, Fn&& fn) {
  int mu = all_splits ? -1 : compute_mu(g, budget);
  bool keep_going = true;
  for_each_max_pec(
      g,
      [&](EdgeMask mask, int, int) {
        auto comps = split_components(g, components(g, mask));
        if (!all_splits && best_h_size(comps) < mu) return true;
        // One choice bit per component: which class goes to H. Odd paths
        // are forced to their larger class when only Lambda_mu is wanted.
        std::vector<int> free_idx;
        for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
          if (all_splits || !comps[ci].odd_path) free_idx.push_back(ci);
        const std::uint64_t combos = std::uint64_t{1} << free_idx.size();
        for (std::uint64_t sel = 0; sel < combos && keep_going; ++sel) {
          EdgeMask hb = 0, hpb = 0;
          for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
            int side = 0;
            auto it = std::find(free_idx.begin(), free_idx.end(), ci);
            if (it != free_idx.end())
              side = (sel >> (it - free_idx.begin())) & 1;
            hb |= comps[ci].cls[side];
            hpb |= comps[ci].cls[side ^ 1];
          }
          keep_going = fn(hb, hpb);
        }
        return keep_going;
      },
      budget);
}

}  // namespace

LambdaReport lambda_and_pairs(const Graph& g, std::size_t cap,
                              const SearchBudget& budget) {
  require_solver_size(g);
  LambdaReport out;
  out.lambda = max_pec_size(g, budget);
  std::vector<std::pair<EdgeMask, EdgeMask>> raw;
  for_each_pair_split(g, /*all_splits=*/true, budget,
                      [&](EdgeMask hb, EdgeMask hpb) {
                        if (raw.size() >= cap) {
                          out.overflowed = true;
                          return false;
                        }
                        raw.push_back({hb, hpb});
                        return true;
                      });
  std::sort(raw.begin(), raw.end());
  for (auto [hb, hpb] : raw) out.pairs.emplace_back(g, hb, hpb);
  return out;
}

MuReport mu_and_pairs(const Graph& g, std::size_t cap,
                      const SearchBudget& budget) {
  require_solver_size(g);
  MuReport out;
  int lambda = max_pec_size(g, budget);
  std::vector<std::pair<EdgeMask, EdgeMask>> raw;
  for_each_pair_split(g, /*all_splits=*/false, budget,
                      [&](EdgeMask hb, EdgeMask hpb) {
                        if (raw.size() >= cap) {
                          out.overflowed = true;
                          return false;
                        }
                        raw.push_back({hb, hpb});
                        return true;
                      });
  out.mu = compute_mu(g, budget);
  out.mu_prime = lambda - out.mu;
  std::sort(raw.begin(), raw.end());
  for (auto [hb, hpb] : raw) out.pairs.emplace_back(g, hb, hpb);
  return out;
}

void for_each_maximally_intersecting(
    const Graph& g, const SearchBudget& budget,
    const std::function<bool(const MatchingTriple&)>& fn) {
  require_solver_size(g);
  MatchingList matchings = enumerate_maximum_matchings(g, kInternalCap, budget);
  if (matchings.overflowed)
    throw BudgetExceeded("too many maximum matchings to enumerate");
  std::vector<std::pair<EdgeMask, EdgeMask>> pairs;
  for_each_pair_split(g, /*all_splits=*/false, budget,
                      [&](EdgeMask hb, EdgeMask hpb) {
                        if (pairs.size() >= kInternalCap)
                          throw BudgetExceeded("too many optimal pairs to enumerate");
                        pairs.push_back({hb, hpb});
                        return true;
                      });
  std::sort(pairs.begin(), pairs.end());

  // Pass 1: the lexicographic objective's optimum.
  int best_union = -1, best_h = -1;
  for (const Matching& m : matchings.items) {
    for (auto [hb, hpb] : pairs) {
      int cu = std::popcount(m.bits() & (hb | hpb));
      int ch = std::popcount(m.bits() & hb);
      if (cu > best_union || (cu == best_union && ch > best_h)) {
        best_union = cu;
        best_h = ch;
      }
    }
  }
  // Pass 2: visit the optima in ascending (M, H, H') order.
  for (const Matching& m : matchings.items) {
    for (auto [hb, hpb] : pairs) {
      int cu = std::popcount(m.bits() & (hb | hpb));
      int ch = std::popcount(m.bits() & hb);
      if (cu != best_union || ch != best_h) continue;
      MatchingTriple triple;
      triple.m = m;
      triple.pair = DisjointPair(g, hb, hpb);
      if (!fn(triple)) return;
    }
  }
}

MatchingTriple maximally_intersecting(const Graph& g,
                                      const SearchBudget& budget) {
  MatchingTriple first;
  bool got = false;
  for_each_maximally_intersecting(g, budget, [&](const MatchingTriple& t) {
    first = t;
    got = true;
    return false;
  });
  if (!got) throw std::logic_error("no maximally intersecting triple found");
  return first;
}

SaturationReport is_saturated(const Graph& g, const SearchBudget& budget) {
  SaturationReport out;
  const EdgeMask full = g.fits_mask() ? g.full_mask() : 0;
  bool all_cover = true;
  bool any = false;
  for_each_maximally_intersecting(g, budget, [&](const MatchingTriple& t) {
    any = true;
    bool covers = t.cover_bits() == full;
    if (covers && !out.witness) {
      out.saturated = true;
      out.witness = t;
    }
    all_cover = all_cover && covers;
    return true;
  });
  out.all_triples_agree = !any || (all_cover == out.saturated);
  return out;
}

ParamReport param_report(const Graph& g, const SearchBudget& budget) {
  require_solver_size(g);
  ParamReport r;
  r.nu = max_matching_size(g);
  r.max_matching_witness = max_matching(g);
  r.lambda = max_pec_size(g, budget);

  bool got_pair = false;
  std::pair<EdgeMask, EdgeMask> best_pair{~EdgeMask{0}, ~EdgeMask{0}};
  for_each_pair_split(g, /*all_splits=*/false, budget,
                      [&](EdgeMask hb, EdgeMask hpb) {
                        if (std::pair{hb, hpb} < best_pair) {
                          best_pair = {hb, hpb};
                          got_pair = true;
                        }
                        return true;
                      });
  r.mu = compute_mu(g, budget);
  r.mu_prime = r.lambda - r.mu;
  if (got_pair) r.pair_witness = DisjointPair(g, best_pair.first, best_pair.second);

  if (!(r.mu <= r.nu) || !(r.mu_prime <= r.mu) ||
      r.lambda != r.mu + r.mu_prime || (r.nu > 0 && 4 * r.nu > 5 * r.mu))
    throw std::logic_error("matching parameter invariants violated: " +
                           to_graph6(g));
  if (r.nu > 0) {
    long a = r.mu, b = r.nu;
    long d = std::gcd(a, b);
    r.ratio = std::pair<long, long>{a / d, b / d};
  }
  return r;
}

}  // namespace pdm

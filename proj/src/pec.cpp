#include "pdm/pec.hpp"

#include <algorithm>
#include <bit>

namespace pdm {

namespace {

// Backtracking enumeration of spanning subgraphs with maximum degree 2 and
// no odd cycle. Components of every partial subgraph are paths or cycles,
// so a union-find with per-root vertex/edge aggregates detects odd cycles:
// an intra-component edge can only join the two ends of a path, closing a
// cycle whose length is the component's vertex count.
struct PecSearch {
  const Graph& g;
  const int n, m;
  BudgetMeter meter;

  std::vector<int> deg, parent, comp_v, comp_e;
  int paths = 0;        // current path-component count
  int even_paths = 0;   // current even-path count
  int size = 0;         // edges taken so far
  int residual = 0;     // sum over vertices of (2 - deg)
  EdgeMask mask = 0;

  // Enumeration modes share the walker; see run().
  int prune_target = -1;      // keep only subgraphs completable to >= target
  const std::function<bool(EdgeMask, int, int)>* emit = nullptr;
  bool stopped = false;
  std::size_t visited = 0;

  PecSearch(const Graph& graph, const SearchBudget& budget)
      : g(graph),
        n(graph.vertex_count()),
        m(graph.edge_count()),
        meter(budget),
        deg(n, 0),
        parent(n),
        comp_v(n, 1),
        comp_e(n, 0) {
    if (!g.fits_mask()) throw std::invalid_argument("graph has more than 64 edges");
    for (int v = 0; v < n; ++v) parent[v] = v;
    paths = n;
    even_paths = n;
    residual = 2 * n;
  }

  int find(int v) const {
    while (parent[v] != v) v = parent[v];
    return v;
  }

  struct Undo {
    int kind;  // 0 = merge, 1 = cycle closed
    int child = -1, root = -1;
    int old_paths, old_even;
  };

  bool try_add(int ei, Undo& u) {
    const Edge& e = g.edge(ei);
    if (deg[e.u] >= 2 || deg[e.v] >= 2) return false;
    int ru = find(e.u), rv = find(e.v);
    u.old_paths = paths;
    u.old_even = even_paths;
    if (ru == rv) {
      // Joining the two ends of one path; reject odd cycles.
      if (comp_v[ru] % 2 == 1) return false;
      u.kind = 1;
      u.root = ru;
      --paths;
      if (comp_e[ru] % 2 == 0) --even_paths;
      ++comp_e[ru];
    } else {
      u.kind = 0;
      if (comp_v[ru] < comp_v[rv]) std::swap(ru, rv);
      u.root = ru;
      u.child = rv;
      --paths;
      even_paths -= (comp_e[ru] % 2 == 0) + (comp_e[rv] % 2 == 0);
      int joined = comp_e[ru] + comp_e[rv] + 1;
      even_paths += (joined % 2 == 0);
      parent[rv] = ru;
      comp_v[ru] += comp_v[rv];
      comp_e[ru] = joined;
    }
    ++deg[e.u];
    ++deg[e.v];
    ++size;
    residual -= 2;
    mask |= EdgeMask{1} << ei;
    return true;
  }

  void undo(int ei, const Undo& u) {
    const Edge& e = g.edge(ei);
    if (u.kind == 1) {
      --comp_e[u.root];
    } else {
      comp_v[u.root] -= comp_v[u.child];
      comp_e[u.root] -= comp_e[u.child] + 1;
      parent[u.child] = u.child;
    }
    paths = u.old_paths;
    even_paths = u.old_even;
    --deg[e.u];
    --deg[e.v];
    --size;
    residual += 2;
    mask &= ~(EdgeMask{1} << ei);
  }

  // Optimistic count of edges that could still join, given current degrees.
  int addable_bound(int from) const {
    int cnt = 0;
    for (int j = from; j < m; ++j) {
      const Edge& e = g.edge(j);
      if (deg[e.u] < 2 && deg[e.v] < 2) ++cnt;
    }
    return std::min(cnt, residual / 2);
  }

  void run(int i) {
    if (stopped) return;
    meter.tick();
    if (prune_target >= 0 && size + addable_bound(i) < prune_target) return;
    if (i == m) {
      ++visited;
      if (!(*emit)(mask, paths, even_paths)) stopped = true;
      return;
    }
    Undo u;
    if (try_add(i, u)) {
      run(i + 1);
      undo(i, u);
    }
    run(i + 1);
  }

  // Branch and bound for the maximum subgraph size.
  int best = -1;
  EdgeMask best_mask = 0;
  void run_max(int i) {
    meter.tick();
    int ub = size + addable_bound(i);
    if (ub < best) return;
    if (i == m) {
      if (size > best || (size == best && mask < best_mask)) {
        best = size;
        best_mask = mask;
      }
      return;
    }
    Undo u;
    if (try_add(i, u)) {
      run_max(i + 1);
      undo(i, u);
    }
    run_max(i + 1);
  }

  // Minimize even paths over all subgraphs (optionally only those of size
  // exactly `at_size`). Each added edge lowers the even-path count by at
  // most 2 (merging two even paths), which gives the lower bound.
  int best_e = 1 << 20;
  EdgeMask best_e_mask = 0;
  int at_size = -1;
  void run_min_even(int i) {
    meter.tick();
    int can_add = addable_bound(i);
    if (at_size >= 0 && size + can_add < at_size) return;
    if (even_paths - 2 * can_add > best_e) return;
    if (i == m) {
      if (at_size >= 0 && size != at_size) return;
      if (even_paths < best_e || (even_paths == best_e && mask < best_e_mask)) {
        best_e = even_paths;
        best_e_mask = mask;
      }
      return;
    }
    Undo u;
    if (try_add(i, u)) {
      run_min_even(i + 1);
      undo(i, u);
    }
    run_min_even(i + 1);
  }
};

}  // namespace

PecDecomposition make_pec(const Graph& g, EdgeMask subset) {
  if (g.fits_mask() && (subset & ~g.full_mask()) != 0)
    throw std::invalid_argument("subset references nonexistent edges");
  PecDecomposition d;
  d.base = EdgeSubset(g, subset);
  d.census = components(g, subset);
  if (!d.census.paths_and_even_cycles()) {
    for (const Component& c : d.census.components) {
      if (c.kind == Component::Kind::Other)
        throw std::invalid_argument("component with a degree-3 vertex " +
                                    std::to_string(c.branch_vertex));
      if (c.kind == Component::Kind::Cycle && !c.even())
        throw std::invalid_argument("odd cycle component");
    }
  }
  d.paths = d.census.paths();
  d.even_paths = d.census.even_paths;
  return d;
}

std::size_t for_each_pec(const Graph& g,
                         const std::function<bool(EdgeMask, int, int)>& fn,
                         const SearchBudget& budget) {
  PecSearch s(g, budget);
  s.emit = &fn;
  s.run(0);
  return s.visited;
}

PecList enumerate_pec(const Graph& g, std::size_t cap,
                      const SearchBudget& budget) {
  PecList out;
  for_each_pec(
      g,
      [&](EdgeMask mask, int, int) {
        if (out.items.size() >= cap) {
          out.overflowed = true;
          return false;
        }
        out.items.push_back(make_pec(g, mask));
        return true;
      },
      budget);
  return out;
}

int max_pec_size(const Graph& g, const SearchBudget& budget) {
  PecSearch s(g, budget);
  s.best = -1;
  s.run_max(0);
  return s.best;
}

void for_each_max_pec(const Graph& g,
                      const std::function<bool(EdgeMask, int, int)>& fn,
                      const SearchBudget& budget) {
  int lambda = max_pec_size(g, budget);
  PecSearch s(g, budget);
  s.prune_target = lambda;
  std::function<bool(EdgeMask, int, int)> filter = [&](EdgeMask mask, int p, int e) {
    if (std::popcount(mask) != lambda) return true;
    return fn(mask, p, e);
  };
  s.emit = &filter;
  s.run(0);
}

PecMinima pec_minima(const Graph& g, const SearchBudget& budget) {
  PecMinima out;
  const int n = g.vertex_count();

  {  // p(G) = n - max size
    PecSearch s(g, budget);
    s.run_max(0);
    out.p = n - s.best;
    out.p_witness = s.best_mask;
  }
  {  // e(G): unconstrained minimum of even paths
    PecSearch s(g, budget);
    s.run_min_even(0);
    out.e = s.best_e;
    out.e_witness = s.best_e_mask;
  }
  {  // e_p(G): minimum even paths among path-minimal decompositions
    PecSearch s(g, budget);
    s.at_size = n - out.p;
    s.run_min_even(0);
    out.ep = s.best_e;
    out.ep_witness = s.best_e_mask;
  }
  return out;
}

PecIdentityReport check_pec_identities(const Graph& g,
                                       const SearchBudget& budget) {
  PecIdentityReport report;
  report.graph6 = to_graph6(g);
  const long n = g.vertex_count();

  const long nu = max_matching_size(g);
  MuReport mu_report = mu_and_pairs(g, 1, budget);
  const long lambda = mu_report.mu + mu_report.mu_prime;
  const long mu = mu_report.mu;
  const long mu_prime = mu_report.mu_prime;

  PecMinima minima = pec_minima(g, budget);

  auto add = [&](const std::string& name, long lhs, long rhs) {
    report.entries.push_back({name, lhs, rhs, lhs == rhs});
    report.all_pass = report.all_pass && lhs == rhs;
  };
  add("nu == (n - e)/2 [doubled]", 2 * nu, n - minima.e);
  add("lambda == n - p", lambda, n - minima.p);
  add("mu == (n - ep)/2 [doubled]", 2 * mu, n - minima.ep);
  add("mu - mu' == p - ep", mu - mu_prime, minima.p - minima.ep);
  add("(mu == nu) <=> (e == ep)", mu == nu ? 1 : 0, minima.e == minima.ep ? 1 : 0);
  return report;
}

PecDecomposition pec_from_matching(const Graph& g, const Matching& m,
                                   const SearchBudget& budget) {
  if (!is_matching(g, m.bits()))
    throw std::invalid_argument("edge set is not a matching");
  if (m.size() != max_matching_size(g))
    throw std::invalid_argument("matching is not maximum");
  PecDecomposition d = make_pec(g, m.bits());
  PecMinima minima = pec_minima(g, budget);
  if (d.even_paths != minima.e)
    throw std::logic_error("matching decomposition misses e(G): " + to_graph6(g));
  return d;
}

PecDecomposition pec_from_pair(const Graph& g, const DisjointPair& pair,
                               const SearchBudget& budget) {
  if (!is_matching(g, pair.h.bits()) || !is_matching(g, pair.h_prime.bits()) ||
      (pair.h.bits() & pair.h_prime.bits()) != 0)
    throw std::invalid_argument("not a pair of disjoint matchings");
  int lambda = max_pec_size(g, budget);
  if (pair.total() != lambda)
    throw std::invalid_argument("pair does not attain lambda");
  PecDecomposition d = make_pec(g, pair.union_bits());
  PecMinima minima = pec_minima(g, budget);
  if (d.paths != minima.p)
    throw std::logic_error("pair decomposition misses p(G): " + to_graph6(g));
  if (2 * pair.h.size() == g.vertex_count() - minima.ep &&
      d.even_paths != minima.ep)
    throw std::logic_error("Lambda_mu pair decomposition misses e_p(G): " + to_graph6(g));
  return d;
}

}  // namespace pdm

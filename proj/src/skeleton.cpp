#include "pdm/skeleton.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "pdm/pec.hpp"

namespace pdm {

namespace {

std::string join_vertices(const std::vector<int>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "-" : "") << vs[i];
  return os.str();
}

// Edge indices of a path given its vertex order; position j is edges[j-1].
std::vector<int> path_edges(const Graph& g, const std::vector<int>& vs) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    out.push_back(g.edge_index(vs[i], vs[i + 1]));
  return out;
}

}  // namespace

// Starts are the matching edges in canonical order, so the returned witness
// is deterministic.
std::optional<std::vector<int>> find_alternating_cycle(const Graph& g,
                                                       EdgeMask m_bits) {
  const int n = g.vertex_count();
  std::vector<int> mate(n, -1);
  for (int i = 0; i < g.edge_count(); ++i)
    if ((m_bits >> i) & 1) {
      mate[g.edge(i).u] = g.edge(i).v;
      mate[g.edge(i).v] = g.edge(i).u;
    }
  std::vector<int> walk;
  std::vector<char> on(n, 0);
  std::optional<std::vector<int>> found;

  auto dfs = [&](auto&& self, int cur, int start) -> bool {
    for (auto [w, ei] : g.adjacency(cur)) {
      if ((m_bits >> ei) & 1) continue;  // need a non-M step here
      if (w == start && walk.size() >= 4) {
        found = walk;
        return true;
      }
      if (on[w] || mate[w] < 0 || on[mate[w]]) continue;
      on[w] = on[mate[w]] = 1;
      walk.push_back(w);
      walk.push_back(mate[w]);
      if (self(self, mate[w], start)) return true;
      walk.pop_back();
      walk.pop_back();
      on[w] = on[mate[w]] = 0;
    }
    return false;
  };

  for (int i = 0; i < g.edge_count() && !found; ++i) {
    if (!((m_bits >> i) & 1)) continue;
    int u = g.edge(i).u, v = g.edge(i).v;
    walk = {u, v};
    on.assign(n, 0);
    on[u] = on[v] = 1;
    dfs(dfs, v, u);
  }
  return found;
}


std::string SkeletonWitness::describe(const Graph& g) const {
  std::ostringstream os;
  os << (pass ? "skeleton" : "not a skeleton") << " k=" << k << "\n";
  for (const auto& p : paths) os << "  path " << join_vertices(p) << "\n";
  os << "  rich edges:";
  for (int i = 0; i < g.edge_count(); ++i)
    if ((rich_edges >> i) & 1) os << " " << g.edge(i).u << "-" << g.edge(i).v;
  os << "\n";
  static const char* names[9] = {"degree/connectivity", "leaf-paths",
                                 "rich-pairing",        "three-vertex",
                                 "outside-degree",      "outside-paths",
                                 "end-components",      "bipartite",
                                 "alternating-cycles"};
  for (int i = 0; i < 9; ++i) {
    os << "  [" << names[i] << "] " << (verdicts[i].pass ? "pass" : "FAIL");
    if (!verdicts[i].note.empty()) os << " — " << verdicts[i].note;
    os << "\n";
  }
  return os.str();
}

SkeletonWitness check_skeleton(const Graph& g, EdgeMask g_prime,
                               OutsideMatchingRule rule) {
  if (!g.fits_mask() || (g_prime & ~g.full_mask()) != 0)
    throw std::invalid_argument("candidate subgraph is not a subset of the edges");

  SkeletonWitness w;
  w.g_prime = EdgeSubset(g, g_prime);
  const int n = g.vertex_count();

  BasicQueries q = basic_queries(g);
  {
    auto& v = w.verdicts[0];
    v.pass = n >= 1 && q.connected && g.max_degree() <= 3;
    if (!v.pass)
      v.note = n < 1 ? "empty graph"
                     : (!q.connected ? "not connected" : "vertex of degree > 3");
  }

  // V' and the component structure of (V', E').
  w.in_v_prime.assign(n, 0);
  for (int i = 0; i < g.edge_count(); ++i)
    if ((g_prime >> i) & 1) {
      w.in_v_prime[g.edge(i).u] = 1;
      w.in_v_prime[g.edge(i).v] = 1;
    }
  ComponentCensus inner = components(g, g_prime);
  bool paths_ok = g_prime != 0;
  std::string paths_note = g_prime == 0 ? "no paths at all" : "";
  for (const Component& c : inner.components) {
    if (c.vertices.size() == 1 && !w.in_v_prime[c.vertices[0]]) continue;
    if (c.kind != Component::Kind::Path) {
      paths_ok = false;
      paths_note = "component is not a path";
      continue;
    }
    if (c.edge_count % 2 == 0 || c.edge_count < 5) {
      paths_ok = false;
      paths_note = "path " + join_vertices(c.vertices) + " has length " +
                   std::to_string(c.edge_count);
    } else if (g.degree(c.vertices.front()) != 1 ||
               g.degree(c.vertices.back()) != 1) {
      paths_ok = false;
      paths_note = "path " + join_vertices(c.vertices) + " does not join two leaves";
    }
    w.paths.push_back(c.vertices);
  }
  w.k = static_cast<int>(w.paths.size());
  w.verdicts[1] = {paths_ok, paths_note};

  // Rich edges: odd-position path edges whose endpoints are both 3-vertices.
  bool structure = paths_ok;  // later conditions need real paths
  {
    auto& v = w.verdicts[2];
    v.pass = true;
    if (!structure) {
      v = {false, "requires the leaf-path condition"};
    } else {
      for (const auto& p : w.paths) {
        auto es = path_edges(g, p);
        for (std::size_t j = 0; j < es.size(); ++j) {
          if (j % 2 != 0) continue;  // positions 1,3,5,...
          const Edge& e = g.edge(es[j]);
          int threes = (g.degree(e.u) == 3) + (g.degree(e.v) == 3);
          if (threes == 2) w.rich_edges |= EdgeMask{1} << es[j];
          if (threes == 1 && v.pass)
            v = {false, "odd edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " has exactly one 3-vertex"};
        }
      }
    }
  }
  w.g_double_prime = g.full_mask() & ~w.rich_edges;

  {  // Each path carries a 3-vertex.
    auto& v = w.verdicts[3];
    v.pass = structure;
    if (!structure) v.note = "requires the leaf-path condition";
    for (const auto& p : w.paths) {
      bool has3 = std::any_of(p.begin(), p.end(),
                              [&](int x) { return g.degree(x) == 3; });
      if (!has3) v = {false, "path " + join_vertices(p) + " has no 3-vertex"};
    }
  }

  {  // Outside vertices have degree <= 2.
    auto& v = w.verdicts[4];
    v.pass = true;
    for (int x = 0; x < n; ++x)
      if (!w.in_v_prime[x] && g.degree(x) > 2)
        v = {false, "outside vertex " + std::to_string(x) + " has degree " +
                        std::to_string(g.degree(x))};
  }

  // The graph induced outside V' must consist of odd paths.
  std::vector<int> outside;
  for (int x = 0; x < n; ++x)
    if (!w.in_v_prime[x]) outside.push_back(x);
  std::vector<int> dropped;
  for (int x = 0; x < n; ++x)
    if (w.in_v_prime[x]) dropped.push_back(x);
  InducedSubgraph rest = remove_vertices(g, dropped);
  ComponentCensus rest_census = components(rest.graph);
  bool outside_ok = true;
  std::string outside_note;
  std::vector<std::vector<int>> outside_paths;  // original labels
  for (const Component& c : rest_census.components) {
    std::vector<int> orig;
    for (int x : c.vertices) orig.push_back(rest.to_original[x]);
    if (c.kind != Component::Kind::Path || c.even()) {
      outside_ok = false;
      outside_note = "outside component " + join_vertices(orig) +
                     (c.kind == Component::Kind::Path ? " is an even path"
                                                      : " is not a path");
    } else {
      outside_paths.push_back(std::move(orig));
    }
  }
  w.verdicts[5] = {outside_ok, outside_note};

  {  // End-vertex components of G'' are exactly its even paths.
    auto& v = w.verdicts[6];
    if (!structure) {
      v = {false, "requires the leaf-path condition"};
    } else {
      v.pass = true;
      ComponentCensus gpp = components(g, w.g_double_prime);
      std::vector<int> comp_of(n, -1);
      for (int ci = 0; ci < static_cast<int>(gpp.components.size()); ++ci)
        for (int x : gpp.components[ci].vertices) comp_of[x] = ci;
      std::vector<char> wants_even(gpp.components.size(), 0);
      for (const auto& p : w.paths) {
        wants_even[comp_of[p.front()]] = 1;
        wants_even[comp_of[p.back()]] = 1;
      }
      for (int ci = 0; ci < static_cast<int>(gpp.components.size()); ++ci) {
        const Component& c = gpp.components[ci];
        bool is_even_path = c.kind == Component::Kind::Path && c.even();
        if (wants_even[ci] && !is_even_path)
          v = {false, "end-vertex component " + join_vertices(c.vertices) +
                          " is not an even path"};
        else if (!wants_even[ci] && is_even_path && c.edge_count > 0)
          v = {false, "stray even path " + join_vertices(c.vertices)};
        else if (!wants_even[ci] && is_even_path && c.edge_count == 0 &&
                 g.degree(c.vertices[0]) > 0)
          v = {false, "vertex " + std::to_string(c.vertices[0]) +
                          " isolated by rich-edge removal"};
      }
    }
  }

  {  // No odd cycles after removing the rich edges.
    auto& v = w.verdicts[7];
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.edge_count(); ++i)
      if ((w.g_double_prime >> i) & 1)
        es.push_back({g.edge(i).u, g.edge(i).v});
    BasicQueries qq = basic_queries(Graph(n, std::move(es)));
    v.pass = qq.bipartite;
    if (!v.pass) v.note = "odd cycle " + join_vertices(qq.odd_cycle);
  }

  {  // No cycle alternates between the decomposition matching and the rest.
    auto& v = w.verdicts[8];
    if (!structure || !outside_ok) {
      v = {false, "requires the path conditions"};
    } else {
      EdgeMask m_bits = 0;
      for (const auto& p : w.paths) {
        auto es = path_edges(g, p);
        for (std::size_t j = 0; j < es.size(); j += 2)
          m_bits |= EdgeMask{1} << es[j];
      }
      for (const auto& p : outside_paths) {
        auto es = path_edges(g, p);
        std::size_t start = rule == OutsideMatchingRule::OddEdges ? 0 : 1;
        for (std::size_t j = start; j < es.size(); j += 2)
          m_bits |= EdgeMask{1} << es[j];
      }
      if (!is_matching(g, m_bits)) {
        v = {false, "decomposition edges do not form a matching"};
      } else if (auto cyc = find_alternating_cycle(g, m_bits)) {
        v = {false, "alternating cycle " + join_vertices(*cyc)};
      } else {
        v.pass = true;
      }
    }
  }

  w.pass = std::all_of(w.verdicts.begin(), w.verdicts.end(),
                       [](const ConditionVerdict& c) { return c.pass; });
  return w;
}

// --- recognizer -----------------------------------------------------------

namespace {

// All simple leaf-to-leaf paths of odd length >= 5, as (vertex list, vertex
// mask, edge mask), deterministically ordered.
struct CandidatePath {
  std::vector<int> vertices;
  std::uint64_t vmask = 0;
  EdgeMask emask = 0;
};

std::vector<CandidatePath> leaf_paths(const Graph& g, BudgetMeter& meter) {
  std::vector<CandidatePath> out;
  std::vector<int> leaves;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) leaves.push_back(v);

  std::vector<int> cur;
  std::vector<char> on(g.vertex_count(), 0);
  auto dfs = [&](auto&& self, int v, int target) -> void {
    meter.tick();
    if (v == target) {
      int len = static_cast<int>(cur.size()) - 1;
      if (len >= 5 && len % 2 == 1) {
        CandidatePath p;
        p.vertices = cur;
        for (int x : cur) p.vmask |= std::uint64_t{1} << x;
        for (int ei : path_edges(g, cur)) p.emask |= EdgeMask{1} << ei;
        out.push_back(std::move(p));
      }
      return;
    }
    for (auto [w, ei] : g.adjacency(v)) {
      (void)ei;
      if (on[w]) continue;
      if (w != target && g.degree(w) == 1) continue;  // would strand a leaf
      on[w] = 1;
      cur.push_back(w);
      self(self, w, target);
      cur.pop_back();
      on[w] = 0;
    }
  };

  for (std::size_t a = 0; a < leaves.size(); ++a)
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      cur = {leaves[a]};
      std::fill(on.begin(), on.end(), 0);
      on[leaves[a]] = 1;
      dfs(dfs, leaves[a], leaves[b]);
    }
  std::sort(out.begin(), out.end(),
            [](const CandidatePath& x, const CandidatePath& y) {
              return std::pair(x.vertices.size(), x.vertices) <
                     std::pair(y.vertices.size(), y.vertices);
            });
  return out;
}

}  // namespace

SkeletonSearch find_skeleton_decomposition(const Graph& g,
                                           OutsideMatchingRule rule,
                                           const SearchBudget& budget) {
  SkeletonSearch result;
  if (g.vertex_count() == 0 || g.max_degree() > 3) {
    result.note = "degree or size precondition fails";
    return result;
  }
  BasicQueries q = basic_queries(g);
  if (!q.connected) {
    result.note = "not connected";
    return result;
  }
  if (q.leaves.size() < 2) {
    result.note = "fewer than two leaves";
    return result;
  }

  BudgetMeter meter(budget);
  std::vector<CandidatePath> candidates;
  try {
    candidates = leaf_paths(g, meter);
  } catch (const BudgetExceeded& e) {
    result.status = SkeletonSearch::Status::Unknown;
    result.note = e.what();
    return result;
  }
  if (candidates.empty()) {
    result.note = "no odd leaf-to-leaf path of length >= 5";
    return result;
  }

  // Fast path: the union of the long M-H alternating paths of a maximally
  // intersecting triple is the decomposition whenever one exists at all for
  // saturated graphs.
  try {
    int tried = 0;
    for_each_maximally_intersecting(g, budget, [&](const MatchingTriple& t) {
      EdgeMask cand = 0;
      for (const AlternatingChain& c : maximal_chains(g, t.m.bits(), t.pair.h.bits()))
        if (!c.cycle && c.length() >= 3)
          for (int ei : c.edges) cand |= EdgeMask{1} << ei;
      if (cand != 0) {
        SkeletonWitness w = check_skeleton(g, cand, rule);
        if (w.pass) {
          result.status = SkeletonSearch::Status::Found;
          result.witness = std::move(w);
          return false;
        }
      }
      return ++tried < 64;
    });
  } catch (const BudgetExceeded&) {
    // fall through to the exhaustive search
  }
  if (result.status == SkeletonSearch::Status::Found) return result;

  // Exhaustive search over unions of pairwise vertex-disjoint candidates,
  // by increasing path count.
  const int pc = static_cast<int>(candidates.size());
  std::vector<int> chosen;
  try {
    auto rec = [&](auto&& self, int from, std::uint64_t used, int want) -> bool {
      meter.tick();
      if (want == 0) {
        EdgeMask cand = 0;
        for (int idx : chosen) cand |= candidates[idx].emask;
        SkeletonWitness w = check_skeleton(g, cand, rule);
        if (w.pass) {
          result.status = SkeletonSearch::Status::Found;
          result.witness = std::move(w);
          return true;
        }
        return false;
      }
      for (int i = from; i + want <= pc; ++i) {
        if (candidates[i].vmask & used) continue;
        chosen.push_back(i);
        if (self(self, i + 1, used | candidates[i].vmask, want - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    for (int want = 1; want <= pc; ++want)
      if (rec(rec, 0, 0, want)) return result;
  } catch (const BudgetExceeded& e) {
    result.status = SkeletonSearch::Status::Unknown;
    result.note = e.what();
    return result;
  }
  result.status = SkeletonSearch::Status::Absent;
  result.note = "candidate space exhausted";
  return result;
}

// --- perfect matchings -------------------------------------------------------

PerfectMatchingReport perfect_matchings(const Graph& g, std::size_t cap) {
  PerfectMatchingReport out;
  const int n = g.vertex_count();
  if (n % 2 == 1) return out;
  if (!g.fits_mask() || n > 64)
    throw std::invalid_argument("perfect matching enumeration needs a small graph");

  std::uint64_t covered = 0;
  EdgeMask cur = 0;
  auto rec = [&](auto&& self) -> bool {
    int v = -1;
    for (int x = 0; x < n; ++x)
      if (!((covered >> x) & 1)) {
        v = x;
        break;
      }
    if (v < 0) {
      if (out.matchings.size() >= cap) {
        out.overflowed = true;
        return false;
      }
      out.matchings.emplace_back(g, cur);
      return true;
    }
    for (auto [w, ei] : g.adjacency(v)) {
      if ((covered >> w) & 1) continue;
      covered |= (std::uint64_t{1} << v) | (std::uint64_t{1} << w);
      cur |= EdgeMask{1} << ei;
      bool keep = self(self);
      covered &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
      cur &= ~(EdgeMask{1} << ei);
      if (!keep) return false;
    }
    return true;
  };
  if (n > 0) rec(rec);
  else out.matchings.emplace_back(g, 0);
  out.unique_perfect = out.matchings.size() == 1 && !out.overflowed;
  return out;
}

// --- the explicit triple -------------------------------------------------------

SkeletonMatchings skeleton_matchings(const Graph& g, const SkeletonWitness& w) {
  if (!w.pass) throw std::invalid_argument("witness does not pass all conditions");
  auto complain = [&](const std::string& why) {
    throw std::logic_error("skeleton triple construction failed (" + why +
                           "): " + to_graph6(g));
  };

  EdgeMask mb = 0, hb = 0, hpb = 0;
  for (const auto& p : w.paths) {
    auto es = path_edges(g, p);
    for (std::size_t j = 0; j < es.size(); ++j) {
      EdgeMask bit = EdgeMask{1} << es[j];
      if (j % 2 == 0) {  // odd positions: matching edges; non-rich ones to H'
        mb |= bit;
        if (!((w.rich_edges >> es[j]) & 1)) hpb |= bit;
      } else {
        hb |= bit;
      }
    }
  }
  // Outside V': odd paths; odd positions to M and H, even positions to H'.
  std::vector<int> dropped;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (w.in_v_prime[x]) dropped.push_back(x);
  InducedSubgraph rest = remove_vertices(g, dropped);
  EdgeMask outside_edges = 0;
  for (const Component& c : components(rest.graph).components) {
    std::vector<int> orig;
    for (int x : c.vertices) orig.push_back(rest.to_original[x]);
    auto es = path_edges(g, orig);
    for (std::size_t j = 0; j < es.size(); ++j) {
      EdgeMask bit = EdgeMask{1} << es[j];
      outside_edges |= bit;
      if (j % 2 == 0) {
        mb |= bit;
        hb |= bit;
      } else {
        hpb |= bit;
      }
    }
  }
  // Everything crossing between V' and the outside (or joining V' vertices
  // off the decomposition paths) goes to H'.
  hpb |= g.full_mask() & ~w.g_prime.bits & ~outside_edges;

  if (!is_matching(g, mb)) complain("M is not a matching");
  if (!is_matching(g, hb)) complain("H is not a matching");
  if (!is_matching(g, hpb)) complain("H' is not a matching");
  if ((hb & hpb) != 0) complain("H and H' intersect");
  if ((mb | hb | hpb) != g.full_mask()) complain("triple misses edges");
  if (2 * std::popcount(mb) != g.vertex_count()) complain("M is not perfect");
  PerfectMatchingReport pm = perfect_matchings(g, 2);
  if (!pm.unique_perfect || pm.matchings[0].bits() != mb)
    complain("perfect matching is not unique");
  if (std::popcount(mb) - std::popcount(hb) != w.k)
    complain("|M| - |H| differs from the path count");
  DisjointPair pair(g, hb, hpb);
  if (!saturation(g, pair).all_saturated) complain("unsaturated vertex");

  SkeletonMatchings out;
  out.m = Matching(g, mb);
  out.h = pair.h;
  out.h_prime = pair.h_prime;
  return out;
}

// --- the two directions ---------------------------------------------------------

TheoremReport verify_skeleton_theorems(const Graph& g, OutsideMatchingRule rule,
                                       const SearchBudget& budget) {
  TheoremReport r;
  SkeletonSearch found = find_skeleton_decomposition(g, rule, budget);
  if (found.status == SkeletonSearch::Status::Unknown) {
    r.skipped = true;
    r.skip_reason = found.note;
    return r;
  }
  int nu = 0, mu = 0;
  SaturationReport sat;
  try {
    nu = max_matching_size(g);
    mu = mu_and_pairs(g, 1, budget).mu;
    bool need_sat = found.status == SkeletonSearch::Status::Found || mu < nu;
    if (need_sat) sat = is_saturated(g, budget);
  } catch (const BudgetExceeded& e) {
    r.skipped = true;
    r.skip_reason = e.what();
    return r;
  }

  if (found.status == SkeletonSearch::Status::Found) {
    r.recognized_gap.applicable = true;
    int k = found.witness->k;
    if (nu - mu != k) {
      r.recognized_gap.pass = false;
      r.recognized_gap.detail = "recognized k=" + std::to_string(k) +
                                " but nu-mu=" + std::to_string(nu - mu);
    }
    if (!sat.saturated) {
      r.recognized_gap.pass = false;
      r.recognized_gap.detail += std::string(r.recognized_gap.detail.empty() ? "" : "; ") +
                                 "recognized skeleton is not saturated";
    }
  }
  if (nu > 0 && mu < nu && sat.saturated) {
    r.gap_recognized.applicable = true;
    if (found.status != SkeletonSearch::Status::Found) {
      r.gap_recognized.pass = false;
      r.gap_recognized.detail = "saturated graph with mu < nu not recognized";
    } else if (found.witness->k != nu - mu) {
      r.gap_recognized.pass = false;
      r.gap_recognized.detail = "recognized k=" + std::to_string(found.witness->k) +
                                " but nu-mu=" + std::to_string(nu - mu);
    }
  }
  return r;
}

// --- generators ---------------------------------------------------------------

Graph generate_spanner() {
  Graph g(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
               {2, 6}, {6, 7}, {3, 8}, {8, 9}});
  ParamReport r = param_report(g);
  if (r.nu != 5 || r.lambda != 8 || r.mu != 4 || r.mu_prime != 4)
    throw std::logic_error("spanner construction failed its parameter check");
  return g;
}

Graph generate_k_skeleton(int k, unsigned seed) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > 4) throw std::invalid_argument("k > 4 exceeds the 64-edge solver limit");

  std::mt19937 rng(seed);
  auto coin = [&] { return static_cast<int>(rng() & 1); };

  int next = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> path_vertices(k);
  // Per path: slots that take a pendant, the slot that starts the connector
  // to the next path, and the slot receiving the previous connector.
  std::vector<std::vector<int>> pendant_slots(k);
  std::vector<int> forward_slot(k, -1), receive_slot(k, -1);

  for (int i = 0; i < k; ++i) {
    int len = i == 0 ? 5 : 7;
    std::vector<int>& pv = path_vertices[i];
    for (int j = 0; j <= len; ++j) pv.push_back(next++);
    for (int j = 0; j < len; ++j) edges.push_back({pv[j], pv[j + 1]});
    if (i == 0) {
      if (k == 1) {
        pendant_slots[i] = {pv[2], pv[3]};
      } else {
        bool fwd_low = coin();
        forward_slot[i] = fwd_low ? pv[2] : pv[3];
        pendant_slots[i] = {fwd_low ? pv[3] : pv[2]};
      }
    } else {
      // Length-7 path: ends pair with slots {v2, v5}, middle with {v3, v4}.
      bool recv_low = coin();
      receive_slot[i] = recv_low ? pv[3] : pv[4];
      pendant_slots[i].push_back(recv_low ? pv[4] : pv[3]);
      if (i + 1 < k) {
        bool fwd_low = coin();
        forward_slot[i] = fwd_low ? pv[2] : pv[5];
        pendant_slots[i].push_back(fwd_low ? pv[5] : pv[2]);
      } else {
        pendant_slots[i].push_back(pv[2]);
        pendant_slots[i].push_back(pv[5]);
      }
      std::sort(pendant_slots[i].begin(), pendant_slots[i].end());
    }
  }
  // Attachments, in path order: first the connector onward, then pendants.
  for (int i = 0; i < k; ++i) {
    if (forward_slot[i] >= 0) {
      int x = next++, y = next++;
      edges.push_back({forward_slot[i], x});
      edges.push_back({x, y});
      edges.push_back({y, receive_slot[i + 1]});
    }
    for (int s : pendant_slots[i]) {
      int a = next++, b = next++;
      edges.push_back({s, a});
      edges.push_back({a, b});
    }
  }

  Graph g(next, std::move(edges));
  EdgeMask gp = 0;
  for (const auto& pv : path_vertices)
    for (int ei : path_edges(g, pv)) gp |= EdgeMask{1} << ei;
  SkeletonWitness w = check_skeleton(g, gp, OutsideMatchingRule::OddEdges);
  if (!w.pass || w.k != k)
    throw std::logic_error("generated graph failed validation:\n" + w.describe(g));
  return g;
}

}  // namespace pdm

#include "pdm/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace pdm {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_pairs) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  n_ = vertex_count;
  edges_.reserve(edge_pairs.size());
  for (auto& [a, b] : edge_pairs) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("duplicate edge");

  adj_.assign(n_, {});
  for (int i = 0; i < edge_count(); ++i) {
    adj_[edges_[i].u].push_back({edges_[i].v, i});
    adj_[edges_[i].v].push_back({edges_[i].u, i});
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  if (fits_mask()) {
    incident_.assign(n_, 0);
    for (int i = 0; i < edge_count(); ++i) {
      incident_[edges_[i].u] |= EdgeMask{1} << i;
      incident_[edges_[i].v] |= EdgeMask{1} << i;
    }
  }
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), std::pair(v, -1));
  if (it != a.end() && it->first == v) return it->second;
  return -1;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

EdgeMask Graph::full_mask() const {
  if (!fits_mask()) throw std::logic_error("graph too large for edge masks");
  int m = edge_count();
  return m == 64 ? ~EdgeMask{0} : (EdgeMask{1} << m) - 1;
}

EdgeMask Graph::incident_mask(int v) const {
  if (!fits_mask()) throw std::logic_error("graph too large for edge masks");
  return incident_[v];
}

int EdgeSubset::size() const { return std::popcount(bits); }

std::vector<Edge> EdgeSubset::edge_list() const {
  std::vector<Edge> out;
  for (int i = 0; i < graph->edge_count(); ++i)
    if (contains(i)) out.push_back(graph->edge(i));
  return out;
}

bool EdgeSubset::valid() const {
  return graph != nullptr && graph->fits_mask() && (bits & ~graph->full_mask()) == 0;
}

// --- graph6 ---------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

[[noreturn]] void g6_fail(const std::string& msg, long byte) {
  std::ostringstream os;
  os << "graph6: " << msg << " (byte " << byte << ")";
  throw ParseError(os.str(), byte);
}

int g6_value(std::string_view s, std::size_t i) {
  if (i >= s.size()) g6_fail("unexpected end of input", static_cast<long>(s.size()));
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) g6_fail("character out of range", static_cast<long>(i));
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  if (pos == line.size()) g6_fail("empty encoding", static_cast<long>(pos));

  long long n = 0;
  int first = g6_value(line, pos);
  if (first < 63) {
    n = first;
    ++pos;
  } else {
    // '~' escape: 18-bit or 36-bit vertex count.
    ++pos;
    int second = g6_value(line, pos);
    int words = 3;
    if (second == 63) {
      ++pos;
      words = 6;
    }
    for (int i = 0; i < words; ++i) n = (n << 6) | g6_value(line, pos + i);
    pos += words;
    if (n > 1'000'000) g6_fail("vertex count too large for this tool", static_cast<long>(pos));
  }

  const long long bit_total = n * (n - 1) / 2;
  const std::size_t chunk_count = static_cast<std::size_t>((bit_total + 5) / 6);
  if (line.size() < pos + chunk_count)
    g6_fail("encoding shorter than vertex count requires", static_cast<long>(line.size()));
  if (line.size() > pos + chunk_count)
    g6_fail("trailing garbage after encoding", static_cast<long>(pos + chunk_count));

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int chunk = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (bit % 6 == 0) chunk = g6_value(line, pos + static_cast<std::size_t>(bit / 6));
      if ((chunk >> (5 - bit % 6)) & 1) edges.push_back({u, v});
    }
  }
  // The final chunk must be zero-padded.
  if (bit_total % 6 != 0) {
    int pad = chunk & ((1 << (6 - bit_total % 6)) - 1);
    if (pad != 0) g6_fail("nonzero padding bits", static_cast<long>(pos + chunk_count - 1));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  std::string out;
  long long n = g.vertex_count();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for graph6 output");
  }
  int chunk = 0, fill = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = fill = 0;
      }
    }
  }
  if (fill > 0) out.push_back(static_cast<char>((chunk << (6 - fill)) + 63));
  return out;
}

// --- edge list ------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  auto fail = [&](const std::string& msg) -> void {
    std::ostringstream os;
    os << "edge list: " << msg << " (line " << line_no << ")";
    throw ParseError(os.str(), line_no);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n" || n < 0) fail("expected header \"n <count>\"");
    } else {
      int u, v;
      if (!(ls >> u >> v)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        fail("expected \"u v\"");
      }
      if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
      if (u == v) fail("self-loop");
      auto e = std::pair(std::min(u, v), std::max(u, v));
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) fail("duplicate edge");
      edges.push_back(e);
    }
    std::string rest;
    if (ls >> rest) fail("trailing tokens");
  }
  if (n < 0) {
    line_no = 1;
    fail("missing header");
  }
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

// --- components -----------------------------------------------------------

ComponentCensus components(const Graph& g, EdgeMask subset) {
  const int n = g.vertex_count();
  std::vector<int> deg(n, 0);
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!((subset >> i) & 1)) continue;
    const Edge& e = g.edge(i);
    nbr[e.u].push_back(e.v);
    nbr[e.v].push_back(e.u);
    ++deg[e.u];
    ++deg[e.v];
  }
  for (auto& a : nbr) std::sort(a.begin(), a.end());

  ComponentCensus census;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // Gather the component.
    std::vector<int> stack{start}, verts;
    seen[start] = 1;
    int edges2 = 0;  // doubled edge count
    int branch = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      edges2 += deg[v];
      if (deg[v] >= 3 && branch < 0) branch = v;
      for (int w : nbr[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    Component comp;
    comp.edge_count = edges2 / 2;
    if (branch >= 0) {
      comp.kind = Component::Kind::Other;
      comp.branch_vertex = branch;
      std::sort(verts.begin(), verts.end());
      comp.vertices = std::move(verts);
      ++census.others;
    } else if (comp.edge_count == static_cast<int>(verts.size())) {
      // All degrees are 2: a cycle. Canonical form: start at the minimum
      // vertex, head toward its smaller neighbor.
      comp.kind = Component::Kind::Cycle;
      int v0 = *std::min_element(verts.begin(), verts.end());
      std::vector<int> order{v0};
      int prev = v0, cur = nbr[v0][0];
      while (cur != v0) {
        order.push_back(cur);
        int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = next;
      }
      comp.vertices = std::move(order);
      (comp.even() ? census.even_cycles : census.odd_cycles)++;
    } else {
      // A path; walk it from its smaller endpoint.
      comp.kind = Component::Kind::Path;
      int end = -1;
      for (int v : verts)
        if (deg[v] <= 1) end = std::min(end < 0 ? v : end, v);
      std::vector<int> order{end};
      int prev = -1, cur = end;
      while (static_cast<int>(order.size()) <= comp.edge_count) {
        int next = -1;
        for (int w : nbr[cur])
          if (w != prev) {
            next = w;
            break;
          }
        if (next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
      }
      if (order.front() > order.back()) std::reverse(order.begin(), order.end());
      comp.vertices = std::move(order);
      (comp.even() ? census.even_paths : census.odd_paths)++;
    }
    census.components.push_back(std::move(comp));
  }
  return census;
}

ComponentCensus components(const Graph& g) {
  if (g.fits_mask()) return components(g, g.full_mask());
  // Large graphs: same walk, mask replaced by "all edges".
  EdgeMask all = ~EdgeMask{0};
  if (g.edge_count() > 64)
    throw std::logic_error("component census requires at most 64 edges");
  return components(g, all);
}

// --- basic queries ----------------------------------------------------------

BasicQueries basic_queries(const Graph& g) {
  const int n = g.vertex_count();
  BasicQueries q;
  q.degrees.resize(n);
  for (int v = 0; v < n; ++v) {
    q.degrees[v] = g.degree(v);
    if (q.degrees[v] == 1) q.leaves.push_back(v);
  }

  q.side.assign(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);
  q.bipartite = true;
  for (int s = 0; s < n && q.odd_cycle.empty(); ++s) {
    if (q.side[s] >= 0) continue;
    q.side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size() && q.odd_cycle.empty(); ++head) {
      int v = queue[head];
      for (auto [w, ei] : g.adjacency(v)) {
        (void)ei;
        if (q.side[w] < 0) {
          q.side[w] = q.side[v] ^ 1;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (q.side[w] == q.side[v]) {
          // Same side: edge (v,w) closes an odd cycle through the BFS tree.
          q.bipartite = false;
          int a = v, b = w;
          std::vector<int> pa{a}, pb{b};
          while (depth[a] > depth[b]) pa.push_back(a = parent[a]);
          while (depth[b] > depth[a]) pb.push_back(b = parent[b]);
          while (a != b) {
            pa.push_back(a = parent[a]);
            pb.push_back(b = parent[b]);
          }
          q.odd_cycle.assign(pa.begin(), pa.end());
          for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it)
            q.odd_cycle.push_back(*it);
          break;
        }
      }
    }
  }
  if (!q.bipartite) q.side.clear();

  // Connectivity via a plain sweep (the coloring loop may stop early on an
  // odd cycle).
  if (n == 0) {
    q.connected = true;
  } else {
    std::vector<char> mark(n, 0);
    std::vector<int> stack{0};
    mark[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, ei] : g.adjacency(v)) {
        (void)ei;
        if (!mark[w]) {
          mark[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
      }
    }
    q.connected = (cnt == n);
  }
  return q;
}

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& drop) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (int v : drop) {
    if (v < 0 || v >= n) throw std::invalid_argument("remove_vertices: vertex out of range");
    gone[v] = 1;
  }
  InducedSubgraph out;
  std::vector<int> to_new(n, -1);
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      to_new[v] = static_cast<int>(out.to_original.size());
      out.to_original.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) edges.push_back({to_new[e.u], to_new[e.v]});
  out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(edges));
  return out;
}

}  // namespace pdm

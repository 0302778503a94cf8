#include "sip3/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sip3 {

int popcount(VertexSet s) { return std::popcount(s); }

int lowest_vertex(VertexSet s) {
  if (s == 0) throw graph_error("lowest_vertex: empty set");
  return std::countr_zero(s);
}

std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet from_vector(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

Graph::Graph(int n, const std::vector<VertexPair>& edges) : n_(n) {
  if (n < 0) throw graph_error("Graph: negative vertex count");
  if (n > 64) throw graph_error("Graph: at most 64 vertices supported");
  adj_.assign(n, 0);
  std::set<VertexPair> seen;
  for (const auto& e : edges) {
    if (e.b >= n) throw graph_error("Graph: vertex id out of range");
    if (!seen.insert(e).second) throw graph_error("Graph: duplicate edge");
    adj_[e.a] |= bit(e.b);
    adj_[e.b] |= bit(e.a);
  }
  edges_.assign(seen.begin(), seen.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw graph_error("has_edge: vertex id out of range");
  return contains(adj_[u], v);
}

VertexSet Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw graph_error("neighbors: vertex id out of range");
  return adj_[v];
}

VertexSet Graph::all_vertices() const {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

Graph Graph::with_edge(const VertexPair& p) const {
  std::vector<VertexPair> es = edges_;
  if (!has_edge(p)) es.push_back(p);
  return Graph(n_, es);
}

Graph Graph::with_edges(const std::vector<VertexPair>& ps) const {
  std::vector<VertexPair> es = edges_;
  for (const auto& p : ps)
    if (!has_edge(p)) es.push_back(p);
  return Graph(n_, es);
}

Graph Graph::without_edge(const VertexPair& p) const {
  std::vector<VertexPair> es;
  for (const auto& e : edges_)
    if (!(e == p)) es.push_back(e);
  return Graph(n_, es);
}

bool Graph::is_connected() const { return is_connected_within(all_vertices()); }

bool Graph::is_connected_within(VertexSet sub) const {
  if (sub == 0) return true;
  VertexSet reached = bit(lowest_vertex(sub));
  for (;;) {
    VertexSet frontier = 0;
    for (int v : to_vector(reached)) frontier |= adj_[v];
    frontier &= sub & ~reached;
    if (frontier == 0) break;
    reached |= frontier;
  }
  return reached == sub;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : to_vector(s))
    if ((adj_[v] & s) != (s & ~bit(v))) return false;
  return true;
}

bool Graph::is_complete() const { return is_clique(all_vertices()); }

std::vector<VertexSet> Graph::components() const {
  return components_within(all_vertices());
}

std::vector<VertexSet> Graph::components_within(VertexSet sub) const {
  std::vector<VertexSet> out;
  VertexSet rest = sub;
  while (rest) {
    VertexSet comp = bit(lowest_vertex(rest));
    for (;;) {
      VertexSet frontier = 0;
      for (int v : to_vector(comp)) frontier |= adj_[v];
      frontier &= sub & ~comp;
      if (frontier == 0) break;
      comp |= frontier;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

VertexSet Graph::open_neighborhood(VertexSet s) const {
  VertexSet nb = 0;
  for (int v : to_vector(s)) nb |= adj_[v];
  return nb & ~s;
}

std::optional<int> InducedSubgraph::to_local(int host_vertex) const {
  for (size_t i = 0; i < to_host.size(); i++)
    if (to_host[i] == host_vertex) return static_cast<int>(i);
  return std::nullopt;
}

Graph build_graph(int n, const std::vector<VertexPair>& edges) {
  return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet u) {
  if ((u & ~g.all_vertices()) != 0)
    throw graph_error("induced_subgraph: vertex id out of range");
  std::vector<int> to_host = to_vector(u);
  std::vector<int> to_local(g.vertex_count(), -1);
  for (size_t i = 0; i < to_host.size(); i++) to_local[to_host[i]] = (int)i;
  std::vector<VertexPair> es;
  for (const auto& e : g.edges())
    if (contains(u, e.a) && contains(u, e.b))
      es.emplace_back(to_local[e.a], to_local[e.b]);
  return InducedSubgraph{Graph((int)to_host.size(), es), std::move(to_host)};
}

std::vector<VertexSet> u_component_sets(const Graph& g, VertexSet u) {
  if ((u & ~g.all_vertices()) != 0)
    throw graph_error("u_components: vertex id out of range");
  VertexSet rest = g.all_vertices() & ~u;
  if (rest == 0) return {g.all_vertices() & u ? u : VertexSet{0}};
  std::vector<VertexSet> comps = g.components_within(rest);
  std::vector<VertexSet> out;
  for (VertexSet c : comps) out.push_back(c | u);
  return out;
}

std::vector<InducedSubgraph> u_components(const Graph& g, VertexSet u) {
  std::vector<InducedSubgraph> out;
  for (VertexSet s : u_component_sets(g, u))
    out.push_back(induced_subgraph(g, s));
  return out;
}

namespace {

bool separates(const Graph& g, VertexSet sep, int u, int v) {
  if (contains(sep, u) || contains(sep, v)) return false;
  VertexSet sub = g.all_vertices() & ~sep;
  VertexSet reached = bit(u);
  for (;;) {
    VertexSet frontier = 0;
    for (int w : to_vector(reached)) frontier |= g.neighbors(w);
    frontier &= sub & ~reached;
    if (frontier == 0) break;
    reached |= frontier;
  }
  return !contains(reached, v);
}

}  // namespace

std::vector<VertexSet> all_minimal_pair_separators(const Graph& g0, int u,
                                                   int v) {
  if (u == v) throw graph_error("separators: u = v");
  if (u < 0 || v < 0 || u >= g0.vertex_count() || v >= g0.vertex_count())
    throw graph_error("separators: vertex id out of range");
  Graph g = g0.has_edge(u, v) ? g0.without_edge(VertexPair(u, v)) : g0;

  // Already separated: the empty set is the unique minimal separator.
  if (separates(g, 0, u, v)) return {0};

  // Berry--Bordat--Cogis generation of every minimal separator: seed with
  // the component neighborhoods of G minus each closed neighborhood, expand
  // a candidate S by absorbing N(x) for each x in S and taking component
  // neighborhoods again.
  auto component_neighborhoods = [&](VertexSet removed) {
    std::vector<VertexSet> out;
    for (VertexSet c : g.components_within(g.all_vertices() & ~removed))
      out.push_back(g.open_neighborhood(c));
    return out;
  };
  std::set<VertexSet> seen;
  std::vector<VertexSet> queue;
  auto push = [&](VertexSet s) {
    if (s != 0 && seen.insert(s).second) queue.push_back(s);
  };
  for (int x = 0; x < g.vertex_count(); ++x)
    for (VertexSet s : component_neighborhoods(bit(x) | g.neighbors(x)))
      push(s);
  while (!queue.empty()) {
    VertexSet s = queue.back();
    queue.pop_back();
    for (int x : to_vector(s))
      for (VertexSet t : component_neighborhoods(s | g.neighbors(x)))
        push(t);
  }

  // Keep the minimal uv-separators: u and v in distinct components of
  // G minus S, both components full (neighborhood exactly S).
  std::vector<VertexSet> out;
  for (VertexSet s : seen) {
    if (contains(s, u) || contains(s, v)) continue;
    VertexSet cu = 0, cv = 0;
    for (VertexSet c : g.components_within(g.all_vertices() & ~s)) {
      if (contains(c, u)) cu = c;
      if (contains(c, v)) cv = c;
    }
    if (cu == cv) continue;
    if (g.open_neighborhood(cu) == s && g.open_neighborhood(cv) == s)
      out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> minimal_pair_separators(const Graph& g, int u, int v,
                                               int max_size) {
  std::vector<VertexSet> out;
  for (VertexSet s : all_minimal_pair_separators(g, u, v))
    if (popcount(s) <= max_size) out.push_back(s);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return to_vector(a) < to_vector(b);
  });
  return out;
}

int vertex_connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw graph_error("vertex_connectivity: empty graph");
  if (n == 1) return 0;
  if (!g.is_connected()) return 0;
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      if (g.has_edge(u, v)) continue;
      for (VertexSet s : all_minimal_pair_separators(g, u, v))
        best = std::min(best, popcount(s));
    }
  return best;
}

}  // namespace sip3

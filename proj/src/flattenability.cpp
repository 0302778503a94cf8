#include "sip3/flattenability.hpp"

#include "sip3/patterns.hpp"

#include <algorithm>

namespace sip3 {

bool is_d_flattenable(const Graph& g, int d, long long budget) {
  switch (d) {
    case 1:
      return !has_minor(g, patterns::k3(), budget);
    case 2:
      return !has_minor(g, patterns::k4(), budget);
    case 3:
      return !has_minor(g, patterns::k5(), budget) &&
             !has_minor(g, patterns::k222(), budget);
    default:
      throw graph_error("is_d_flattenable: d must be 1, 2, or 3");
  }
}

bool is_partial_3_tree(const Graph& g, long long budget) {
  // Increasing pattern size with early exit.
  return !has_minor(g, patterns::k5(), budget) &&
         !has_minor(g, patterns::k222(), budget) &&
         !has_minor(g, patterns::v8(), budget) &&
         !has_minor(g, patterns::c5xc2(), budget);
}

bool is_3_tree(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  std::vector<bool> removed(n, false);
  int remaining = n;
  while (remaining > 4) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; v++) {
      if (removed[v]) continue;
      VertexSet nb = g.neighbors(v);
      for (int u = 0; u < n; u++)
        if (removed[u]) nb &= ~bit(u);
      if (popcount(nb) == 3 && g.is_clique(nb)) pick = v;
    }
    if (pick < 0) return false;
    removed[pick] = true;
    remaining--;
  }
  // Remaining four vertices must induce K4.
  VertexSet rest = 0;
  for (int v = 0; v < n; v++)
    if (!removed[v]) rest |= bit(v);
  auto sub = induced_subgraph(g, rest);
  return sub.graph.is_complete() && sub.graph.vertex_count() == 4;
}

int treewidth(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 20) throw graph_error("treewidth: graph too large for subset DP");
  // q(S, v): neighbors of v reachable through S, i.e. back-degree of v when
  // eliminated after S.
  auto q = [&](VertexSet s, int v) {
    VertexSet reach = bit(v);
    for (;;) {
      VertexSet frontier = 0;
      for (int w : to_vector(reach)) frontier |= g.neighbors(w);
      VertexSet grow = frontier & s & ~reach;
      if (grow == 0) return popcount(frontier & ~s & ~bit(v));
      reach |= grow;
    }
  };
  VertexSet full = g.all_vertices();
  std::vector<int> tw(size_t(1) << n, 0);
  for (VertexSet s = 1; s <= full; s++) {
    int best = n;
    for (int v : to_vector(s)) {
      VertexSet rest = s & ~bit(v);
      best = std::min(best, std::max(tw[rest], q(rest, v)));
    }
    tw[s] = best;
  }
  return tw[full];
}

bool treewidth_at_most(const Graph& g, int k) { return treewidth(g) <= k; }

StarTheoremReport check_star_theorem(const Graph& g, int w,
                                     const std::vector<int>& leaves,
                                     long long budget) {
  std::vector<VertexPair> star;
  for (int u : leaves) {
    VertexPair p(w, u);
    if (g.has_edge(p))
      throw graph_error("check_star_theorem: wu_i is already an edge");
    star.push_back(p);
  }
  StarTheoremReport r;
  r.hypothesis_g_3connected = vertex_connectivity(g) >= 3;
  r.hypothesis_g_p3t = is_partial_3_tree(g, budget);
  r.hypothesis_each_edge_p3t = true;
  for (const auto& p : star)
    if (!is_partial_3_tree(g.with_edge(p), budget))
      r.hypothesis_each_edge_p3t = false;
  r.conclusion_p3t = is_partial_3_tree(g.with_edges(star), budget);
  return r;
}

}  // namespace sip3

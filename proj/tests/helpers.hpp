#pragma once

#include "sip3/graph.hpp"
#include "sip3/linkage.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace sip3::testing {

/// Edge bitmask over the C(n,2) pairs in lexicographic order; n <= 8 only.
inline std::uint64_t edge_mask(const Graph& g) {
  std::uint64_t mask = 0;
  int idx = 0;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b, ++idx)
      if (g.has_edge(a, b)) mask |= std::uint64_t{1} << idx;
  return mask;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<VertexPair> edges;
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++idx)
      if ((mask >> idx) & 1) edges.emplace_back(a, b);
  return build_graph(n, edges);
}

/// Minimum edge mask over all vertex relabelings: an isomorphism invariant.
inline std::uint64_t canonical_key(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    int idx = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b, ++idx)
        if (g.has_edge(perm[static_cast<size_t>(a)],
                       perm[static_cast<size_t>(b)]))
          mask |= std::uint64_t{1} << idx;
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// All labeled connected graphs on exactly n vertices.
inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  int m = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

/// One representative per isomorphism class of connected graphs on exactly n
/// vertices, built by vertex augmentation from the (n-1)-vertex classes.
inline std::vector<Graph> connected_class_reps(int n) {
  std::vector<Graph> reps = {build_graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> next;
    for (const Graph& g : reps) {
      for (std::uint64_t nb = 1; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        std::vector<VertexPair> edges = g.edges();
        for (int v = 0; v < k - 1; ++v)
          if ((nb >> v) & 1) edges.emplace_back(v, k - 1);
        Graph h = build_graph(k, edges);
        if (seen.insert(canonical_key(h)).second) next.push_back(std::move(h));
      }
    }
    reps = std::move(next);
  }
  return reps;
}

/// Random 3-tree: K4 plus simplicial vertices over random triangles.
inline Graph random_3tree(int n, std::mt19937_64& rng) {
  std::vector<VertexPair> edges = {{0, 1}, {0, 2}, {0, 3},
                                   {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<int, 3>> triangles = {
      {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int v = 4; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick(0, triangles.size() - 1);
    auto tri = triangles[pick(rng)];
    for (int u : tri) edges.emplace_back(u, v);
    triangles.push_back({tri[0], tri[1], v});
    triangles.push_back({tri[0], tri[2], v});
    triangles.push_back({tri[1], tri[2], v});
  }
  return build_graph(n, edges);
}

/// Random connected chordal graph: each vertex attaches to a random nonempty
/// subset of a random existing clique.
inline Graph random_chordal(int n, std::mt19937_64& rng) {
  std::vector<VertexPair> edges;
  std::vector<std::vector<int>> cliques = {{0}};
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);
    const std::vector<int>& c = cliques[pick(rng)];
    std::uniform_int_distribution<std::uint64_t> subset(
        1, (std::uint64_t{1} << c.size()) - 1);
    std::uint64_t s = subset(rng);
    std::vector<int> attached;
    for (size_t i = 0; i < c.size(); ++i)
      if ((s >> i) & 1) {
        edges.emplace_back(c[i], v);
        attached.push_back(c[i]);
      }
    attached.push_back(v);
    cliques.push_back(std::move(attached));
  }
  return build_graph(n, edges);
}

/// Random lengths in [0.5, 4] for every edge of g.
inline Linkage random_linkage(const Graph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.5, 4.0);
  std::vector<double> len2;
  for (int i = 0; i < g.edge_count(); ++i) len2.push_back(u(rng));
  return make_linkage(g, std::move(len2));
}

/// All maximal cliques by subset brute force (n <= 16).
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> cliques;
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s)
    if (g.is_clique(s)) cliques.push_back(s);
  std::vector<VertexSet> maximal;
  for (VertexSet s : cliques) {
    bool is_max = true;
    for (VertexSet t : cliques)
      if (t != s && (s & ~t) == 0) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  return maximal;
}

/// Relabel g by a permutation: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<VertexPair> edges;
  for (const VertexPair& e : g.edges())
    edges.emplace_back(perm[static_cast<size_t>(e.a)],
                       perm[static_cast<size_t>(e.b)]);
  return build_graph(g.vertex_count(), edges);
}

}  // namespace sip3::testing

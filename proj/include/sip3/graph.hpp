#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sip3 {

/// Error thrown on malformed graph construction or invalid arguments.
struct graph_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Unordered pair of distinct vertex ids.
struct VertexPair {
  int a, b;

  VertexPair(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw graph_error("VertexPair: endpoints must be distinct");
    if (u < 0 || v < 0) throw graph_error("VertexPair: negative vertex id");
  }

  bool operator==(const VertexPair& o) const { return a == o.a && b == o.b; }
  bool operator<(const VertexPair& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

using VertexSet = std::uint64_t;  // bitmask over vertex ids 0..63

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }
int popcount(VertexSet s);
int lowest_vertex(VertexSet s);
std::vector<int> to_vector(VertexSet s);
VertexSet from_vector(const std::vector<int>& vs);

/// Immutable finite simple undirected graph on vertices 0..n-1.
/// Limited to 64 vertices; every algorithm here is exhaustive at desk scale.
class Graph {
 public:
  Graph(int n, const std::vector<VertexPair>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexPair>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  bool has_edge(const VertexPair& p) const { return has_edge(p.a, p.b); }
  VertexSet neighbors(int v) const;
  int degree(int v) const { return popcount(adj_[v]); }
  VertexSet all_vertices() const;

  /// New graph with one extra edge (or unchanged edges replaced).
  Graph with_edge(const VertexPair& p) const;
  Graph with_edges(const std::vector<VertexPair>& ps) const;
  Graph without_edge(const VertexPair& p) const;

  bool is_connected() const;
  bool is_connected_within(VertexSet sub) const;
  bool is_clique(VertexSet s) const;
  bool is_complete() const;

  /// Connected components as vertex sets.
  std::vector<VertexSet> components() const;
  /// Components of the subgraph induced by `sub`.
  std::vector<VertexSet> components_within(VertexSet sub) const;

  /// Vertices outside `s` adjacent to something in `s`.
  VertexSet open_neighborhood(VertexSet s) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_;
  std::vector<VertexPair> edges_;   // sorted, canonical
  std::vector<VertexSet> adj_;
};

/// Induced subgraph on U together with the map new-id -> old-id.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;  // new vertex id -> original id

  std::optional<int> to_local(int host_vertex) const;
};

Graph build_graph(int n, const std::vector<VertexPair>& edges);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet u);

/// The U-components of G: for each connected component K of G \ U, the
/// induced subgraph on V(K) ∪ U.  If G \ U is connected (or empty), a single
/// component on V(G) is returned.
std::vector<InducedSubgraph> u_components(const Graph& g, VertexSet u);

/// Vertex sets underlying u_components (component ∪ U), in the same order.
std::vector<VertexSet> u_component_sets(const Graph& g, VertexSet u);

/// Max k such that G is k-connected; K_n yields n-1.
int vertex_connectivity(const Graph& g);

/// All inclusion-minimal uv-separators of size <= max_size, sorted
/// lexicographically by vertex list.  If uv is an edge, separators are sought
/// in G minus uv.
std::vector<VertexSet> minimal_pair_separators(const Graph& g, int u, int v,
                                               int max_size);

/// Complete enumeration of inclusion-minimal uv-separators (any size).
/// Expansion-based generation; cross-checked against the subset brute force
/// in the test suite.
std::vector<VertexSet> all_minimal_pair_separators(const Graph& g, int u,
                                                   int v);

}  // namespace sip3

#include "sip3/decomposition.hpp"

#include <algorithm>
#include <set>

namespace sip3 {

namespace {

// A clique separator exists iff some minimal separator between a nonadjacent
// pair is a clique; any clique found this way is a clique minimal separator.
std::optional<VertexSet> find_cms(const Graph& g) {
  int n = g.vertex_count();
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      if (g.has_edge(u, v)) continue;
      for (VertexSet s : all_minimal_pair_separators(g, u, v))
        if (g.is_clique(s)) return s;
    }
  return std::nullopt;
}

// A clique minimal separator together with a full component (the side of u,
// whose neighborhood is exactly the separator).
std::optional<std::pair<VertexSet, VertexSet>> find_cms_split(const Graph& g) {
  int n = g.vertex_count();
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      if (g.has_edge(u, v)) continue;
      for (VertexSet s : all_minimal_pair_separators(g, u, v))
        if (g.is_clique(s)) {
          for (VertexSet c : g.components_within(g.all_vertices() & ~s))
            if (contains(c, u)) return {{s, c}};
        }
    }
  return std::nullopt;
}

// Binary decomposition: peel one full component of a clique minimal
// separator (with the separator attached) and recurse on the remainder.
// Splitting every component off at once is wrong — components whose
// neighborhood is a proper subset of the separator would drag foreign
// separator vertices into their fragment.
void collect_atoms(const Graph& g, const std::vector<int>& to_host,
                   std::set<VertexSet>& atoms) {
  auto split = find_cms_split(g);
  if (!split) {
    VertexSet a = 0;
    for (int i = 0; i < g.vertex_count(); i++) a |= bit(to_host[i]);
    atoms.insert(a);
    return;
  }
  auto [s, cu] = *split;
  for (VertexSet part : {cu | s, g.all_vertices() & ~cu}) {
    InducedSubgraph sub = induced_subgraph(g, part);
    std::vector<int> sub_to_host(sub.to_host.size());
    for (size_t i = 0; i < sub.to_host.size(); i++)
      sub_to_host[i] = to_host[static_cast<size_t>(sub.to_host[i])];
    collect_atoms(sub.graph, sub_to_host, atoms);
  }
}

}  // namespace

bool is_atom(const Graph& g) {
  if (!g.is_connected())
    throw graph_error("is_atom: graph must be connected");
  return !find_cms(g).has_value();
}

bool is_atom_brute_force(const Graph& g) {
  if (!g.is_connected())
    throw graph_error("is_atom_brute_force: graph must be connected");
  VertexSet all = g.all_vertices();
  for (VertexSet s = 1; s < all; s++) {
    if ((s & all) != s) continue;
    if (!g.is_clique(s)) continue;
    if (g.components_within(all & ~s).size() > 1) return false;
  }
  return true;
}

AtomDecomposition decompose_atoms(const Graph& g) {
  if (!g.is_connected())
    throw graph_error("decompose_atoms: graph must be connected");

  std::set<VertexSet> atoms;
  std::vector<int> ident(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); i++) ident[i] = i;
  collect_atoms(g, ident, atoms);

  // The CMS set is enumerated globally: clique minimal separators are
  // exactly the minimal pair separators that are cliques.
  std::set<VertexSet> cms;
  int n = g.vertex_count();
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      if (g.has_edge(u, v)) continue;
      for (VertexSet s : all_minimal_pair_separators(g, u, v))
        if (g.is_clique(s)) cms.insert(s);
    }

  auto by_vertex_list = [](VertexSet a, VertexSet b) {
    return to_vector(a) < to_vector(b);
  };
  AtomDecomposition dec;
  dec.atoms.assign(atoms.begin(), atoms.end());
  dec.cms_list.assign(cms.begin(), cms.end());
  std::sort(dec.atoms.begin(), dec.atoms.end(), by_vertex_list);
  std::sort(dec.cms_list.begin(), dec.cms_list.end(), by_vertex_list);
  return dec;
}

bool AtomGraph::is_tree() const {
  int n = graph.vertex_count();
  if (n == 0) return false;
  return graph.is_connected() && graph.edge_count() == n - 1;
}

AtomGraph atom_graph(const AtomDecomposition& dec) {
  int nx = (int)dec.cms_list.size();
  int ny = (int)dec.atoms.size();
  std::vector<VertexPair> es;
  for (int x = 0; x < nx; x++)
    for (int y = 0; y < ny; y++)
      if ((dec.cms_list[x] & ~dec.atoms[y]) == 0)
        es.emplace_back(x, nx + y);
  return AtomGraph{nx, ny, Graph(nx + ny, es)};
}

std::vector<InducedSubgraph> cms_components(const Graph& g, VertexSet c) {
  if (!g.is_clique(c))
    throw graph_error("cms_components: C is not a clique");
  if (g.components_within(g.all_vertices() & ~c).size() <= 1)
    throw graph_error("cms_components: C is not a separator");
  return u_components(g, c);
}

}  // namespace sip3

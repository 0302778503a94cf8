#pragma once

#include "sip3/graph.hpp"

namespace sip3 {

/// Clique-minimal-separator decomposition of a connected graph.
struct AtomDecomposition {
  std::vector<VertexSet> atoms;     // each induces an atom of G
  std::vector<VertexSet> cms_list;  // clique minimal separators
};

/// Bipartite atom graph: nodes are CMSs (X side) then atoms (Y side); an edge
/// joins a CMS to every atom containing it.
struct AtomGraph {
  int cms_count;
  int atom_count;
  Graph graph;  // node ids: 0..cms_count-1 = CMS, rest = atoms

  bool is_tree() const;
};

/// True iff the connected graph G has no clique separator.
bool is_atom(const Graph& g);

/// Atoms and CMSs of a connected graph.  Output is order-normalized
/// (atoms and separators sorted by vertex list) and independent of the
/// internal split order.
AtomDecomposition decompose_atoms(const Graph& g);

AtomGraph atom_graph(const AtomDecomposition& dec);

/// C-components of G for a clique separator C; errors if C is not a clique
/// or does not separate G.
std::vector<InducedSubgraph> cms_components(const Graph& g, VertexSet c);

/// Test-only oracle: check atomhood by trying every clique subset as a
/// separator (exhaustive over subsets; n <= 20 or so).
bool is_atom_brute_force(const Graph& g);

}  // namespace sip3

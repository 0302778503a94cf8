#pragma once

#include "sip3/decomposition.hpp"
#include "sip3/graph.hpp"
#include "sip3/minors.hpp"

#include <optional>

namespace sip3 {

struct SipVerdict {
  bool answer;
  /// When answer is false: the f-preserving forbidden minor inside the
  /// offending atom (host = that atom as an induced subgraph, with the
  /// relabeling back to G ∪ f), and the atom's vertex set in G ∪ f.
  std::optional<MinorMap> witness;
  std::optional<std::vector<int>> witness_to_host;  // atom ids -> G∪f ids
  std::optional<VertexSet> atom;
};

/// Decide the d-single-interval property of (G, f) for d <= 3.
/// f must be a nonedge of G and G ∪ f connected.
SipVerdict decide_sip(const Graph& g, const VertexPair& f, int d,
                      long long budget = kDefaultMinorBudget);

/// Exact d-convexity decision for d <= 2: each atom of G ∪ F containing a
/// nonempty subset of F must have no K_{d+2} minor.
bool decide_convexity(const Graph& g, const std::vector<VertexPair>& f_set,
                      int d, long long budget = kDefaultMinorBudget);

/// Sufficient condition for 3-convexity: Some(true) when G ∪ F is
/// 3-flattenable; nullopt otherwise (no complete d=3 characterization).
std::optional<bool> sufficient_convexity_3(
    const Graph& g, const std::vector<VertexPair>& f_set,
    long long budget = kDefaultMinorBudget);

/// Edge types 1-4 of an edge e of G relative to the nonedge f; 4 = reducing.
enum class EdgeType { type1 = 1, type2 = 2, type3 = 3, reducing = 4 };

EdgeType classify_edge(const Graph& g, const VertexPair& f,
                       const VertexPair& e,
                       long long budget = kDefaultMinorBudget,
                       int max_vertices = 12);

/// G ∪ f is an atom with an f-preserving forbidden minor and no edge of G is
/// reducing.
bool is_minimal_pair(const Graph& g, const VertexPair& f,
                     long long budget = kDefaultMinorBudget,
                     int max_vertices = 12);

/// Rooted minor to the winged-K5 or winged-K2,2,2 pattern with f's endpoints
/// pinned onto w1, w2 (both orientations tried).
std::optional<MinorMap> find_winged_minor(
    const Graph& g, const VertexPair& f,
    long long budget = kDefaultMinorBudget);

/// Helper: contract edge e of g; returns the contracted graph and the vertex
/// map old id -> new id (e.b merges into e.a, ids compacted).
struct Contraction {
  Graph graph;
  std::vector<int> vertex_map;
};
Contraction contract_edge(const Graph& g, const VertexPair& e);

}  // namespace sip3

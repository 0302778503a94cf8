#pragma once

#include "sip3/graph.hpp"

#include <optional>

namespace sip3 {

/// Thrown when the rooted-minor search exceeds its node budget; never a
/// silent negative.
struct budget_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long long kDefaultMinorBudget = 10'000'000;

/// Rooted minor of a host graph: every host vertex is assigned to a pattern
/// vertex (total map), branch sets are connected, and every pattern edge has
/// a crossing host edge.  In classical mode (see MinorConstraints), some host
/// vertices may be unassigned (assign[v] = -1), modeling vertex deletion.
struct MinorMap {
  Graph host;
  Graph pattern;
  std::vector<int> assign;  // host vertex -> pattern vertex, or -1

  VertexSet branch(int pattern_vertex) const;
  /// Host edges whose endpoints map to a pattern nonedge (the deleted edges).
  std::vector<VertexPair> deleted_edges() const;
  /// Number of host edges with one endpoint in branch(p) and one in branch(q).
  int crossing_edges(int p, int q) const;

  bool preserves(const VertexPair& f) const;
  /// Preserved with no crossing edge beyond f itself (f edge) / none (f nonedge).
  bool retains(const VertexPair& f) const;
};

struct MinorConstraints {
  std::vector<std::pair<int, int>> pins;  // (host vertex, pattern vertex)
  std::vector<VertexPair> preserve;       // host pairs in distinct branches
  std::vector<VertexPair> retain;         // preserved and not doubled
  bool induced = false;       // no deleted edges (contractions only)
  bool require_total = true;  // paper semantics; false = classical minor
};

/// Full invariant check; on failure *reason names the violated condition.
bool validate_minor_map(const MinorMap& m, std::string* reason = nullptr);

/// Complete backtracking search for a constrained rooted minor.  Symmetry
/// breaking over pattern automorphisms (restricted to those fixing pinned
/// pattern vertices), crossing-edge pruning at branch placement.
/// Throws budget_exhausted if the node budget runs out.
std::optional<MinorMap> find_rooted_minor(
    const Graph& host, const Graph& pattern, const MinorConstraints& c = {},
    long long budget = kDefaultMinorBudget);

/// True iff some K5 or K2,2,2 rooted minor of G preserves f.
bool has_preserving_forbidden_minor(const Graph& g, const VertexPair& f,
                                    long long budget = kDefaultMinorBudget);

/// Independent oracle: enumerates every total (or partial, in classical mode)
/// map V(host) -> V(pattern) and checks it directly.  Host limited to 10
/// vertices.
bool brute_force_minor_oracle(const Graph& host, const Graph& pattern,
                              const MinorConstraints& c = {});

/// Classical (non-rooted) minor containment: connected branch sets need not
/// cover the host.
bool has_minor(const Graph& host, const Graph& pattern,
               long long budget = kDefaultMinorBudget);

enum class ExchangeKind { vertex, component };

/// Vertex exchange from branch(a) to branch(b) that exchanges x and fixes the
/// component of branch(a) minus x containing j_rep; component exchange moves
/// the component set k.  The result may fail validate_minor_map.
MinorMap apply_exchange(const MinorMap& m, ExchangeKind kind, int a, int b,
                        int x_or_unused, std::optional<int> j_rep = {},
                        VertexSet k = 0);

/// Automorphisms of g as permutation vectors (brute force; n <= 8 expected).
std::vector<std::vector<int>> automorphisms(const Graph& g);

}  // namespace sip3

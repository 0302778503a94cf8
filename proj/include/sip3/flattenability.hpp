#pragma once

#include "sip3/graph.hpp"
#include "sip3/minors.hpp"

namespace sip3 {

/// True iff G has no forbidden minor for dimension d:
/// d=1: K3; d=2: K4; d=3: K5 and K2,2,2.
bool is_d_flattenable(const Graph& g, int d,
                      long long budget = kDefaultMinorBudget);

/// True iff none of K5, K2,2,2, V8, C5xC2 is a minor of G.
bool is_partial_3_tree(const Graph& g, long long budget = kDefaultMinorBudget);

/// True iff G reduces to K4 by repeatedly removing a degree-3 vertex whose
/// neighborhood is a triangle.
bool is_3_tree(const Graph& g);

/// Independent oracle: treewidth <= k via elimination-ordering DP over
/// subsets (n <= 20).
bool treewidth_at_most(const Graph& g, int k);
int treewidth(const Graph& g);

struct StarTheoremReport {
  bool hypothesis_g_3connected = false;
  bool hypothesis_g_p3t = false;
  bool hypothesis_each_edge_p3t = false;  // each G ∪ wu_i a partial 3-tree
  bool conclusion_p3t = false;            // G ∪ {wu_i} a partial 3-tree
  bool hypotheses_hold() const {
    return hypothesis_g_3connected && hypothesis_g_p3t &&
           hypothesis_each_edge_p3t;
  }
  /// Hypotheses hold but the conclusion fails: a bug-level event.
  bool theorem_violated() const { return hypotheses_hold() && !conclusion_p3t; }
};

/// Checks both hypotheses and conclusion of the star theorem for w and its
/// prospective leaves.  Errors if some wu_i is already an edge.
StarTheoremReport check_star_theorem(const Graph& g, int w,
                                     const std::vector<int>& leaves,
                                     long long budget = kDefaultMinorBudget);

}  // namespace sip3

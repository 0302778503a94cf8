#pragma once

#include "sip3/graph.hpp"

#include <vector>

namespace sip3 {

/// Graph together with a squared Euclidean length per edge, parallel to
/// graph.edges().
struct Linkage {
  Graph graph;
  std::vector<double> len2;

  double length2(const VertexPair& e) const;
  Linkage with_length(const VertexPair& e, double v) const;
};

Linkage make_linkage(Graph g, std::vector<double> len2);

/// Closed interval of squared lengths.
struct Interval {
  double lo, hi;
};

/// Disjoint sorted closed intervals with provenance: exact closed-form
/// computation or empirical clustering of samples.
struct IntervalSet {
  enum class Provenance { exact, sampled };

  std::vector<Interval> intervals;
  Provenance provenance = Provenance::exact;
  int sample_count = 0;    // sampled only
  double cluster_gap = 0;  // sampled only

  bool empty() const { return intervals.empty(); }
  bool covers(double x, double tol = 0) const;
  double width() const;  // hi_max - lo_min, 0 when empty
};

IntervalSet make_exact_intervals(std::vector<Interval> intervals);

/// Intersection of interval sets, kept disjoint and sorted.  Result is exact
/// only when every part is.
IntervalSet glue_intervals(const std::vector<IntervalSet>& parts);

}  // namespace sip3

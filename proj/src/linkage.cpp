#include "sip3/linkage.hpp"

#include <algorithm>
#include <cmath>

namespace sip3 {

double Linkage::length2(const VertexPair& e) const {
  const auto& es = graph.edges();
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || !(*it == e))
    throw graph_error("Linkage::length2: not an edge");
  return len2[static_cast<size_t>(it - es.begin())];
}

Linkage Linkage::with_length(const VertexPair& e, double v) const {
  Linkage out = *this;
  const auto& es = graph.edges();
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || !(*it == e))
    throw graph_error("Linkage::with_length: not an edge");
  out.len2[static_cast<size_t>(it - es.begin())] = v;
  return out;
}

Linkage make_linkage(Graph g, std::vector<double> len2) {
  if (len2.size() != static_cast<size_t>(g.edge_count()))
    throw graph_error("make_linkage: length count mismatch");
  for (double v : len2)
    if (!std::isfinite(v) || v < 0)
      throw graph_error("make_linkage: lengths must be finite and >= 0");
  return Linkage{std::move(g), std::move(len2)};
}

bool IntervalSet::covers(double x, double tol) const {
  for (const Interval& iv : intervals)
    if (x >= iv.lo - tol && x <= iv.hi + tol) return true;
  return false;
}

double IntervalSet::width() const {
  if (intervals.empty()) return 0;
  return intervals.back().hi - intervals.front().lo;
}

IntervalSet make_exact_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (const Interval& iv : intervals)
    if (!(iv.lo <= iv.hi) || iv.lo < 0)
      throw std::invalid_argument("make_exact_intervals: bad interval");
  for (size_t i = 1; i < intervals.size(); ++i)
    if (intervals[i].lo <= intervals[i - 1].hi)
      throw std::invalid_argument("make_exact_intervals: overlap");
  IntervalSet s;
  s.intervals = std::move(intervals);
  return s;
}

IntervalSet glue_intervals(const std::vector<IntervalSet>& parts) {
  if (parts.empty())
    throw std::invalid_argument("glue_intervals: empty part list");
  std::vector<Interval> acc = parts.front().intervals;
  for (size_t p = 1; p < parts.size(); ++p) {
    std::vector<Interval> next;
    for (const Interval& x : acc)
      for (const Interval& y : parts[p].intervals) {
        double lo = std::max(x.lo, y.lo);
        double hi = std::min(x.hi, y.hi);
        if (lo <= hi) next.push_back({lo, hi});
      }
    std::sort(next.begin(), next.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    acc = std::move(next);
  }
  IntervalSet out;
  out.intervals = std::move(acc);
  for (const IntervalSet& p : parts) {
    if (p.provenance == IntervalSet::Provenance::sampled) {
      out.provenance = IntervalSet::Provenance::sampled;
      out.sample_count = std::max(out.sample_count, p.sample_count);
      out.cluster_gap = std::max(out.cluster_gap, p.cluster_gap);
    }
  }
  return out;
}

}  // namespace sip3

#include "sip3/realize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sip3 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, int index) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
}

// Free coordinates of vertex v: the first min(v, d) axes.  Vertex 0 sits at
// the origin, vertex 1 on the first axis, and so on, quotienting rigid
// motions of R^d.
int free_coords(int v, int d) { return std::min(v, d); }

struct Layout {
  int n, d, nvar;
  std::vector<int> offset;  // vertex -> first variable index

  Layout(int n_, int d_) : n(n_), d(d_), nvar(0), offset(n_) {
    for (int v = 0; v < n; ++v) {
      offset[static_cast<size_t>(v)] = nvar;
      nvar += free_coords(v, d);
    }
  }

  Eigen::MatrixXd unpack(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, d);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < free_coords(v, d); ++k)
        p(v, k) = x(offset[static_cast<size_t>(v)] + k);
    return p;
  }
};

// One damped Gauss-Newton run from a random start; returns points on
// convergence to max residual <= kResidualTol.
std::optional<Eigen::MatrixXd> single_attempt(const Linkage& l, int d,
                                              std::mt19937_64& rng) {
  const Graph& g = l.graph;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Layout lay(n, d);
  if (m == 0) return Eigen::MatrixXd::Zero(n, d);

  double box = 1.0;
  for (double v : l.len2) box = std::max(box, v);
  box = std::sqrt(box);
  std::uniform_real_distribution<double> init(-box, box);
  Eigen::VectorXd x(lay.nvar);
  for (int i = 0; i < lay.nvar; ++i) x(i) = init(rng);

  auto residuals = [&](const Eigen::VectorXd& xs) {
    Eigen::MatrixXd p = lay.unpack(xs);
    Eigen::VectorXd r(m);
    for (int e = 0; e < m; ++e) {
      const VertexPair& uv = g.edges()[static_cast<size_t>(e)];
      r(e) = (p.row(uv.a) - p.row(uv.b)).squaredNorm() -
             l.len2[static_cast<size_t>(e)];
    }
    return r;
  };

  double lambda = 1e-3;
  Eigen::VectorXd r = residuals(x);
  double cost = r.squaredNorm();
  for (int iter = 0; iter < 400; ++iter) {
    if (r.lpNorm<Eigen::Infinity>() <= kResidualTol) return lay.unpack(x);

    Eigen::MatrixXd p = lay.unpack(x);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, lay.nvar);
    for (int e = 0; e < m; ++e) {
      const VertexPair& uv = g.edges()[static_cast<size_t>(e)];
      Eigen::RowVectorXd diff = 2.0 * (p.row(uv.a) - p.row(uv.b));
      for (int k = 0; k < free_coords(uv.a, d); ++k)
        jac(e, lay.offset[static_cast<size_t>(uv.a)] + k) = diff(k);
      for (int k = 0; k < free_coords(uv.b, d); ++k)
        jac(e, lay.offset[static_cast<size_t>(uv.b)] + k) = -diff(k);
    }
    Eigen::MatrixXd jtj = jac.transpose() * jac;
    Eigen::VectorXd jtr = jac.transpose() * r;

    bool stepped = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda;
      Eigen::VectorXd delta = a.ldlt().solve(-jtr);
      Eigen::VectorXd xn = x + delta;
      Eigen::VectorXd rn = residuals(xn);
      double cn = rn.squaredNorm();
      if (cn < cost) {
        x = std::move(xn);
        r = std::move(rn);
        cost = cn;
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 10;
    }
    if (!stepped) break;
  }
  if (r.lpNorm<Eigen::Infinity>() <= kResidualTol) return lay.unpack(x);
  return std::nullopt;
}

}  // namespace

double max_residual(const Linkage& l, const Realization& r) {
  double worst = 0;
  for (int e = 0; e < l.graph.edge_count(); ++e) {
    const VertexPair& uv = l.graph.edges()[static_cast<size_t>(e)];
    double got = (r.points.row(uv.a) - r.points.row(uv.b)).squaredNorm();
    worst = std::max(worst, std::abs(got - l.len2[static_cast<size_t>(e)]));
  }
  return worst;
}

std::optional<Realization> realize(const Linkage& l, int d, std::uint64_t seed,
                                   int restarts) {
  if (d < 1) throw std::invalid_argument("realize: d must be >= 1");
  for (int i = 0; i < restarts; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    if (auto p = single_attempt(l, d, rng))
      return Realization{d, std::move(*p)};
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<double>> collect_samples(
    const Linkage& l, const std::vector<VertexPair>& f, int d, int samples,
    std::uint64_t seed, bool parallel) {
  for (const VertexPair& p : f)
    if (l.graph.has_edge(p))
      throw std::invalid_argument("sample_ccs: F member is an edge");
  if (d < 1) throw std::invalid_argument("sample_ccs: d must be >= 1");

  std::vector<std::optional<std::vector<double>>> slots(
      static_cast<size_t>(samples));
  auto run_one = [&](int i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    if (auto p = single_attempt(l, d, rng)) {
      std::vector<double> vals;
      vals.reserve(f.size());
      for (const VertexPair& uv : f)
        vals.push_back((p->row(uv.a) - p->row(uv.b)).squaredNorm());
      slots[static_cast<size_t>(i)] = std::move(vals);
    }
  };
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < samples; ++i) run_one(i);
  } else {
    for (int i = 0; i < samples; ++i) run_one(i);
  }

  std::vector<std::vector<double>> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  if (out.empty())
    throw std::runtime_error("sample_ccs: linkage apparently infeasible");
  return out;
}

}  // namespace

std::vector<std::vector<double>> sample_ccs(const Linkage& l,
                                            const std::vector<VertexPair>& f,
                                            int d, int samples,
                                            std::uint64_t seed) {
  return collect_samples(l, f, d, samples, seed, true);
}

std::vector<std::vector<double>> sample_ccs_serial(
    const Linkage& l, const std::vector<VertexPair>& f, int d, int samples,
    std::uint64_t seed) {
  return collect_samples(l, f, d, samples, seed, false);
}

namespace {

// Can f attain squared length t?  Decided empirically by realizing the
// linkage with f pinned as an edge of length t.
bool probe_value(const Linkage& l, const VertexPair& f, double t, int d,
                 std::uint64_t seed) {
  Graph g2 = l.graph.with_edge(f);
  std::vector<double> len2;
  len2.reserve(static_cast<size_t>(g2.edge_count()));
  for (const VertexPair& e : g2.edges())
    len2.push_back(e == f ? t : l.length2(e));
  return realize(make_linkage(std::move(g2), std::move(len2)), d, seed, 25)
      .has_value();
}

}  // namespace

IntervalSet ccs_intervals(const Linkage& l, const VertexPair& f, int d,
                          int samples, std::uint64_t seed, double gap) {
  auto rows = sample_ccs(l, {f}, d, samples, seed);
  std::vector<double> vals;
  vals.reserve(rows.size());
  for (const auto& r : rows) vals.push_back(r[0]);
  std::sort(vals.begin(), vals.end());

  // Random restarts land sparsely inside a wide continuous CCS, so raw
  // clustering at a tight gap would shatter one interval into many.  Each
  // inter-sample gap above the threshold is therefore bisected with probes
  // that pin f to the midpoint; feasible midpoints fill the gap, failed ones
  // leave it as a genuine (empirically unrefuted) break.
  std::vector<std::pair<double, double>> gaps;  // candidate breaks, confirmed
  std::vector<std::pair<double, double>> work;
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] - vals[i - 1] > gap) work.emplace_back(vals[i - 1], vals[i]);
  int probes = 0;
  const int probe_cap = 200000;
  std::vector<double> filled;
  while (!work.empty() && probes < probe_cap) {
    auto [a, b] = work.back();
    work.pop_back();
    if (b - a <= gap) continue;
    // A break is only confirmed when probes at the quarter points all fail;
    // single failures near a feasibility boundary are solver noise.
    bool hit = false;
    for (double frac : {0.5, 0.25, 0.75}) {
      double t = a + frac * (b - a);
      std::uint64_t ps = derive_seed(seed ^ 0xcc5b20beull, probes++);
      if (probe_value(l, f, t, d, ps)) {
        filled.push_back(t);
        work.emplace_back(a, t);
        work.emplace_back(t, b);
        hit = true;
        break;
      }
    }
    if (!hit) gaps.emplace_back(a, b);
  }
  vals.insert(vals.end(), filled.begin(), filled.end());
  std::sort(vals.begin(), vals.end());

  auto is_break = [&](double a, double b) {
    for (auto [x, y] : gaps)
      if (a >= x - 1e-15 && b <= y + 1e-15) return true;
    return false;
  };

  IntervalSet out;
  out.provenance = IntervalSet::Provenance::sampled;
  out.sample_count = static_cast<int>(vals.size());
  out.cluster_gap = gap;
  double lo = vals.front(), hi = vals.front();
  for (size_t i = 1; i < vals.size(); ++i) {
    if (vals[i] - hi > gap && is_break(hi, vals[i])) {
      out.intervals.push_back({lo, hi});
      lo = vals[i];
    }
    hi = vals[i];
  }
  out.intervals.push_back({lo, hi});

  // Random restarts approach interval endpoints only to within the sample
  // spacing; refine each endpoint by outward expansion and bisection so two
  // independent runs agree to ~1e-4.
  const double refine_tol = 1e-5;
  auto probe_ok = [&](double t) {
    std::uint64_t ps = derive_seed(seed ^ 0x5121f2e1ull, probes++);
    return probe_value(l, f, t, d, ps);
  };
  auto refine = [&](double start, double limit, int dir) {
    double feas = start;
    double step = std::max(gap, 1e-4);
    auto beyond = [&](double t) { return dir > 0 ? t >= limit : t <= limit; };
    double cand = feas + dir * step;
    while (probes < probe_cap) {
      if (beyond(cand)) cand = limit;
      if (cand == feas || !probe_ok(cand)) break;
      feas = cand;
      if (feas == limit) return feas;
      step *= 2;
      cand = feas + dir * step;
    }
    double infeas = beyond(cand) ? limit : cand;
    while (std::abs(infeas - feas) > refine_tol && probes < probe_cap) {
      double mid = 0.5 * (feas + infeas);
      if (probe_ok(mid))
        feas = mid;
      else
        infeas = mid;
    }
    return feas;
  };
  double plain_sum = 0;
  for (double e : l.len2) plain_sum += std::sqrt(e);
  double value_cap = plain_sum * plain_sum + 1.0;
  for (size_t k = 0; k < out.intervals.size(); ++k) {
    double lo_limit = k == 0 ? 0.0 : out.intervals[k - 1].hi;
    double hi_limit =
        k + 1 < out.intervals.size() ? out.intervals[k + 1].lo : value_cap;
    out.intervals[k].lo = refine(out.intervals[k].lo, lo_limit, -1);
    out.intervals[k].hi = refine(out.intervals[k].hi, hi_limit, +1);
  }
  return out;
}

IntervalSet apex_pair_interval(double t23, double t24, double t34, double a2,
                               double b2, int d) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("apex_pair_interval: d must be 2 or 3");
  if (t34 <= 0)
    throw std::invalid_argument("apex_pair_interval: degenerate v3 v4 edge");
  double s = std::sqrt(t34);
  // v3 at the origin, v4 at (s, 0).  Realizability of the triangle:
  double x2 = (t34 + t23 - t24) / (2 * s);
  double y2sq = t23 - x2 * x2;
  if (y2sq < -1e-12)
    throw std::invalid_argument("apex_pair_interval: unrealizable triangle");
  double y2 = std::sqrt(std::max(y2sq, 0.0));
  // v1's locus: circle about the v3 v4 axis.
  double x1 = (t34 + a2 - b2) / (2 * s);
  double r1sq = a2 - x1 * x1;
  if (r1sq < -1e-12)
    throw std::invalid_argument("apex_pair_interval: empty apex locus");
  double r1 = std::sqrt(std::max(r1sq, 0.0));

  // |v1 v2|^2 = (x1-x2)^2 + r1^2 + y2^2 - 2 r1 y2 cos(theta).
  double base = (x1 - x2) * (x1 - x2);
  double lo = base + (r1 - y2) * (r1 - y2);
  double hi = base + (r1 + y2) * (r1 + y2);
  if (d == 3 || hi - lo < 1e-15) {
    // Full circle for d = 3; degenerate locus collapses to one value.
    if (hi - lo < 1e-15) return make_exact_intervals({{lo, lo}});
    return make_exact_intervals({{lo, hi}});
  }
  // d = 2: only the two reflected positions exist.
  return make_exact_intervals({{lo, lo}, {hi, hi}});
}

bool gram_realizability(const Eigen::MatrixXd& d2, int d) {
  const auto n = d2.rows();
  if (n != d2.cols() || n == 0)
    throw std::invalid_argument("gram_realizability: matrix not square");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d2(i, i) != 0)
      throw std::invalid_argument("gram_realizability: nonzero diagonal");
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(d2(i, j) - d2(j, i)) > 0)
        throw std::invalid_argument("gram_realizability: not symmetric");
  }
  Eigen::MatrixXd j =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::MatrixXd gram = -0.5 * j * d2 * j;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double tol = 1e-9;
  int rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double ev = es.eigenvalues()(i);
    if (ev < -tol) return false;
    if (ev > tol) ++rank;
  }
  return rank <= d;
}

}  // namespace sip3

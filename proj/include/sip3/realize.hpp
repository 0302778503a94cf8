#pragma once

#include "sip3/linkage.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace sip3 {

/// Point per vertex in R^d; row i of points is vertex i.
struct Realization {
  int d;
  Eigen::MatrixXd points;  // n x d
};

/// Largest | |p(u)-p(v)|^2 - len2(uv) | over edges.
double max_residual(const Linkage& l, const Realization& r);

inline constexpr int kDefaultRestarts = 200;
inline constexpr double kResidualTol = 1e-8;

/// Randomized-restart damped Gauss-Newton on the squared-length stress.
/// nullopt means no realization found within the restart budget; it is never
/// a proof of infeasibility.  Vertex 0 is pinned at the origin and vertex k
/// spans only the first min(k, d) axes, quotienting isometries.
std::optional<Realization> realize(const Linkage& l, int d,
                                   std::uint64_t seed = 1,
                                   int restarts = kDefaultRestarts);

/// Squared-length vectors attained by the nonedges F over successfully
/// realized restarts (one attempt per sample index; failures are dropped).
/// Throws std::runtime_error when no restart succeeds.  The parallel and
/// serial versions derive identical per-sample seeds and return identical
/// multisets in the same order.
std::vector<std::vector<double>> sample_ccs(const Linkage& l,
                                            const std::vector<VertexPair>& f,
                                            int d, int samples,
                                            std::uint64_t seed);
std::vector<std::vector<double>> sample_ccs_serial(
    const Linkage& l, const std::vector<VertexPair>& f, int d, int samples,
    std::uint64_t seed);

inline constexpr double kDefaultClusterGap = 1e-3;

/// Cluster the 1-D sampled CCS of the nonedge f into maximal runs separated
/// by gaps > gap; each run becomes a closed interval.
IntervalSet ccs_intervals(const Linkage& l, const VertexPair& f, int d,
                          int samples, std::uint64_t seed,
                          double gap = kDefaultClusterGap);

/// Exact |v1 v2|^2 range as v1 sweeps its locus: v1 is attached to v3, v4 of
/// the triangle {v2, v3, v4} (squared side lengths t23, t24, t34) at squared
/// lengths a2 = |v1 v3|^2, b2 = |v1 v4|^2.  The locus is a circle for d = 3
/// (one interval) and two reflected points for d = 2 (up to two singletons).
IntervalSet apex_pair_interval(double t23, double t24, double t34, double a2,
                               double b2, int d);

/// True iff the doubly-centered Gram matrix of the full squared-distance
/// matrix d2 is PSD with rank <= d (eigenvalue tolerance 1e-9).
bool gram_realizability(const Eigen::MatrixXd& d2, int d);

}  // namespace sip3

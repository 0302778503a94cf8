#pragma once

#include "sip3/linkage.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sip3 {

/// Squared edge-length map witnessing that (G, f) is not 3-SIP: the sampled
/// CCS of f splits into the two claimed clusters.
struct Certificate {
  Linkage linkage;
  VertexPair f;
  // Two claimed CCS clusters in ascending order; each a singleton
  // (lo == hi) or a short interval.
  std::vector<Interval> values;
};

enum class BaseKind { k5_unit, k5_proper, k222 };

/// Hand-built two-cluster maps on K5 minus f and K2,2,2 minus f.
/// k5_unit: all lengths 1, values {0, 8/3} (contains 0, so not proper).
/// k5_proper: 1 on one K4, 4 on the remaining three edges; both values
/// positive.  k222: a searched map with two positive clusters.
Certificate base_certificate(BaseKind kind);

/// Squared lengths of a triangle on local vertices 1, 2, 3.
struct TriangleMap {
  double s12, s13, s23;
};

/// Transfer a two-valued nonedge through a K4.  Inputs are maps on the
/// triangle {v2, v3, v4} (local 1, 2, 3; f' = v3 v4 = s23) that differ only
/// on f'.  Outputs are maps on K4 minus v1 v2 (vertices v1=0, v2=1, v3=2,
/// v4=3) agreeing off the triangle, each with a singleton CCS for v1 v2, the
/// two singletons distinct.  Attachment lengths solve |x - y| = l1,
/// x + y = l2 in plain lengths, and |v1 v3| is kept different from |v2 v3|.
std::pair<Linkage, Linkage> transfer_through_k4(const TriangleMap& ell1,
                                                const TriangleMap& ell2);

/// Attach a degree-3 apex v4 to the triangle {v1, v2, v3} (local 1, 2, 3)
/// with one shared length triple so that both decorated K4 linkages stay
/// 2-realizable.  The apex is an intersection of perpendicular bisectors of
/// the two canonical triangle realizations; a parallel-bisector degeneracy is
/// broken by rotating the first realization.
std::pair<Linkage, Linkage> decorate_degree3(const TriangleMap& ell1,
                                             const TriangleMap& ell2);

/// Compose a certificate for (G, f) out of recognized pieces: a base pair up
/// to isomorphism, degree-2 transfer steps over a nonedge, and simplicial
/// degree-3 apexes.  nullopt when (G, f) is 3-SIP or the structure is not
/// recognized; absence is not a proof that no certificate exists.
std::optional<Certificate> build_certificate(const Graph& g,
                                             const VertexPair& f);

struct VerifyReport {
  bool edges_positive = false;
  bool clusters_ok = false;   // >= 2 clusters separated by > the gap
  bool values_match = false;  // cluster centers inside claims, 1e-3 slack
  bool proper = false;        // both claimed clusters strictly positive
  bool ok() const { return edges_positive && clusters_ok && values_match; }
};

/// Numeric re-check of a certificate by CCS sampling.  Throws when the
/// linkage cannot be realized at all.
VerifyReport verify_certificate(const Certificate& c, int samples = 600,
                                std::uint64_t seed = 2026);

}  // namespace sip3

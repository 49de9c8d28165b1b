#ifndef RTCOVER_COVERS_HPP
#define RTCOVER_COVERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtcover/certificate.hpp"
#include "rtcover/core.hpp"
#include "rtcover/hypergraph.hpp"

namespace rtcover {

// Record of which construction case fired and the concrete choices made when a
// cover was built from two or three fixed edges.
struct ThreeEdgeTrace {
  std::string case_id;            // e.g. "lemma-2.6/case-1", "lemma-2.8/case-3"
  int s_value = 0;                // the internal size parameter of the case
  std::vector<int> chosen_edges;
  std::vector<int> set_t;         // vertices in all chosen edges
  std::vector<int> set_d;         // vertices in exactly two of three
  std::vector<int> set_dprime;    // single-edge vertices in parts meeting D
  std::vector<int> set_s;         // the extra vertices the case selected
  // delta_h of the cover against the chosen edges; empty when the cover
  // saturates a part (the cover is then trivially valid through that part).
  std::optional<int> delta;
};

// r-t+1 vertices of edge 0; any t-intersecting hypergraph is covered by
// such a set.
CoverCertificate trivial_cover(const PartitionedHypergraph& h, int t);

// Cover from two fixed edges. With t' = |e1 ∩ e2| >= t: either
// floor((r-t')/2)+t'-t+1 shared vertices (t' >= r-2t+1) or the shared
// vertices plus both choices in the first r-2t+1-t' split parts
// (t' <= r-2t). Scan-validated before returning.
std::pair<CoverCertificate, ThreeEdgeTrace> two_edge_cover(
    const PartitionedHypergraph& h, int t, int e1, int e2);

// Cover from three fixed edges; needs r >= 3t. Selects the case by
// t1 = |e1∩e2∩e3| and t2 = #vertices in exactly two edges, builds the
// corresponding blocking set, and checks delta_h <= 3t-1 before returning.
std::pair<CoverCertificate, ThreeEdgeTrace> three_edge_cover(
    const PartitionedHypergraph& h, int t, int e1, int e2, int e3);

// Exact-range cover for t <= r <= 3t-1: two-edge cover on a minimum-
// intersection pair, guaranteed size <= floor((r-t)/2)+1.
CoverCertificate small_r_cover(const PartitionedHypergraph& h, int t);

// Constructive three-edge pipeline for 3t <= r <= (52t-13)/9: pick x, z by
// range, try Y = X ∪ Z, and fall back to the two- or three-edge cover on a
// witness edge disjoint from Y. Guaranteed size <= x+z.
CoverCertificate prop_29_cover(const PartitionedHypergraph& h, int t);

// The (x, z) size parameters the pipeline uses at (r, t).
std::pair<int, int> prop_29_xz(int r, int t);

// Cover of a k-wise t-intersecting hypergraph, size <= floor((r-t)/k)+1.
// k = 2 requires t > r/3.
CoverCertificate kwise_cover(const PartitionedHypergraph& h, int k, int t);

// Dispatcher over all applicable routes; returns the smallest validated
// certificate.
CoverCertificate general_cover(const PartitionedHypergraph& h, int t);

struct DichotomyReport {
  struct Pair {
    int e = 0, f = 0, size = 0;
  };
  int lo = 0;  // |e ∩ f| >= lo, or
  int hi = 0;  // |e ∩ f| <= hi
  int pairs_checked = 0;
  std::vector<Pair> violations;
  bool ok() const { return violations.empty(); }
};

// Pairwise intersection dichotomy implied by tau(H) >= eta+1: every pair
// satisfies |e∩f| >= 2*eta+2t-r or |e∩f| <= 2r-4t-eta+1. A violation
// falsifies the caller's eta, not the dichotomy.
DichotomyReport corollary_27_check(const PartitionedHypergraph& h, int t,
                                   int eta);

}  // namespace rtcover

#endif  // RTCOVER_COVERS_HPP

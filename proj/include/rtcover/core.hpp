#ifndef RTCOVER_CORE_HPP
#define RTCOVER_CORE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rtcover/certificate.hpp"
#include "rtcover/hypergraph.hpp"

namespace rtcover {

// Intersection statistics of selected edges. For a pair only tprime is
// meaningful; for a triple, t1 = |e1∩e2∩e3|, a/b/c are the pairwise-minus-
// triple counts and t2 = a+b+c counts vertices in exactly two of the three.
struct IntersectionProfile {
  int tprime = 0;
  int t1 = 0;
  int t2 = 0;
  int a = 0;
  int b = 0;
  int c = 0;
};

// |e ∩ f| — number of parts where the two edges pick the same vertex.
int intersection_size(const PartitionedHypergraph& h, int e, int f);

// Minimum pairwise intersection plus the lexicographically smallest
// achieving pair. Requires at least two edges.
std::pair<int, std::pair<int, int>> min_pairwise_intersection(
    const PartitionedHypergraph& h);

// Minimum over all k-subsets of edges of their common intersection size,
// with monotonicity pruning. Requires 2 <= k <= edge count.
int kwise_min_intersection(const PartitionedHypergraph& h, int k);

// t if all pairwise intersections equal t, otherwise empty.
std::optional<int> is_strictly_intersecting(const PartitionedHypergraph& h);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
};

// Degrees over all vertices, isolated vertices included.
DegreeProfile degree_profile(const PartitionedHypergraph& h);
std::vector<int> vertex_degrees(const PartitionedHypergraph& h);

IntersectionProfile triple_profile(const PartitionedHypergraph& h, int e1,
                                   int e2, int e3);

// Degree of global vertex g with respect to the chosen edges.
int degree_wrt(const PartitionedHypergraph& h, int g,
               const std::vector<int>& edge_indices);

// Σ_j max_{v in P_j \ C} d(v; e_1..e_k). Throws std::domain_error when some
// part lies wholly inside the cover set.
int delta_h(const PartitionedHypergraph& h, const std::vector<int>& cover,
            const std::vector<int>& edge_indices);

// Certificate when delta_h(C; es) <= k·t - 1; validity re-checked by full
// scan before returning (a failed scan yields empty, never a bad
// certificate). Propagates delta_h errors.
std::optional<CoverCertificate> observation_cover_check(
    const PartitionedHypergraph& h, int t, const std::vector<int>& cover,
    const std::vector<int>& edge_indices);

// Transpose of the vertex-edge incidence relation. Isolated vertices
// contribute no dual edge.
GeneralHypergraph dual(const GeneralHypergraph& h);
GeneralHypergraph dual(const PartitionedHypergraph& h);

}  // namespace rtcover

#endif  // RTCOVER_CORE_HPP

#ifndef RTCOVER_GENERATORS_HPP
#define RTCOVER_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtcover/hypergraph.hpp"

namespace rtcover {

// Parameters a generator guarantees for its output. Claims are advisory:
// verification re-derives them; tests never take an unverified number as an
// oracle.
struct GeneratorMetadata {
  std::string family;
  int r = 0;
  int guaranteed_t = 0;
  std::vector<std::pair<int, int>> guaranteed_kwise;  // (k, t) pairs
  std::optional<int> claimed_tau;
  std::optional<int> claimed_regular_degree;
  std::optional<int> claimed_strict;  // strictly t-intersecting with this t
  std::map<std::string, long long> params;
};

struct Generated {
  PartitionedHypergraph graph;
  GeneratorMetadata meta;
};

// The one-level construction: one edge per (r-ell)-subset of the parts,
// meeting the shared top row exactly there. Parts have size
// binom(r, r-ell) + 1. Subsets are enumerated lexicographically.
Generated h_r_ell(int r, int ell);

// Replace every vertex by t clones in t new parts; multiplies all pairwise
// intersections by t and preserves degrees.
PartitionedHypergraph blowup(const PartitionedHypergraph& h, int t);

// Projective plane of order q (q prime) with one point and its incident
// lines removed: (q+1)-partite, q-regular, q^2 edges, strictly
// 1-intersecting.
Generated truncated_projective_plane(int q);

// Dual of the lines-in-F_q^n design: one part per parallel class, one edge
// per point; q-regular and strictly 1-intersecting. Guard: q^n <= 4096.
Generated affine_lines_dual(int q, int n);

// All transversals of the given parts.
PartitionedHypergraph complete_partite(const std::vector<int>& part_sizes);

// Append `a` singleton parts whose vertex lies in every edge; raises the
// intersection level by exactly a.
PartitionedHypergraph shared_vertex_extension(const PartitionedHypergraph& h,
                                              int a);

// Restrict every edge to the kept parts; duplicate restrictions merge.
PartitionedHypergraph delete_parts(const PartitionedHypergraph& h,
                                   const std::vector<int>& keep_parts);

// Rejection sampler for t-intersecting instances: propose transversals
// (uniform, or a mutation of an accepted edge), accept iff the proposal
// meets every accepted edge in >= t vertices. Deterministic in seed; may
// return fewer edges than requested (reported in the metadata). part_size 0
// means r.
Generated random_rt_graph(int r, int t, int target_edges, std::uint64_t seed,
                          int part_size = 0);

// Incidence structures used by the finite-geometry generators; exposed for
// the design/resolvability checks.
GeneralHypergraph projective_plane_lines(int q);
GeneralHypergraph affine_line_design(int q, int n);

long long binomial(int n, int k);
bool is_prime(long long n);
bool is_prime_power(long long n);

}  // namespace rtcover

#endif  // RTCOVER_GENERATORS_HPP

#ifndef RTCOVER_SOLVERS_HPP
#define RTCOVER_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rtcover/certificate.hpp"
#include "rtcover/hypergraph.hpp"

namespace rtcover {

struct SolveOptions {
  // Stop as soon as a cover of at most this size is found.
  std::optional<int> upper_limit;
  // Search-node budget; exhausting it yields an explicit Unknown result,
  // never a wrong number.
  std::optional<std::uint64_t> step_budget;
  // Root branches are split across this many workers. Values are identical
  // to the single-worker run; witnesses need not be.
  int threads = 1;
};

enum class SolveStatus { Exact, ReachedLimit, Unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::Exact;
  int value = 0;
  CoverCertificate witness;
  std::uint64_t steps = 0;
};

// Exact minimum s-cover by branch and bound: branch on the deficient edge
// with fewest remaining options (ties by lowest edge index), include/exclude
// its vertices in ascending global order. Root lower bound from a greedy
// edge-disjoint packing.
SolveResult tau_s_exact(const PartitionedHypergraph& h, int s,
                        const SolveOptions& opts = {});

// Maximum number of pairwise disjoint edges.
SolveResult nu_exact(const PartitionedHypergraph& h,
                     const SolveOptions& opts = {});

struct DesignCheck {
  bool ok = false;        // uniform and every vertex pair has co-degree t
  int v = 0;              // vertex count
  int edge_size = 0;      // uniform edge size (when uniform)
  int lambda = 0;         // the co-degree that was requested
  bool uniform = false;
  bool symmetric = false;  // edge count equals vertex count
};

// 2-(v, r, t) design test by full co-degree scan.
DesignCheck is_2_design(const GeneralHypergraph& d, int t);

using Resolution = std::vector<std::vector<int>>;  // classes of edge indices

struct ResolvabilityResult {
  SolveStatus status = SolveStatus::Exact;
  // Present iff a partition of the edges into perfect matchings exists
  // (meaningful only when status == Exact).
  std::optional<Resolution> resolution;
  std::uint64_t steps = 0;
};

// Backtracking partition of E into perfect matchings.
ResolvabilityResult is_resolvable(const GeneralHypergraph& d,
                                  const SolveOptions& opts = {});

}  // namespace rtcover

#endif  // RTCOVER_SOLVERS_HPP

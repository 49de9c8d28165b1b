#ifndef RTCOVER_CERTIFICATE_HPP
#define RTCOVER_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rtcover/hypergraph.hpp"

namespace rtcover {

// A vertex set claimed to s-cover a hypergraph, with provenance naming the
// producing operation and internal case. Vertices are sorted global ids.
struct CoverCertificate {
  std::vector<int> vertices;
  int s = 1;
  std::string provenance;
  std::optional<int> claimed_bound;

  int size() const { return static_cast<int>(vertices.size()); }
};

// Full scan: every edge of h contains at least cert.s members of
// cert.vertices.
bool validate_cover(const PartitionedHypergraph& h,
                    const CoverCertificate& cert);

// Same scan against an explicit vertex set.
bool is_s_cover(const PartitionedHypergraph& h,
                const std::vector<int>& vertices, int s);

}  // namespace rtcover

#endif  // RTCOVER_CERTIFICATE_HPP

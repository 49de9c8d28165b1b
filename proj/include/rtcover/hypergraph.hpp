#ifndef RTCOVER_HYPERGRAPH_HPP
#define RTCOVER_HYPERGRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rtcover {

// A vertex of an r-partite hypergraph: part index plus local index inside
// that part.
struct Vertex {
  int part = 0;
  int index = 0;
  auto operator<=>(const Vertex&) const = default;
};

// r-uniform r-partite hypergraph. Edges are transversals: entry j of an
// edge is the local index of the vertex chosen in part j. Global vertex ids
// concatenate the parts in order (offset = prefix sum of part_sizes); the
// file format and all tie-breaking use this numbering.
//
// Immutable after construction. Alongside the index representation each
// edge carries a bitset over global vertex ids; intersection sizes are
// AND+popcount over those blocks (see kernels.hpp).
class PartitionedHypergraph {
 public:
  PartitionedHypergraph() = default;
  PartitionedHypergraph(int r, std::vector<int> part_sizes,
                        std::vector<std::vector<int>> edges);

  int r() const { return r_; }
  const std::vector<int>& part_sizes() const { return part_sizes_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return vertex_count_; }

  // Global id of (part, local index). No range checking.
  int global_id(int part, int index) const {
    return offsets_[part] + index;
  }
  int global_id(Vertex v) const { return global_id(v.part, v.index); }
  Vertex vertex_of_global(int g) const;

  // Global ids of the vertices of edge e, one per part.
  const std::vector<int>& edge_globals(int e) const {
    return edge_globals_[e];
  }

  std::size_t words_per_edge() const { return nwords_; }
  const std::uint64_t* edge_bits(int e) const {
    return edge_bits_.data() + static_cast<std::size_t>(e) * nwords_;
  }

  // True when every edge has r in-range entries (bitsets are then exact).
  bool structurally_sound() const { return structurally_sound_; }

 private:
  int r_ = 0;
  std::vector<int> part_sizes_;
  std::vector<std::vector<int>> edges_;
  std::vector<int> offsets_;
  int vertex_count_ = 0;
  std::vector<std::vector<int>> edge_globals_;
  std::size_t nwords_ = 0;
  std::vector<std::uint64_t> edge_bits_;
  bool structurally_sound_ = true;
};

// Hypergraph without partition structure: duals and designs.
struct GeneralHypergraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> edges;  // each edge: sorted vertex ids
};

struct Violation {
  enum class Kind { EdgeLength, IndexOutOfRange, DuplicateEdge, PartSize };
  Kind kind;
  std::string detail;
};

// Structural check; empty report iff all invariants hold. Violations are
// data, not failures.
std::vector<Violation> validate(const PartitionedHypergraph& h);

// Forgets the partition structure (edges become sorted global-id sets).
GeneralHypergraph to_general(const PartitionedHypergraph& h);

}  // namespace rtcover

#endif  // RTCOVER_HYPERGRAPH_HPP

#include "rtcover/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rtcover {

PartitionedHypergraph::PartitionedHypergraph(
    int r, std::vector<int> part_sizes, std::vector<std::vector<int>> edges)
    : r_(r), part_sizes_(std::move(part_sizes)), edges_(std::move(edges)) {
  if (r_ < 0 || static_cast<int>(part_sizes_.size()) != r_) {
    throw std::invalid_argument("part_sizes must have exactly r entries");
  }
  offsets_.resize(r_ + 1, 0);
  for (int j = 0; j < r_; ++j) {
    offsets_[j + 1] = offsets_[j] + std::max(part_sizes_[j], 0);
  }
  vertex_count_ = offsets_[r_];

  nwords_ = (static_cast<std::size_t>(vertex_count_) + 63) / 64;
  edge_bits_.assign(edges_.size() * nwords_, 0);
  edge_globals_.resize(edges_.size());

  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (static_cast<int>(edge.size()) != r_) {
      structurally_sound_ = false;
      continue;
    }
    auto& globals = edge_globals_[e];
    globals.resize(r_);
    std::uint64_t* bits = edge_bits_.data() + e * nwords_;
    for (int j = 0; j < r_; ++j) {
      int v = edge[j];
      if (v < 0 || v >= part_sizes_[j]) {
        structurally_sound_ = false;
        globals[j] = -1;
        continue;
      }
      int g = offsets_[j] + v;
      globals[j] = g;
      bits[g >> 6] |= std::uint64_t{1} << (g & 63);
    }
  }
}

Vertex PartitionedHypergraph::vertex_of_global(int g) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), g);
  int part = static_cast<int>(it - offsets_.begin()) - 1;
  return Vertex{part, g - offsets_[part]};
}

std::vector<Violation> validate(const PartitionedHypergraph& h) {
  std::vector<Violation> report;
  for (int j = 0; j < h.r(); ++j) {
    if (h.part_sizes()[j] <= 0) {
      report.push_back({Violation::Kind::PartSize,
                        "part " + std::to_string(j) + " has non-positive size"});
    }
  }
  const auto& edges = h.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (static_cast<int>(edges[e].size()) != h.r()) {
      report.push_back({Violation::Kind::EdgeLength,
                        "edge " + std::to_string(e) + " has " +
                            std::to_string(edges[e].size()) +
                            " entries, expected " + std::to_string(h.r())});
      continue;
    }
    for (int j = 0; j < h.r(); ++j) {
      int v = edges[e][j];
      if (v < 0 || v >= h.part_sizes()[j]) {
        report.push_back({Violation::Kind::IndexOutOfRange,
                          "edge " + std::to_string(e) + ", part " +
                              std::to_string(j) + ": index " +
                              std::to_string(v) + " out of range"});
      }
    }
  }
  std::map<std::vector<int>, int> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [it, inserted] = seen.emplace(edges[e], static_cast<int>(e));
    if (!inserted) {
      report.push_back({Violation::Kind::DuplicateEdge,
                        "edge " + std::to_string(e) + " duplicates edge " +
                            std::to_string(it->second)});
    }
  }
  return report;
}

GeneralHypergraph to_general(const PartitionedHypergraph& h) {
  GeneralHypergraph g;
  g.vertex_count = h.vertex_count();
  g.edges.reserve(h.edges().size());
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<int> edge = h.edge_globals(e);
    std::sort(edge.begin(), edge.end());
    g.edges.push_back(std::move(edge));
  }
  return g;
}

}  // namespace rtcover

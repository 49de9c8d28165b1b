#include "rtcover/core.hpp"

#include <algorithm>
#include <stdexcept>

#include "rtcover/kernels.hpp"

namespace rtcover {

namespace {

void check_edge_index(const PartitionedHypergraph& h, int e) {
  if (e < 0 || e >= h.edge_count()) {
    throw std::out_of_range("edge index " + std::to_string(e) +
                            " out of range");
  }
}

}  // namespace

int intersection_size(const PartitionedHypergraph& h, int e, int f) {
  check_edge_index(h, e);
  check_edge_index(h, f);
  return kernels::and_popcount(h.edge_bits(e), h.edge_bits(f),
                               h.words_per_edge());
}

std::pair<int, std::pair<int, int>> min_pairwise_intersection(
    const PartitionedHypergraph& h) {
  int m = h.edge_count();
  if (m < 2) {
    throw std::invalid_argument(
        "min_pairwise_intersection needs at least two edges");
  }
  int best = h.r() + 1;
  std::pair<int, int> witness{0, 1};
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      int val = kernels::and_popcount(h.edge_bits(e), h.edge_bits(f),
                                      h.words_per_edge());
      if (val < best) {
        best = val;
        witness = {e, f};
        if (best == 0) return {best, witness};
      }
    }
  }
  return {best, witness};
}

namespace {

// DFS over k-subsets in lex order. suffix[i] = AND of edge bitsets i..m-1;
// every completion of a prefix has intersection ⊇ prefix ∩ suffix, which
// lower-bounds the reachable value and drives the pruning.
struct KwiseSearch {
  const PartitionedHypergraph& h;
  int k;
  std::size_t nwords;
  std::vector<std::uint64_t> suffix;
  int best;

  explicit KwiseSearch(const PartitionedHypergraph& g, int kk)
      : h(g), k(kk), nwords(g.words_per_edge()), best(g.r() + 1) {
    int m = h.edge_count();
    suffix.assign(static_cast<std::size_t>(m + 1) * nwords, ~std::uint64_t{0});
    for (int i = m - 1; i >= 0; --i) {
      const std::uint64_t* next = suffix.data() + (i + 1) * nwords;
      const std::uint64_t* bits = h.edge_bits(i);
      std::uint64_t* cur = suffix.data() + i * nwords;
      for (std::size_t w = 0; w < nwords; ++w) cur[w] = next[w] & bits[w];
    }
  }

  void run(std::vector<std::uint64_t>& current, int next_edge, int depth) {
    if (best == 0) return;
    if (depth == k) {
      best = std::min(best, kernels::popcount(current.data(), nwords));
      return;
    }
    int m = h.edge_count();
    for (int e = next_edge; e + (k - depth) <= m; ++e) {
      int reachable = kernels::and_popcount(
          current.data(), suffix.data() + e * nwords, nwords);
      // No completion from edges >= e can drop below current ∩ suffix[e],
      // and that bound only grows with e.
      if (reachable >= best) break;
      std::vector<std::uint64_t> with(nwords);
      const std::uint64_t* bits = h.edge_bits(e);
      for (std::size_t w = 0; w < nwords; ++w) with[w] = current[w] & bits[w];
      run(with, e + 1, depth + 1);
      if (best == 0) return;
    }
  }
};

}  // namespace

int kwise_min_intersection(const PartitionedHypergraph& h, int k) {
  if (k < 2 || k > h.edge_count()) {
    throw std::invalid_argument("kwise_min_intersection: k out of range");
  }
  KwiseSearch search(h, k);
  std::vector<std::uint64_t> all(h.words_per_edge(), ~std::uint64_t{0});
  // Mask padding bits beyond vertex_count so the full-universe start set is
  // exact.
  if (h.words_per_edge() > 0) {
    int tail = h.vertex_count() & 63;
    if (tail != 0) all.back() = (std::uint64_t{1} << tail) - 1;
  }
  search.run(all, 0, 0);
  return search.best;
}

std::optional<int> is_strictly_intersecting(const PartitionedHypergraph& h) {
  int m = h.edge_count();
  if (m < 2) return std::nullopt;
  int t = intersection_size(h, 0, 1);
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      if (intersection_size(h, e, f) != t) return std::nullopt;
    }
  }
  return t;
}

std::vector<int> vertex_degrees(const PartitionedHypergraph& h) {
  std::vector<int> deg(h.vertex_count(), 0);
  for (int e = 0; e < h.edge_count(); ++e) {
    for (int g : h.edge_globals(e)) {
      if (g >= 0) ++deg[g];
    }
  }
  return deg;
}

DegreeProfile degree_profile(const PartitionedHypergraph& h) {
  std::vector<int> deg = vertex_degrees(h);
  DegreeProfile p;
  if (deg.empty()) {
    p.regular = true;
    return p;
  }
  auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  p.regular = (*lo == *hi);
  return p;
}

IntersectionProfile triple_profile(const PartitionedHypergraph& h, int e1,
                                   int e2, int e3) {
  check_edge_index(h, e1);
  check_edge_index(h, e2);
  check_edge_index(h, e3);
  IntersectionProfile p;
  int i12 = intersection_size(h, e1, e2);
  int i13 = intersection_size(h, e1, e3);
  int i23 = intersection_size(h, e2, e3);
  p.t1 = kernels::and_popcount3(h.edge_bits(e1), h.edge_bits(e2),
                                h.edge_bits(e3), h.words_per_edge());
  p.a = i12 - p.t1;
  p.b = i13 - p.t1;
  p.c = i23 - p.t1;
  p.t2 = p.a + p.b + p.c;
  p.tprime = std::min({i12, i13, i23});
  return p;
}

int degree_wrt(const PartitionedHypergraph& h, int g,
               const std::vector<int>& edge_indices) {
  int d = 0;
  for (int e : edge_indices) {
    check_edge_index(h, e);
    const std::uint64_t* bits = h.edge_bits(e);
    if (bits[g >> 6] & (std::uint64_t{1} << (g & 63))) ++d;
  }
  return d;
}

int delta_h(const PartitionedHypergraph& h, const std::vector<int>& cover,
            const std::vector<int>& edge_indices) {
  for (int e : edge_indices) check_edge_index(h, e);
  std::vector<char> in_cover(h.vertex_count(), 0);
  for (int g : cover) {
    if (g >= 0 && g < h.vertex_count()) in_cover[g] = 1;
  }
  int total = 0;
  for (int j = 0; j < h.r(); ++j) {
    int part_size = h.part_sizes()[j];
    int best = -1;
    for (int v = 0; v < part_size; ++v) {
      int g = h.global_id(j, v);
      if (in_cover[g]) continue;
      int d = 0;
      for (int e : edge_indices) {
        if (h.edges()[e][j] == v) ++d;
      }
      best = std::max(best, d);
      if (best == static_cast<int>(edge_indices.size())) break;
    }
    if (best < 0) {
      throw std::domain_error("delta_h: part " + std::to_string(j) +
                              " lies wholly inside the cover set");
    }
    total += best;
  }
  return total;
}

std::optional<CoverCertificate> observation_cover_check(
    const PartitionedHypergraph& h, int t, const std::vector<int>& cover,
    const std::vector<int>& edge_indices) {
  int k = static_cast<int>(edge_indices.size());
  int delta = delta_h(h, cover, edge_indices);
  if (delta > k * t - 1) return std::nullopt;
  CoverCertificate cert;
  cert.vertices = cover;
  std::sort(cert.vertices.begin(), cert.vertices.end());
  cert.vertices.erase(std::unique(cert.vertices.begin(), cert.vertices.end()),
                      cert.vertices.end());
  cert.s = 1;
  cert.provenance = "obs-2.5";
  if (!validate_cover(h, cert)) return std::nullopt;
  return cert;
}

GeneralHypergraph dual(const GeneralHypergraph& h) {
  GeneralHypergraph d;
  d.vertex_count = static_cast<int>(h.edges.size());
  std::vector<std::vector<int>> incident(h.vertex_count);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    for (int v : h.edges[e]) incident[v].push_back(static_cast<int>(e));
  }
  for (auto& edge : incident) {
    if (!edge.empty()) d.edges.push_back(std::move(edge));
  }
  return d;
}

GeneralHypergraph dual(const PartitionedHypergraph& h) {
  return dual(to_general(h));
}

bool is_s_cover(const PartitionedHypergraph& h,
                const std::vector<int>& vertices, int s) {
  std::vector<char> chosen(h.vertex_count(), 0);
  for (int g : vertices) {
    if (g >= 0 && g < h.vertex_count()) chosen[g] = 1;
  }
  for (int e = 0; e < h.edge_count(); ++e) {
    int hits = 0;
    for (int g : h.edge_globals(e)) {
      if (g >= 0 && chosen[g]) ++hits;
    }
    if (hits < s) return false;
  }
  return true;
}

bool validate_cover(const PartitionedHypergraph& h,
                    const CoverCertificate& cert) {
  if (cert.claimed_bound && cert.size() > *cert.claimed_bound) return false;
  return is_s_cover(h, cert.vertices, cert.s);
}

}  // namespace rtcover

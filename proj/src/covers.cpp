#include "rtcover/covers.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "rtcover/arith.hpp"
#include "rtcover/kernels.hpp"

namespace rtcover {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_edge(const PartitionedHypergraph& h, int e) {
  if (e < 0 || e >= h.edge_count()) {
    throw std::out_of_range("edge index out of range");
  }
}

// delta_h unless the cover saturates a part; a saturated part makes the
// cover trivially valid, so the case analysis' delta bookkeeping does not apply.
std::optional<int> guarded_delta(const PartitionedHypergraph& h,
                                 const std::vector<int>& cover,
                                 const std::vector<int>& edges) {
  std::vector<char> mask(h.vertex_count(), 0);
  for (int g : cover) mask[g] = 1;
  for (int j = 0; j < h.r(); ++j) {
    bool all = true;
    for (int v = 0; v < h.part_sizes()[j] && all; ++v) {
      if (!mask[h.global_id(j, v)]) all = false;
    }
    if (all) return std::nullopt;
  }
  return delta_h(h, cover, edges);
}

void finish(const PartitionedHypergraph& h, CoverCertificate& cert) {
  std::sort(cert.vertices.begin(), cert.vertices.end());
  cert.vertices.erase(
      std::unique(cert.vertices.begin(), cert.vertices.end()),
      cert.vertices.end());
  if (!validate_cover(h, cert)) {
    throw std::invalid_argument(
        "constructed set failed cover validation; the hypergraph does not "
        "satisfy the stated intersection precondition");
  }
}

}  // namespace

CoverCertificate trivial_cover(const PartitionedHypergraph& h, int t) {
  require(h.edge_count() >= 1, "trivial_cover: empty hypergraph");
  require(t >= 1 && t <= h.r(), "trivial_cover: need 1 <= t <= r");
  CoverCertificate cert;
  cert.s = 1;
  cert.provenance = "trivial";
  cert.claimed_bound = h.r() - t + 1;
  for (int j = 0; j <= h.r() - t; ++j) {
    cert.vertices.push_back(h.global_id(j, h.edges()[0][j]));
  }
  finish(h, cert);
  return cert;
}

std::pair<CoverCertificate, ThreeEdgeTrace> two_edge_cover(
    const PartitionedHypergraph& h, int t, int e1, int e2) {
  check_edge(h, e1);
  check_edge(h, e2);
  require(e1 != e2, "two_edge_cover: edges must be distinct");
  require(t >= 1, "two_edge_cover: need t >= 1");
  int r = h.r();
  int tp = intersection_size(h, e1, e2);
  require(tp >= t, "two_edge_cover: |e1 ∩ e2| < t");

  std::vector<int> shared;
  std::vector<int> split_parts;
  for (int j = 0; j < r; ++j) {
    if (h.edges()[e1][j] == h.edges()[e2][j]) {
      shared.push_back(h.global_id(j, h.edges()[e1][j]));
    } else {
      split_parts.push_back(j);
    }
  }

  ThreeEdgeTrace trace;
  trace.chosen_edges = {e1, e2};
  trace.set_t = shared;

  CoverCertificate cert;
  cert.s = 1;
  if (tp >= r - 2 * t + 1) {
    int s = (r - tp) / 2 + tp - t + 1;
    if (s < 1 || s > tp) {
      throw std::logic_error("two_edge_cover: case-1 size out of range");
    }
    cert.vertices.assign(shared.begin(), shared.begin() + s);
    cert.provenance = "lemma-2.6/case-1";
    cert.claimed_bound = s;
    trace.case_id = cert.provenance;
    trace.s_value = s;
    trace.set_s = cert.vertices;
  } else {
    int doubled = r - 2 * t + 1 - tp;
    cert.vertices = shared;
    for (int i = 0; i < doubled; ++i) {
      int j = split_parts[i];
      cert.vertices.push_back(h.global_id(j, h.edges()[e1][j]));
      cert.vertices.push_back(h.global_id(j, h.edges()[e2][j]));
      trace.set_s.push_back(h.global_id(j, h.edges()[e1][j]));
      trace.set_s.push_back(h.global_id(j, h.edges()[e2][j]));
    }
    cert.provenance = "lemma-2.6/case-2";
    cert.claimed_bound = 2 * r - 4 * t - tp + 2;
    trace.case_id = cert.provenance;
    trace.s_value = doubled;
  }

  trace.delta = guarded_delta(h, cert.vertices, trace.chosen_edges);
  if (trace.delta && *trace.delta > 2 * t - 1) {
    throw std::logic_error("two_edge_cover: delta exceeds 2t-1");
  }
  finish(h, cert);
  return {cert, trace};
}

std::pair<CoverCertificate, ThreeEdgeTrace> three_edge_cover(
    const PartitionedHypergraph& h, int t, int e1, int e2, int e3) {
  check_edge(h, e1);
  check_edge(h, e2);
  check_edge(h, e3);
  require(e1 != e2 && e1 != e3 && e2 != e3,
          "three_edge_cover: edges must be distinct");
  require(t >= 1, "three_edge_cover: need t >= 1");
  int r = h.r();
  require(r >= 3 * t, "three_edge_cover: needs r >= 3t");

  IntersectionProfile prof = triple_profile(h, e1, e2, e3);
  require(prof.tprime >= t, "three_edge_cover: some pair intersects below t");
  int t1 = prof.t1;
  int t2 = prof.t2;

  ThreeEdgeTrace trace;
  trace.chosen_edges = {e1, e2, e3};

  // Classify the parts: all three edges agree (T), exactly two agree (the
  // doubled vertex goes to D, the remaining one to D'), or all differ.
  std::vector<int> d_verts, dp_verts;
  std::vector<std::array<int, 3>> open_parts;
  for (int j = 0; j < r; ++j) {
    int v1 = h.edges()[e1][j], v2 = h.edges()[e2][j], v3 = h.edges()[e3][j];
    if (v1 == v2 && v2 == v3) {
      trace.set_t.push_back(h.global_id(j, v1));
    } else if (v1 == v2) {
      d_verts.push_back(h.global_id(j, v1));
      dp_verts.push_back(h.global_id(j, v3));
    } else if (v1 == v3) {
      d_verts.push_back(h.global_id(j, v1));
      dp_verts.push_back(h.global_id(j, v2));
    } else if (v2 == v3) {
      d_verts.push_back(h.global_id(j, v2));
      dp_verts.push_back(h.global_id(j, v1));
    } else {
      open_parts.push_back({h.global_id(j, v1), h.global_id(j, v2),
                            h.global_id(j, v3)});
    }
  }
  if (static_cast<int>(trace.set_t.size()) != t1 ||
      static_cast<int>(d_verts.size()) != t2) {
    throw std::logic_error("three_edge_cover: part classification mismatch");
  }
  trace.set_d = d_verts;
  trace.set_dprime = dp_verts;

  CoverCertificate cert;
  cert.s = 1;
  if (t1 >= r - 3 * t + 1 + t2) {
    int s1 = t1 - static_cast<int>(floor_div(t1 - t2 - r + 3 * t - 1, 3));
    if (s1 < 1 || s1 > t1) {
      throw std::logic_error("three_edge_cover: case-1 size out of range");
    }
    cert.vertices.assign(trace.set_t.begin(), trace.set_t.begin() + s1);
    cert.provenance = "lemma-2.8/case-1";
    cert.claimed_bound =
        static_cast<int>(ceil_div(2 * t1 + t2 + r - 3 * t + 3, 3));
    trace.s_value = s1;
    trace.set_s = cert.vertices;
  } else if (t1 >= r - 3 * t + 1) {
    int s2 = r - 3 * t + 1 + t2 - t1;
    cert.vertices = trace.set_t;
    cert.vertices.insert(cert.vertices.end(), d_verts.begin(),
                         d_verts.begin() + s2);
    cert.provenance = "lemma-2.8/case-2";
    cert.claimed_bound = r - 3 * t + 1 + t2;
    trace.s_value = s2;
    trace.set_s.assign(d_verts.begin(), d_verts.begin() + s2);
  } else if (t1 >= r - 3 * t + 1 - t2) {
    int s3 = r - 3 * t + 1 - t1;
    if (s3 < 1 || s3 > t2) {
      throw std::logic_error("three_edge_cover: case-3 size out of range");
    }
    cert.vertices = trace.set_t;
    cert.vertices.insert(cert.vertices.end(), d_verts.begin(), d_verts.end());
    cert.vertices.insert(cert.vertices.end(), dp_verts.begin(),
                         dp_verts.begin() + s3);
    cert.provenance = "lemma-2.8/case-3";
    cert.claimed_bound = r - 3 * t + 1 + t2;
    trace.s_value = s3;
    trace.set_s.assign(dp_verts.begin(), dp_verts.begin() + s3);
  } else {
    int s4 = r - 3 * t + 1 - t1 - t2;
    if (s4 < 1 || s4 > static_cast<int>(open_parts.size())) {
      throw std::logic_error("three_edge_cover: case-4 size out of range");
    }
    cert.vertices = trace.set_t;
    cert.vertices.insert(cert.vertices.end(), d_verts.begin(), d_verts.end());
    cert.vertices.insert(cert.vertices.end(), dp_verts.begin(),
                         dp_verts.end());
    for (int i = 0; i < s4; ++i) {
      for (int g : open_parts[i]) {
        cert.vertices.push_back(g);
        trace.set_s.push_back(g);
      }
    }
    cert.provenance = "lemma-2.8/case-4";
    cert.claimed_bound = 3 * r - 2 * t1 - t2 - 9 * t + 3;
    trace.s_value = s4;
  }
  trace.case_id = cert.provenance;

  trace.delta = guarded_delta(h, cert.vertices, trace.chosen_edges);
  if (trace.delta && *trace.delta > 3 * t - 1) {
    throw std::logic_error("three_edge_cover: delta exceeds 3t-1");
  }
  finish(h, cert);
  return {cert, trace};
}

CoverCertificate small_r_cover(const PartitionedHypergraph& h, int t) {
  int r = h.r();
  require(t >= 1 && t <= r && r <= 3 * t - 1,
          "small_r_cover: needs t <= r <= 3t-1");
  require(h.edge_count() >= 1, "small_r_cover: empty hypergraph");
  int claimed = (r - t) / 2 + 1;

  if (h.edge_count() == 1) {
    CoverCertificate cert;
    cert.s = 1;
    cert.provenance = "small-r/single-edge";
    cert.claimed_bound = claimed;
    cert.vertices = {h.global_id(0, h.edges()[0][0])};
    finish(h, cert);
    return cert;
  }

  auto [tmin, pair] = min_pairwise_intersection(h);
  require(tmin >= t, "small_r_cover: hypergraph is not t-intersecting");
  auto [cert, trace] = two_edge_cover(h, tmin, pair.first, pair.second);
  if (cert.size() > claimed) {
    throw std::logic_error("small_r_cover: bound violated");
  }
  cert.provenance = "small-r/" + cert.provenance;
  cert.claimed_bound = claimed;
  return cert;
}

namespace {

struct Prop29Params {
  int x = 0, z = 0;
  bool range_a = true;
};

Prop29Params prop29_params(int r, int t) {
  if (3 * t <= r && r <= 5 * t - 2) {
    return {static_cast<int>(ceil_div(5 * r - 10 * t + 2, 4)),
            static_cast<int>(ceil_div(6 * t - r - 1, 8)), true};
  }
  if (5 * t - 1 <= r && 9 * r <= 52 * t - 13) {
    return {static_cast<int>(ceil_div(3 * r - 1, 4)),
            static_cast<int>(ceil_div(9 * r - 44 * t + 13, 8)), false};
  }
  throw std::invalid_argument(
      "prop_29_cover: (r,t) outside 3t <= r <= (52t-13)/9");
}

// Arithmetic facts the case analysis rests on. They always hold in range A
// and are re-checked at runtime for range B rather than assumed.
bool prop29_inequalities_hold(int r, int t, int x, int z) {
  return 1 <= z && z <= t && 0 <= x && x <= r - t &&
         x + 2 * z > r - t &&                  // no large pair intersection
         x + z >= t + 1 &&                     // covers lemma case 1
         5 * x + 2 * z >= 6 * r - 11 * t + 2 &&  // lemma case 2
         x + 2 * z >= 3 * r - 11 * t + 3;        // lemma cases 3 and 4
}

}  // namespace

std::pair<int, int> prop_29_xz(int r, int t) {
  Prop29Params params = prop29_params(r, t);
  return {params.x, params.z};
}

CoverCertificate prop_29_cover(const PartitionedHypergraph& h, int t) {
  int r = h.r();
  require(t >= 1, "prop_29_cover: need t >= 1");
  require(h.edge_count() >= 1, "prop_29_cover: empty hypergraph");
  Prop29Params params = prop29_params(r, t);
  int x = params.x, z = params.z;
  bool checks_ok = prop29_inequalities_hold(r, t, x, z);
  if (!checks_ok && params.range_a) {
    throw std::logic_error("prop_29_cover: range-A inequalities failed");
  }

  auto bounded = [&](CoverCertificate cert) {
    if (cert.size() <= x + z) {
      cert.claimed_bound = x + z;
    } else if (params.range_a) {
      throw std::logic_error("prop_29_cover: certificate exceeds x+z");
    } else {
      cert.claimed_bound.reset();
      cert.provenance += "/bound-miss";
    }
    if (!checks_ok) cert.provenance += "/range-b-unverified";
    return cert;
  };

  if (h.edge_count() == 1) {
    // degenerate: a single vertex covers
    CoverCertificate cert;
    cert.s = 1;
    cert.provenance = "prop-2.9/single-edge";
    cert.vertices = {h.global_id(0, h.edges()[0][0])};
    finish(h, cert);
    return bounded(std::move(cert));
  }

  auto [tmin, pair] = min_pairwise_intersection(h);
  require(tmin >= t, "prop_29_cover: hypergraph is not t-intersecting");
  if (tmin > t) {
    // all intersections exceed t: rerun at the true level
    CoverCertificate cert;
    if (r <= 3 * tmin - 1) {
      cert = small_r_cover(h, tmin);
    } else {
      cert = prop_29_cover(h, tmin);
    }
    cert.provenance = "prop-2.9/recurse/" + cert.provenance;
    return bounded(std::move(cert));
  }

  int e1 = pair.first, e2 = pair.second;
  std::vector<int> y_set;
  for (int j = 0; j < r && static_cast<int>(y_set.size()) < z; ++j) {
    if (h.edges()[e1][j] == h.edges()[e2][j]) {
      y_set.push_back(h.global_id(j, h.edges()[e1][j]));
    }
  }
  int got_z = static_cast<int>(y_set.size());
  if (got_z < z) throw std::logic_error("prop_29_cover: z exceeds t'");
  for (int j = 0; j < r && static_cast<int>(y_set.size()) < z + x; ++j) {
    if (h.edges()[e1][j] != h.edges()[e2][j]) {
      y_set.push_back(h.global_id(j, h.edges()[e1][j]));
    }
  }
  if (static_cast<int>(y_set.size()) < z + x) {
    throw std::logic_error("prop_29_cover: x exceeds r - t'");
  }

  std::vector<std::uint64_t> y_bits(h.words_per_edge(), 0);
  for (int g : y_set) y_bits[g >> 6] |= std::uint64_t{1} << (g & 63);
  int e3 = -1;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (kernels::and_is_zero(y_bits.data(), h.edge_bits(e),
                             h.words_per_edge())) {
      e3 = e;
      break;
    }
  }

  if (e3 < 0) {
    // no edge avoids Y, so Y itself is the cover
    CoverCertificate cert;
    cert.s = 1;
    cert.provenance = "prop-2.9/y-is-cover";
    cert.vertices = std::move(y_set);
    finish(h, cert);
    return bounded(std::move(cert));
  }

  int i23 = intersection_size(h, e2, e3);
  if (i23 > 2 * r - 4 * t - x - z + 1) {
    // the pair (e2,e3) lands in the dichotomy gap; the two-edge cover on it
    // already meets x+z
    auto [cert, trace] = two_edge_cover(h, t, e2, e3);
    cert.provenance = "prop-2.9/pair-gap/" + cert.provenance;
    return bounded(std::move(cert));
  }

  auto [cert, trace] = three_edge_cover(h, t, e1, e2, e3);
  cert.provenance = "prop-2.9/" + cert.provenance;
  return bounded(std::move(cert));
}

namespace {

// Lex-first subset of `size` edges whose common intersection has at most
// `threshold` vertices; empty when none exists (or the step guard fires,
// reported separately).
struct SubsetSearch {
  const PartitionedHypergraph& h;
  int size, threshold;
  std::size_t nwords;
  std::vector<std::uint64_t> suffix;
  std::vector<int> found;
  std::uint64_t steps = 0, budget;
  bool out_of_budget = false;

  SubsetSearch(const PartitionedHypergraph& hh, int sz, int thr,
               std::uint64_t b)
      : h(hh), size(sz), threshold(thr), nwords(hh.words_per_edge()),
        budget(b) {
    int m = h.edge_count();
    suffix.assign(static_cast<std::size_t>(m + 1) * nwords, ~std::uint64_t{0});
    for (int i = m - 1; i >= 0; --i) {
      const std::uint64_t* next = suffix.data() + (i + 1) * nwords;
      const std::uint64_t* bits = h.edge_bits(i);
      std::uint64_t* cur = suffix.data() + i * nwords;
      for (std::size_t w = 0; w < nwords; ++w) cur[w] = next[w] & bits[w];
    }
  }

  bool dfs(std::vector<std::uint64_t>& current, std::vector<int>& chosen,
           int next_edge) {
    if (out_of_budget) return false;
    if (++steps > budget) {
      out_of_budget = true;
      return false;
    }
    int depth = static_cast<int>(chosen.size());
    if (depth == size) {
      if (kernels::popcount(current.data(), nwords) <= threshold) {
        found = chosen;
        return true;
      }
      return false;
    }
    int m = h.edge_count();
    for (int e = next_edge; e + (size - depth) <= m; ++e) {
      // everything reachable through e still contains current ∩ suffix[e]
      if (kernels::and_popcount(current.data(), suffix.data() + e * nwords,
                                nwords) > threshold) {
        break;
      }
      std::vector<std::uint64_t> with(nwords);
      const std::uint64_t* bits = h.edge_bits(e);
      for (std::size_t w = 0; w < nwords; ++w) with[w] = current[w] & bits[w];
      chosen.push_back(e);
      if (dfs(with, chosen, e + 1)) return true;
      chosen.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

std::vector<int> bits_to_globals(const std::vector<std::uint64_t>& bits,
                                 int vertex_count) {
  std::vector<int> out;
  for (int g = 0; g < vertex_count; ++g) {
    if (bits[g >> 6] & (std::uint64_t{1} << (g & 63))) out.push_back(g);
  }
  return out;
}

}  // namespace

CoverCertificate kwise_cover(const PartitionedHypergraph& h, int k, int t) {
  int r = h.r();
  int m = h.edge_count();
  require(k >= 2, "kwise_cover: need k >= 2");
  require(t >= 1 && t <= r, "kwise_cover: need 1 <= t <= r");
  require(m >= 1, "kwise_cover: empty hypergraph");

  if (k == 2) {
    require(3 * t > r, "kwise_cover: k = 2 requires t > r/3");
    CoverCertificate cert = small_r_cover(h, t);
    cert.provenance = "thm-1.7/k=2/" + cert.provenance;
    cert.claimed_bound = (r - t) / 2 + 1;
    return cert;
  }

  int threshold = (r - t) / k + t;
  int subset_size = std::min(k - 1, m);
  int claimed = (r - t) / k + 1;

  SubsetSearch search(h, subset_size, threshold, 5'000'000);
  std::vector<std::uint64_t> all(h.words_per_edge(), ~std::uint64_t{0});
  if (h.words_per_edge() > 0) {
    int tail = h.vertex_count() & 63;
    if (tail != 0) all.back() = (std::uint64_t{1} << tail) - 1;
  }
  std::vector<int> chosen;
  bool found = search.dfs(all, chosen, 0);

  if (search.out_of_budget) {
    // explicit fallback: valid cover, no bound claim
    CoverCertificate cert = trivial_cover(h, t);
    cert.claimed_bound.reset();
    cert.provenance = "thm-1.7/guard-fallback/" + cert.provenance;
    return cert;
  }

  if (found) {
    std::vector<std::uint64_t> inter = all;
    for (int e : search.found) {
      const std::uint64_t* bits = h.edge_bits(e);
      for (std::size_t w = 0; w < h.words_per_edge(); ++w) inter[w] &= bits[w];
    }
    std::vector<int> u = bits_to_globals(inter, h.vertex_count());
    if (static_cast<int>(u.size()) < t) {
      throw std::invalid_argument(
          "kwise_cover: hypergraph is not k-wise t-intersecting");
    }
    CoverCertificate cert;
    cert.s = 1;
    cert.provenance = "thm-1.7/k=" + std::to_string(k);
    cert.vertices.assign(u.begin() + (t - 1), u.end());
    cert.claimed_bound = claimed;
    finish(h, cert);
    return cert;
  }

  // every (k-1)-subset intersects above the threshold: recurse one level
  int t_next = threshold + 1;
  CoverCertificate cert = kwise_cover(h, k - 1, t_next);
  if (cert.size() > claimed) {
    throw std::logic_error("kwise_cover: recursion exceeded the bound");
  }
  cert.provenance = "thm-1.7/k=" + std::to_string(k) + "/" + cert.provenance;
  cert.claimed_bound = claimed;
  return cert;
}

CoverCertificate general_cover(const PartitionedHypergraph& h, int t) {
  int r = h.r();
  require(t >= 1 && t <= r, "general_cover: need 1 <= t <= r");
  if (h.edge_count() == 0) {
    CoverCertificate cert;
    cert.provenance = "empty";
    cert.claimed_bound = 0;
    return cert;
  }

  // candidates in tie-break priority order; the first minimum wins
  std::vector<CoverCertificate> candidates;
  if (r <= 3 * t - 1) {
    candidates.push_back(small_r_cover(h, t));
  }
  if (3 * t <= r && 9 * r <= 52 * t - 13) {
    candidates.push_back(prop_29_cover(h, t));
  }
  if (h.edge_count() >= 2) {
    auto [tmin, pair] = min_pairwise_intersection(h);
    require(tmin >= t, "general_cover: hypergraph is not t-intersecting");
    auto [cert, trace] = two_edge_cover(h, tmin, pair.first, pair.second);
    candidates.push_back(std::move(cert));
  }
  candidates.push_back(trivial_cover(h, t));

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].size() < candidates[best].size()) best = i;
  }
  return candidates[best];
}

DichotomyReport corollary_27_check(const PartitionedHypergraph& h, int t,
                                   int eta) {
  DichotomyReport report;
  report.lo = 2 * eta + 2 * t - h.r();
  report.hi = 2 * h.r() - 4 * t - eta + 1;
  int m = h.edge_count();
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      ++report.pairs_checked;
      int size = intersection_size(h, e, f);
      if (size >= report.lo || size <= report.hi) continue;
      report.violations.push_back({e, f, size});
    }
  }
  return report;
}

}  // namespace rtcover

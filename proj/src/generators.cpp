#include "rtcover/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace rtcover {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;  // n itself is prime
}

namespace {

// Lexicographic enumeration of the k-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

Generated h_r_ell(int r, int ell) {
  if (r < 1 || ell < 0 || ell > r - 1) {
    throw std::invalid_argument("h_r_ell requires 0 <= ell <= r-1");
  }
  auto subsets = subsets_lex(r, r - ell);
  int m = static_cast<int>(subsets.size());

  std::vector<std::vector<int>> edges(m, std::vector<int>(r));
  for (int i = 0; i < m; ++i) {
    std::vector<char> in_subset(r, 0);
    for (int j : subsets[i]) in_subset[j] = 1;
    for (int j = 0; j < r; ++j) {
      edges[i][j] = in_subset[j] ? 0 : i + 1;
    }
  }

  GeneratorMetadata meta;
  meta.family = "hrl";
  meta.r = r;
  meta.guaranteed_t = std::max(r - 2 * ell, 0);
  if (ell <= (r - 1) / 2) meta.claimed_tau = ell + 1;
  for (int k = 3; k <= 4; ++k) {
    if (r - k * ell >= 1) meta.guaranteed_kwise.emplace_back(k, r - k * ell);
  }
  meta.params["ell"] = ell;
  meta.params["m"] = m;

  return {PartitionedHypergraph(r, std::vector<int>(r, m + 1),
                                std::move(edges)),
          std::move(meta)};
}

PartitionedHypergraph blowup(const PartitionedHypergraph& h, int t) {
  if (t < 1) throw std::invalid_argument("blowup requires t >= 1");
  int r = h.r();
  std::vector<int> part_sizes;
  part_sizes.reserve(static_cast<std::size_t>(r) * t);
  for (int j = 0; j < r; ++j) {
    for (int copy = 0; copy < t; ++copy) {
      part_sizes.push_back(h.part_sizes()[j]);
    }
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(h.edges().size());
  for (const auto& edge : h.edges()) {
    std::vector<int> blown;
    blown.reserve(static_cast<std::size_t>(r) * t);
    for (int j = 0; j < r; ++j) {
      for (int copy = 0; copy < t; ++copy) blown.push_back(edge[j]);
    }
    edges.push_back(std::move(blown));
  }
  return PartitionedHypergraph(r * t, std::move(part_sizes), std::move(edges));
}

namespace {

// Normalized representatives (first nonzero coordinate 1) of the 1-dim
// subspaces of F_q^dim, in lexicographic order.
std::vector<std::vector<int>> projective_points(int q, int dim) {
  std::vector<std::vector<int>> points;
  std::vector<int> v(dim, 0);
  while (true) {
    int lead = -1;
    for (int i = 0; i < dim; ++i) {
      if (v[i] != 0) {
        lead = i;
        break;
      }
    }
    if (lead >= 0 && v[lead] == 1) points.push_back(v);
    int i = dim - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return points;
}

int dot_mod(const std::vector<int>& a, const std::vector<int>& b, int q) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % q;
  return s;
}

}  // namespace

GeneralHypergraph projective_plane_lines(int q) {
  if (!is_prime(q)) {
    throw std::invalid_argument("projective plane generator needs q prime");
  }
  auto points = projective_points(q, 3);
  GeneralHypergraph pg;
  pg.vertex_count = static_cast<int>(points.size());
  for (const auto& line : points) {
    std::vector<int> edge;
    for (int p = 0; p < pg.vertex_count; ++p) {
      if (dot_mod(line, points[p], q) == 0) edge.push_back(p);
    }
    pg.edges.push_back(std::move(edge));
  }
  return pg;
}

Generated truncated_projective_plane(int q) {
  if (!is_prime(q)) {
    throw std::invalid_argument(
        "truncated_projective_plane needs q prime (prime powers not "
        "supported)");
  }
  auto points = projective_points(q, 3);
  int n_points = static_cast<int>(points.size());

  // Delete the lexicographically first point and the pencil of lines
  // through it; the pencil's point classes become the parts.
  const auto& deleted = points[0];
  std::vector<int> part_of(n_points, -1), index_in_part(n_points, -1);
  int n_parts = 0;
  for (int li = 0; li < n_points; ++li) {
    if (dot_mod(points[li], deleted, q) != 0) continue;
    int local = 0;
    for (int p = 1; p < n_points; ++p) {
      if (dot_mod(points[li], points[p], q) == 0) {
        part_of[p] = n_parts;
        index_in_part[p] = local++;
      }
    }
    ++n_parts;
  }

  int r = q + 1;
  std::vector<std::vector<int>> edges;
  for (int li = 0; li < n_points; ++li) {
    if (dot_mod(points[li], deleted, q) == 0) continue;  // deleted line
    std::vector<int> edge(r, -1);
    for (int p = 1; p < n_points; ++p) {
      if (dot_mod(points[li], points[p], q) == 0) {
        edge[part_of[p]] = index_in_part[p];
      }
    }
    edges.push_back(std::move(edge));
  }
  std::sort(edges.begin(), edges.end());

  GeneratorMetadata meta;
  meta.family = "tpp";
  meta.r = r;
  meta.guaranteed_t = 1;
  meta.claimed_tau = q;
  meta.claimed_regular_degree = q;
  meta.claimed_strict = 1;
  meta.params["q"] = q;

  return {PartitionedHypergraph(r, std::vector<int>(r, q), std::move(edges)),
          std::move(meta)};
}

GeneralHypergraph affine_line_design(int q, int n) {
  if (!is_prime(q)) {
    throw std::invalid_argument("affine line design needs q prime");
  }
  long long n_points = 1;
  for (int i = 0; i < n; ++i) {
    n_points *= q;
    if (n_points > 4096) {
      throw std::invalid_argument("affine line design guard: q^n <= 4096");
    }
  }
  auto decode = [&](long long id) {
    std::vector<int> coords(n);
    for (int i = n - 1; i >= 0; --i) {
      coords[i] = static_cast<int>(id % q);
      id /= q;
    }
    return coords;
  };
  auto encode = [&](const std::vector<int>& coords) {
    long long id = 0;
    for (int c : coords) id = id * q + c;
    return id;
  };

  auto directions = projective_points(q, n);
  GeneralHypergraph design;
  design.vertex_count = static_cast<int>(n_points);
  for (const auto& dir : directions) {
    std::vector<char> used(n_points, 0);
    for (long long p = 0; p < n_points; ++p) {
      if (used[p]) continue;
      auto base = decode(p);
      std::vector<int> line;
      for (int k = 0; k < q; ++k) {
        std::vector<int> pt(n);
        for (int i = 0; i < n; ++i) pt[i] = (base[i] + k * dir[i]) % q;
        long long id = encode(pt);
        used[id] = 1;
        line.push_back(static_cast<int>(id));
      }
      std::sort(line.begin(), line.end());
      design.edges.push_back(std::move(line));
    }
  }
  return design;
}

Generated affine_lines_dual(int q, int n) {
  if (n < 2) throw std::invalid_argument("affine_lines_dual needs n >= 2");
  GeneralHypergraph design = affine_line_design(q, n);

  long long n_points = design.vertex_count;
  long long lines_per_class = n_points / q;
  int r = static_cast<int>(design.edges.size() / lines_per_class);

  // Lines were emitted class by class; a point's edge picks its line's
  // local index inside each class.
  std::vector<std::vector<int>> edges(n_points, std::vector<int>(r, -1));
  for (std::size_t li = 0; li < design.edges.size(); ++li) {
    int cls = static_cast<int>(li / lines_per_class);
    int local = static_cast<int>(li % lines_per_class);
    for (int p : design.edges[li]) edges[p][cls] = local;
  }

  GeneratorMetadata meta;
  meta.family = "affine-dual";
  meta.r = r;
  meta.guaranteed_t = 1;
  meta.claimed_regular_degree = q;
  meta.claimed_strict = 1;
  meta.params["q"] = q;
  meta.params["n"] = n;

  return {PartitionedHypergraph(
              r, std::vector<int>(r, static_cast<int>(lines_per_class)),
              std::move(edges)),
          std::move(meta)};
}

PartitionedHypergraph complete_partite(const std::vector<int>& part_sizes) {
  long long count = 1;
  for (int s : part_sizes) {
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
    count *= s;
    if (count > 200000) {
      throw std::invalid_argument("complete_partite guard: too many edges");
    }
  }
  int r = static_cast<int>(part_sizes.size());
  std::vector<std::vector<int>> edges;
  edges.reserve(count);
  std::vector<int> cur(r, 0);
  while (true) {
    edges.push_back(cur);
    int j = r - 1;
    while (j >= 0 && cur[j] == part_sizes[j] - 1) cur[j--] = 0;
    if (j < 0) break;
    ++cur[j];
  }
  return PartitionedHypergraph(r, part_sizes, std::move(edges));
}

PartitionedHypergraph shared_vertex_extension(const PartitionedHypergraph& h,
                                              int a) {
  if (a < 1) throw std::invalid_argument("extension needs a >= 1");
  std::vector<int> part_sizes = h.part_sizes();
  part_sizes.insert(part_sizes.end(), a, 1);
  std::vector<std::vector<int>> edges = h.edges();
  for (auto& edge : edges) edge.insert(edge.end(), a, 0);
  return PartitionedHypergraph(h.r() + a, std::move(part_sizes),
                               std::move(edges));
}

PartitionedHypergraph delete_parts(const PartitionedHypergraph& h,
                                   const std::vector<int>& keep_parts) {
  std::vector<int> keep = keep_parts;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("keep_parts must be non-empty");
  for (int j : keep) {
    if (j < 0 || j >= h.r()) {
      throw std::invalid_argument("keep_parts index out of range");
    }
  }
  std::vector<int> part_sizes;
  for (int j : keep) part_sizes.push_back(h.part_sizes()[j]);
  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  for (const auto& edge : h.edges()) {
    std::vector<int> restricted;
    restricted.reserve(keep.size());
    for (int j : keep) restricted.push_back(edge[j]);
    if (seen.insert(restricted).second) edges.push_back(std::move(restricted));
  }
  return PartitionedHypergraph(static_cast<int>(keep.size()),
                               std::move(part_sizes), std::move(edges));
}

Generated random_rt_graph(int r, int t, int target_edges, std::uint64_t seed,
                          int part_size) {
  if (t > r || t < 0) throw std::invalid_argument("random_rt_graph needs t <= r");
  if (part_size <= 0) part_size = r;
  std::mt19937_64 rng(seed);

  auto positions_agree = [&](const std::vector<int>& a,
                             const std::vector<int>& b) {
    int agree = 0;
    for (int j = 0; j < r; ++j) {
      if (a[j] == b[j]) ++agree;
    }
    return agree;
  };

  std::vector<std::vector<int>> accepted;
  std::set<std::vector<int>> seen;
  long long cap = 1000LL * std::max(target_edges, 1);
  int mutate_count = std::max(1, (r - t) / 2);

  for (long long proposals = 0;
       proposals < cap && static_cast<int>(accepted.size()) < target_edges;
       ++proposals) {
    std::vector<int> cand(r);
    bool mutate = !accepted.empty() && (rng() & 1);
    if (mutate && t < r) {
      cand = accepted[rng() % accepted.size()];
      // Resampling at most floor((r-t)/2) positions keeps the proposal
      // t-intersecting with its source; acceptance still checks all edges.
      std::vector<int> pos(r);
      for (int j = 0; j < r; ++j) pos[j] = j;
      for (int i = 0; i < mutate_count; ++i) {
        int j = i + static_cast<int>(rng() % (r - i));
        std::swap(pos[i], pos[j]);
        cand[pos[i]] = static_cast<int>(rng() % part_size);
      }
    } else {
      for (int j = 0; j < r; ++j) cand[j] = static_cast<int>(rng() % part_size);
    }
    if (seen.count(cand)) continue;
    bool ok = true;
    for (const auto& e : accepted) {
      if (positions_agree(cand, e) < t) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    seen.insert(cand);
    accepted.push_back(std::move(cand));
  }

  GeneratorMetadata meta;
  meta.family = "random";
  meta.r = r;
  meta.guaranteed_t = t;
  meta.params["seed"] = static_cast<long long>(seed);
  meta.params["requested_edges"] = target_edges;
  meta.params["achieved_edges"] = static_cast<long long>(accepted.size());
  meta.params["part_size"] = part_size;

  return {PartitionedHypergraph(r, std::vector<int>(r, part_size),
                                std::move(accepted)),
          std::move(meta)};
}

}  // namespace rtcover

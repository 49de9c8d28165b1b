#include "rtcover/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "rtcover/kernels.hpp"

namespace rtcover {

namespace {

constexpr int kNoLimit = 1 << 29;

// Greedy maximal set of pairwise disjoint edges, scanned in index order.
int greedy_packing(const PartitionedHypergraph& h) {
  std::size_t nwords = h.words_per_edge();
  std::vector<std::uint64_t> taken(nwords, 0);
  int count = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (kernels::and_is_zero(taken.data(), h.edge_bits(e), nwords)) {
      const std::uint64_t* bits = h.edge_bits(e);
      for (std::size_t w = 0; w < nwords; ++w) taken[w] |= bits[w];
      ++count;
    }
  }
  return count;
}

// Valid s-cover to seed the incumbent: give every deficient edge its lowest
// unchosen vertices.
std::vector<int> greedy_s_cover(const PartitionedHypergraph& h, int s) {
  std::vector<char> chosen(h.vertex_count(), 0);
  std::vector<int> cover;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<int> globals = h.edge_globals(e);
    std::sort(globals.begin(), globals.end());
    int have = 0;
    for (int g : globals) {
      if (chosen[g]) ++have;
    }
    for (int g : globals) {
      if (have >= s) break;
      if (!chosen[g]) {
        chosen[g] = 1;
        cover.push_back(g);
        ++have;
      }
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

struct TauSearch {
  const PartitionedHypergraph& h;
  int s;
  std::uint64_t budget;
  std::atomic<int>* shared_best;
  std::optional<int> upper_limit;

  std::vector<char> in_cover, banned;
  std::vector<int> covered;  // per edge: |C ∩ e|
  std::vector<int> chosen;
  int best = kNoLimit;
  std::vector<int> best_set;
  std::uint64_t steps = 0;
  bool out_of_budget = false;
  bool limit_reached = false;

  TauSearch(const PartitionedHypergraph& hf, int sv, std::uint64_t b,
            std::atomic<int>* sb, std::optional<int> lim)
      : h(hf),
        s(sv),
        budget(b),
        shared_best(sb),
        upper_limit(lim),
        in_cover(hf.vertex_count(), 0),
        banned(hf.vertex_count(), 0),
        covered(hf.edge_count(), 0) {}

  void seed(const std::vector<int>& cover) {
    best = static_cast<int>(cover.size());
    best_set = cover;
    if (upper_limit && best <= *upper_limit) limit_reached = true;
  }

  int incumbent() const {
    int b = best;
    if (shared_best) b = std::min(b, shared_best->load());
    return b;
  }

  void record_solution() {
    int size = static_cast<int>(chosen.size());
    if (size < best) {
      best = size;
      best_set = chosen;
    }
    if (shared_best) {
      int cur = shared_best->load();
      while (size < cur && !shared_best->compare_exchange_weak(cur, size)) {
      }
    }
    if (upper_limit && size <= *upper_limit) limit_reached = true;
  }

  // Deficient edge with fewest remaining options; -1 when all edges are
  // satisfied, -2 when some edge cannot be satisfied any more.
  int pick_edge() const {
    int pick = -1;
    int pick_avail = kNoLimit;
    for (int e = 0; e < h.edge_count(); ++e) {
      int need = s - covered[e];
      if (need <= 0) continue;
      int avail = 0;
      for (int g : h.edge_globals(e)) {
        if (!in_cover[g] && !banned[g]) ++avail;
      }
      if (avail < need) return -2;
      if (avail < pick_avail) {
        pick_avail = avail;
        pick = e;
      }
    }
    return pick;
  }

  int deficiency_bound() const {
    int worst = 0;
    for (int e = 0; e < h.edge_count(); ++e) {
      worst = std::max(worst, s - covered[e]);
    }
    return worst;
  }

  // Counting bound: every added vertex reduces the total remaining
  // deficiency by at most the number of deficient edges through it.
  mutable std::vector<int> unit_scratch;
  int counting_bound() const {
    unit_scratch.assign(h.vertex_count(), 0);
    long long total = 0;
    int max_unit = 0;
    for (int e = 0; e < h.edge_count(); ++e) {
      int need = s - covered[e];
      if (need <= 0) continue;
      total += need;
      for (int g : h.edge_globals(e)) {
        if (!in_cover[g] && !banned[g]) {
          max_unit = std::max(max_unit, ++unit_scratch[g]);
        }
      }
    }
    if (total == 0) return 0;
    if (max_unit == 0) return kNoLimit;  // deficient edge with no options
    return static_cast<int>((total + max_unit - 1) / max_unit);
  }

  void add_vertex(int g) {
    in_cover[g] = 1;
    chosen.push_back(g);
    Vertex v = h.vertex_of_global(g);
    for (int e = 0; e < h.edge_count(); ++e) {
      if (h.edges()[e][v.part] == v.index) ++covered[e];
    }
  }

  void remove_vertex(int g) {
    in_cover[g] = 0;
    chosen.pop_back();
    Vertex v = h.vertex_of_global(g);
    for (int e = 0; e < h.edge_count(); ++e) {
      if (h.edges()[e][v.part] == v.index) --covered[e];
    }
  }

  void dfs() {
    if (out_of_budget || limit_reached) return;
    if (++steps > budget) {
      out_of_budget = true;
      return;
    }
    int need = deficiency_bound();
    if (need == 0) {
      record_solution();
      return;
    }
    need = std::max(need, counting_bound());
    if (static_cast<int>(chosen.size()) + need >= incumbent()) return;
    int e = pick_edge();
    if (e == -2) return;

    std::vector<int> options;
    for (int g : h.edge_globals(e)) {
      if (!in_cover[g] && !banned[g]) options.push_back(g);
    }
    std::sort(options.begin(), options.end());
    std::vector<int> banned_here;
    for (int g : options) {
      add_vertex(g);
      dfs();
      remove_vertex(g);
      if (out_of_budget || limit_reached) break;
      banned[g] = 1;
      banned_here.push_back(g);
    }
    for (int g : banned_here) banned[g] = 0;
  }
};

SolveResult finish_result(TauSearch& search, int s) {
  SolveResult result;
  result.steps = search.steps;
  result.value = search.best;
  if (search.limit_reached) {
    result.status = SolveStatus::ReachedLimit;
  } else if (search.out_of_budget) {
    result.status = SolveStatus::Unknown;
  } else {
    result.status = SolveStatus::Exact;
  }
  result.witness.vertices = search.best_set;
  std::sort(result.witness.vertices.begin(), result.witness.vertices.end());
  result.witness.s = s;
  result.witness.provenance = "exact";
  result.witness.claimed_bound = result.value;
  return result;
}

}  // namespace

SolveResult tau_s_exact(const PartitionedHypergraph& h, int s,
                        const SolveOptions& opts) {
  if (s < 1) throw std::invalid_argument("tau_s_exact needs s >= 1");
  SolveResult result;
  result.witness.s = s;
  result.witness.provenance = "exact";
  if (h.edge_count() == 0) {
    result.witness.claimed_bound = 0;
    return result;
  }
  if (s > h.r()) {
    throw std::invalid_argument("no s-cover exists: s exceeds edge size");
  }
  if (!h.structurally_sound()) {
    throw std::invalid_argument(
        "tau_s_exact needs a structurally valid instance");
  }

  std::uint64_t budget =
      opts.step_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  TauSearch root_probe(h, s, 1, nullptr, std::nullopt);
  int root_lb = std::max(s * greedy_packing(h), root_probe.counting_bound());
  std::vector<int> seed_cover = greedy_s_cover(h, s);

  if (opts.threads <= 1) {
    TauSearch search(h, s, budget, nullptr, opts.upper_limit);
    search.seed(seed_cover);
    search.dfs();
    SolveResult r = finish_result(search, s);
    if (r.status == SolveStatus::Unknown && r.value == root_lb) {
      r.status = SolveStatus::Exact;  // incumbent met the root lower bound
    }
    return r;
  }

  // Parallel mode: split the root branching across workers. The shared
  // incumbent only tightens pruning, so the reported value matches the
  // serial run on completed searches.
  TauSearch probe(h, s, budget, nullptr, opts.upper_limit);
  int root_edge = probe.pick_edge();
  if (root_edge < 0) {
    TauSearch search(h, s, budget, nullptr, opts.upper_limit);
    search.seed(seed_cover);
    search.dfs();
    return finish_result(search, s);
  }
  std::vector<int> options = h.edge_globals(root_edge);
  std::sort(options.begin(), options.end());

  std::atomic<int> shared_best{static_cast<int>(seed_cover.size())};
  int n_workers = std::min<int>(opts.threads, static_cast<int>(options.size()));
  std::uint64_t worker_budget =
      budget == std::numeric_limits<std::uint64_t>::max()
          ? budget
          : std::max<std::uint64_t>(1, budget / std::max(1, n_workers));
  std::vector<SolveResult> partial(options.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= options.size()) break;
      TauSearch search(h, s, worker_budget, &shared_best, opts.upper_limit);
      search.seed(seed_cover);
      if (search.limit_reached) {
        partial[i] = finish_result(search, s);
        continue;
      }
      for (std::size_t j = 0; j < i; ++j) search.banned[options[j]] = 1;
      search.add_vertex(options[i]);
      search.dfs();
      partial[i] = finish_result(search, s);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  result.value = kNoLimit;
  result.status = SolveStatus::Exact;
  bool hit_limit = false;
  for (const auto& p : partial) {
    result.steps += p.steps;
    if (p.status == SolveStatus::Unknown) result.status = SolveStatus::Unknown;
    if (p.status == SolveStatus::ReachedLimit) hit_limit = true;
    if (p.value < result.value) {
      result.value = p.value;
      result.witness.vertices = p.witness.vertices;
    }
  }
  if (hit_limit && opts.upper_limit && result.value <= *opts.upper_limit) {
    result.status = SolveStatus::ReachedLimit;
  }
  if (result.status == SolveStatus::Unknown && result.value == root_lb) {
    result.status = SolveStatus::Exact;
  }
  std::sort(result.witness.vertices.begin(), result.witness.vertices.end());
  result.witness.s = s;
  result.witness.provenance = "exact";
  result.witness.claimed_bound = result.value;
  return result;
}

SolveResult nu_exact(const PartitionedHypergraph& h, const SolveOptions& opts) {
  SolveResult result;
  result.witness.provenance = "packing";
  int m = h.edge_count();
  if (m == 0) return result;

  std::uint64_t budget =
      opts.step_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  std::size_t nwords = h.words_per_edge();
  std::vector<std::uint64_t> used(nwords, 0);
  int best = 0;
  std::uint64_t steps = 0;
  bool out_of_budget = false;

  auto dfs = [&](auto&& self, int idx, int count) -> void {
    if (out_of_budget) return;
    if (++steps > budget) {
      out_of_budget = true;
      return;
    }
    best = std::max(best, count);
    for (int e = idx; e < m; ++e) {
      if (count + (m - e) <= best) break;
      if (!kernels::and_is_zero(used.data(), h.edge_bits(e), nwords)) continue;
      const std::uint64_t* bits = h.edge_bits(e);
      for (std::size_t w = 0; w < nwords; ++w) used[w] |= bits[w];
      self(self, e + 1, count + 1);
      for (std::size_t w = 0; w < nwords; ++w) used[w] &= ~bits[w];
      if (out_of_budget) return;
    }
  };
  dfs(dfs, 0, 0);

  result.value = best;
  result.steps = steps;
  result.status = out_of_budget ? SolveStatus::Unknown : SolveStatus::Exact;
  return result;
}

DesignCheck is_2_design(const GeneralHypergraph& d, int t) {
  DesignCheck check;
  check.v = d.vertex_count;
  check.lambda = t;
  check.symmetric = static_cast<int>(d.edges.size()) == d.vertex_count;
  check.uniform = true;
  if (!d.edges.empty()) {
    check.edge_size = static_cast<int>(d.edges[0].size());
    for (const auto& e : d.edges) {
      if (static_cast<int>(e.size()) != check.edge_size) {
        check.uniform = false;
        break;
      }
    }
  }
  if (!check.uniform) return check;

  std::vector<int> codegree(
      static_cast<std::size_t>(d.vertex_count) * d.vertex_count, 0);
  for (const auto& e : d.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        auto [lo, hi] = std::minmax(e[i], e[j]);
        ++codegree[static_cast<std::size_t>(lo) * d.vertex_count + hi];
      }
    }
  }
  check.ok = true;
  for (int u = 0; u < d.vertex_count && check.ok; ++u) {
    for (int w = u + 1; w < d.vertex_count; ++w) {
      if (codegree[static_cast<std::size_t>(u) * d.vertex_count + w] != t) {
        check.ok = false;
        break;
      }
    }
  }
  return check;
}

namespace {

struct ResolveSearch {
  const GeneralHypergraph& d;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<char> edge_used, vertex_covered;
  Resolution classes;
  std::vector<int> current;
  int edges_left;
  std::uint64_t steps = 0, budget;
  bool out_of_budget = false;

  ResolveSearch(const GeneralHypergraph& dd, std::uint64_t b)
      : d(dd),
        vertex_edges(dd.vertex_count),
        edge_used(dd.edges.size(), 0),
        vertex_covered(dd.vertex_count, 0),
        edges_left(static_cast<int>(dd.edges.size())),
        budget(b) {
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      for (int v : d.edges[e]) vertex_edges[v].push_back(static_cast<int>(e));
    }
  }

  bool extend_class() {
    if (out_of_budget) return false;
    if (++steps > budget) {
      out_of_budget = true;
      return false;
    }
    int pivot = -1;
    for (int v = 0; v < d.vertex_count; ++v) {
      if (!vertex_covered[v]) {
        pivot = v;
        break;
      }
    }
    if (pivot < 0) {
      classes.push_back(current);
      if (edges_left == 0) return true;
      std::vector<int> saved = std::move(current);
      current.clear();
      std::fill(vertex_covered.begin(), vertex_covered.end(), 0);
      if (extend_class()) return true;
      std::fill(vertex_covered.begin(), vertex_covered.end(), 0);
      for (int e : saved) {
        for (int v : d.edges[e]) vertex_covered[v] = 1;
      }
      current = std::move(saved);
      classes.pop_back();
      return false;
    }
    for (int e : vertex_edges[pivot]) {
      if (edge_used[e]) continue;
      bool clash = false;
      for (int v : d.edges[e]) {
        if (vertex_covered[v]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      edge_used[e] = 1;
      --edges_left;
      for (int v : d.edges[e]) vertex_covered[v] = 1;
      current.push_back(e);
      if (extend_class()) return true;
      current.pop_back();
      for (int v : d.edges[e]) vertex_covered[v] = 0;
      ++edges_left;
      edge_used[e] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

ResolvabilityResult is_resolvable(const GeneralHypergraph& d,
                                  const SolveOptions& opts) {
  ResolvabilityResult result;
  if (d.edges.empty()) {
    if (d.vertex_count == 0) result.resolution = Resolution{};
    return result;
  }
  int size = static_cast<int>(d.edges[0].size());
  for (const auto& e : d.edges) {
    if (static_cast<int>(e.size()) != size) return result;  // not uniform
  }
  if (size == 0 || d.vertex_count % size != 0) return result;
  long long per_class = d.vertex_count / size;
  if (static_cast<long long>(d.edges.size()) % per_class != 0) return result;

  std::uint64_t budget =
      opts.step_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  ResolveSearch search(d, budget);
  bool found = search.extend_class();
  result.steps = search.steps;
  if (search.out_of_budget) {
    result.status = SolveStatus::Unknown;
    return result;
  }
  if (found) result.resolution = std::move(search.classes);
  return result;
}

}  // namespace rtcover

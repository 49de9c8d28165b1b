#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "rtcover/core.hpp"
#include "rtcover/generators.hpp"
#include "testsupport.hpp"

using namespace rtcover;
namespace ts = rtcover::testsupport;

TEST_CASE("validate accepts generator output") {
  auto [h, meta] = h_r_ell(5, 1);
  CHECK(validate(h).empty());
  CHECK(h.edge_count() == 5);
}

TEST_CASE("validate flags out-of-range entries and duplicates") {
  PartitionedHypergraph bad(2, {2, 2}, {{0, 5}});
  auto report = validate(bad);
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == Violation::Kind::IndexOutOfRange);
  CHECK_FALSE(bad.structurally_sound());

  PartitionedHypergraph dup(2, {2, 2}, {{0, 1}, {0, 1}});
  auto dup_report = validate(dup);
  REQUIRE(dup_report.size() == 1);
  CHECK(dup_report[0].kind == Violation::Kind::DuplicateEdge);
}

TEST_CASE("self-intersection equals r") {
  auto [h, meta] = h_r_ell(6, 2);
  for (int e = 0; e < h.edge_count(); ++e) {
    CHECK(intersection_size(h, e, e) == 6);
  }
}

TEST_CASE("every pair of H^5_1 edges meets in 3 vertices") {
  auto [h, meta] = h_r_ell(5, 1);
  for (int e = 0; e < h.edge_count(); ++e) {
    for (int f = e + 1; f < h.edge_count(); ++f) {
      CHECK(intersection_size(h, e, f) == 3);
    }
  }
}

TEST_CASE("bitset intersections equal the position-compare oracle") {
  for (const auto& h : ts::random_suite(6, 2, 10, 12, 3)) {
    for (int e = 0; e < h.edge_count(); ++e) {
      for (int f = 0; f < h.edge_count(); ++f) {
        CHECK(intersection_size(h, e, f) == ts::position_overlap(h, e, f));
        CHECK(intersection_size(h, e, f) == intersection_size(h, f, e));
      }
    }
  }
}

TEST_CASE("minimum pairwise intersection") {
  auto [h62, m62] = h_r_ell(6, 2);
  auto [min62, pair62] = min_pairwise_intersection(h62);
  CHECK(min62 == 2);

  auto [tpp3, m3] = truncated_projective_plane(3);
  PartitionedHypergraph blown = blowup(tpp3, 2);
  CHECK(min_pairwise_intersection(blown).first == 2);

  PartitionedHypergraph single(3, {2, 2, 2}, {{0, 0, 0}});
  CHECK_THROWS_AS(min_pairwise_intersection(single), std::invalid_argument);
}

TEST_CASE("min pairwise witness is the lexicographically first minimum") {
  // edges 0/1 meet in 2, edges 0/2 and 1/2 meet in 1
  PartitionedHypergraph h(3, {3, 3, 3}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
  auto [value, pair] = min_pairwise_intersection(h);
  CHECK(value == 1);
  CHECK(pair.first == 0);
  CHECK(pair.second == 2);
}

TEST_CASE("k-wise minimum intersections") {
  auto [h72, m72] = h_r_ell(7, 2);
  CHECK(kwise_min_intersection(h72, 3) == 1);
  CHECK(kwise_min_intersection(h72, 3) == ts::brute_kwise_min(h72, 3));

  auto [h62, m62] = h_r_ell(6, 2);
  CHECK(kwise_min_intersection(h62, 3) == 0);

  for (const auto& h : ts::random_suite(5, 1, 6, 8, 3)) {
    if (h.edge_count() < 4) continue;
    CHECK(kwise_min_intersection(h, 2) == min_pairwise_intersection(h).first);
    CHECK(kwise_min_intersection(h, 3) == ts::brute_kwise_min(h, 3));
    // non-increasing in k
    CHECK(kwise_min_intersection(h, 3) <= kwise_min_intersection(h, 2));
    CHECK(kwise_min_intersection(h, 4) <= kwise_min_intersection(h, 3));
  }

  CHECK_THROWS_AS(kwise_min_intersection(h62, 1), std::invalid_argument);
  CHECK_THROWS_AS(kwise_min_intersection(h62, h62.edge_count() + 1),
                  std::invalid_argument);
}

TEST_CASE("strict intersection detection") {
  auto [tpp2, m2] = truncated_projective_plane(2);
  PartitionedHypergraph blown = blowup(tpp2, 2);
  auto strict = is_strictly_intersecting(blown);
  REQUIRE(strict.has_value());
  CHECK(*strict == 2);

  auto [h62, m62] = h_r_ell(6, 2);
  CHECK_FALSE(is_strictly_intersecting(h62).has_value());

  PartitionedHypergraph pair(4, {2, 2, 2, 2}, {{0, 0, 0, 0}, {0, 0, 1, 1}});
  auto pair_strict = is_strictly_intersecting(pair);
  REQUIRE(pair_strict.has_value());
  CHECK(*pair_strict == 2);
}

TEST_CASE("degree profiles") {
  auto [tpp2, m2] = truncated_projective_plane(2);
  DegreeProfile blown = degree_profile(blowup(tpp2, 2));
  CHECK(blown.min_degree == 2);
  CHECK(blown.max_degree == 2);
  CHECK(blown.regular);

  auto [h51, m51] = h_r_ell(5, 1);
  DegreeProfile p51 = degree_profile(h51);
  CHECK(p51.min_degree == 0);
  CHECK(p51.max_degree == 4);
  CHECK_FALSE(p51.regular);

  PartitionedHypergraph single(3, {2, 1, 1}, {{0, 0, 0}});
  DegreeProfile ps = degree_profile(single);
  CHECK(ps.min_degree == 0);
  CHECK(ps.max_degree == 1);
}

TEST_CASE("triple profiles satisfy their identities") {
  for (const auto& h : ts::random_suite(7, 2, 8, 10, 3)) {
    if (h.edge_count() < 3) continue;
    for (int e1 = 0; e1 < h.edge_count(); ++e1) {
      for (int e2 = e1 + 1; e2 < h.edge_count(); ++e2) {
        for (int e3 = e2 + 1; e3 < h.edge_count(); ++e3) {
          IntersectionProfile p = triple_profile(h, e1, e2, e3);
          CHECK(p.t2 == p.a + p.b + p.c);
          CHECK(p.t1 + p.a == intersection_size(h, e1, e2));
          CHECK(p.t1 + p.b == intersection_size(h, e1, e3));
          CHECK(p.t1 + p.c == intersection_size(h, e2, e3));
          CHECK(p.t1 >= 0);
          CHECK(p.tprime >= 2);
        }
      }
    }
  }
}

TEST_CASE("delta_h base values") {
  auto [h, meta] = h_r_ell(6, 2);
  CHECK(delta_h(h, {}, {0}) == 6);
  for (int f = 1; f < h.edge_count(); ++f) {
    CHECK(delta_h(h, {}, {0, f}) == 6 + intersection_size(h, 0, f));
  }
}

TEST_CASE("delta_h is monotone in the blocked set") {
  for (const auto& h : ts::random_suite(6, 2, 6, 8, 4)) {
    if (h.edge_count() < 2) continue;
    std::vector<int> small = {h.global_id(0, 0)};
    std::vector<int> large = {h.global_id(0, 0), h.global_id(1, 1),
                              h.global_id(2, 0)};
    CHECK(delta_h(h, large, {0, 1}) <= delta_h(h, small, {0, 1}));
  }
}

TEST_CASE("delta_h rejects a fully blocked part") {
  PartitionedHypergraph h(2, {1, 2}, {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(delta_h(h, {0}, {0, 1}), std::domain_error);
}

TEST_CASE("observation cover check") {
  // one edge, C empty, t = 1: delta = r > 0 = kt-1
  PartitionedHypergraph single(4, {2, 2, 2, 2}, {{0, 0, 0, 0}});
  CHECK_FALSE(observation_cover_check(single, 1, {}, {0}).has_value());

  // full transversal through edge 0 of a one-edge hypergraph covers it
  std::vector<int> all_of_edge;
  for (int j = 0; j < 4; ++j) all_of_edge.push_back(single.global_id(j, 0));
  auto cert = observation_cover_check(single, 4, all_of_edge, {0});
  REQUIRE(cert.has_value());
  CHECK(ts::set_cover_check(single, cert->vertices, 1));
}

TEST_CASE("observation check accepts the two-edge blocking sets") {
  // shared-vertex set on the one-level instance
  auto [h51, m51] = h_r_ell(5, 1);
  std::vector<int> shared;
  for (int j = 0; j < 5; ++j) {
    if (h51.edges()[0][j] == h51.edges()[1][j]) {
      shared.push_back(h51.global_id(j, h51.edges()[0][j]));
    }
  }
  REQUIRE(shared.size() == 3);
  std::vector<int> c1(shared.begin(), shared.begin() + 2);
  auto cert51 = observation_cover_check(h51, 3, c1, {0, 1});
  REQUIRE(cert51.has_value());
  CHECK(cert51->size() == 2);

  // split-part set on a (6,2) instance with a minimum pair of size 2
  for (const auto& h : ts::random_suite(6, 2, 20, 10, 3)) {
    if (h.edge_count() < 2) continue;
    auto [tmin, pair] = min_pairwise_intersection(h);
    if (tmin != 2) continue;
    auto [e1, e2] = pair;
    std::vector<int> c2;
    int doubled = 0;
    for (int j = 0; j < 6; ++j) {
      if (h.edges()[e1][j] == h.edges()[e2][j]) {
        c2.push_back(h.global_id(j, h.edges()[e1][j]));
      } else if (doubled < 6 - 2 * 2 + 1 - tmin) {
        c2.push_back(h.global_id(j, h.edges()[e1][j]));
        c2.push_back(h.global_id(j, h.edges()[e2][j]));
        ++doubled;
      }
    }
    REQUIRE(c2.size() == 4);
    auto cert = observation_cover_check(h, 2, c2, {e1, e2});
    REQUIRE(cert.has_value());
    CHECK(cert->size() == 4);
    CHECK(ts::set_cover_check(h, cert->vertices, 1));
  }
}

TEST_CASE("observation soundness: no accepted set ever fails the scan") {
  // randomized C over random instances; also checks inequality (2.1)
  std::mt19937_64 rng(11);
  for (const auto& h : ts::random_suite(6, 2, 10, 10, 3)) {
    if (h.edge_count() < 2) continue;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> cover;
      for (int g = 0; g < h.vertex_count(); ++g) {
        if (rng() % 4 == 0) cover.push_back(g);
      }
      std::vector<int> es = {0, 1 % h.edge_count()};
      int delta;
      try {
        delta = delta_h(h, cover, es);
      } catch (const std::domain_error&) {
        continue;
      }
      std::set<int> blocked(cover.begin(), cover.end());
      for (int f = 0; f < h.edge_count(); ++f) {
        bool disjoint = true;
        int weight = 0;
        for (int j = 0; j < h.r(); ++j) {
          int g = h.global_id(j, h.edges()[f][j]);
          if (blocked.count(g)) disjoint = false;
        }
        for (int e : es) weight += intersection_size(h, f, e);
        if (disjoint) CHECK(weight <= delta);
      }
      auto cert = observation_cover_check(h, 2, cover, es);
      if (cert) CHECK(ts::set_cover_check(h, cert->vertices, 1));
    }
  }
}

TEST_CASE("dual transposes incidence") {
  auto [tpp2, meta] = truncated_projective_plane(2);
  PartitionedHypergraph blown = blowup(tpp2, 2);
  GeneralHypergraph d = dual(blown);
  CHECK(d.vertex_count == blown.edge_count());

  // every pair of dual vertices shares exactly two edges
  for (int u = 0; u < d.vertex_count; ++u) {
    for (int v = u + 1; v < d.vertex_count; ++v) {
      int shared = 0;
      for (const auto& edge : d.edges) {
        bool has_u = std::count(edge.begin(), edge.end(), u) > 0;
        bool has_v = std::count(edge.begin(), edge.end(), v) > 0;
        if (has_u && has_v) ++shared;
      }
      CHECK(shared == 2);
    }
  }

  // edge count of the dual = non-isolated vertices; degrees become sizes
  std::vector<int> deg = vertex_degrees(blown);
  int non_isolated = 0;
  std::multiset<int> degrees, sizes;
  for (int dg : deg) {
    if (dg > 0) {
      ++non_isolated;
      degrees.insert(dg);
    }
  }
  for (const auto& edge : d.edges) sizes.insert(static_cast<int>(edge.size()));
  CHECK(static_cast<int>(d.edges.size()) == non_isolated);
  CHECK(degrees == sizes);
}

TEST_CASE("dual of dual restores incidence counts") {
  auto [h, meta] = h_r_ell(5, 1);
  GeneralHypergraph d = dual(h);
  GeneralHypergraph dd = dual(d);
  // vertices of dd = dual edges = non-isolated vertices of h; edges of dd
  // correspond to the edges of h (restricted to non-isolated vertices,
  // which changes nothing here since every edge vertex has degree >= 1)
  CHECK(dd.vertex_count == static_cast<int>(d.edges.size()));
  CHECK(dd.edges.size() == h.edges().size());
  std::multiset<int> dd_sizes, h_sizes;
  for (const auto& e : dd.edges) dd_sizes.insert(static_cast<int>(e.size()));
  for (int e = 0; e < h.edge_count(); ++e) h_sizes.insert(h.r());
  CHECK(dd_sizes == h_sizes);
}

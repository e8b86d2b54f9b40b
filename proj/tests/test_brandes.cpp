#include <doctest.h>

#include <cstring>
#include <numeric>

#include "bcx/brandes.hpp"
#include "bcx/errors.hpp"
#include "bcx/oracle.hpp"
#include "support.hpp"

using namespace bcx;
using namespace bcx::testing;

using Scores = std::vector<double>;

TEST_CASE("enumerate_active_edges") {
  auto a = enumerate_active_edges(std::vector<eid_t>{2, 1, 3});
  CHECK(a.prefix == std::vector<eid_t>{0, 2, 3});
  CHECK(a.total == 6);
  auto empty = enumerate_active_edges(std::vector<eid_t>{});
  CHECK(empty.prefix.empty());
  CHECK(empty.total == 0);
  auto zeros = enumerate_active_edges(std::vector<eid_t>{0, 0, 5});
  CHECK(zeros.prefix == std::vector<eid_t>{0, 0, 0});
  CHECK(zeros.total == 5);
}

TEST_CASE("map_work_item") {
  const std::vector<eid_t> prefix{0, 2, 3};
  CHECK(map_work_item(prefix, 6, 4) == WorkItem{2, 1});
  CHECK(map_work_item(prefix, 6, 0) == WorkItem{0, 0});
  CHECK(map_work_item(prefix, 6, 2) == WorkItem{1, 0});
  const std::vector<eid_t> zeros{0, 0, 0};
  CHECK(map_work_item(zeros, 5, 2) == WorkItem{2, 2});
  CHECK_THROWS_AS(map_work_item(prefix, 6, 6), ContractError);
}

TEST_CASE("map_work_item covers every edge of a frontier exactly once") {
  const std::vector<eid_t> degrees{0, 3, 0, 1, 4, 0};
  auto a = enumerate_active_edges(degrees);
  std::vector<eid_t> seen(degrees.size(), 0);
  for (eid_t i = 0; i < a.total; ++i) {
    auto [slot, local] = map_work_item(a.prefix, a.total, i);
    CHECK(local == seen[slot]);
    ++seen[slot];
  }
  CHECK(seen == degrees);
}

TEST_CASE("brandes_round on P3 and C4") {
  SUBCASE("P3 from 0") {
    Graph g = make(path(3));
    RoundState r = brandes_round(g, 0);
    CHECK(r.sigma == Scores{1, 1, 1});
    CHECK(r.depth == std::vector<std::int32_t>{0, 1, 2});
    CHECK(r.delta[1] == 1.0);
    CHECK(r.delta[2] == 0.0);
  }
  SUBCASE("C4 from 0") {
    Graph g = make(cycle(4));
    RoundState r = brandes_round(g, 0);
    CHECK(r.sigma == Scores{1, 1, 2, 1});
    CHECK(r.depth == std::vector<std::int32_t>{0, 1, 2, 1});
    CHECK(r.delta[1] == 0.5);
    CHECK(r.delta[3] == 0.5);
    CHECK(r.delta[2] == 0.0);
  }
  SUBCASE("star from center") {
    Graph g = make(star(5));
    RoundState r = brandes_round(g, 0);
    for (vid_t v = 1; v <= 5; ++v) CHECK(r.delta[v] == 0.0);
  }
}

TEST_CASE("round state invariants") {
  for (const auto& [name, g] : suite()) {
    if (g.num_vertices() == 0) continue;
    CAPTURE(name);
    for (vid_t s = 0; s < g.num_vertices(); s += 3) {
      RoundState r = brandes_round(g, s);
      REQUIRE(r.depth[s] == 0);
      REQUIRE(r.sigma[s] == 1.0);
      REQUIRE(r.q_off.front() == 0);
      REQUIRE(r.q_off.back() == r.queue.size());
      for (std::size_t k = 0; k < r.num_levels(); ++k) {
        REQUIRE(r.q_off[k] <= r.q_off[k + 1]);
        auto frontier = r.frontier(k);
        eid_t total = 0;
        for (vid_t v : frontier) {
          REQUIRE(r.depth[v] == static_cast<std::int32_t>(k));
          total += g.degree(v);
        }
        REQUIRE(r.edge_prefix[k].size() == frontier.size() + 1);
        REQUIRE(std::is_sorted(r.edge_prefix[k].begin(), r.edge_prefix[k].end()));
        REQUIRE(r.edge_prefix[k].back() == total);
      }
      std::size_t reached = 0;
      for (vid_t v = 0; v < g.num_vertices(); ++v) {
        if (r.depth[v] >= 0) ++reached;
        REQUIRE((r.depth[v] >= 0) == static_cast<bool>(r.visited[v]));
        // sigma counts are exact integers
        REQUIRE(r.sigma[v] == std::floor(r.sigma[v]));
      }
      REQUIRE(reached == r.queue.size());
      // Sum of dependencies = sum over reachable t of (d(s,t) - 1).
      double lhs = 0, rhs = 0;
      for (vid_t v = 0; v < g.num_vertices(); ++v) {
        if (v != s) lhs += r.delta[v];
        if (v != s && r.depth[v] > 0) rhs += r.depth[v] - 1;
      }
      REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("closed-form BC values agree with both oracles") {
  struct Case {
    const char* name;
    EdgeList e;
    Scores want;
  };
  const Case cases[] = {
      {"P3", path(3), {0, 2, 0}},
      {"P5", path(5), {0, 6, 8, 6, 0}},
      {"C4", cycle(4), {1, 1, 1, 1}},
      {"K4", complete(4), {0, 0, 0, 0}},
      {"K1,3", star(3), {6, 0, 0, 0}},
      {"P3 u P2", disjoint_union(path(3), path(2)), {0, 2, 0, 0, 0}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CHECK(brute_force_bc(c.e) == c.want);
    Graph g = make(c.e);
    CHECK(bc_oracle(g) == c.want);
    CHECK(bc_exact(g) == c.want);
  }
}

TEST_CASE("library oracle matches the brute-force reference") {
  for (vid_t n = 2; n <= 9; ++n) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      EdgeList e = erdos_renyi(n, 0.45, seed * 31 + n);
      CHECK(max_rel_error(bc_oracle(make(e)), brute_force_bc(e)) < 1e-12);
    }
  }
  EdgeList r = rmat(3, 4, 5);
  CHECK(max_rel_error(bc_oracle(make(r)), brute_force_bc(r)) < 1e-12);
}

TEST_CASE("bc_exact matches the oracle on the random suite") {
  for (const auto& [name, g] : suite()) {
    CAPTURE(name);
    CHECK(max_rel_error(bc_exact(g), bc_oracle(g)) <= 1e-6);
  }
}

TEST_CASE("bc_exact is additive over source partitions") {
  Graph g = make(rmat(6, 8, 3));
  std::vector<vid_t> even, odd;
  for (vid_t v = 0; v < g.num_vertices(); ++v) (v % 2 ? odd : even).push_back(v);
  Scores a = bc_exact(g, std::span<const vid_t>(even));
  Scores b = bc_exact(g, std::span<const vid_t>(odd));
  Scores all = bc_exact(g);
  for (vid_t v = 0; v < g.num_vertices(); ++v) a[v] += b[v];
  CHECK(max_abs_error(a, all) < 1e-9);
}

TEST_CASE("bc_exact sources and threads") {
  Graph g = make(with_isolated(erdos_renyi(40, 0.1, 7), 3));
  const vid_t isolated = g.num_vertices() - 1;
  BcStats stats;
  std::vector<vid_t> src{0, 5, isolated};
  bc_exact(g, std::span<const vid_t>(src), {.threads = 1, .prefix = PrefixPolicy::kReuse, .stats = &stats});
  CHECK(stats.rounds == 2);  // the isolated source is skipped

  std::vector<vid_t> bad{g.num_vertices()};
  CHECK_THROWS_AS(bc_exact(g, std::span<const vid_t>(bad)), InputError);

  Scores serial = bc_exact(g);
  for (unsigned t : {2u, 3u, 8u}) {
    Scores threaded = bc_exact(g, std::nullopt, {.threads = t});
    CHECK(max_abs_error(threaded, serial) < 1e-9);
    CHECK(threaded == bc_exact(g, std::nullopt, {.threads = t}));
  }
}

TEST_CASE("prefix reuse: no backward scans and bitwise-equal dependencies") {
  for (const auto& [name, g] : suite()) {
    CAPTURE(name);
    for (vid_t s = 0; s < g.num_vertices(); s += 5) {
      RoundState reuse = brandes_round(g, s, {.prefix = PrefixPolicy::kReuse});
      RoundState recompute = brandes_round(g, s, {.prefix = PrefixPolicy::kRecompute});
      REQUIRE(reuse.counters.backward_scans == 0);
      REQUIRE(recompute.counters.backward_scans ==
              (reuse.num_levels() >= 2 ? reuse.num_levels() - 2 : 0));
      REQUIRE(reuse.counters.forward_scans == recompute.counters.forward_scans);
      REQUIRE(std::memcmp(reuse.delta.data(), recompute.delta.data(), reuse.delta.size() * sizeof(double)) ==
              0);
    }
  }
}

TEST_CASE("teps") {
  CHECK(teps(10, 5, 2.0) == 25.0);
  CHECK(teps(0, 5, 1.0) == 0.0);
  CHECK(teps(1u << 20, 1, 1.0) == 1048576.0);
  CHECK_THROWS_AS(teps(1, 1, 0.0), InputError);
  CHECK_THROWS_AS(teps(1, 1, -1.0), InputError);
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "contagion/cascade.hpp"
#include "contagion/generators.hpp"
#include "support/oracles.hpp"

using namespace contagion;

namespace {

std::vector<Vertex> random_subset(std::mt19937_64& rng, Vertex n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) out.push_back(v);
  return out;
}

}  // namespace

TEST_SUITE("cascade") {
  TEST_CASE("threshold zero is rejected") { CHECK_THROWS_AS(ThresholdConfig(0), std::invalid_argument); }

  TEST_CASE("triangle with two seeds") {
    const auto g = gen_complete(3);
    const std::vector<Vertex> seeds{0, 1};
    const auto res = simulate(g, ThresholdConfig(2), seeds);
    CHECK(res.round[2] == 1);
    CHECK(res.fully_activated);
    CHECK(res.order == std::vector<Vertex>{0, 1, 2});
  }

  TEST_CASE("C5 with seeds {0,2} stalls at {0,1,2}") {
    const auto g = gen_cycle(5);
    const std::vector<Vertex> seeds{0, 2};
    const auto res = simulate(g, ThresholdConfig(2), seeds);
    CHECK(res.activated_count == 3);
    CHECK(res.round[1] == 1);
    CHECK_FALSE(res.active(3));
    CHECK_FALSE(res.active(4));
    CHECK_FALSE(res.fully_activated);
  }

  TEST_CASE("all vertices seeded") {
    const auto g = gen_grid(3, 3);
    std::vector<Vertex> all(9);
    for (Vertex v = 0; v < 9; ++v) all[v] = v;
    const auto res = simulate(g, ThresholdConfig(4), all);
    CHECK(res.fully_activated);
    CHECK(std::all_of(res.round.begin(), res.round.end(), [](auto r) { return r == 0; }));
    CHECK(res.last_round() == 0);
  }

  TEST_CASE("duplicate seeds are harmless; bad ids throw") {
    const auto g = gen_cycle(4);
    const std::vector<Vertex> dup{0, 0, 2, 2};
    CHECK(simulate(g, ThresholdConfig(2), dup).activated_count == 4);
    const std::vector<Vertex> bad{4};
    CHECK_THROWS_AS(simulate(g, ThresholdConfig(1), bad), std::out_of_range);
    CHECK_THROWS_AS(is_contagious(g, ThresholdConfig(1), bad), std::out_of_range);
  }

  TEST_CASE("is_contagious examples") {
    const auto c5 = gen_cycle(5);
    const std::vector<Vertex> alternate{0, 2, 4};
    CHECK(is_contagious(c5, ThresholdConfig(2), alternate));
    CHECK_FALSE(is_contagious(c5, ThresholdConfig(1), {}));
    const std::vector<Vertex> pair{0, 1};
    CHECK(is_contagious(gen_complete(4), ThresholdConfig(2), pair));
    CHECK(is_contagious(Graph{}, ThresholdConfig(3), {}));
  }

  TEST_CASE("rounds match a literal synchronous simulation") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      const Vertex n = 1 + static_cast<Vertex>(rng() % 40);
      const auto g = oracle::random_graph(rng, n, 0.15);
      const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
      const auto seeds = random_subset(rng, n, 0.2);
      const auto res = simulate(g, ThresholdConfig(k), seeds);
      REQUIRE(res.round == oracle::synchronous_rounds(g, k, seeds));
      CHECK(res.fully_activated == (res.activated_count == n));
      // Every non-seed active vertex has >= k neighbors from strictly earlier rounds.
      for (Vertex v = 0; v < n; ++v) {
        if (!res.active(v) || res.round[v] == 0) continue;
        std::uint32_t earlier = 0;
        for (Vertex x : g.neighbors(v)) earlier += res.round[x] < res.round[v] ? 1 : 0;
        CHECK(earlier >= k);
      }
    }
  }

  TEST_CASE("final set does not depend on worklist discipline") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const Vertex n = 2 + static_cast<Vertex>(rng() % 60);
      const auto g = oracle::random_graph(rng, n, 0.1);
      const ThresholdConfig cfg(1 + static_cast<std::uint32_t>(rng() % 3));
      const auto seeds = random_subset(rng, n, 0.25);
      const auto res = simulate(g, cfg, seeds);
      std::vector<bool> expected(n);
      for (Vertex v = 0; v < n; ++v) expected[v] = res.active(v);
      CHECK(final_active_set(g, cfg, seeds, WorklistOrder::fifo) == expected);
      CHECK(final_active_set(g, cfg, seeds, WorklistOrder::lifo) == expected);
      for (std::uint64_t s = 0; s < 3; ++s)
        CHECK(final_active_set(g, cfg, seeds, WorklistOrder::shuffled, s) == expected);
    }
  }

  TEST_CASE("monotone in seeds and in k") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      const Vertex n = 2 + static_cast<Vertex>(rng() % 50);
      const auto g = oracle::random_graph(rng, n, 0.12);
      const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
      const auto small = random_subset(rng, n, 0.15);
      auto large = small;
      for (Vertex v : random_subset(rng, n, 0.15)) large.push_back(v);

      const auto a = simulate(g, ThresholdConfig(k), small);
      const auto b = simulate(g, ThresholdConfig(k), large);
      const auto c = simulate(g, ThresholdConfig(k + 1), small);
      for (Vertex v = 0; v < n; ++v) {
        if (a.active(v)) CHECK(b.active(v));
        if (c.active(v)) CHECK(a.active(v));
      }
    }
  }

  TEST_CASE("k-dominating sets are contagious") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const Vertex n = 5 + static_cast<Vertex>(rng() % 60);
      const auto g = oracle::random_graph(rng, n, 0.2);
      const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
      // Random picks, then add every vertex short of k picked neighbors.
      std::vector<bool> in(n);
      for (Vertex v : random_subset(rng, n, 0.3)) in[v] = true;
      std::vector<Vertex> dom;
      for (Vertex v = 0; v < n; ++v) {
        std::uint32_t picked = 0;
        for (Vertex x : g.neighbors(v)) picked += in[x] ? 1 : 0;
        if (in[v] || picked < k) dom.push_back(v);
      }
      CHECK(is_contagious(g, ThresholdConfig(k), dom));
    }
  }

  TEST_CASE("workspace agrees with simulate across reuse") {
    std::mt19937_64 rng(17);
    const auto g = oracle::random_graph(rng, 30, 0.15);
    const ThresholdConfig cfg(2);
    CascadeWorkspace ws(g, cfg);
    for (int trial = 0; trial < 200; ++trial) {
      const auto seeds = random_subset(rng, 30, 0.3);
      CHECK(ws.activated_count(seeds) == simulate(g, cfg, seeds).activated_count);
    }
  }
}

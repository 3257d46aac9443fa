#include <doctest.h>

#include <random>

#include "contagion/bounds.hpp"
#include "contagion/exact.hpp"
#include "contagion/generators.hpp"
#include "contagion/greedy.hpp"
#include "contagion/random_perm.hpp"
#include "support/oracles.hpp"

using namespace contagion;

TEST_SUITE("exact") {
  TEST_CASE("path P3 with k=2 needs both endpoints") {
    const std::vector<Edge> e{{0, 1}, {1, 2}};
    const auto r = min_contagious_exact(build_graph(3, e), ThresholdConfig(2), 2);
    REQUIRE(r.found());
    CHECK(*r.optimum == std::vector<Vertex>{0, 2});
    CHECK(r.forced == 2);
    CHECK(r.subsets_tested == 1);
  }

  TEST_CASE("C5 with k=2 needs three seeds") {
    const auto g = gen_cycle(5);
    CHECK(oracle::min_contagious_size(g, 2) == 3);
    const auto r = min_contagious_exact(g, ThresholdConfig(2), 3);
    REQUIRE(r.found());
    CHECK(r.size() == 3);
    CHECK(*r.optimum == std::vector<Vertex>{0, 1, 3});  // lexicographically first
    CHECK(r.subsets_tested == 1 + 5 + 10 + 2);

    const auto capped = min_contagious_exact(g, ThresholdConfig(2), 2);
    CHECK_FALSE(capped.found());
    CHECK(capped.subsets_tested == 1 + 5 + 10);
  }

  TEST_CASE("cliques: optimum equals k") {
    for (std::uint32_t l = 2; l <= 7; ++l) {
      for (std::uint32_t k = 1; k < l; ++k) {
        const auto g = gen_complete(l);
        const auto r = min_contagious_exact(g, ThresholdConfig(k), l);
        REQUIRE(r.found());
        CHECK(r.size() == k);
        CHECK(oracle::min_contagious_size(g, k) == k);
      }
    }
  }

  TEST_CASE("solve_dense examples") {
    const auto k12 = solve_dense(gen_complete(12), ThresholdConfig(2));
    REQUIRE(k12.found());
    CHECK(k12.size() == 2);
    CHECK(k12.cap == 2);

    const auto isolated = solve_dense(build_graph(5, {}), ThresholdConfig(1));
    REQUIRE(isolated.found());
    CHECK(isolated.size() == 5);
    CHECK(isolated.cap == 5);

    // Minimum degree >= 9 on 12 vertices: w <= 24/10, so only sizes <= 2.
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
      Graph g;
      do {
        g = oracle::random_graph(rng, 12, 0.9);
      } while (g.min_degree() < 9);
      const auto r = solve_dense(g, ThresholdConfig(2));
      CHECK(r.cap == 2);
      CHECK(r.found());
      CHECK(r.subsets_tested <= 1 + 12 + 66);
      CHECK(exact_search_size(g, ThresholdConfig(2), 2) == 79);
    }
  }

  TEST_CASE("budget guardrail") {
    const auto g = gen_cycle(30);
    ExactOptions tight;
    tight.check_budget = 100;
    CHECK(exact_search_size(g, ThresholdConfig(2), 2) == 1 + 30 + 435);
    CHECK_THROWS_AS(min_contagious_exact(g, ThresholdConfig(2), 2, tight), SearchTooLarge);
    tight.allow_large = true;
    CHECK_FALSE(min_contagious_exact(g, ThresholdConfig(2), 2, tight).found());
    CHECK_THROWS_AS(solve_dense(gen_cycle(60), ThresholdConfig(2)), SearchTooLarge);
    CHECK(exact_search_size(gen_cycle(300), ThresholdConfig(2), 200) == UINT64_MAX);
  }

  TEST_CASE("agrees with the bitmask oracle and bounds the heuristics") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
      const Vertex n = 1 + static_cast<Vertex>(rng() % 10);
      const auto g = oracle::random_graph(rng, n, 0.1 + 0.6 * static_cast<double>(rng() % 100) / 100);
      const ThresholdConfig cfg(1 + static_cast<std::uint32_t>(rng() % 3));
      const auto r = solve_dense(g, cfg);
      REQUIRE(r.found());
      CHECK(r.size() == oracle::min_contagious_size(g, cfg.k()));
      CHECK(is_contagious(g, cfg, *r.optimum));
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) < cfg.k()) CHECK(std::binary_search(r.optimum->begin(), r.optimum->end(), v));

      for (std::size_t drop = 0; drop < r.size(); ++drop) {
        auto smaller = *r.optimum;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK_FALSE(is_contagious(g, cfg, smaller));
      }
      const auto greedy = greedy_contagious(g, cfg);
      CHECK(r.size() <= greedy.size());
      CHECK(r.size() <= sample_L(g, cfg, rng()).selected.size());
    }
  }
}

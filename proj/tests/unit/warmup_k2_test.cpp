#include <doctest.h>

#include <random>

#include "contagion/generators.hpp"
#include "contagion/warmup_k2.hpp"
#include "support/oracles.hpp"

using namespace contagion;

namespace {

bool two_dominating(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<bool> in(g.num_vertices());
  for (Vertex v : set) in[v] = true;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    std::uint32_t c = 0;
    for (Vertex x : g.neighbors(v)) c += in[x] ? 1 : 0;
    if (c < 2) return false;
  }
  return true;
}

const WarmupCertificate& cert_of(const ContagiousSetReport& r) { return std::get<WarmupCertificate>(r.certificate); }

}  // namespace

TEST_SUITE("warmup_k2") {
  TEST_CASE("baseline on K_n with a pinned seed") {
    const auto g = gen_complete(40);
    const auto r = random_2dom_baseline(g, 2024);
    CHECK(r.verified);
    CHECK(two_dominating(g, r.set));
    CHECK(r.algorithm == Algorithm::k2_baseline);
    // p = ln 40 / 40; regression value for this seed.
    CHECK(r.size() == 4);
    CHECK(cert_of(r).rounds.at(0).p == doctest::Approx(std::log(40.0) / 40.0));
  }

  TEST_CASE("baseline falls back to V when nothing is sampled") {
    const auto g = gen_complete(3);
    int empty_draws = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
      const auto r = random_2dom_baseline(g, s);
      CHECK(r.verified);
      CHECK(two_dominating(g, r.set));
      if (cert_of(r).rounds[0].chosen.empty()) {
        ++empty_draws;
        CHECK(r.set == std::vector<Vertex>{0, 1, 2});
        CHECK(cert_of(r).added_at_end == 3);
      }
    }
    CHECK(empty_draws > 0);
  }

  TEST_CASE("baseline needs minimum degree 2") {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {2, 3}};
    CHECK_THROWS_AS(random_2dom_baseline(build_graph(4, e), 1), std::invalid_argument);
    CHECK(random_2dom_baseline(Graph{}, 1).set.empty());
  }

  TEST_CASE("baseline is always 2-dominating") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = gen_random_regular(60, 2 + static_cast<std::uint32_t>(rng() % 10) * 2, rng());
      const auto r = random_2dom_baseline(g, rng());
      CHECK(r.verified);
      CHECK(two_dominating(g, r.set));
    }
  }

  TEST_CASE("iterated scheme: C5 is below the cutoff immediately") {
    WarmupParams params;
    params.seed = 5;
    const auto r = iterated_random_k2(gen_cycle(5), params);
    CHECK(r.verified);
    CHECK(cert_of(r).rounds.empty());
    CHECK(r.size() == 5);
    CHECK(cert_of(r).added_at_end == 5);
  }

  TEST_CASE("iterated scheme: K_100 with a pinned seed") {
    WarmupParams params;
    params.seed = 100;
    const auto r = iterated_random_k2(gen_complete(100), params);
    CHECK(r.verified);
    CHECK(r.size() <= 7);  // ceil(6 * 100 / 99)
    CHECK(r.size() == 2);  // regression value for this seed
    CHECK(cert_of(r).rounds.at(0).p == doctest::Approx(1.0 / 99));
  }

  TEST_CASE("iterated scheme: empty graph") {
    const auto r = iterated_random_k2(Graph{}, WarmupParams{});
    CHECK(r.set.empty());
    CHECK(r.verified);
  }

  TEST_CASE("iterated scheme: rejects a zero cutoff") {
    WarmupParams params;
    params.degree_cutoff = 0;
    CHECK_THROWS_AS(iterated_random_k2(gen_cycle(4), params), std::invalid_argument);
  }

  TEST_CASE("iterated scheme invariants on random graphs") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 150; ++trial) {
      const Vertex n = 1 + static_cast<Vertex>(rng() % 80);
      const auto g = oracle::random_graph(rng, n, 0.05 + 0.6 * static_cast<double>(rng() % 100) / 100);
      WarmupParams params;
      params.seed = rng();
      const auto r = iterated_random_k2(g, params);
      CHECK(r.verified);
      CHECK(is_contagious(g, ThresholdConfig(2), r.set));
      CHECK(std::is_sorted(r.set.begin(), r.set.end()));

      const auto& cert = cert_of(r);
      CHECK(cert.rounds.size() <= static_cast<std::size_t>(std::ceil(10 * std::log(std::max<double>(n, 1)))) + 1);
      for (std::size_t i = 0; i < cert.rounds.size(); ++i) {
        const auto& round = cert.rounds[i];
        CHECK(round.residual_min_degree >= params.degree_cutoff);
        CHECK(round.p == doctest::Approx(1.0 / round.residual_min_degree));
        // An inactive vertex has at most one active neighbor.
        if (i > 0) CHECK(round.residual_min_degree + 1 >= g.min_degree());
        for (Vertex v : round.chosen) CHECK(std::binary_search(round.residual.begin(), round.residual.end(), v));
        if (i > 0 && !cert.rounds[i - 1].chosen.empty())
          CHECK(round.residual.size() < cert.rounds[i - 1].residual.size());
      }
    }
  }
}

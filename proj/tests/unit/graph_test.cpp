#include <doctest.h>

#include <random>
#include <sstream>

#include "contagion/generators.hpp"
#include "contagion/graph.hpp"
#include "contagion/io.hpp"
#include "support/oracles.hpp"

using namespace contagion;

TEST_SUITE("graph_core") {
  TEST_CASE("build_graph: path") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}};
    const auto g = build_graph(3, edges);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(std::vector<std::uint32_t>(g.degrees().begin(), g.degrees().end()) == std::vector<std::uint32_t>{1, 2, 1});
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(find_invariant_violation(g));
  }

  TEST_CASE("build_graph: duplicates collapse in either orientation") {
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 1}};
    const auto g = build_graph(2, edges);
    CHECK(g.num_edges() == 1);
    CHECK(g.degree(0) == 1);
  }

  TEST_CASE("build_graph: single isolated vertex") {
    const auto g = build_graph(1, {});
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
    CHECK(g.degree(0) == 0);
  }

  TEST_CASE("build_graph: rejects self-loops and out-of-range ids") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(build_graph(3, loop), GraphError);
    const std::vector<Edge> far{{0, 3}};
    CHECK_THROWS_AS(build_graph(3, far), GraphError);
  }

  TEST_CASE("induced_subgraph relabels in the given order") {
    const auto g = gen_cycle(6);
    const std::vector<Vertex> keep{4, 5, 0};
    const auto h = induced_subgraph(g, keep);
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 2);
    CHECK(h.has_edge(0, 1));  // 4-5
    CHECK(h.has_edge(1, 2));  // 5-0
    const std::vector<Vertex> repeated{1, 1};
    CHECK_THROWS_AS(induced_subgraph(g, repeated), GraphError);
    CHECK(remove_vertex(g, 2).num_edges() == 4);
  }

  TEST_CASE("parse_edge_list") {
    auto g = parse_edge_list("0 1\n1 2\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);

    g = parse_edge_list("# comment\n0 1\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);

    g = parse_edge_list("\n  0\t1  \r\n\n", Vertex{5});
    CHECK(g.num_vertices() == 5);

    g = parse_edge_list("", Vertex{4});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 0);
  }

  TEST_CASE("parse_edge_list errors carry line numbers") {
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 7\n", Vertex{3}), ParseError);
    try {
      parse_edge_list("0 1\n# ok\n1 x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    for (const char* bad : {"1\n", "1 2 3\n", "-1 2\n", "1.5 2\n"}) CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
  }

  TEST_CASE("parse_vertex_list") {
    std::istringstream in("# seeds\n0\n\n2\n");
    CHECK(parse_vertex_list(in, 3) == std::vector<Vertex>{0, 2});
    std::istringstream bad("5\n");
    CHECK_THROWS_AS(parse_vertex_list(bad, 3), ParseError);
  }

  TEST_CASE("serialize is canonical and parse inverts it") {
    const auto g = parse_edge_list("3 1\n0 2\n1 0\n");
    CHECK(to_edge_list(g) == "0 1\n0 2\n1 3\n");

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const Vertex n = 2 + static_cast<Vertex>(rng() % 30);
      const auto h = oracle::random_graph(rng, n, 0.2);
      CHECK(parse_edge_list(to_edge_list(h), n) == h);
    }
  }

  TEST_CASE("disjoint cliques") {
    auto g = gen_disjoint_cliques(3, 4);
    CHECK(g.num_vertices() == 12);
    CHECK(g.num_edges() == 18);

    g = gen_disjoint_cliques(1, 1);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);

    g = gen_disjoint_cliques(2, 5);
    CHECK(g.min_degree() == 4);
    CHECK(g.max_degree() == 4);
    CHECK_FALSE(g.has_edge(4, 5));
    CHECK_THROWS_AS(gen_disjoint_cliques(0, 3), GraphError);
  }

  TEST_CASE("cycle and grid") {
    const auto c = gen_cycle(5);
    CHECK(c.num_edges() == 5);
    CHECK(c.min_degree() == 2);
    CHECK(c.max_degree() == 2);
    CHECK_THROWS_AS(gen_cycle(2), GraphError);

    const auto g = gen_grid(2, 2);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    const auto big = gen_grid(3, 4);
    CHECK(big.num_edges() == 3 * 3 + 2 * 4);
    CHECK(big.max_degree() == 4);
    CHECK_THROWS_AS(gen_grid(0, 4), GraphError);
  }

  TEST_CASE("gnp") {
    for (std::uint64_t s : {0, 1, 99}) CHECK(gen_gnp(10, 0.0, s).num_edges() == 0);
    CHECK(gen_gnp(10, 1.0, 3).num_edges() == 45);
    CHECK_THROWS_AS(gen_gnp(10, 1.5, 0), GraphError);
    CHECK(gen_gnp(300, 0.1, 42) == gen_gnp(300, 0.1, 42));
    CHECK_FALSE(gen_gnp(300, 0.1, 42) == gen_gnp(300, 0.1, 43));

    // Edge count of G(400, 0.05) is Binomial(79800, 0.05): mean 3990, sd ~61.6.
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto m = static_cast<double>(gen_gnp(400, 0.05, s).num_edges());
      CHECK(std::abs(m - 3990.0) < 4 * 61.6);
    }
  }

  TEST_CASE("random regular") {
    for (std::uint32_t d : {0u, 1u, 3u, 4u, 10u}) {
      const auto g = gen_random_regular(40, d, 5);
      CHECK(g.min_degree() == d);
      CHECK(g.max_degree() == d);
      CHECK_FALSE(find_invariant_violation(g));
    }
    // Nearly complete: the pairing has very little slack.
    const auto dense = gen_random_regular(12, 10, 1);
    CHECK(dense.num_edges() == 60);
    CHECK(gen_random_regular(100, 6, 8) == gen_random_regular(100, 6, 8));
    CHECK_THROWS_AS(gen_random_regular(5, 3, 0), GraphError);
    CHECK_THROWS_AS(gen_random_regular(5, 5, 0), GraphError);
  }

  TEST_CASE("every generator output satisfies the invariants") {
    std::vector<Graph> graphs{gen_disjoint_cliques(4, 6), gen_cycle(17), gen_grid(5, 7), gen_gnp(200, 0.03, 1),
                              gen_random_regular(200, 8, 2)};
    for (const auto& g : graphs) CHECK_FALSE(find_invariant_violation(g));
  }

  TEST_CASE("GraphSpec dispatch") {
    GraphSpec spec;
    spec.family = family_from_string("disjoint-cliques");
    spec.q = 3;
    spec.l = 4;
    CHECK(generate(spec).num_edges() == 18);
    spec.family = Family::from_edges;
    spec.n = 3;
    spec.edges = {{0, 2}};
    CHECK(generate(spec).has_edge(2, 0));
    CHECK_THROWS_AS(family_from_string("tree"), GraphError);
    CHECK(to_string(Family::random_regular) == "random-regular");
  }
}

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "contagion/graph.hpp"

namespace contagion {

/// q vertex-disjoint copies of K_l; clique c occupies ids [c*l, (c+1)*l).
Graph gen_disjoint_cliques(std::uint32_t q, std::uint32_t l);

Graph gen_complete(std::uint32_t n);

/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph gen_cycle(std::uint32_t n);

/// rows x cols lattice with 4-neighborhoods; vertex (r, c) has id r*cols + c.
Graph gen_grid(std::uint32_t rows, std::uint32_t cols);

/// Erdos-Renyi G(n, p). Each pair u < v is
/// kept independently with probability p; geometric skipping makes the cost
/// proportional to the number of edges produced.
Graph gen_gnp(std::uint32_t n, double p, std::uint64_t seed);

/// Uniformly-flavoured simple d-regular graph via the pairing model.
/// Points are matched one random pair at a time, refusing loops and repeated
/// edges; a matching that gets stuck is discarded and restarted. Throws
/// GraphError once `max_restarts` attempts have failed.
Graph gen_random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed,
                         std::uint32_t max_restarts = 100);

enum class Family { disjoint_cliques, cycle, grid, gnp, random_regular, from_edges };

std::string_view to_string(Family f);
/// Accepts the names produced by to_string ("disjoint-cliques", "cycle",
/// "grid", "gnp", "random-regular", "from-edges").
Family family_from_string(std::string_view name);

/// Parameters for one generator call. Only the fields used by `family`
/// are read.
struct GraphSpec {
  Family family = Family::cycle;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t q = 0;
  std::uint32_t l = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::vector<Edge> edges;  // from-edges
};

Graph generate(const GraphSpec& spec);

}  // namespace contagion

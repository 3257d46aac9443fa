#pragma once

#include <cstdint>

#include "contagion/graph.hpp"
#include "contagion/report.hpp"

namespace contagion {

// Probabilistic seed constructions for threshold k = 2. Both return sets that
// have been checked by simulation at k = 2.

/// Picks every vertex independently with p = ln(d+1)/(d+1), d the minimum
/// degree, then adds each unpicked vertex with fewer than two picked
/// neighbors. The result is 2-dominating. Throws std::invalid_argument when
/// the minimum degree is below 2.
ContagiousSetReport random_2dom_baseline(const Graph& g, std::uint64_t seed);

struct WarmupParams {
  std::uint64_t seed = 0;
  /// Stop iterating once the residual minimum degree drops below this.
  std::uint32_t degree_cutoff = 3;
  /// 0 selects ceil(10 ln n), at least 1.
  std::uint32_t max_rounds = 0;
  std::uint32_t max_restarts = 20;
};

/// Iterated p = 1/d sampling.
///
/// The residual R starts as V. Each round, with d_r the minimum degree of the
/// subgraph induced by R, every vertex of R is picked with probability
/// 1/d_r, and R becomes the set of vertices that the k = 2 process seeded
/// with all picks so far leaves inactive. An inactive vertex has at most one
/// active neighbor, so d_r never drops below (min degree of G) - 1.
/// Iteration stops when R is empty, d_r < degree_cutoff, or max_rounds is
/// hit; the final residual is then added wholesale. Failed verification
/// triggers a restart with seed derive_seed(params.seed, attempt); after
/// max_restarts the last attempt is patched by adding every vertex it left
/// inactive.
ContagiousSetReport iterated_random_k2(const Graph& g, const WarmupParams& params);

}  // namespace contagion

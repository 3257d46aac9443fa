#pragma once

#include <cstdint>
#include <vector>

#include "contagion/bounds.hpp"
#include "contagion/cascade.hpp"
#include "contagion/graph.hpp"
#include "contagion/report.hpp"

namespace contagion {

/// A uniformly random ordering of the vertices and the set it selects: the
/// vertices preceded by fewer than k of their neighbors.
struct PermutationSample {
  std::uint64_t seed = 0;
  /// rank[v] is v's position in the ordering (a bijection onto 0..n-1).
  std::vector<Vertex> rank;
  /// 1 + number of neighbors ranked before v, i.e. v's position inside its
  /// closed neighborhood.
  std::vector<std::uint32_t> closed_rank;
  /// Sorted vertices with closed_rank <= k.
  std::vector<Vertex> selected;
};

PermutationSample sample_L(const Graph& g, ThresholdConfig cfg, std::uint64_t seed);

/// min{1, k/(d(v)+1)}: the chance that v lands among the first k of its
/// closed neighborhood.
Rational membership_probability(const Graph& g, ThresholdConfig cfg, Vertex v);

struct SampleMean {
  double mean = 0.0;
  /// Sample standard deviation over sqrt(samples); 0 for one sample.
  double standard_error = 0.0;
};

/// Monte-Carlo estimate of E|L| from `samples` independent orderings; sample
/// i uses derive_seed(seed, i).
SampleMean estimate_expected_L_size(const Graph& g, ThresholdConfig cfg, std::uint64_t samples, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultMaxTrials = 1000;

/// Samples orderings with seeds derive_seed(seed, t), t = 0, 1, ... and
/// returns the first L with |L| <= floor(w(G)). If none appears within
/// max_trials, the smallest L seen (earliest trial on ties) is returned with
/// accepted = false. Every sampled L is contagious, so both paths yield a
/// verified set.
ContagiousSetReport randomized_contagious(const Graph& g, ThresholdConfig cfg, std::uint64_t seed,
                                          std::uint64_t max_trials = kDefaultMaxTrials);

}  // namespace contagion

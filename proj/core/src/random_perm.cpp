#include "contagion/random_perm.hpp"

#include <cmath>
#include <numeric>

#include "contagion/rng.hpp"

namespace contagion {

namespace {

// Fills sample.rank, sample.closed_rank and sample.selected for the ordering
// drawn from `seed`. Buffers are reused across calls.
void draw(const Graph& g, std::uint32_t k, std::uint64_t seed, std::vector<Vertex>& ordering,
          PermutationSample& sample) {
  const Vertex n = g.num_vertices();
  ordering.resize(n);
  std::iota(ordering.begin(), ordering.end(), Vertex{0});
  Rng rng(seed);
  rng.shuffle(std::span<Vertex>(ordering));

  sample.seed = seed;
  sample.rank.resize(n);
  for (Vertex i = 0; i < n; ++i) sample.rank[ordering[i]] = i;
  sample.closed_rank.resize(n);
  sample.selected.clear();
  for (Vertex v = 0; v < n; ++v) {
    std::uint32_t earlier = 0;
    for (Vertex x : g.neighbors(v)) earlier += sample.rank[x] < sample.rank[v] ? 1 : 0;
    sample.closed_rank[v] = earlier + 1;
    if (earlier < k) sample.selected.push_back(v);
  }
}

}  // namespace

PermutationSample sample_L(const Graph& g, ThresholdConfig cfg, std::uint64_t seed) {
  PermutationSample sample;
  std::vector<Vertex> ordering;
  draw(g, cfg.k(), seed, ordering, sample);
  return sample;
}

Rational membership_probability(const Graph& g, ThresholdConfig cfg, Vertex v) {
  if (v >= g.num_vertices()) throw GraphError("membership_probability: vertex out of range");
  return vertex_term(cfg.k(), g.degree(v));
}

SampleMean estimate_expected_L_size(const Graph& g, ThresholdConfig cfg, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("estimate_expected_L_size needs at least one sample");
  PermutationSample sample;
  std::vector<Vertex> ordering;
  // Welford's running mean and sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    draw(g, cfg.k(), derive_seed(seed, i), ordering, sample);
    const double x = static_cast<double>(sample.selected.size());
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  SampleMean out;
  out.mean = mean;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    out.standard_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return out;
}

ContagiousSetReport randomized_contagious(const Graph& g, ThresholdConfig cfg, std::uint64_t seed,
                                          std::uint64_t max_trials) {
  if (max_trials == 0) throw std::invalid_argument("randomized_contagious needs max_trials >= 1");
  ContagiousSetReport report;
  report.algorithm = Algorithm::random_permutation;
  report.w = weight_value(g, cfg);
  const std::uint64_t target = floor_of(report.w);

  PermutationCertificate cert;
  cert.master_seed = seed;
  PermutationSample sample;
  std::vector<Vertex> ordering;
  bool have_best = false;
  for (std::uint64_t t = 0; t < max_trials; ++t) {
    draw(g, cfg.k(), derive_seed(seed, t), ordering, sample);
    cert.trials_run = t + 1;
    if (!have_best || sample.selected.size() < report.set.size()) {
      have_best = true;
      report.set = sample.selected;
      cert.trial = t;
      cert.sample_seed = sample.seed;
    }
    if (sample.selected.size() <= target) {
      cert.accepted = true;
      break;
    }
  }
  report.certificate = cert;
  report.verified = is_contagious(g, cfg, report.set);
  return report;
}

}  // namespace contagion

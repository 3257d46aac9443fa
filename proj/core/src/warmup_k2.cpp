#include "contagion/warmup_k2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "contagion/bounds.hpp"
#include "contagion/cascade.hpp"
#include "contagion/rng.hpp"

namespace contagion {

namespace {

const ThresholdConfig kTwo{2};

std::vector<Vertex> members(const std::vector<bool>& flags) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < flags.size(); ++v)
    if (flags[v]) out.push_back(v);
  return out;
}

std::uint32_t default_max_rounds(Vertex n) {
  const double rounds = std::ceil(10.0 * std::log(static_cast<double>(std::max<Vertex>(n, 1))));
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(rounds));
}

struct Attempt {
  std::vector<bool> in_set;
  std::vector<WarmupRound> rounds;
  std::size_t added_at_end = 0;
};

Attempt run_iterated(const Graph& g, const WarmupParams& params, std::uint64_t seed) {
  const Vertex n = g.num_vertices();
  const std::uint32_t max_rounds = params.max_rounds > 0 ? params.max_rounds : default_max_rounds(n);
  Rng rng(seed);
  Attempt out;
  out.in_set.assign(n, false);

  // Incremental k = 2 cascade over everything picked so far. The residual is
  // the set of vertices it has not reached; each has at most one active
  // neighbor, so its degree inside the residual is at least d(v) - 1.
  std::vector<bool> active(n, false);
  std::vector<std::uint32_t> hits(n, 0);
  std::vector<Vertex> queue;
  auto activate = [&](Vertex s) {
    if (active[s]) return;
    active[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.back();
      queue.pop_back();
      for (Vertex x : g.neighbors(v)) {
        if (!active[x] && ++hits[x] == 2) {
          active[x] = true;
          queue.push_back(x);
        }
      }
    }
  };

  std::vector<Vertex> residual(n);
  for (Vertex v = 0; v < n; ++v) residual[v] = v;

  for (std::uint32_t r = 0; r < max_rounds && !residual.empty(); ++r) {
    std::uint32_t min_deg = std::numeric_limits<std::uint32_t>::max();
    for (Vertex v : residual) {
      std::uint32_t d = 0;
      for (Vertex x : g.neighbors(v)) d += active[x] ? 0 : 1;
      min_deg = std::min(min_deg, d);
    }
    if (min_deg < params.degree_cutoff) break;

    WarmupRound round;
    round.index = r;
    round.residual = residual;
    round.residual_min_degree = min_deg;
    round.p = 1.0 / static_cast<double>(min_deg);
    for (Vertex v : residual)
      if (rng.bernoulli(round.p)) round.chosen.push_back(v);
    for (Vertex v : round.chosen) {
      out.in_set[v] = true;
      activate(v);
    }

    std::erase_if(residual, [&](Vertex v) { return active[v]; });
    out.rounds.push_back(std::move(round));
  }

  for (Vertex v : residual) {
    if (!out.in_set[v]) ++out.added_at_end;
    out.in_set[v] = true;
  }
  return out;
}

}  // namespace

ContagiousSetReport random_2dom_baseline(const Graph& g, std::uint64_t seed) {
  ContagiousSetReport report;
  report.algorithm = Algorithm::k2_baseline;
  report.w = weight_value(g, kTwo);
  WarmupCertificate cert;
  cert.master_seed = seed;
  cert.attempt_seed = seed;
  if (g.empty()) {
    report.certificate = cert;
    report.verified = true;
    return report;
  }
  const std::uint32_t d = g.min_degree();
  if (d < 2)
    throw std::invalid_argument("k2base needs minimum degree >= 2 (got " + std::to_string(d) +
                                "); use the greedy algorithm instead");

  const Vertex n = g.num_vertices();
  WarmupRound round;
  round.p = std::log(static_cast<double>(d) + 1.0) / (static_cast<double>(d) + 1.0);
  round.residual_min_degree = d;
  round.residual.resize(n);
  Rng rng(seed);
  std::vector<bool> in_set(n, false);
  for (Vertex v = 0; v < n; ++v) {
    round.residual[v] = v;
    if (rng.bernoulli(round.p)) {
      in_set[v] = true;
      round.chosen.push_back(v);
    }
  }
  std::vector<Vertex> uncovered;
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    std::uint32_t covered_by = 0;
    for (Vertex x : g.neighbors(v)) covered_by += in_set[x] ? 1 : 0;
    if (covered_by < 2) uncovered.push_back(v);
  }
  for (Vertex v : uncovered) in_set[v] = true;
  cert.added_at_end = uncovered.size();
  cert.rounds.push_back(std::move(round));

  report.set = members(in_set);
  report.certificate = std::move(cert);
  report.verified = is_contagious(g, kTwo, report.set);
  return report;
}

ContagiousSetReport iterated_random_k2(const Graph& g, const WarmupParams& params) {
  if (params.degree_cutoff < 1) throw std::invalid_argument("degree cutoff must be at least 1");
  ContagiousSetReport report;
  report.algorithm = Algorithm::k2_iterated;
  report.w = weight_value(g, kTwo);
  WarmupCertificate cert;
  cert.master_seed = params.seed;

  Attempt attempt;
  for (std::uint32_t a = 0; a <= params.max_restarts; ++a) {
    cert.attempt_seed = derive_seed(params.seed, a);
    cert.restarts = a;
    attempt = run_iterated(g, params, cert.attempt_seed);
    report.set = members(attempt.in_set);
    if (is_contagious(g, kTwo, report.set)) {
      report.verified = true;
      break;
    }
  }

  if (!report.verified) {
    const auto cascade = simulate(g, kTwo, report.set);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (!cascade.active(v)) attempt.in_set[v] = true;
    report.set = members(attempt.in_set);
    cert.patched = true;
    report.verified = is_contagious(g, kTwo, report.set);
  }
  cert.rounds = std::move(attempt.rounds);
  cert.added_at_end = attempt.added_at_end;
  report.certificate = std::move(cert);
  return report;
}

}  // namespace contagion

#include "contagion/bounds.hpp"

#include <algorithm>
#include <map>

namespace contagion {

Rational vertex_term(std::uint32_t k, std::uint32_t degree) {
  if (std::uint64_t{k} >= std::uint64_t{degree} + 1) return Rational(1);
  return Rational(BigInt(k), BigInt(std::uint64_t{degree} + 1));
}

std::uint64_t floor_of(const Rational& r) {
  const BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  return q.convert_to<std::uint64_t>();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

WeightReport weight(const Graph& g, ThresholdConfig cfg) {
  WeightReport report;
  report.per_vertex.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) report.per_vertex.push_back(vertex_term(cfg.k(), g.degree(v)));
  report.w = weight_value(g, cfg);
  return report;
}

Rational weight_value(std::span<const std::uint32_t> degrees, std::uint32_t k) {
  // Vertices with degree < k contribute exactly 1 each; the rest are grouped
  // by degree so the big-number work scales with distinct degrees.
  std::uint64_t capped = 0;
  std::map<std::uint32_t, std::uint64_t> count_by_degree;
  for (auto d : degrees) {
    if (std::uint64_t{k} >= std::uint64_t{d} + 1)
      ++capped;
    else
      ++count_by_degree[d];
  }
  Rational w(capped);
  for (const auto& [d, count] : count_by_degree)
    w += Rational(BigInt(count) * k, BigInt(std::uint64_t{d} + 1));
  return w;
}

Rational weight_value(const Graph& g, ThresholdConfig cfg) { return weight_value(g.degrees(), cfg.k()); }

Rational delta_weight(const Graph& g, ThresholdConfig cfg, Vertex u) {
  if (u >= g.num_vertices()) throw GraphError("delta_weight: vertex out of range");
  Rational delta = -vertex_term(cfg.k(), g.degree(u));
  for (Vertex x : g.neighbors(u)) {
    const auto d = g.degree(x);
    delta += vertex_term(cfg.k(), d - 1) - vertex_term(cfg.k(), d);
  }
  return delta;
}

std::vector<Rational> weight_along_deletions(const Graph& g, ThresholdConfig cfg, std::span<const Vertex> order) {
  const std::uint32_t k = cfg.k();
  std::vector<std::uint32_t> degree(g.degrees().begin(), g.degrees().end());
  std::vector<bool> alive(g.num_vertices(), true);
  std::vector<Rational> trace;
  trace.reserve(order.size() + 1);
  trace.push_back(weight_value(g, cfg));
  for (Vertex u : order) {
    if (u >= g.num_vertices() || !alive[u]) throw GraphError("weight_along_deletions: bad or repeated vertex");
    Rational w = trace.back() - vertex_term(k, degree[u]);
    alive[u] = false;
    for (Vertex x : g.neighbors(u)) {
      if (!alive[x]) continue;
      w += vertex_term(k, degree[x] - 1) - vertex_term(k, degree[x]);
      --degree[x];
    }
    trace.push_back(std::move(w));
  }
  return trace;
}

}  // namespace contagion

#include "contagion/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "contagion/rng.hpp"

namespace contagion {

Graph gen_disjoint_cliques(std::uint32_t q, std::uint32_t l) {
  if (q < 1 || l < 1) throw GraphError("disjoint cliques need q >= 1 and l >= 1");
  std::vector<Edge> edges;
  edges.reserve(std::size_t{q} * l * (l - 1) / 2);
  for (std::uint32_t c = 0; c < q; ++c) {
    const Vertex base = c * l;
    for (Vertex a = 0; a < l; ++a)
      for (Vertex b = a + 1; b < l; ++b) edges.push_back({base + a, base + b});
  }
  return Graph::from_edges(q * l, edges);
}

Graph gen_complete(std::uint32_t n) {
  if (n == 0) return Graph{};
  return gen_disjoint_cliques(1, n);
}

Graph gen_cycle(std::uint32_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph gen_grid(std::uint32_t rows, std::uint32_t cols) {
  if (rows < 1 || cols < 1) throw GraphError("grid needs rows >= 1 and cols >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph gen_gnp(std::uint32_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("gnp needs 0 <= p <= 1");
  std::vector<Edge> edges;
  if (p == 0.0 || n < 2) return Graph::from_edges(n, edges);
  if (p == 1.0) return gen_complete(n);

  // Pairs (w, v) with w < v are enumerated by v, then w; the gap to the next
  // kept pair is geometric with parameter p.
  Rng rng(seed);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = rng.uniform01();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, edges);
}

namespace {

bool adjacent(const std::vector<std::vector<Vertex>>& adj, Vertex a, Vertex b) {
  const auto& small = adj[a].size() <= adj[b].size() ? adj[a] : adj[b];
  const Vertex other = adj[a].size() <= adj[b].size() ? b : a;
  return std::find(small.begin(), small.end(), other) != small.end();
}

// One attempt at a simple perfect matching of the n*d points. Returns false
// when the remaining points admit no legal pair.
bool try_pairing(std::uint32_t n, std::uint32_t d, Rng& rng, std::vector<Edge>& edges) {
  std::vector<Vertex> points;
  points.reserve(std::size_t{n} * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  std::vector<std::vector<Vertex>> adj(n);
  for (auto& a : adj) a.reserve(d);
  edges.clear();

  auto take = [&](std::size_t i, std::size_t j) {
    const Vertex a = points[i], b = points[j];
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.push_back({a, b});
    if (i < j) std::swap(i, j);
    points[i] = points.back();
    points.pop_back();
    points[j] = points.back();
    points.pop_back();
  };

  constexpr int kBlindAttempts = 64;
  while (!points.empty()) {
    bool paired = false;
    for (int attempt = 0; attempt < kBlindAttempts && !paired; ++attempt) {
      const auto i = static_cast<std::size_t>(rng.below(points.size()));
      const auto j = static_cast<std::size_t>(rng.below(points.size()));
      if (i == j || points[i] == points[j] || adjacent(adj, points[i], points[j])) continue;
      take(i, j);
      paired = true;
    }
    if (paired) continue;
    // Blind draws keep failing: list the legal pairs explicitly and pick one
    // uniformly, or give up if there are none.
    std::vector<std::pair<std::size_t, std::size_t>> legal;
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] != points[j] && !adjacent(adj, points[i], points[j])) legal.emplace_back(i, j);
    if (legal.empty()) return false;
    const auto& [i, j] = legal[rng.below(legal.size())];
    take(i, j);
  }
  return true;
}

}  // namespace

Graph gen_random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed, std::uint32_t max_restarts) {
  if (d >= n && !(n == 0 && d == 0)) throw GraphError("random regular graph needs d < n");
  if ((std::uint64_t{n} * d) % 2 != 0) throw GraphError("random regular graph needs n*d even");
  std::vector<Edge> edges;
  for (std::uint32_t attempt = 0; attempt <= max_restarts; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    if (try_pairing(n, d, rng, edges)) return Graph::from_edges(n, edges);
  }
  throw GraphError("random regular graph: pairing failed after " + std::to_string(max_restarts) + " restarts");
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::disjoint_cliques: return "disjoint-cliques";
    case Family::cycle: return "cycle";
    case Family::grid: return "grid";
    case Family::gnp: return "gnp";
    case Family::random_regular: return "random-regular";
    case Family::from_edges: return "from-edges";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (auto f : {Family::disjoint_cliques, Family::cycle, Family::grid, Family::gnp, Family::random_regular,
                 Family::from_edges})
    if (to_string(f) == name) return f;
  throw GraphError("unknown graph family \"" + std::string(name) + "\"");
}

Graph generate(const GraphSpec& spec) {
  switch (spec.family) {
    case Family::disjoint_cliques: return gen_disjoint_cliques(spec.q, spec.l);
    case Family::cycle: return gen_cycle(spec.n);
    case Family::grid: return gen_grid(spec.rows, spec.cols);
    case Family::gnp: return gen_gnp(spec.n, spec.p, spec.seed);
    case Family::random_regular: return gen_random_regular(spec.n, spec.d, spec.seed);
    case Family::from_edges: return Graph::from_edges(spec.n, spec.edges);
  }
  throw GraphError("unknown graph family");
}

}  // namespace contagion

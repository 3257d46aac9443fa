#include "contagion/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace contagion {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << ", " << v << ") references a vertex >= n = " << n;
      throw GraphError(msg.str());
    }
    if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
    canon.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.degrees_.assign(n, 0);
  for (const auto& [u, v] : canon) {
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  g.offsets_.assign(std::size_t{n} + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degrees_[v];
  g.targets_.resize(canon.size() * 2);

  // Smaller neighbors first, then larger ones; both passes walk the sorted
  // edges so each list comes out sorted.
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : canon) g.targets_[cursor[v]++] = u;
  for (const auto& [u, v] : canon) g.targets_[cursor[u]++] = v;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
  const Vertex target = degree(u) <= degree(v) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), target);
}

std::uint32_t Graph::min_degree() const noexcept {
  if (degrees_.empty()) return 0;
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::uint32_t Graph::max_degree() const noexcept {
  if (degrees_.empty()) return 0;
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::optional<std::string> find_invariant_violation(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() != g.degree(v)) return "degree of " + std::to_string(v) + " differs from its list length";
    degree_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex x = nb[i];
      if (x >= g.num_vertices()) return "vertex " + std::to_string(v) + " lists out-of-range neighbor";
      if (x == v) return "self-loop on vertex " + std::to_string(v);
      if (i > 0 && nb[i - 1] >= x) return "neighbors of " + std::to_string(v) + " are unsorted or repeated";
      auto back = g.neighbors(x);
      if (!std::binary_search(back.begin(), back.end(), v))
        return "edge " + std::to_string(v) + "->" + std::to_string(x) + " has no reverse entry";
    }
  }
  if (degree_sum != 2 * g.num_edges()) return "degree sum is not twice the edge count";
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v >= g.num_vertices()) throw GraphError("induced_subgraph: vertex out of range");
    if (local[v] != kAbsent) throw GraphError("induced_subgraph: repeated vertex " + std::to_string(v));
    local[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : vertices)
    for (Vertex x : g.neighbors(v))
      if (local[x] != kAbsent && v < x) edges.push_back({local[v], local[x]});
  return Graph::from_edges(static_cast<Vertex>(vertices.size()), edges);
}

Graph remove_vertex(const Graph& g, Vertex u) {
  if (u >= g.num_vertices()) throw GraphError("remove_vertex: vertex out of range");
  std::vector<Vertex> keep;
  keep.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (v != u) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace contagion

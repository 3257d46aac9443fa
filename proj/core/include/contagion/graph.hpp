#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace contagion {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Storage is compressed sparse rows: neighbors(v) is a sorted span into one
/// contiguous array. Instances are safe to share between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from unordered pairs. Duplicate pairs (in either
  /// orientation) collapse into one edge; self-loops and ids >= n throw
  /// GraphError.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const noexcept { return static_cast<Vertex>(degrees_.size()); }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return degrees_.empty(); }

  std::uint32_t degree(Vertex v) const { return degrees_[v]; }
  std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  bool has_edge(Vertex u, Vertex v) const;

  /// 0 for the empty graph.
  std::uint32_t min_degree() const noexcept;
  std::uint32_t max_degree() const noexcept;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::uint32_t> degrees_;
};

inline Graph build_graph(Vertex n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

/// Describes the first broken representation invariant (asymmetric
/// adjacency, self-loop, duplicate or unsorted neighbor, degree mismatch),
/// or nullopt when the graph is well formed.
std::optional<std::string> find_invariant_violation(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
/// Duplicate or out-of-range ids throw GraphError.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// g with vertex u removed; the survivors keep their relative order.
Graph remove_vertex(const Graph& g, Vertex u);

}  // namespace contagion

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "contagion/graph.hpp"

namespace contagion {

/// Input text that cannot be read as an edge list or vertex list.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);

  /// 1-based line number; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads "u v" pairs, one per line. Blank lines and lines starting with '#'
/// are skipped. The vertex count is max id + 1 unless `num_vertices` is
/// given, in which case every id must be below it.
Graph parse_edge_list(std::istream& in, std::optional<Vertex> num_vertices = std::nullopt);
Graph parse_edge_list(const std::string& text, std::optional<Vertex> num_vertices = std::nullopt);

/// Canonical form: one "u v" line per edge with u < v, sorted, each line
/// newline-terminated. Isolated trailing vertices are not representable.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

/// Seed-set files: one vertex id per line, '#' comments. Ids must be below
/// `num_vertices`. Duplicates are kept as read.
std::vector<Vertex> parse_vertex_list(std::istream& in, Vertex num_vertices);

Graph read_edge_list_file(const std::string& path, std::optional<Vertex> num_vertices = std::nullopt);

}  // namespace contagion

#include "contagion/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace contagion {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

// Reads whitespace-separated unsigned ids from `line`; returns false if any
// token is not a plain nonnegative integer that fits in a Vertex.
bool read_ids(std::string_view line, std::vector<std::uint64_t>& ids) {
  ids.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc{} || ptr != line.data() + end || value >= std::numeric_limits<Vertex>::max()) return false;
    ids.push_back(value);
    pos = end;
  }
  return true;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Graph parse_edge_list(std::istream& in, std::optional<Vertex> num_vertices) {
  std::vector<Edge> edges;
  std::vector<std::uint64_t> ids;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skippable(line)) continue;
    if (!read_ids(line, ids) || ids.size() != 2)
      throw ParseError(line_no, "expected two nonnegative integer vertex ids, got \"" + std::string(line) + "\"");
    if (ids[0] == ids[1]) throw ParseError(line_no, "self-loop on vertex " + std::to_string(ids[0]));
    if (num_vertices && (ids[0] >= *num_vertices || ids[1] >= *num_vertices))
      throw ParseError(line_no, "vertex id out of range for " + std::to_string(*num_vertices) + " vertices");
    edges.push_back({static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1])});
    max_id = std::max({max_id, ids[0], ids[1]});
    any = true;
  }
  if (!num_vertices && !any) throw ParseError(0, "edge list is empty and no vertex count was given");
  const Vertex n = num_vertices ? *num_vertices : static_cast<Vertex>(max_id + 1);
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text, std::optional<Vertex> num_vertices) {
  std::istringstream in(text);
  return parse_edge_list(in, num_vertices);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

std::vector<Vertex> parse_vertex_list(std::istream& in, Vertex num_vertices) {
  std::vector<Vertex> out;
  std::vector<std::uint64_t> ids;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skippable(line)) continue;
    if (!read_ids(line, ids) || ids.size() != 1)
      throw ParseError(line_no, "expected one nonnegative integer vertex id, got \"" + std::string(line) + "\"");
    if (ids[0] >= num_vertices)
      throw ParseError(line_no, "vertex " + std::to_string(ids[0]) + " out of range for " +
                                    std::to_string(num_vertices) + " vertices");
    out.push_back(static_cast<Vertex>(ids[0]));
  }
  return out;
}

Graph read_edge_list_file(const std::string& path, std::optional<Vertex> num_vertices) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_edge_list(in, num_vertices);
}

}  // namespace contagion

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bgp/graph.hpp"

namespace bgp {

// Edge-list text format:
//   line 1: "n m"
//   next m lines: "u v" (0-based)
// Blank lines and lines starting with '#' are skipped.

inline Graph read_edge_list(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(Errc::ParseError, "missing header line");

  auto parse_pair = [](const std::string& line, std::size_t lineno) {
    std::istringstream ss(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra))
      throw Error(Errc::ParseError, "expected two integers on record " + std::to_string(lineno) + ": '" + line + "'");
    return std::pair{a, b};
  };

  const auto [n, m] = parse_pair(lines[0], 0);
  if (n < 1 || m < 0) throw Error(Errc::ParseError, "bad header '" + lines[0] + "'");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = parse_pair(lines[i], i);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::MalformedEdge, "endpoint out of range on record " + std::to_string(i));
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return build_graph(static_cast<int>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace bgp

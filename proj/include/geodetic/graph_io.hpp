#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

// Graph text format: first line `n m`, then m lines `u v` (0-based, u < v).
// Lines starting with '#' are comments. Output is LF-terminated.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Graph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// Whitespace-separated vertex ids, '#' comments allowed.
std::vector<Vertex> read_vertex_list(std::istream& in);
std::vector<Vertex> read_vertex_list_file(const std::string& path);

}  // namespace geodetic

#include "geodetic/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace geodetic {

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::vector<long long> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto ints = parse_ints(line, line_no);
    if (ints.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected two integers");
    if (n < 0) {
      n = ints[0];
      m = ints[1];
      if (n < 0 || m < 0) throw InputError("negative header values");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw InputError("line " + std::to_string(line_no) + ": more edges than declared");
    if (ints[0] < 0 || ints[0] >= n || ints[1] < 0 || ints[1] >= n)
      throw InputError("line " + std::to_string(line_no) + ": vertex id out of range");
    edges.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
  }
  if (n < 0) throw InputError("missing header line");
  if (static_cast<long long>(edges.size()) != m)
    throw InputError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_graph(in);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  write_graph(out, g);
}

std::vector<Vertex> read_vertex_list(std::istream& in) {
  std::vector<Vertex> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    for (long long v : parse_ints(line, line_no)) {
      if (v < 0) throw InputError("negative vertex id");
      out.push_back(static_cast<Vertex>(v));
    }
  }
  return out;
}

std::vector<Vertex> read_vertex_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_vertex_list(in);
}

}  // namespace geodetic

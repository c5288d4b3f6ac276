#include "geodetic/graph.hpp"

#include <algorithm>
#include <numeric>

namespace geodetic {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
      throw InputError("duplicate edge");
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto adj = neighbors(u);
  check_vertex(v);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> connected_components(const Graph& g, int* component_count) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (label[w] == -1) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  if (component_count) *component_count = count;
  return label;
}

bool is_connected(const Graph& g) {
  int c = 0;
  connected_components(g, &c);
  return c <= 1;
}

int feedback_edge_number(const Graph& g) {
  int c = 0;
  connected_components(g, &c);
  return static_cast<int>(g.edge_count()) - g.vertex_count() + c;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check_vertex(vertices[i]);
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[w]);
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

}  // namespace geodetic

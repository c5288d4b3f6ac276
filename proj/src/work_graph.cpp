#include "geodetic/work_graph.hpp"

#include <algorithm>

namespace geodetic {

WorkGraph::WorkGraph(const Graph& g)
    : adjacency_(static_cast<std::size_t>(g.vertex_count())),
      alive_(static_cast<std::size_t>(g.vertex_count()), 1),
      original_count_(g.vertex_count()),
      alive_count_(g.vertex_count()),
      edge_count_(g.edge_count()) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto adj = g.neighbors(v);
    adjacency_[v].assign(adj.begin(), adj.end());
  }
}

void WorkGraph::check_alive(Vertex v) const {
  if (!alive(v)) throw ContractViolation("vertex " + std::to_string(v) + " is not live");
}

const std::vector<Vertex>& WorkGraph::neighbors(Vertex v) const {
  check_alive(v);
  return adjacency_[v];
}

Vertex WorkGraph::leaf_of(Vertex v) const {
  for (Vertex w : neighbors(v))
    if (adjacency_[w].size() == 1) return w;
  return -1;
}

std::vector<Vertex> WorkGraph::alive_vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(alive_count_));
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<Vertex> WorkGraph::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v] && adjacency_[v].size() == 1) out.push_back(v);
  return out;
}

Vertex WorkGraph::add_leaf(Vertex anchor) {
  check_alive(anchor);
  const Vertex leaf = capacity();
  adjacency_.push_back({anchor});
  alive_.push_back(1);
  auto& adj = adjacency_[anchor];
  adj.insert(std::upper_bound(adj.begin(), adj.end(), leaf), leaf);
  ++alive_count_;
  ++edge_count_;
  return leaf;
}

void WorkGraph::remove_vertex(Vertex v) {
  check_alive(v);
  for (Vertex w : adjacency_[v]) {
    auto& adj = adjacency_[w];
    adj.erase(std::lower_bound(adj.begin(), adj.end(), v));
  }
  edge_count_ -= adjacency_[v].size();
  adjacency_[v].clear();
  alive_[v] = 0;
  --alive_count_;
}

int WorkGraph::component_count() const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<Vertex> stack;
  int count = 0;
  for (Vertex s = 0; s < capacity(); ++s) {
    if (!alive_[s] || seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

int WorkGraph::feedback_edge_number() const {
  return static_cast<int>(edge_count_) - alive_count_ + component_count();
}

Graph WorkGraph::to_graph(std::vector<Vertex>* ids) const {
  std::vector<int> compact(adjacency_.size(), -1);
  std::vector<Vertex> order = alive_vertices();
  for (std::size_t i = 0; i < order.size(); ++i) compact[order[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (Vertex u : order)
    for (Vertex w : adjacency_[u])
      if (u < w) edges.emplace_back(compact[u], compact[w]);
  if (ids) *ids = order;
  return Graph::from_edges(static_cast<int>(order.size()), edges);
}

std::vector<Distance> WorkGraph::distances_from(Vertex source) const {
  check_alive(source);
  std::vector<Distance> dist(adjacency_.size());
  dist[source] = Distance(0);
  std::vector<Vertex> frontier{source};
  for (int level = 1; !frontier.empty(); ++level) {
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (Vertex w : adjacency_[u])
        if (!dist[w].finite()) {
          dist[w] = Distance(level);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace geodetic

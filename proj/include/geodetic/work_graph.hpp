#pragma once

#include <span>
#include <vector>

#include "geodetic/geodesic.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

/// Mutable graph used during reduction. Vertex ids are never reused or
/// renumbered: removed vertices stay as dead slots and new leaves get fresh
/// ids past the original range. That keeps every trace entry meaningful in a
/// single id space.
class WorkGraph {
 public:
  WorkGraph() = default;
  explicit WorkGraph(const Graph& g);

  int capacity() const { return static_cast<int>(adjacency_.size()); }
  int original_count() const { return original_count_; }
  bool alive(Vertex v) const { return v >= 0 && v < capacity() && alive_[v]; }
  int alive_count() const { return alive_count_; }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool is_leaf(Vertex v) const { return alive(v) && degree(v) == 1; }
  /// Some degree-one neighbour of v, or -1. With RR1/RR2 exhausted there is
  /// at most one.
  Vertex leaf_of(Vertex v) const;

  std::vector<Vertex> alive_vertices() const;
  std::vector<Vertex> leaves() const;

  Vertex add_leaf(Vertex anchor);
  void remove_vertex(Vertex v);

  int component_count() const;
  /// |E| - |V| + #components over the live vertices.
  int feedback_edge_number() const;

  /// Compact copy; `ids` receives the working id of each compact vertex.
  Graph to_graph(std::vector<Vertex>* ids = nullptr) const;

  /// BFS over live vertices; dead slots stay infinite.
  std::vector<Distance> distances_from(Vertex source) const;

 private:
  void check_alive(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> alive_;
  int original_count_ = 0;
  int alive_count_ = 0;
  std::size_t edge_count_ = 0;
};

}  // namespace geodetic

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geodetic {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed input: out-of-range ids, self-loops, parse failures.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation that needs a connected graph receives a disconnected one.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a function is called outside its documented domain.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges and
  /// out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count())
      throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(vertex_count()) + ")");
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Component label per vertex (labels 0..c-1 in order of smallest member).
std::vector<int> connected_components(const Graph& g, int* component_count = nullptr);

bool is_connected(const Graph& g);

/// |E| - |V| + #components.
int feedback_edge_number(const Graph& g);

/// Induced subgraph on `vertices` (ids renumbered in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace geodetic

#pragma once

#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

/// Hop distance with an explicit unreachable state. Arithmetic on an
/// unreachable distance throws instead of wrapping.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(int hops) : hops_(hops) {}
  static constexpr Distance infinite() { return Distance(); }

  constexpr bool finite() const { return hops_ >= 0; }
  int value() const {
    if (!finite()) throw DisconnectedError("distance is infinite");
    return hops_;
  }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  int hops_ = -1;
};

/// Distances from `source` to every vertex.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Lazily computed, memoized BFS rows. Safe to query from several threads.
/// Holds a reference to the graph, which must outlive it.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g);
  explicit DistanceOracle(Graph&&) = delete;

  const Graph& graph() const { return *graph_; }
  const std::vector<Distance>& row(Vertex source) const;
  Distance operator()(Vertex u, Vertex v) const { return row(u)[static_cast<std::size_t>(v)]; }

  /// Fills every row up front so later queries never lock.
  void precompute_all() const;

 private:
  const Graph* graph_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<const std::vector<Distance>>> rows_;
};

/// {w : d(u,v) = d(u,w) + d(w,v)}. Throws DisconnectedError if u and v lie in
/// different components.
VertexSet interval(const DistanceOracle& dist, Vertex u, Vertex v);

/// Union of I[u,v] over all pairs of S (including u = v).
VertexSet interval_closure(const DistanceOracle& dist, const VertexSet& s);
VertexSet interval_closure(const Graph& g, const VertexSet& s);

/// True iff I[S] = V(G). Requires a connected graph.
bool is_geodetic(const Graph& g, const VertexSet& s);
bool is_geodetic(const DistanceOracle& dist, const VertexSet& s);

/// Smallest vertex not covered by I[S], if any. Requires a connected graph.
std::optional<Vertex> first_uncovered(const DistanceOracle& dist, const VertexSet& s);

/// Largest pairwise distance. Requires a connected graph.
int diameter(const Graph& g);

/// Maximum over the BFS rows of `sources` (eccentricity bound helper).
int max_eccentricity(const DistanceOracle& dist, std::span<const Vertex> sources);

}  // namespace geodetic

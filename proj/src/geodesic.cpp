#include "geodetic/geodesic.hpp"

#include <algorithm>
#include <queue>

namespace geodetic {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()));
  std::vector<Vertex> frontier{source};
  dist[source] = Distance(0);
  for (int level = 1; !frontier.empty(); ++level) {
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (Vertex w : g.neighbors(u))
        if (!dist[w].finite()) {
          dist[w] = Distance(level);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  return dist;
}

DistanceOracle::DistanceOracle(const Graph& g)
    : graph_(&g), rows_(static_cast<std::size_t>(g.vertex_count())) {}

const std::vector<Distance>& DistanceOracle::row(Vertex source) const {
  graph_->check_vertex(source);
  std::lock_guard lock(mutex_);
  auto& slot = rows_[static_cast<std::size_t>(source)];
  if (!slot) slot = std::make_unique<const std::vector<Distance>>(bfs_distances(*graph_, source));
  return *slot;
}

void DistanceOracle::precompute_all() const {
  for (Vertex v = 0; v < graph_->vertex_count(); ++v) row(v);
}

namespace {

void add_interval(const DistanceOracle& dist, Vertex u, Vertex v, VertexSet& out) {
  const auto& du = dist.row(u);
  const auto& dv = dist.row(v);
  if (!du[v].finite()) throw DisconnectedError("vertices lie in different components");
  const int target = du[v].value();
  const int n = dist.graph().vertex_count();
  for (Vertex w = 0; w < n; ++w)
    if (du[w].finite() && dv[w].finite() && du[w].value() + dv[w].value() == target) out.insert(w);
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
}

}  // namespace

VertexSet interval(const DistanceOracle& dist, Vertex u, Vertex v) {
  VertexSet out(dist.graph().vertex_count());
  dist.graph().check_vertex(v);
  add_interval(dist, u, v, out);
  return out;
}

VertexSet interval_closure(const DistanceOracle& dist, const VertexSet& s) {
  VertexSet out(dist.graph().vertex_count());
  const auto members = s.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    out.insert(members[a]);
    for (std::size_t b = a + 1; b < members.size(); ++b) add_interval(dist, members[a], members[b], out);
  }
  return out;
}

VertexSet interval_closure(const Graph& g, const VertexSet& s) {
  DistanceOracle dist(g);
  return interval_closure(dist, s);
}

bool is_geodetic(const DistanceOracle& dist, const VertexSet& s) {
  return !first_uncovered(dist, s).has_value();
}

bool is_geodetic(const Graph& g, const VertexSet& s) {
  DistanceOracle dist(g);
  return is_geodetic(dist, s);
}

std::optional<Vertex> first_uncovered(const DistanceOracle& dist, const VertexSet& s) {
  require_connected(dist.graph());
  if (s.universe() != dist.graph().vertex_count())
    throw InputError("vertex set universe does not match graph");
  Vertex missing = interval_closure(dist, s).first_missing();
  if (missing < 0) return std::nullopt;
  return missing;
}

int max_eccentricity(const DistanceOracle& dist, std::span<const Vertex> sources) {
  int best = 0;
  for (Vertex s : sources)
    for (Distance d : dist.row(s)) best = std::max(best, d.value());
  return best;
}

int diameter(const Graph& g) {
  require_connected(g);
  int best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s)
    for (Distance d : bfs_distances(g, s)) best = std::max(best, d.value());
  return best;
}

}  // namespace geodetic

#include <random>
#include <sstream>

#include "doctest.h"
#include "geodetic/generators.hpp"
#include "geodetic/geodesic.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/graph_io.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace geodetic;
using namespace geodetic::testing;

namespace {

std::vector<int> hops(const std::vector<Distance>& row) {
  std::vector<int> out;
  for (Distance d : row) out.push_back(d.finite() ? d.value() : -1);
  return out;
}

}  // namespace

TEST_CASE("bfs distances on small graphs") {
  CHECK(hops(bfs_distances(path_graph(3), 0)) == std::vector<int>{0, 1, 2});
  CHECK(hops(bfs_distances(cycle_graph(4), 0)) == std::vector<int>{0, 1, 2, 1});
  Graph g = make_graph(4, {{0, 1}, {2, 3}});
  auto row = bfs_distances(g, 0);
  CHECK_FALSE(row[2].finite());
  CHECK_THROWS_AS(row[2].value(), DisconnectedError);
  CHECK_THROWS_AS(bfs_distances(g, 4), InputError);
  CHECK_THROWS_AS(bfs_distances(g, -1), InputError);
}

TEST_CASE("intervals") {
  const Graph g4 = cycle_graph(4), g5 = cycle_graph(5), g2 = make_graph(3, {{0, 1}});
  DistanceOracle c4(g4);
  CHECK(interval(c4, 0, 2) == VertexSet(4, {0, 1, 2, 3}));
  CHECK(interval(c4, 1, 1) == VertexSet(4, {1}));
  DistanceOracle c5(g5);
  CHECK(interval(c5, 0, 2) == VertexSet(5, {0, 1, 2}));
  DistanceOracle split(g2);
  CHECK_THROWS_AS(interval(split, 0, 2), DisconnectedError);
}

TEST_CASE("interval closure and geodetic predicate") {
  CHECK(interval_closure(path_graph(4), VertexSet(4, {0, 3})) == VertexSet::full(4));
  CHECK(interval_closure(complete_graph(4), VertexSet(4, {0, 1})) == VertexSet(4, {0, 1}));
  CHECK(interval_closure(cycle_graph(5), VertexSet(5, {0, 2, 4})) == VertexSet::full(5));
  CHECK(interval_closure(cycle_graph(5), VertexSet(5)).empty());

  CHECK(is_geodetic(path_graph(4), VertexSet(4, {0, 3})));
  CHECK_FALSE(is_geodetic(complete_graph(4), VertexSet(4, {0, 1, 2})));
  CHECK_FALSE(is_geodetic(cycle_graph(5), VertexSet(5, {0, 2})));
  CHECK_THROWS_AS(is_geodetic(make_graph(3, {{0, 1}}), VertexSet(3, {0, 1, 2})), DisconnectedError);

  const Graph g4 = complete_graph(4);
  DistanceOracle k4(g4);
  CHECK(first_uncovered(k4, VertexSet(4, {0, 1, 2})) == std::optional<Vertex>(3));
}

TEST_CASE("feedback edge number and diameter") {
  CHECK(feedback_edge_number(path_graph(6)) == 0);
  CHECK(feedback_edge_number(cycle_graph(7)) == 1);
  CHECK(feedback_edge_number(complete_graph(4)) == 3);
  CHECK(feedback_edge_number(make_graph(5, {{0, 1}, {2, 3}})) == 0);
  CHECK(diameter(cycle_graph(4)) == 2);
  CHECK(diameter(path_graph(5)) == 4);
  CHECK_THROWS_AS(diameter(make_graph(2, {})), DisconnectedError);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(make_graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}), InputError);
}

TEST_CASE("interval matches shortest path enumeration") {
  std::mt19937_64 seeds(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(seeds() % 7);
    const int fen = static_cast<int>(seeds() % 4);
    Graph g = random_fen_graph(n, std::min(fen, n * (n - 1) / 2 - (n - 1)), seeds());
    DistanceOracle dist(g);
    auto fw = floyd_warshall(g);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        CHECK(dist(u, v).value() == fw[u][v]);
        VertexSet iv = interval(dist, u, v);
        auto ref = interval_by_paths(g, u, v);
        for (Vertex w = 0; w < n; ++w) CHECK(iv.contains(w) == (ref[w] != 0));
        CHECK(iv == interval(dist, v, u));
        CHECK(iv.contains(u));
        CHECK(iv.contains(v));
      }
    }
  }
}

TEST_CASE("distance symmetry and triangle inequality") {
  std::mt19937_64 seeds(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_fen_graph(12, 3, seeds());
    DistanceOracle d(g);
    for (Vertex a = 0; a < 12; ++a)
      for (Vertex b = 0; b < 12; ++b) {
        CHECK(d(a, b) == d(b, a));
        for (Vertex c = 0; c < 12; ++c) CHECK(d(a, c).value() <= d(a, b).value() + d(b, c).value());
      }
  }
}

TEST_CASE("closure is monotone and the full set is geodetic") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_fen_graph(10, static_cast<int>(rng() % 4), rng());
    CHECK(is_geodetic(g, VertexSet::full(10)));
    VertexSet s(10), t(10);
    for (Vertex v = 0; v < 10; ++v) {
      if (rng() % 3 == 0) s.insert(v);
      if (s.contains(v) || rng() % 2 == 0) t.insert(v);
    }
    CHECK(s.is_subset_of(t));
    CHECK(interval_closure(g, s).is_subset_of(interval_closure(g, t)));
    if (!s.empty()) CHECK(s.is_subset_of(interval_closure(g, s)));
  }
}

TEST_CASE("spanning forest has fen 0 and removing fen cycle edges leaves a forest") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int fen = static_cast<int>(rng() % 5);
    Graph g = random_fen_graph(15, fen, rng());
    CHECK(feedback_edge_number(g) == fen);
    // Kruskal-style: keep edges joining new components, drop the rest.
    std::vector<int> parent(15);
    for (int v = 0; v < 15; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<Edge> kept;
    int dropped = 0;
    for (auto [u, v] : g.edges()) {
      int a = find(u), b = find(v);
      if (a == b) {
        ++dropped;
      } else {
        parent[a] = b;
        kept.emplace_back(u, v);
      }
    }
    CHECK(dropped == fen);
    CHECK(feedback_edge_number(Graph::from_edges(15, kept)) == 0);
  }
}

TEST_CASE("graph text format round trip") {
  Graph g = make_graph(4, {{2, 3}, {0, 1}, {1, 2}});
  const std::string text = format_graph(g);
  CHECK(text == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(parse_graph(text) == g);
  CHECK(parse_graph("# header\n3 2\n0 1\n# mid\n1 2\n") == path_graph(3));
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 x\n"), InputError);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    Graph r = random_fen_graph(20, 3, rng());
    CHECK(parse_graph(format_graph(r)) == r);
  }
  std::istringstream list("0 3\n# c\n5\n");
  CHECK(read_vertex_list(list) == std::vector<Vertex>{0, 3, 5});
}

TEST_CASE("generators") {
  CHECK(feedback_edge_number(random_fen_graph(20, 3, 7)) == 3);
  CHECK(is_connected(random_fen_graph(20, 3, 7)));
  CHECK(random_fen_graph(20, 3, 7) == random_fen_graph(20, 3, 7));
  CHECK(cycle_with_leaves(6, 0, 1) == cycle_graph(6));
  Graph cl = cycle_with_leaves(8, 3, 2);
  CHECK(cl.vertex_count() == 11);
  CHECK(feedback_edge_number(cl) == 1);
  SubdividedParams p;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = random_subdivided_graph(p, s);
    CHECK(is_connected(g));
    CHECK(g.vertex_count() <= p.max_vertices);
    CHECK(feedback_edge_number(g) == p.edges - p.branch + 1);
  }
}

#pragma once

#include <cstdint>
#include <random>

#include "geodetic/graph.hpp"

namespace geodetic {

/// Uniform random labelled tree via a Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

/// Random tree on n vertices plus `fen` extra edges chosen uniformly among
/// non-edges, so the result is connected with feedback edge number `fen`.
Graph random_fen_graph(int n, int fen, std::uint64_t seed);

/// C_length with `leaves` pendant vertices on distinct cycle vertices.
Graph cycle_with_leaves(int length, int leaves, std::uint64_t seed);

struct SubdividedParams {
  int branch = 3;
  /// Multiedges of the core, loops and parallels allowed; at least branch - 1.
  int edges = 4;
  /// Each multiedge becomes a path of 1 .. max_length hops (raised where the
  /// graph would otherwise not be simple).
  int max_length = 4;
  /// Chance that a vertex gets a pendant leaf.
  double leaf_chance = 0.2;
  /// Resample until the vertex count is at most this.
  int max_vertices = 22;
};

/// Connected random multigraph with every edge subdivided and a few leaves
/// hung on. Hits long paths, self-loops and parallel paths far more often
/// than random_fen_graph does.
Graph random_subdivided_graph(const SubdividedParams& params, std::uint64_t seed);

}  // namespace geodetic

#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "geodetic/graph.hpp"
#include "geodetic/grid_tiling.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

enum class BruteStatus { Optimal, ExceedsUpper, BudgetExhausted };

struct BruteOptions {
  /// Stop once every size up to `upper` has been refuted.
  std::optional<int> upper;
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
  /// Put every degree-one vertex in the set up front. Disabling this only
  /// exists for cross-checking the pruning.
  bool force_leaves = true;
};

struct BruteResult {
  BruteStatus status = BruteStatus::Optimal;
  int size = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
};

/// Minimum geodetic set by exhaustive enumeration: sizes in increasing order,
/// subsets of the non-forced vertices in lexicographic order, first hit wins.
/// Requires a connected graph; intended for n up to about 25.
BruteResult min_geodetic_brute(const Graph& g, const BruteOptions& options = {});

/// Exhaustive Grid Tiling search over all n^(k^2) choices, row-major with the
/// last cell varying fastest. Returns the first valid choice.
std::optional<TilingChoice> grid_tiling_brute(const GridTilingInstance& inst);

}  // namespace geodetic

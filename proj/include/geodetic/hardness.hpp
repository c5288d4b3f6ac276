#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/grid_tiling.hpp"
#include "geodetic/vertex_set.hpp"

namespace geodetic {

struct GadgetOptions {
  /// Multiplier on y in the vertical path lengths 16m +- c*y.
  int vertical_coefficient = 1;
};

/// Geodetic Set instance built from a Grid Tiling instance. Ids: alpha,
/// beta, gamma, delta, then their pendant partners, then tile vertices in
/// (i, j, eta) order, then each cell's horizontal and vertical gadget copies.
struct GadgetGraph {
  Graph graph;
  int k = 0, m = 0, n = 0;
  int budget = 0;
  std::array<Vertex, 4> globals{};
  std::array<Vertex, 4> pendants{};
  /// Hubs a, b, c, d of every copy, and their starred twins.
  std::vector<Vertex> hubs;
  std::vector<Vertex> starred_hubs;
  /// Named vertices in id order.
  std::vector<std::pair<std::string, Vertex>> registry;

  Vertex tile(int i, int j, int eta) const;
  /// Throws InputError for unknown names.
  Vertex id(std::string_view name) const;

 private:
  friend GadgetGraph build_gadget(const GridTilingInstance&, const GadgetOptions&);
  std::unordered_map<std::string, Vertex> by_name_;
};

GadgetGraph build_gadget(const GridTilingInstance& inst, const GadgetOptions& options = {});

/// `name -> id`, one per line, in id order.
void write_registry(std::ostream& out, const GadgetGraph& gg);

/// The four pendants plus the chosen tile vertex of every cell. Throws
/// InputError if `choice` is not a valid tiling of `inst`.
VertexSet canonical_solution(const GadgetGraph& gg, const GridTilingInstance& inst,
                             const TilingChoice& choice);

/// Same set without the validity check, for probing invalid choices.
VertexSet candidate_set(const GadgetGraph& gg, const TilingChoice& choice);

struct StructureReport {
  /// G minus all hubs is a forest, and there are 16k^2 hubs.
  bool hubs_cut_cycles = false;
  int hub_count = 0;
  /// The interval closure of the pendants is exactly V minus the unstarred hubs.
  bool pendant_closure_exact = false;
  int closure_mismatches = 0;
  bool diameter_ok = false;
  int diameter = 0;
  int diameter_bound = 0;
  /// Exactly the four pendants have degree one.
  bool pendants_only_leaves = false;
  int degree_one = 0;

  bool all() const {
    return hubs_cut_cycles && pendant_closure_exact && diameter_ok && pendants_only_leaves;
  }
};

/// Same checks on a possibly modified copy of the graph, using the ids of `gg`.
StructureReport verify_structure(const GadgetGraph& gg, const Graph& g);
StructureReport verify_structure(const GadgetGraph& gg);

enum class NoCheckStatus { AllFail, SomePass, TooLarge };

std::string_view no_check_status_name(NoCheckStatus s);

struct NoCheckResult {
  NoCheckStatus status = NoCheckStatus::AllFail;
  std::uint64_t candidates = 0;
  /// The first geodetic candidate, when one exists.
  std::optional<TilingChoice> passing;
};

/// Runs every set of the pendants plus one tile vertex per cell through
/// is_geodetic. AllFail is the expected outcome when `inst` has no tiling.
NoCheckResult exhaustive_no_check(const GadgetGraph& gg, const GridTilingInstance& inst,
                                  std::uint64_t limit = 10'000);

}  // namespace geodetic

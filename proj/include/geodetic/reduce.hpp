#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/work_graph.hpp"

namespace geodetic {

/// One multiedge of the feedback edge graph together with the path of G that
/// realizes it. `vertices` runs v^0 .. v^h; a self-loop has front == back.
struct PathRecord {
  std::vector<Vertex> vertices;
  /// Sorted positions j in 0..h whose vertex carries a degree-one neighbour.
  std::vector<int> leaf_positions;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex left() const { return vertices.front(); }
  Vertex right() const { return vertices.back(); }
  Vertex at(int position) const { return vertices.at(static_cast<std::size_t>(position)); }
  bool is_loop() const { return left() == right(); }
  bool has_leaves() const { return !leaf_positions.empty(); }
  int leftmost_leaf() const;
  int rightmost_leaf() const;
};

struct FeedbackEdgeDecomposition {
  std::vector<Vertex> branch_vertices;
  std::vector<PathRecord> paths;

  std::size_t vertex_count() const { return branch_vertices.size(); }
  std::size_t edge_count() const { return paths.size(); }
  bool is_branch(Vertex v) const;
};

/// Requires a connected graph with fen >= 2; throws ContractViolation
/// otherwise (fen <= 1 goes to the special-case solvers).
FeedbackEdgeDecomposition build_feg(const WorkGraph& g);
FeedbackEdgeDecomposition build_feg(const Graph& g);

/// Distances in G from every branch vertex. Leaves never sit on a shortest
/// path between non-leaf vertices, so the rows stay valid while leaves are
/// attached.
class BranchDistances {
 public:
  BranchDistances() = default;
  BranchDistances(const WorkGraph& g, const FeedbackEdgeDecomposition& feg);

  /// d(a, b) where a is a branch vertex.
  int operator()(Vertex a, Vertex b) const;

 private:
  std::unordered_map<Vertex, std::vector<Distance>> rows_;
};

enum class Rule { RR1, RR2, RR3, RR4, RR5, GuessLeaf };

std::string_view rule_name(Rule rule);

struct TraceEntry {
  Rule rule = Rule::RR1;
  /// RR1: the new leaf v. RR2: the shared neighbour. Leaf-adding rules: the
  /// vertex the new leaf hangs on. RR5: the loop's branch vertex.
  Vertex anchor = -1;
  std::vector<Vertex> removed;
  std::vector<Vertex> added;
  /// RR5 only: what replaces the new leaf when a solution is lifted.
  std::vector<Vertex> restore;
  int dk = 0;

  bool operator==(const TraceEntry&) const = default;
};

/// `RULE rr2 removed=7 dk=1` and friends.
std::string format_entry(const TraceEntry& entry);

struct ReductionState {
  WorkGraph graph;
  long long k = 0;
  std::vector<TraceEntry> trace;

  ReductionState() = default;
  ReductionState(const Graph& g, long long budget) : graph(g), k(budget) {}
};

/// Each rule applies at most once per call (lowest matching ids / path index
/// first) and returns whether it fired.
bool apply_rr1(ReductionState& state);
/// Only fires when the shared neighbour has degree at least three; on P3 the
/// removal would lose a vertex of the optimum.
bool apply_rr2(ReductionState& state);
bool apply_rr3(ReductionState& state, const FeedbackEdgeDecomposition& feg,
               const BranchDistances& dist);
bool apply_rr4(ReductionState& state, const FeedbackEdgeDecomposition& feg,
               const BranchDistances& dist);
/// Throws ContractViolation when fen < 2.
bool apply_rr5(ReductionState& state, const FeedbackEdgeDecomposition& feg);

enum class Route { Tree, Fen1, General };

std::string_view route_name(Route route);

struct Reduction {
  ReductionState state;
  Route route = Route::General;
  /// Present for Route::General.
  std::optional<FeedbackEdgeDecomposition> feg;
};

/// Exhausts RR1/RR2, then loops RR3, RR4, RR5 with rebuilds until nothing
/// fires or fen drops to 1 or 0. Requires a connected graph.
Reduction reduce_to_fixpoint(const Graph& g, long long k);
Reduction reduce_to_fixpoint(ReductionState state);

/// Hangs a guess leaf on `anchor` and records it on the trace.
Vertex attach_guess_leaf(ReductionState& state, Vertex anchor);

/// Adds RR3/RR4 leaves until neither fires. Used again after guessing.
int exhaust_leaf_rules(ReductionState& state, const FeedbackEdgeDecomposition& feg,
                       const BranchDistances& dist);

/// Re-applies `trace` to a fresh copy of `g`; reproduces both the reduced
/// graph (same ids) and the adjusted budget.
ReductionState replay(const Graph& g, long long k, std::span<const TraceEntry> trace);

/// Pulls a solution of the graph after `trace` back to the graph before it.
/// Vertex sets are sorted working ids.
std::vector<Vertex> lift(std::span<const TraceEntry> trace, std::vector<Vertex> solution);

struct SpecialSolution {
  int size = 0;
  std::vector<Vertex> witness;
};

/// Leaves of the tree, or the single vertex when n = 1.
SpecialSolution solve_tree(const WorkGraph& g);
int solve_tree(const Graph& g);

/// Cycle with at most one leaf per vertex. Bare cycles use the parity
/// formula; otherwise RR3 is run around the cycle anchored at the lowest
/// leafed vertex and the leaves are the optimum. Added leaves go on the trace.
SpecialSolution solve_fen1(ReductionState& state);
/// Decision form on an unreduced graph with fen = 1.
bool solve_fen1(const Graph& g, long long k);

}  // namespace geodetic

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geodetic/geodesic.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/ilp.hpp"
#include "geodetic/reduce.hpp"

namespace geodetic {

/// A reduced graph at the rule fixpoint, ready for guessing.
struct GuessBase {
  ReductionState state;
  FeedbackEdgeDecomposition feg;
  BranchDistances dist;
  /// Branch vertices without a leaf neighbour, ascending.
  std::vector<Vertex> free_branch;
  /// Paths with no leaf anywhere before guessing, ascending.
  std::vector<int> bare_paths;
};

/// Requires Route::General.
GuessBase make_guess_base(Reduction reduction);

struct GuessContext {
  /// Subset of free_branch, ascending.
  std::vector<Vertex> guessed;
  /// n for each entry of bare_paths, in the same order.
  std::vector<int> counts;

  bool operator==(const GuessContext&) const = default;
};

/// 2^|free_branch| * 3^|bare_paths|.
std::uint64_t guess_count(const GuessBase& base);

/// Every context exactly once: subsets in binary counting order over
/// free_branch, counts in base-3 order with the first bare path slowest.
void enumerate_guesses(const GuessBase& base, const std::function<void(const GuessContext&)>& visit);

/// The working graph after guess leaves and the RR3/RR4 follow-ups.
struct GuessedGraph {
  ReductionState state;
  FeedbackEdgeDecomposition feg;
  std::vector<Vertex> guessed;
  int leaf_count = 0;
  /// Compact copy for verification; ids[compact] = working id.
  std::shared_ptr<const Graph> compact;
  std::vector<Vertex> ids;
  std::vector<int> compact_of;
  std::shared_ptr<const DistanceOracle> oracle;
};

GuessedGraph apply_guess(const GuessBase& base, std::span<const Vertex> guessed);

enum class PathClass { None, One, Two, Leafed };

std::string_view class_name(PathClass c);

/// Per-path classes, or nullopt when the context is not canonical: a bare
/// path that picked up a guess leaf has no use for a nonzero count.
std::optional<std::vector<PathClass>> classify(const GuessBase& base, const GuessedGraph& gg,
                                               const GuessContext& ctx);

/// Variable ids of one emitted model. Endpoint labels run 2*slot + r for the
/// slot-th covered path, r = 0 at v^0 and r = 1 at v^h.
struct IlpLayout {
  std::vector<int> slot_path;
  std::vector<int> x;
  /// [a][b] for labels on different paths; -1 elsewhere.
  std::vector<std::vector<std::array<int, 3>>> y_pair;
  /// [a][b] for a != b, including the same-path pair (a, a^1).
  std::vector<std::vector<int>> z;
  std::vector<int> y_short;
  long long big_m = 0;

  int label_count() const { return static_cast<int>(x.size()); }
};

struct EmittedIlp {
  IlpModel model;
  IlpLayout layout;
};

EmittedIlp emit_ilp(const GuessBase& base, const GuessedGraph& gg,
                    const std::vector<PathClass>& classes);

/// Expected variable count for t covered paths.
std::size_t expected_variable_count(int t);

struct CandidateSolution {
  /// Sorted working ids.
  std::vector<Vertex> vertices;
  /// Per path: positions of u^<- and u^->, or -1 for uncovered paths.
  std::vector<std::pair<int, int>> placements;
  int size = 0;
};

/// Throws ContractViolation unless `values` is a full assignment of the model.
CandidateSolution reconstruct(const GuessedGraph& gg, const std::vector<PathClass>& classes,
                              const EmittedIlp& ilp, const std::vector<long long>& values);

bool verify_candidate(const GuessedGraph& gg, const CandidateSolution& candidate);

enum class FptStatus { Solved, Unknown };

std::string_view fpt_status_name(FptStatus status);

struct FptOptions {
  /// Per guess.
  std::uint64_t node_budget = 20'000'000;
  int threads = 1;
  /// Forces a single worker.
  bool deterministic = false;
};

struct FptStats {
  Route route = Route::General;
  int fen = 0;
  int branch_vertices = 0;
  int paths = 0;
  std::uint64_t guesses = 0;
  std::uint64_t contexts_solved = 0;
  std::uint64_t non_canonical = 0;
  std::uint64_t feasible = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t exhausted = 0;
  /// ILP solutions whose reconstruction failed verification.
  std::uint64_t rejected = 0;
  std::uint64_t nodes = 0;
};

struct FptResult {
  FptStatus status = FptStatus::Solved;
  int optimum = 0;
  /// Sorted ids of the input graph.
  std::vector<Vertex> witness;
  FptStats stats;
  std::vector<TraceEntry> trace;
};

/// Minimum geodetic set through reduction, guessing and one ILP per guess.
/// Throws DisconnectedError on a disconnected graph.
FptResult solve_fpt(const Graph& g, const FptOptions& options = {});

struct FptAnswer {
  FptStatus status = FptStatus::Solved;
  bool yes = false;
  int optimum = 0;
  std::vector<Vertex> witness;
};

/// Decision form: yes iff the optimum is at most k.
FptAnswer solve_fpt(const Graph& g, long long k, const FptOptions& options = {});

}  // namespace geodetic

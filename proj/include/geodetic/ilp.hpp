#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geodetic {

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sense { Le, Eq, Ge };

struct LinearTerm {
  int var = 0;
  long long coef = 0;
};

struct IlpVariable {
  std::string name;
  long long lower = 0;
  long long upper = 0;
  bool binary = false;
};

struct IlpConstraint {
  std::vector<LinearTerm> terms;
  Sense sense = Sense::Le;
  long long rhs = 0;
  std::string label;
};

/// Bounds larger than this in magnitude count as unbounded.
inline constexpr long long kMaxBound = 1LL << 40;

class IlpModel {
 public:
  int add_variable(std::string name, long long lower, long long upper);
  int add_binary(std::string name);
  void add_constraint(std::vector<LinearTerm> terms, Sense sense, long long rhs,
                      std::string label = {});
  /// Turns the feasibility problem into minimization of this expression.
  void set_objective(std::vector<LinearTerm> terms);

  const std::vector<IlpVariable>& variables() const { return vars_; }
  const std::vector<IlpConstraint>& constraints() const { return cons_; }
  const std::optional<std::vector<LinearTerm>>& objective() const { return objective_; }
  std::size_t variable_count() const { return vars_.size(); }
  std::size_t binary_count() const;

  /// Throws ModelError on unbounded variables or dangling variable ids.
  void validate() const;

  /// True if every constraint holds for `values`, bounds included.
  bool satisfied_by(const std::vector<long long>& values) const;

 private:
  std::vector<IlpVariable> vars_;
  std::vector<IlpConstraint> cons_;
  std::optional<std::vector<LinearTerm>> objective_;
};

enum class IlpStatus { Feasible, Infeasible, BudgetExhausted };

std::string_view status_name(IlpStatus status);

struct IlpResult {
  IlpStatus status = IlpStatus::Infeasible;
  std::vector<long long> values;
  /// Set with an objective once the search has closed.
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
};

struct IlpOptions {
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
  /// Kept for API symmetry with the guess-level pool; the tree search itself
  /// always runs sequentially.
  bool deterministic = true;
  /// Variables branched before all others, in this order. A rejected
  /// solution discards every completion sharing its projection values.
  std::vector<int> projection;
  /// Called on each complete feasible assignment; returning false keeps
  /// searching.
  std::function<bool(const std::vector<long long>&)> accept;
};

/// Depth-first branch and bound with integer bound propagation. Branches on
/// the lowest unfixed variable, lower half of the domain first.
IlpResult solve(const IlpModel& model, const IlpOptions& options = {});
IlpResult solve(const IlpModel& model, std::uint64_t node_budget);

/// `var <id> <name> <lo> <hi> int|bin` and `con <id> le|eq|ge <rhs> : <coef>*<var> ...`.
void dump_model(std::ostream& out, const IlpModel& model);

}  // namespace geodetic

#include "geodetic/ilp.hpp"

#include <algorithm>
#include <ostream>

namespace geodetic {

int IlpModel::add_variable(std::string name, long long lower, long long upper) {
  vars_.push_back({std::move(name), lower, upper, false});
  return static_cast<int>(vars_.size()) - 1;
}

int IlpModel::add_binary(std::string name) {
  vars_.push_back({std::move(name), 0, 1, true});
  return static_cast<int>(vars_.size()) - 1;
}

void IlpModel::add_constraint(std::vector<LinearTerm> terms, Sense sense, long long rhs,
                              std::string label) {
  cons_.push_back({std::move(terms), sense, rhs, std::move(label)});
}

void IlpModel::set_objective(std::vector<LinearTerm> terms) { objective_ = std::move(terms); }

std::size_t IlpModel::binary_count() const {
  return static_cast<std::size_t>(
      std::count_if(vars_.begin(), vars_.end(), [](const IlpVariable& v) { return v.binary; }));
}

void IlpModel::validate() const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const IlpVariable& v = vars_[i];
    if (v.lower < -kMaxBound || v.upper > kMaxBound)
      throw ModelError("variable " + std::to_string(i) + " (" + v.name + ") is unbounded");
  }
  auto check_terms = [&](const std::vector<LinearTerm>& terms) {
    for (const LinearTerm& t : terms)
      if (t.var < 0 || static_cast<std::size_t>(t.var) >= vars_.size())
        throw ModelError("constraint refers to unknown variable " + std::to_string(t.var));
  };
  for (const IlpConstraint& c : cons_) check_terms(c.terms);
  if (objective_) check_terms(*objective_);
}

namespace {

__int128 activity(const std::vector<LinearTerm>& terms, const std::vector<long long>& values) {
  __int128 sum = 0;
  for (const LinearTerm& t : terms) sum += static_cast<__int128>(t.coef) * values[t.var];
  return sum;
}

}  // namespace

bool IlpModel::satisfied_by(const std::vector<long long>& values) const {
  if (values.size() != vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (values[i] < vars_[i].lower || values[i] > vars_[i].upper) return false;
  for (const IlpConstraint& c : cons_) {
    __int128 a = activity(c.terms, values);
    switch (c.sense) {
      case Sense::Le:
        if (a > c.rhs) return false;
        break;
      case Sense::Eq:
        if (a != c.rhs) return false;
        break;
      case Sense::Ge:
        if (a < c.rhs) return false;
        break;
    }
  }
  return true;
}

std::string_view status_name(IlpStatus status) {
  switch (status) {
    case IlpStatus::Feasible: return "feasible";
    case IlpStatus::Infeasible: return "infeasible";
    case IlpStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

// Row form: sum coef * x <= rhs.
struct Row {
  std::vector<LinearTerm> terms;
  __int128 rhs;
};

class Search {
 public:
  Search(const IlpModel& model, const IlpOptions& options) : model_(model), options_(options) {
    const auto& vars = model.variables();
    const std::size_t n = vars.size();
    lo_.resize(n);
    hi_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo_[i] = vars[i].lower;
      hi_[i] = vars[i].upper;
    }
    for (const IlpConstraint& c : model.constraints()) {
      std::vector<LinearTerm> neg = c.terms;
      for (LinearTerm& t : neg) t.coef = -t.coef;
      if (c.sense != Sense::Ge) rows_.push_back({c.terms, c.rhs});
      if (c.sense != Sense::Le) rows_.push_back({std::move(neg), -static_cast<__int128>(c.rhs)});
    }
    if (model.objective()) {
      objective_row_ = static_cast<int>(rows_.size());
      rows_.push_back({*model.objective(), std::numeric_limits<long long>::max()});
    }
    var_rows_.resize(n);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const LinearTerm& t : rows_[r].terms)
        if (t.coef != 0) var_rows_[t.var].push_back(static_cast<int>(r));
    for (auto& list : var_rows_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    in_queue_.assign(rows_.size(), 0);
    is_projection_.assign(n, 0);
    for (int v : options.projection) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw ModelError("projection variable out of range");
      if (!is_projection_[v]) order_.push_back(v);
      is_projection_[v] = 1;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!is_projection_[v]) order_.push_back(static_cast<int>(v));
    // Without a projection a rejection only discards the one assignment.
    if (options.projection.empty()) is_projection_.assign(n, 1);
  }

  IlpResult run() {
    IlpResult result;
    for (std::size_t v = 0; v < lo_.size(); ++v)
      if (lo_[v] > hi_[v]) return finish(result, false);
    std::vector<int> all(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) all[r] = static_cast<int>(r);
    if (!propagate(all)) return finish(result, false);
    try {
      Outcome o = dfs();
      (void)o;
    } catch (const BudgetHit&) {
      result.status = IlpStatus::BudgetExhausted;
      result.nodes = nodes_;
      if (has_incumbent_) result.values = incumbent_;
      return result;
    }
    return finish(result, true);
  }

 private:
  struct BudgetHit {};
  enum class Outcome { Found, Exhausted, Reject };
  struct TrailEntry {
    int var;
    long long lo, hi;
  };

  IlpResult& finish(IlpResult& result, bool closed) {
    result.nodes = nodes_;
    if (has_incumbent_) {
      result.status = IlpStatus::Feasible;
      result.values = incumbent_;
      result.proven_optimal = closed && objective_row_ >= 0;
    } else {
      result.status = IlpStatus::Infeasible;
    }
    return result;
  }

  void set_bounds(int v, long long lo, long long hi) {
    trail_.push_back({v, lo_[v], hi_[v]});
    lo_[v] = lo;
    hi_[v] = hi;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry& e = trail_.back();
      lo_[e.var] = e.lo;
      hi_[e.var] = e.hi;
      trail_.pop_back();
    }
  }

  static long long floor_div(__int128 a, long long b) {
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return static_cast<long long>(q);
  }

  bool propagate(const std::vector<int>& seed) {
    std::vector<int> queue;
    for (int r : seed)
      if (!in_queue_[r]) {
        in_queue_[r] = 1;
        queue.push_back(r);
      }
    bool ok = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int r = queue[head];
      in_queue_[r] = 0;
      if (!ok) continue;
      const Row& row = rows_[r];
      __int128 minact = 0;
      for (const LinearTerm& t : row.terms)
        minact += static_cast<__int128>(t.coef) * (t.coef > 0 ? lo_[t.var] : hi_[t.var]);
      const __int128 slack = row.rhs - minact;
      if (slack < 0) {
        ok = false;
        continue;
      }
      for (const LinearTerm& t : row.terms) {
        if (t.coef == 0) continue;
        const int v = t.var;
        long long nlo = lo_[v], nhi = hi_[v];
        if (t.coef > 0) {
          __int128 cap = static_cast<__int128>(lo_[v]) + floor_div(slack, t.coef);
          if (cap < nhi) nhi = static_cast<long long>(cap);
        } else {
          __int128 cap = static_cast<__int128>(hi_[v]) - floor_div(slack, -t.coef);
          if (cap > nlo) nlo = static_cast<long long>(cap);
        }
        if (nlo == lo_[v] && nhi == hi_[v]) continue;
        if (nlo > nhi) {
          ok = false;
          break;
        }
        set_bounds(v, nlo, nhi);
        for (int r2 : var_rows_[v])
          if (r2 != r && !in_queue_[r2]) {
            in_queue_[r2] = 1;
            queue.push_back(r2);
          }
      }
    }
    for (int r : queue) in_queue_[r] = 0;
    return ok;
  }

  // Bounds only tighten on the way down, so the scan resumes where the
  // parent stopped.
  std::size_t pick(std::size_t from) const {
    while (from < order_.size() && lo_[order_[from]] == hi_[order_[from]]) ++from;
    return from;
  }

  Outcome leaf() {
    std::vector<long long> values = lo_;
    if (options_.accept && !options_.accept(values)) return Outcome::Reject;
    incumbent_ = std::move(values);
    has_incumbent_ = true;
    if (objective_row_ < 0) return Outcome::Found;
    rows_[objective_row_].rhs = activity(*model_.objective(), incumbent_) - 1;
    return Outcome::Exhausted;
  }

  Outcome dfs(std::size_t from = 0) {
    if (++nodes_ > options_.node_budget) throw BudgetHit{};
    const std::size_t at = pick(from);
    if (at == order_.size()) return leaf();
    const int v = order_[at];
    const long long lo = lo_[v], hi = hi_[v];
    const long long mid = lo + (hi - lo) / 2;
    const std::pair<long long, long long> halves[2] = {{lo, mid}, {mid + 1, hi}};
    for (const auto& [blo, bhi] : halves) {
      const std::size_t mark = trail_.size();
      set_bounds(v, blo, bhi);
      std::vector<int> seed = var_rows_[v];
      if (objective_row_ >= 0) seed.push_back(objective_row_);
      Outcome o = Outcome::Exhausted;
      if (propagate(seed)) o = dfs(at);
      undo(mark);
      if (o == Outcome::Found) return o;
      if (o == Outcome::Reject && !is_projection_[v]) return o;
    }
    return Outcome::Exhausted;
  }

  const IlpModel& model_;
  const IlpOptions& options_;
  std::vector<long long> lo_, hi_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> var_rows_;
  std::vector<char> in_queue_;
  std::vector<char> is_projection_;
  std::vector<int> order_;
  std::vector<TrailEntry> trail_;
  int objective_row_ = -1;
  std::vector<long long> incumbent_;
  bool has_incumbent_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IlpResult solve(const IlpModel& model, const IlpOptions& options) {
  model.validate();
  Search search(model, options);
  return search.run();
}

IlpResult solve(const IlpModel& model, std::uint64_t node_budget) {
  IlpOptions options;
  options.node_budget = node_budget;
  return solve(model, options);
}

namespace {

std::string_view sense_name(Sense s) {
  switch (s) {
    case Sense::Le: return "le";
    case Sense::Eq: return "eq";
    case Sense::Ge: return "ge";
  }
  return "?";
}

void dump_terms(std::ostream& out, const std::vector<LinearTerm>& terms) {
  for (const LinearTerm& t : terms) out << ' ' << t.coef << '*' << t.var;
}

}  // namespace

void dump_model(std::ostream& out, const IlpModel& model) {
  const auto& vars = model.variables();
  for (std::size_t i = 0; i < vars.size(); ++i)
    out << "var " << i << ' ' << (vars[i].name.empty() ? "_" : vars[i].name) << ' ' << vars[i].lower
        << ' ' << vars[i].upper << ' ' << (vars[i].binary ? "bin" : "int") << '\n';
  const auto& cons = model.constraints();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    out << "con " << i << ' ' << sense_name(cons[i].sense) << ' ' << cons[i].rhs << " :";
    dump_terms(out, cons[i].terms);
    if (!cons[i].label.empty()) out << " # " << cons[i].label;
    out << '\n';
  }
  if (model.objective()) {
    out << "obj min :";
    dump_terms(out, *model.objective());
    out << '\n';
  }
}

}  // namespace geodetic

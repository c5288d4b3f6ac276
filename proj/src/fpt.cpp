#include "geodetic/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace geodetic {

GuessBase make_guess_base(Reduction reduction) {
  if (reduction.route != Route::General || !reduction.feg)
    throw ContractViolation("guessing needs a reduced graph on the general route");
  GuessBase base;
  base.state = std::move(reduction.state);
  base.feg = std::move(*reduction.feg);
  base.dist = BranchDistances(base.state.graph, base.feg);
  for (Vertex v : base.feg.branch_vertices)
    if (base.state.graph.leaf_of(v) < 0) base.free_branch.push_back(v);
  for (std::size_t i = 0; i < base.feg.paths.size(); ++i)
    if (!base.feg.paths[i].has_leaves()) base.bare_paths.push_back(static_cast<int>(i));
  return base;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    r *= b;
  }
  return r;
}

constexpr std::size_t kMaxFreeBranch = 30;

std::vector<Vertex> subset(const std::vector<Vertex>& items, std::uint64_t mask) {
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < items.size(); ++j)
    if (mask >> j & 1) out.push_back(items[j]);
  return out;
}

}  // namespace

std::uint64_t guess_count(const GuessBase& base) {
  const std::uint64_t a = saturating_pow(2, base.free_branch.size());
  const std::uint64_t b = saturating_pow(3, base.bare_paths.size());
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void enumerate_guesses(const GuessBase& base, const std::function<void(const GuessContext&)>& visit) {
  if (base.free_branch.size() > kMaxFreeBranch)
    throw ContractViolation("too many free branch vertices to enumerate");
  const std::size_t b = base.bare_paths.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.free_branch.size()); ++mask) {
    GuessContext ctx;
    ctx.guessed = subset(base.free_branch, mask);
    ctx.counts.assign(b, 0);
    for (;;) {
      visit(ctx);
      std::size_t pos = b;
      while (pos > 0 && ctx.counts[pos - 1] == 2) ctx.counts[--pos] = 0;
      if (pos == 0) break;
      ++ctx.counts[pos - 1];
    }
  }
}

GuessedGraph apply_guess(const GuessBase& base, std::span<const Vertex> guessed) {
  GuessedGraph gg;
  gg.state = base.state;
  gg.guessed.assign(guessed.begin(), guessed.end());
  std::sort(gg.guessed.begin(), gg.guessed.end());
  for (Vertex v : gg.guessed) {
    if (!std::binary_search(base.free_branch.begin(), base.free_branch.end(), v))
      throw ContractViolation("guessed vertex " + std::to_string(v) + " is not a free branch vertex");
    attach_guess_leaf(gg.state, v);
  }
  if (!gg.guessed.empty()) exhaust_leaf_rules(gg.state, build_feg(gg.state.graph), base.dist);
  gg.feg = build_feg(gg.state.graph);
  if (gg.feg.paths.size() != base.feg.paths.size())
    throw ContractViolation("guess leaves changed the feedback edge graph");
  for (std::size_t i = 0; i < gg.feg.paths.size(); ++i)
    if (gg.feg.paths[i].vertices != base.feg.paths[i].vertices)
      throw ContractViolation("guess leaves changed the feedback edge graph");
  gg.leaf_count = static_cast<int>(gg.state.graph.leaves().size());
  auto compact = std::make_shared<Graph>(gg.state.graph.to_graph(&gg.ids));
  gg.compact_of.assign(static_cast<std::size_t>(gg.state.graph.capacity()), -1);
  for (std::size_t c = 0; c < gg.ids.size(); ++c) gg.compact_of[gg.ids[c]] = static_cast<int>(c);
  auto oracle = std::make_shared<DistanceOracle>(*compact);
  oracle->precompute_all();
  gg.compact = std::move(compact);
  gg.oracle = std::move(oracle);
  return gg;
}

std::string_view class_name(PathClass c) {
  switch (c) {
    case PathClass::None: return "i0";
    case PathClass::One: return "i1";
    case PathClass::Two: return "i2";
    case PathClass::Leafed: return "leafed";
  }
  return "?";
}

std::optional<std::vector<PathClass>> classify(const GuessBase& base, const GuessedGraph& gg,
                                               const GuessContext& ctx) {
  if (ctx.counts.size() != base.bare_paths.size())
    throw ContractViolation("guess context has the wrong number of counts");
  std::vector<PathClass> classes(gg.feg.paths.size(), PathClass::None);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (gg.feg.paths[i].has_leaves()) classes[i] = PathClass::Leafed;
  for (std::size_t j = 0; j < base.bare_paths.size(); ++j) {
    const int n = ctx.counts[j];
    if (n < 0 || n > 2) throw ContractViolation("guessed count outside 0..2");
    const std::size_t i = static_cast<std::size_t>(base.bare_paths[j]);
    if (classes[i] == PathClass::Leafed) {
      if (n != 0) return std::nullopt;
      continue;
    }
    classes[i] = n == 0 ? PathClass::None : n == 1 ? PathClass::One : PathClass::Two;
  }
  return classes;
}

namespace {

// Linear expression with a constant, merged per variable.
class Expr {
 public:
  Expr& var(int v, long long c) {
    coef_[v] += c;
    return *this;
  }
  Expr& constant(long long c) {
    constant_ += c;
    return *this;
  }

  void emit(IlpModel& model, Sense sense, long long rhs, std::string label) const {
    std::vector<LinearTerm> terms;
    for (auto [v, c] : coef_)
      if (c != 0) terms.push_back({v, c});
    model.add_constraint(std::move(terms), sense, rhs - constant_, std::move(label));
  }

 private:
  std::map<int, long long> coef_;
  long long constant_ = 0;
};

}  // namespace

EmittedIlp emit_ilp(const GuessBase& base, const GuessedGraph& gg,
                    const std::vector<PathClass>& classes) {
  const auto& paths = gg.feg.paths;
  if (classes.size() != paths.size()) throw ContractViolation("one class per path expected");
  EmittedIlp out;
  IlpModel& model = out.model;
  IlpLayout& lay = out.layout;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (classes[i] != PathClass::None) lay.slot_path.push_back(static_cast<int>(i));
  const int labels = 2 * static_cast<int>(lay.slot_path.size());
  lay.big_m = 100 * static_cast<long long>(gg.state.graph.edge_count());
  const long long big = lay.big_m;

  auto path_of = [&](int a) -> const PathRecord& { return paths[lay.slot_path[a / 2]]; };
  auto end_of = [&](int a) { return a % 2 == 0 ? path_of(a).left() : path_of(a).right(); };
  auto h_of = [&](int a) { return static_cast<long long>(path_of(a).length()); };
  auto d = [&](Vertex u, Vertex v) { return static_cast<long long>(base.dist(u, v)); };
  auto tag = [&](int a) {
    return std::to_string(lay.slot_path[a / 2]) + (a % 2 == 0 ? "l" : "r");
  };

  lay.x.resize(labels);
  for (int a = 0; a < labels; ++a) lay.x[a] = model.add_variable("x" + tag(a), 0, h_of(a));
  lay.y_pair.assign(labels, std::vector<std::array<int, 3>>(labels, {-1, -1, -1}));
  lay.z.assign(labels, std::vector<int>(labels, -1));
  for (int a = 0; a < labels; ++a)
    for (int b = 0; b < labels; ++b) {
      if (a / 2 == b / 2) continue;
      const std::string pair = tag(a) + "_" + tag(b);
      for (int k = 0; k < 3; ++k) lay.y_pair[a][b][k] = model.add_binary("y" + std::to_string(k + 1) + "_" + pair);
      lay.z[a][b] = model.add_binary("z_" + pair);
    }
  for (int a = 0; a < labels; ++a) lay.z[a][a ^ 1] = model.add_binary("z_" + tag(a) + "_" + tag(a ^ 1));
  lay.y_short.resize(labels);
  for (int a = 0; a < labels; ++a) lay.y_short[a] = model.add_binary("y_" + tag(a));

  // Placement of the solution vertices on each covered path.
  for (std::size_t s = 0; s < lay.slot_path.size(); ++s) {
    const PathRecord& p = paths[lay.slot_path[s]];
    const int xl = lay.x[2 * s], xr = lay.x[2 * s + 1];
    const long long h = p.length();
    const std::string name = "place " + std::to_string(lay.slot_path[s]);
    switch (classes[lay.slot_path[s]]) {
      case PathClass::One:
      case PathClass::Two:
        Expr().var(xl, 1).emit(model, Sense::Ge, 1, name);
        Expr().var(xr, 1).emit(model, Sense::Ge, 1, name);
        Expr().var(xl, 1).var(xr, 1).emit(model, Sense::Le, h, name);
        if (classes[lay.slot_path[s]] == PathClass::One) {
          Expr().var(xl, 1).var(xr, 1).emit(model, Sense::Eq, h, name);
        } else {
          Expr().var(xl, -2).var(xr, -2).emit(model, Sense::Le, d(p.left(), p.right()) - h, name);
        }
        break;
      case PathClass::Leafed:
        Expr().var(xl, 1).emit(model, Sense::Eq, p.leftmost_leaf(), name);
        Expr().var(xr, 1).emit(model, Sense::Eq, h - p.rightmost_leaf(), name);
        break;
      case PathClass::None:
        break;
    }
  }

  // Shortest u_a-u_b paths leaving through both path ends.
  for (int a = 0; a < labels; ++a)
    for (int b = 0; b < labels; ++b) {
      if (a / 2 == b / 2) continue;
      const Vertex va = end_of(a), vb = end_of(b), oa = end_of(a ^ 1), ob = end_of(b ^ 1);
      const long long ha = h_of(a), hb = h_of(b), base_d = d(va, vb);
      const auto& y = lay.y_pair[a][b];
      const std::string name = "via " + tag(a) + " " + tag(b);
      // D - alt_k <= N (1 - y_k)  with  D = x_a + d(va, vb) + x_b.
      Expr().var(lay.x[b], 2).var(y[0], big).constant(base_d - d(va, ob) - hb).emit(model, Sense::Le, big, name);
      Expr().var(lay.x[a], 2).var(y[1], big).constant(base_d - d(oa, vb) - ha).emit(model, Sense::Le, big, name);
      Expr()
          .var(lay.x[a], 2)
          .var(lay.x[b], 2)
          .var(y[2], big)
          .constant(base_d - d(oa, ob) - ha - hb)
          .emit(model, Sense::Le, big, name);
      Expr().var(lay.z[a][b], 3).var(y[0], -1).var(y[1], -1).var(y[2], -1).emit(model, Sense::Le, 0, name);
    }
  for (int a = 0; a < labels; ++a) {
    const long long h = h_of(a);
    Expr()
        .var(lay.x[a], 2)
        .var(lay.x[a ^ 1], 2)
        .var(lay.z[a][a ^ 1], big)
        .constant(d(end_of(a), end_of(a ^ 1)) - h)
        .emit(model, Sense::Le, big, "around " + tag(a));
  }

  auto pairs_where = [&](const std::function<bool(Vertex, Vertex)>& guard) {
    Expr sum;
    for (int a = 0; a < labels; ++a)
      for (int b = 0; b < labels; ++b)
        if (lay.z[a][b] >= 0 && guard(end_of(a), end_of(b))) sum.var(lay.z[a][b], 1);
    return sum;
  };

  // Paths without solution vertices lie on some chosen geodesic, either way round.
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (classes[i] != PathClass::None || paths[i].length() < 2) continue;
    const PathRecord& q = paths[i];
    const long long h = q.length();
    pairs_where([&](Vertex va, Vertex vb) {
      const long long full = d(va, vb);
      return d(va, q.left()) + h + d(q.right(), vb) == full || d(va, q.right()) + h + d(q.left(), vb) == full;
    }).emit(model, Sense::Ge, 1, "cover path " + std::to_string(i));
  }
  // Unguessed free branch vertices likewise.
  for (Vertex v : base.free_branch) {
    if (std::binary_search(gg.guessed.begin(), gg.guessed.end(), v)) continue;
    pairs_where([&](Vertex va, Vertex vb) {
      return d(va, v) + d(v, vb) == d(va, vb);
    }).emit(model, Sense::Ge, 1, "cover branch " + std::to_string(v));
  }
  // The stretch between v_a and u_a.
  for (int a = 0; a < labels; ++a) {
    Expr().var(lay.x[a], 1).var(lay.y_short[a], big).emit(model, Sense::Le, big + 1, "short " + tag(a));
    Expr sum;
    sum.var(lay.y_short[a], 1);
    for (int b = 0; b < labels; ++b)
      if (lay.z[a][b] >= 0) sum.var(lay.z[a][b], 1);
    sum.emit(model, Sense::Ge, 1, "leave " + tag(a));
  }
  return out;
}

std::size_t expected_variable_count(int t) {
  const std::size_t labels = 2 * static_cast<std::size_t>(t);
  const std::size_t ordered = t < 2 ? 0 : labels * (labels - 2);
  return labels + 4 * ordered + labels + labels;
}

CandidateSolution reconstruct(const GuessedGraph& gg, const std::vector<PathClass>& classes,
                              const EmittedIlp& ilp, const std::vector<long long>& values) {
  if (values.size() != ilp.model.variable_count())
    throw ContractViolation("reconstruct needs a full assignment of the model");
  CandidateSolution c;
  std::vector<Vertex> x = gg.state.graph.leaves();
  c.placements.assign(gg.feg.paths.size(), {-1, -1});
  for (std::size_t s = 0; s < ilp.layout.slot_path.size(); ++s) {
    const int i = ilp.layout.slot_path[s];
    const PathRecord& p = gg.feg.paths[i];
    const int left = static_cast<int>(values[ilp.layout.x[2 * s]]);
    const int right = p.length() - static_cast<int>(values[ilp.layout.x[2 * s + 1]]);
    c.placements[i] = {left, right};
    if (classes[i] == PathClass::One || classes[i] == PathClass::Two) {
      x.push_back(p.at(left));
      x.push_back(p.at(right));
    }
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  c.vertices = std::move(x);
  c.size = static_cast<int>(c.vertices.size());
  return c;
}

bool verify_candidate(const GuessedGraph& gg, const CandidateSolution& candidate) {
  VertexSet s(static_cast<int>(gg.ids.size()));
  for (Vertex v : candidate.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= gg.compact_of.size() || gg.compact_of[v] < 0)
      throw ContractViolation("candidate names a vertex outside the working graph");
    s.insert(gg.compact_of[v]);
  }
  return is_geodetic(*gg.oracle, s);
}

std::string_view fpt_status_name(FptStatus status) {
  return status == FptStatus::Solved ? "solved" : "unknown";
}

namespace {

struct Context {
  std::size_t mask = 0;
  std::vector<int> counts;
};

struct Outcome {
  IlpStatus status = IlpStatus::Infeasible;
  CandidateSolution candidate;
  std::uint64_t nodes = 0;
  std::uint64_t rejected = 0;
};

Outcome run_context(const GuessBase& base, const GuessedGraph& gg, const Context& ctx,
                    const FptOptions& options) {
  Outcome out;
  GuessContext gc{gg.guessed, ctx.counts};
  auto classes = classify(base, gg, gc);
  if (!classes) throw ContractViolation("solver produced a non-canonical context");
  EmittedIlp ilp = emit_ilp(base, gg, *classes);
  IlpOptions io;
  io.node_budget = options.node_budget;
  io.deterministic = true;
  io.projection = ilp.layout.x;
  io.accept = [&](const std::vector<long long>& values) {
    CandidateSolution c = reconstruct(gg, *classes, ilp, values);
    if (!verify_candidate(gg, c)) {
      ++out.rejected;
      return false;
    }
    out.candidate = std::move(c);
    return true;
  };
  IlpResult r = solve(ilp.model, io);
  out.status = r.status;
  out.nodes = r.nodes;
  return out;
}

// Count vectors over the still-bare paths of one guess whose total is `sum`,
// in lexicographic order.
void counts_with_sum(const std::vector<int>& caps, int sum, std::vector<int>& cur, std::size_t pos,
                     const std::function<void(const std::vector<int>&)>& visit) {
  if (pos == caps.size()) {
    if (sum == 0) visit(cur);
    return;
  }
  int rest = 0;
  for (std::size_t j = pos + 1; j < caps.size(); ++j) rest += caps[j];
  for (int n = 0; n <= caps[pos] && n <= sum; ++n) {
    if (sum - n > rest) continue;
    cur[pos] = n;
    counts_with_sum(caps, sum - n, cur, pos + 1, visit);
  }
  cur[pos] = 0;
}

struct GeneralSearch {
  FptStatus status = FptStatus::Solved;
  std::optional<std::size_t> mask;
  CandidateSolution candidate;
};

GeneralSearch search_general(const GuessBase& base, const FptOptions& options, FptStats& stats) {
  if (base.free_branch.size() > kMaxFreeBranch)
    throw ContractViolation("too many free branch vertices to enumerate");
  const std::size_t masks = std::size_t{1} << base.free_branch.size();
  std::vector<GuessedGraph> guessed;
  guessed.reserve(masks);
  std::vector<std::vector<int>> caps(masks);
  int lo = std::numeric_limits<int>::max(), hi = 0;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    guessed.push_back(apply_guess(base, subset(base.free_branch, mask)));
    const GuessedGraph& gg = guessed.back();
    int free_paths = 0, top = gg.leaf_count;
    for (int i : base.bare_paths) {
      const PathRecord& p = gg.feg.paths[i];
      // A leaf-free path holds at most length - 1 inner vertices.
      const int cap = p.has_leaves() ? 0 : std::min(2, p.length() - 1);
      if (!p.has_leaves()) ++free_paths;
      caps[mask].push_back(cap);
      top += cap;
    }
    stats.non_canonical += saturating_pow(3, base.bare_paths.size()) - saturating_pow(3, free_paths);
    lo = std::min(lo, gg.leaf_count);
    hi = std::max(hi, top);
  }

  const int threads = options.deterministic ? 1 : std::max(1, options.threads);
  GeneralSearch out;
  bool exhausted_below = false;
  for (int size = lo; size <= hi; ++size) {
    std::vector<Context> contexts;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      const int need = size - guessed[mask].leaf_count;
      if (need < 0) continue;
      std::vector<int> cur(caps[mask].size(), 0);
      counts_with_sum(caps[mask], need, cur, 0,
                      [&](const std::vector<int>& c) { contexts.push_back({mask, c}); });
    }
    std::vector<Outcome> outcomes(contexts.size());
    std::atomic<std::size_t> next{0}, found{contexts.size()};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= contexts.size() || i >= found.load()) return;
        outcomes[i] = run_context(base, guessed[contexts[i].mask], contexts[i], options);
        if (outcomes[i].status == IlpStatus::Feasible) {
          std::size_t cur = found.load();
          while (i < cur && !found.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    if (threads == 1 || contexts.size() < 2) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    const std::size_t hit = found.load();
    const std::size_t upto = std::min(hit + 1, contexts.size());
    for (std::size_t i = 0; i < upto; ++i) {
      const Outcome& o = outcomes[i];
      ++stats.contexts_solved;
      stats.nodes += o.nodes;
      stats.rejected += o.rejected;
      switch (o.status) {
        case IlpStatus::Feasible: ++stats.feasible; break;
        case IlpStatus::Infeasible: ++stats.infeasible; break;
        case IlpStatus::BudgetExhausted:
          ++stats.exhausted;
          exhausted_below = true;
          break;
      }
    }
    if (hit < contexts.size()) {
      out.mask = contexts[hit].mask;
      out.candidate = std::move(outcomes[hit].candidate);
      out.status = exhausted_below ? FptStatus::Unknown : FptStatus::Solved;
      return out;
    }
  }
  if (!exhausted_below) throw std::logic_error("no guess produced a geodetic set");
  out.status = FptStatus::Unknown;
  return out;
}

}  // namespace

FptResult solve_fpt(const Graph& g, const FptOptions& options) {
  if (!is_connected(g)) throw DisconnectedError("solve_fpt requires a connected graph");
  FptResult result;
  result.stats.fen = feedback_edge_number(g);
  Reduction red = reduce_to_fixpoint(g, 0);
  result.stats.route = red.route;
  std::vector<Vertex> working;
  switch (red.route) {
    case Route::Tree:
      working = solve_tree(red.state.graph).witness;
      result.trace = std::move(red.state.trace);
      break;
    case Route::Fen1:
      working = solve_fen1(red.state).witness;
      result.trace = std::move(red.state.trace);
      break;
    case Route::General: {
      GuessBase base = make_guess_base(std::move(red));
      result.stats.branch_vertices = static_cast<int>(base.feg.vertex_count());
      result.stats.paths = static_cast<int>(base.feg.edge_count());
      result.stats.guesses = guess_count(base);
      GeneralSearch found = search_general(base, options, result.stats);
      result.status = found.status;
      if (!found.mask) return result;
      GuessedGraph gg = apply_guess(base, subset(base.free_branch, *found.mask));
      working = found.candidate.vertices;
      result.trace = std::move(gg.state.trace);
      break;
    }
  }
  result.witness = lift(result.trace, std::move(working));
  for (Vertex v : result.witness)
    if (v < 0 || v >= g.vertex_count()) throw std::logic_error("lifted witness left the input graph");
  if (!is_geodetic(g, VertexSet::of(g.vertex_count(), result.witness)))
    throw std::logic_error("lifted witness is not geodetic");
  result.optimum = static_cast<int>(result.witness.size());
  return result;
}

FptAnswer solve_fpt(const Graph& g, long long k, const FptOptions& options) {
  FptResult r = solve_fpt(g, options);
  FptAnswer a;
  a.witness = std::move(r.witness);
  a.optimum = r.optimum;
  const bool have = r.status == FptStatus::Solved || !a.witness.empty();
  a.yes = have && a.optimum <= k;
  a.status = r.status == FptStatus::Solved || a.yes ? FptStatus::Solved : FptStatus::Unknown;
  return a;
}

}  // namespace geodetic

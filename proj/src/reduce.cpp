#include "geodetic/reduce.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace geodetic {

int PathRecord::leftmost_leaf() const {
  if (leaf_positions.empty()) throw ContractViolation("path has no leaves");
  return leaf_positions.front();
}

int PathRecord::rightmost_leaf() const {
  if (leaf_positions.empty()) throw ContractViolation("path has no leaves");
  return leaf_positions.back();
}

bool FeedbackEdgeDecomposition::is_branch(Vertex v) const {
  return std::binary_search(branch_vertices.begin(), branch_vertices.end(), v);
}

namespace {

// Degree of every live vertex inside the 2-core; 0 for stripped vertices.
std::vector<int> core_degrees(const WorkGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.capacity()), 0);
  std::vector<Vertex> queue;
  for (Vertex v : g.alive_vertices()) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  std::vector<char> stripped(deg.size(), 0);
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (stripped[v]) continue;
    stripped[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!stripped[w] && --deg[w] == 1) queue.push_back(w);
    deg[v] = 0;
  }
  return deg;
}

}  // namespace

FeedbackEdgeDecomposition build_feg(const WorkGraph& g) {
  if (g.component_count() != 1) throw ContractViolation("build_feg requires a connected graph");
  if (g.feedback_edge_number() < 2)
    throw ContractViolation("build_feg requires fen >= 2; use the tree or fen-1 solver");
  const std::vector<int> deg = core_degrees(g);
  FeedbackEdgeDecomposition feg;
  for (Vertex v : g.alive_vertices())
    if (deg[v] >= 3) feg.branch_vertices.push_back(v);

  auto in_core = [&](Vertex v) { return deg[v] >= 2; };
  std::set<std::pair<Vertex, Vertex>> used;
  for (Vertex b : feg.branch_vertices) {
    for (Vertex first : g.neighbors(b)) {
      if (!in_core(first) || used.count({b, first})) continue;
      PathRecord path;
      path.vertices = {b};
      Vertex prev = b, cur = first;
      while (deg[cur] == 2) {
        path.vertices.push_back(cur);
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
          if (w != prev && in_core(w)) next = w;
        prev = cur;
        cur = next;
      }
      path.vertices.push_back(cur);
      used.insert({b, first});
      used.insert({cur, prev});
      for (int j = 0; j <= path.length(); ++j)
        if (g.leaf_of(path.at(j)) >= 0) path.leaf_positions.push_back(j);
      feg.paths.push_back(std::move(path));
    }
  }
  return feg;
}

FeedbackEdgeDecomposition build_feg(const Graph& g) { return build_feg(WorkGraph(g)); }

BranchDistances::BranchDistances(const WorkGraph& g, const FeedbackEdgeDecomposition& feg) {
  for (Vertex b : feg.branch_vertices) rows_.emplace(b, g.distances_from(b));
}

int BranchDistances::operator()(Vertex a, Vertex b) const {
  auto it = rows_.find(a);
  if (it == rows_.end()) {
    it = rows_.find(b);
    if (it == rows_.end()) throw ContractViolation("distance query without a branch vertex");
    std::swap(a, b);
  }
  if (b < 0 || static_cast<std::size_t>(b) >= it->second.size())
    throw ContractViolation("distance query for a vertex added after the rows were built");
  return it->second[b].value();
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::RR1: return "rr1";
    case Rule::RR2: return "rr2";
    case Rule::RR3: return "rr3";
    case Rule::RR4: return "rr4";
    case Rule::RR5: return "rr5";
    case Rule::GuessLeaf: return "guess-leaf";
  }
  return "?";
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::Tree: return "tree";
    case Route::Fen1: return "fen1";
    case Route::General: return "general";
  }
  return "?";
}

namespace {

std::string join(const std::vector<Vertex>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace

std::string format_entry(const TraceEntry& e) {
  std::ostringstream out;
  out << "RULE " << rule_name(e.rule);
  if (e.anchor >= 0 && e.rule != Rule::RR2) out << " anchor=" << e.anchor;
  if (!e.removed.empty()) out << " removed=" << join(e.removed);
  if (!e.added.empty()) out << " added=" << join(e.added);
  if (!e.restore.empty()) out << " restore=" << join(e.restore);
  out << " dk=" << e.dk;
  return out.str();
}

bool apply_rr1(ReductionState& state) {
  WorkGraph& g = state.graph;
  for (Vertex u : g.alive_vertices()) {
    if (g.degree(u) != 1) continue;
    Vertex v = g.neighbors(u).front();
    if (g.degree(v) != 2) continue;
    g.remove_vertex(u);
    state.trace.push_back({Rule::RR1, v, {u}, {}, {}, 0});
    return true;
  }
  return false;
}

bool apply_rr2(ReductionState& state) {
  WorkGraph& g = state.graph;
  for (Vertex v : g.alive_vertices()) {
    if (g.degree(v) < 3) continue;
    int seen = 0;
    for (Vertex u : g.neighbors(v)) {
      if (g.degree(u) != 1 || ++seen < 2) continue;
      g.remove_vertex(u);
      state.k -= 1;
      state.trace.push_back({Rule::RR2, v, {u}, {}, {}, 1});
      return true;
    }
  }
  return false;
}

namespace {

void attach(ReductionState& state, Rule rule, Vertex anchor) {
  if (state.graph.leaf_of(anchor) >= 0)
    throw ContractViolation(std::string(rule_name(rule)) + " would give a vertex a second leaf");
  Vertex leaf = state.graph.add_leaf(anchor);
  state.trace.push_back({rule, anchor, {}, {leaf}, {}, 0});
}

int endpoint_distance(const PathRecord& p, const BranchDistances& dist) {
  return p.is_loop() ? 0 : dist(p.left(), p.right());
}

}  // namespace

bool apply_rr3(ReductionState& state, const FeedbackEdgeDecomposition& feg,
               const BranchDistances& dist) {
  for (const PathRecord& p : feg.paths) {
    const int d = endpoint_distance(p, dist);
    for (std::size_t t = 0; t + 1 < p.leaf_positions.size(); ++t) {
      const int l = p.leaf_positions[t], l2 = p.leaf_positions[t + 1];
      if (d + p.length() < 2 * (l2 - l)) {
        attach(state, Rule::RR3, p.at((l + l2) / 2));
        return true;
      }
    }
  }
  return false;
}

bool apply_rr4(ReductionState& state, const FeedbackEdgeDecomposition& feg,
               const BranchDistances& dist) {
  for (const PathRecord& p : feg.paths) {
    if (!p.has_leaves()) continue;
    const int h = p.length();
    const int d = endpoint_distance(p, dist);
    const int lo = p.leftmost_leaf(), hi = p.rightmost_leaf();
    if (2 * lo - h > d) {
      attach(state, Rule::RR4, p.at(lo - (h + d) / 2));
      return true;
    }
    if (h - 2 * hi > d) {
      attach(state, Rule::RR4, p.at(hi + (h + d) / 2));
      return true;
    }
  }
  return false;
}

bool apply_rr5(ReductionState& state, const FeedbackEdgeDecomposition& feg) {
  if (state.graph.feedback_edge_number() < 2) throw ContractViolation("rr5 requires fen >= 2");
  for (const PathRecord& p : feg.paths) {
    if (!p.is_loop()) continue;
    WorkGraph& g = state.graph;
    const int h = p.length();
    const Vertex v = p.left();
    TraceEntry e{Rule::RR5, v, {}, {}, {}, 0};
    std::vector<Vertex> inner_leaves;
    for (int j : p.leaf_positions)
      if (j > 0 && j < h) inner_leaves.push_back(g.leaf_of(p.at(j)));
    if (inner_leaves.empty()) {
      e.dk = h % 2;
      if (h % 2 == 0)
        e.restore = {p.at(h / 2)};
      else
        e.restore = {p.at((h - 1) / 2), p.at((h + 1) / 2)};
    } else {
      e.dk = static_cast<int>(inner_leaves.size()) - 1;
      e.restore = inner_leaves;
    }
    for (int j = 1; j < h; ++j) {
      Vertex x = p.at(j);
      Vertex leaf = g.leaf_of(x);
      if (leaf >= 0) {
        g.remove_vertex(leaf);
        e.removed.push_back(leaf);
      }
      g.remove_vertex(x);
      e.removed.push_back(x);
    }
    std::sort(e.removed.begin(), e.removed.end());
    std::sort(e.restore.begin(), e.restore.end());
    e.added = {g.add_leaf(v)};
    state.k -= e.dk;
    state.trace.push_back(std::move(e));
    return true;
  }
  return false;
}

Vertex attach_guess_leaf(ReductionState& state, Vertex anchor) {
  attach(state, Rule::GuessLeaf, anchor);
  return state.trace.back().added.front();
}

int exhaust_leaf_rules(ReductionState& state, const FeedbackEdgeDecomposition& feg_in,
                       const BranchDistances& dist) {
  int fired = 0;
  FeedbackEdgeDecomposition feg = feg_in;
  while (apply_rr3(state, feg, dist) || apply_rr4(state, feg, dist)) {
    ++fired;
    feg = build_feg(state.graph);
  }
  return fired;
}

Reduction reduce_to_fixpoint(const Graph& g, long long k) {
  if (!is_connected(g)) throw DisconnectedError("reduction requires a connected graph");
  return reduce_to_fixpoint(ReductionState(g, k));
}

Reduction reduce_to_fixpoint(ReductionState state) {
  if (state.graph.component_count() != 1)
    throw DisconnectedError("reduction requires a connected graph");
  Reduction out;
  for (;;) {
    while (apply_rr1(state) || apply_rr2(state)) {
    }
    const int fen = state.graph.feedback_edge_number();
    if (fen <= 1) {
      out.route = fen == 0 ? Route::Tree : Route::Fen1;
      break;
    }
    FeedbackEdgeDecomposition feg = build_feg(state.graph);
    BranchDistances dist(state.graph, feg);
    if (apply_rr3(state, feg, dist) || apply_rr4(state, feg, dist) || apply_rr5(state, feg)) continue;
    out.route = Route::General;
    out.feg = std::move(feg);
    break;
  }
  out.state = std::move(state);
  return out;
}

ReductionState replay(const Graph& g, long long k, std::span<const TraceEntry> trace) {
  ReductionState state(g, k);
  for (const TraceEntry& e : trace) {
    for (Vertex v : e.removed) state.graph.remove_vertex(v);
    for (Vertex v : e.added) {
      if (state.graph.add_leaf(e.anchor) != v) throw ContractViolation("trace replay diverged");
    }
    state.k -= e.dk;
    state.trace.push_back(e);
  }
  return state;
}

std::vector<Vertex> lift(std::span<const TraceEntry> trace, std::vector<Vertex> solution) {
  std::set<Vertex> s(solution.begin(), solution.end());
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    const TraceEntry& e = *it;
    switch (e.rule) {
      case Rule::RR1:
        s.erase(e.anchor);
        s.insert(e.removed.front());
        break;
      case Rule::RR2:
        s.insert(e.removed.front());
        break;
      case Rule::RR3:
      case Rule::RR4:
      case Rule::GuessLeaf:
        if (s.erase(e.added.front())) s.insert(e.anchor);
        break;
      case Rule::RR5:
        if (s.erase(e.added.front())) s.insert(e.restore.begin(), e.restore.end());
        break;
    }
  }
  return {s.begin(), s.end()};
}

SpecialSolution solve_tree(const WorkGraph& g) {
  if (g.component_count() != 1 || g.feedback_edge_number() != 0)
    throw ContractViolation("solve_tree requires a connected tree");
  SpecialSolution out;
  if (g.alive_count() == 1)
    out.witness = g.alive_vertices();
  else
    out.witness = g.leaves();
  out.size = static_cast<int>(out.witness.size());
  return out;
}

int solve_tree(const Graph& g) { return solve_tree(WorkGraph(g)).size; }

SpecialSolution solve_fen1(ReductionState& state) {
  WorkGraph& g = state.graph;
  if (g.component_count() != 1 || g.feedback_edge_number() != 1)
    throw ContractViolation("solve_fen1 requires a connected graph with fen = 1");
  // Walk the cycle from its lowest vertex.
  const std::vector<int> deg = core_degrees(g);
  std::vector<Vertex> cycle;
  for (Vertex v : g.alive_vertices())
    if (deg[v] == 2) {
      cycle.push_back(v);
      break;
    }
  for (Vertex prev = -1, cur = cycle.front();;) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (deg[w] == 2 && w != prev) {
        next = w;
        break;
      }
    if (next == cycle.front()) break;
    prev = cur;
    cur = next;
    cycle.push_back(cur);
  }
  for (Vertex v : g.alive_vertices())
    if (deg[v] != 2 && g.degree(v) != 1)
      throw ContractViolation("solve_fen1 requires RR1/RR2 to be exhausted");

  const int len = static_cast<int>(cycle.size());
  SpecialSolution out;
  int start = -1;
  for (int j = 0; j < len; ++j)
    if (g.leaf_of(cycle[j]) >= 0) {
      start = j;
      break;
    }
  if (start < 0) {
    if (len % 2 == 0)
      out.witness = {cycle[0], cycle[len / 2]};
    else
      out.witness = {cycle[0], cycle[(len - 1) / 2], cycle[(len + 1) / 2]};
    std::sort(out.witness.begin(), out.witness.end());
    out.size = static_cast<int>(out.witness.size());
    return out;
  }

  // The cycle as a loop v^0 .. v^len through the leafed vertex.
  PathRecord loop;
  for (int j = 0; j <= len; ++j) loop.vertices.push_back(cycle[(start + j) % len]);
  for (;;) {
    loop.leaf_positions.clear();
    for (int j = 0; j <= len; ++j)
      if (g.leaf_of(loop.at(j)) >= 0) loop.leaf_positions.push_back(j);
    FeedbackEdgeDecomposition feg;
    feg.branch_vertices = {loop.left()};
    feg.paths = {loop};
    if (!apply_rr3(state, feg, BranchDistances())) break;
  }
  out.witness = g.leaves();
  out.size = static_cast<int>(out.witness.size());
  return out;
}

bool solve_fen1(const Graph& g, long long k) {
  if (feedback_edge_number(g) != 1 || !is_connected(g))
    throw ContractViolation("solve_fen1 requires a connected graph with fen = 1");
  Reduction r = reduce_to_fixpoint(g, k);
  SpecialSolution s = solve_fen1(r.state);
  return s.size <= r.state.k;
}

}  // namespace geodetic

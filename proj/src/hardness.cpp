#include "geodetic/hardness.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "geodetic/geodesic.hpp"

namespace geodetic {

Vertex GadgetGraph::tile(int i, int j, int eta) const {
  if (i < 1 || i > k || j < 1 || j > k || eta < 1 || eta > n)
    throw InputError("gadget: tile index out of range");
  return 8 + ((i - 1) * k + (j - 1)) * n + (eta - 1);
}

Vertex GadgetGraph::id(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) throw InputError("gadget: no vertex named " + std::string(name));
  return it->second;
}

namespace {

class Builder {
 public:
  Vertex vertex(std::string name = {}) {
    const Vertex v = count_++;
    if (!name.empty()) named_.emplace_back(std::move(name), v);
    return v;
  }
  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void path(Vertex from, Vertex to, int length) {
    if (length < 1) throw InputError("gadget: path length below one");
    Vertex prev = from;
    for (int s = 1; s < length; ++s) {
      Vertex next = vertex();
      edge(prev, next);
      prev = next;
    }
    edge(prev, to);
  }

  int count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::string, Vertex>> named_;
};

std::string cell(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

GadgetGraph build_gadget(const GridTilingInstance& inst, const GadgetOptions& options) {
  const int k = inst.k(), m = inst.m(), n = inst.n();
  if (k < 2 || k % 2 != 0) throw InputError("gadget: k must be even and at least 2");
  if (options.vertical_coefficient < 1 || options.vertical_coefficient > 2)
    throw InputError("gadget: vertical coefficient must be 1 or 2");
  for (const auto& s : inst.sets())
    if (static_cast<int>(s.size()) != n) throw InputError("gadget: tile set of wrong size");

  GadgetGraph gg;
  gg.k = k;
  gg.m = m;
  gg.n = n;
  gg.budget = k * k + 4;
  Builder b;
  const char* global_names[4] = {"alpha", "beta", "gamma", "delta"};
  for (int g = 0; g < 4; ++g) gg.globals[g] = b.vertex(global_names[g]);
  for (int g = 0; g < 4; ++g) {
    gg.pendants[g] = b.vertex(std::string(global_names[g]) + "'");
    b.edge(gg.globals[g], gg.pendants[g]);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int eta = 1; eta <= n; ++eta) b.vertex("s(" + cell(i, j) + "," + std::to_string(eta) + ")");

  const Vertex alpha = gg.globals[0], beta = gg.globals[1], gamma = gg.globals[2], delta = gg.globals[3];
  // One copy that joins cell (i, j) to its successor (i2, j2). `value` picks
  // the tile coordinate, `scale` its multiplier, `up`/`down` the globals of
  // the starred hubs.
  auto copy = [&](char kind, int i, int j, int i2, int j2, int kappa, int scale, auto value, Vertex up,
                  Vertex down) {
    const char h1 = kind == 'X' ? 'a' : 'c', h2 = kind == 'X' ? 'b' : 'd';
    const std::string pre = std::string(1, kind) + "(" + cell(i, j) + "," + std::to_string(kappa) + ").";
    const Vertex p = b.vertex(pre + h1), ps = b.vertex(pre + h1 + "*");
    const Vertex q = b.vertex(pre + h2), qs = b.vertex(pre + h2 + "*");
    gg.hubs.push_back(p);
    gg.hubs.push_back(q);
    gg.starred_hubs.push_back(ps);
    gg.starred_hubs.push_back(qs);
    b.edge(ps, up);
    b.edge(qs, down);
    for (int eta = 1; eta <= n; ++eta) {
      const std::string e = "," + std::to_string(eta) + ")";
      const Vertex own_p = b.vertex(pre + "t(" + cell(i, j) + "," + h1 + e);
      const Vertex own_q = b.vertex(pre + "t(" + cell(i, j) + "," + h2 + e);
      const Vertex next_p = b.vertex(pre + "t(" + cell(i2, j2) + "," + h1 + e);
      const Vertex next_q = b.vertex(pre + "t(" + cell(i2, j2) + "," + h2 + e);
      for (Vertex t : {own_p, next_p}) b.edge(p, t), b.edge(ps, t);
      for (Vertex t : {own_q, next_q}) b.edge(q, t), b.edge(qs, t);
      const int here = scale * value(inst.set(i, j)[eta - 1]);
      const int there = scale * value(inst.set(i2, j2)[eta - 1]);
      const Vertex s = gg.tile(i, j, eta), s2 = gg.tile(i2, j2, eta);
      b.path(s, own_p, 16 * m + here);
      b.path(s, own_q, 16 * m - here);
      b.path(s2, next_p, 16 * m - there);
      b.path(s2, next_q, 16 * m + there);
    }
  };
  auto x_of = [](const Tile& t) { return t.x; };
  auto y_of = [](const Tile& t) { return t.y; };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      const int jn = inst.next(j), in = inst.next(i);
      for (int kappa = 1; kappa <= 2; ++kappa) {
        if (j % 2 == 0)
          copy('X', i, j, i, jn, kappa, 2, x_of, alpha, beta);
        else
          copy('X', i, j, i, jn, kappa, 2, x_of, beta, alpha);
      }
      for (int kappa = 1; kappa <= 2; ++kappa) {
        if (i % 2 == 0)
          copy('Y', i, j, in, j, kappa, options.vertical_coefficient, y_of, gamma, delta);
        else
          copy('Y', i, j, in, j, kappa, options.vertical_coefficient, y_of, delta, gamma);
      }
    }
  gg.graph = Graph::from_edges(b.count_, b.edges_);
  gg.registry = std::move(b.named_);
  for (const auto& [name, v] : gg.registry) {
    if (!gg.by_name_.emplace(name, v).second) throw std::logic_error("gadget: duplicate name " + name);
  }
  return gg;
}

void write_registry(std::ostream& out, const GadgetGraph& gg) {
  for (const auto& [name, v] : gg.registry) out << name << " -> " << v << '\n';
}

VertexSet candidate_set(const GadgetGraph& gg, const TilingChoice& choice) {
  if (choice.size() != static_cast<std::size_t>(gg.k) * gg.k)
    throw InputError("gadget: choice needs one tile per cell");
  VertexSet s(gg.graph.vertex_count());
  for (Vertex p : gg.pendants) s.insert(p);
  for (int i = 1; i <= gg.k; ++i)
    for (int j = 1; j <= gg.k; ++j) {
      const int c = choice[static_cast<std::size_t>((i - 1) * gg.k + (j - 1))];
      if (c < 0 || c >= gg.n) throw InputError("gadget: tile choice out of range");
      s.insert(gg.tile(i, j, c + 1));
    }
  return s;
}

VertexSet canonical_solution(const GadgetGraph& gg, const GridTilingInstance& inst,
                             const TilingChoice& choice) {
  if (inst.k() != gg.k || inst.m() != gg.m || inst.n() != gg.n)
    throw InputError("gadget: instance does not match the gadget");
  if (!is_valid_tiling(inst, choice)) throw InputError("gadget: choice is not a valid tiling");
  return candidate_set(gg, choice);
}

StructureReport verify_structure(const GadgetGraph& gg, const Graph& g) {
  StructureReport r;
  const int nv = g.vertex_count();
  VertexSet hub_set(nv);
  for (Vertex v : gg.hubs) hub_set.insert(v);
  for (Vertex v : gg.starred_hubs) hub_set.insert(v);
  r.hub_count = hub_set.size();
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges())
    if (!hub_set.contains(u) && !hub_set.contains(v)) kept.emplace_back(u, v);
  r.hubs_cut_cycles = feedback_edge_number(Graph::from_edges(nv, kept)) == 0 && r.hub_count == 16 * gg.k * gg.k;

  for (Vertex v = 0; v < nv; ++v) r.degree_one += g.degree(v) == 1;
  bool pendants_leaves = true;
  for (Vertex p : gg.pendants) pendants_leaves = pendants_leaves && g.degree(p) == 1;
  r.pendants_only_leaves = pendants_leaves && r.degree_one == 4;

  r.diameter_bound = 36 * gg.m + 6;
  if (!is_connected(g)) {
    r.diameter = -1;
    return r;
  }
  r.diameter = diameter(g);
  r.diameter_ok = r.diameter <= r.diameter_bound;

  DistanceOracle dist(g);
  VertexSet pendants(nv);
  for (Vertex p : gg.pendants) pendants.insert(p);
  VertexSet covered = interval_closure(dist, pendants);
  for (Vertex v = 0; v < nv; ++v) {
    const bool expected = std::find(gg.hubs.begin(), gg.hubs.end(), v) == gg.hubs.end();
    r.closure_mismatches += covered.contains(v) != expected;
  }
  r.pendant_closure_exact = r.closure_mismatches == 0;
  return r;
}

StructureReport verify_structure(const GadgetGraph& gg) { return verify_structure(gg, gg.graph); }

std::string_view no_check_status_name(NoCheckStatus s) {
  switch (s) {
    case NoCheckStatus::AllFail: return "all-fail";
    case NoCheckStatus::SomePass: return "some-pass";
    case NoCheckStatus::TooLarge: return "too-large";
  }
  return "?";
}

NoCheckResult exhaustive_no_check(const GadgetGraph& gg, const GridTilingInstance& inst,
                                  std::uint64_t limit) {
  if (inst.k() != gg.k || inst.m() != gg.m || inst.n() != gg.n)
    throw InputError("gadget: instance does not match the gadget");
  NoCheckResult out;
  const std::size_t cells = static_cast<std::size_t>(gg.k) * gg.k;
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (total > limit / static_cast<std::uint64_t>(gg.n)) {
      out.status = NoCheckStatus::TooLarge;
      return out;
    }
    total *= static_cast<std::uint64_t>(gg.n);
  }

  // Candidates only ever pair pendants and tile vertices, so their
  // intervals are cached per pair.
  DistanceOracle dist(gg.graph);
  std::map<std::pair<Vertex, Vertex>, VertexSet> cache;
  auto iv = [&](Vertex u, Vertex v) -> const VertexSet& {
    if (u > v) std::swap(u, v);
    auto it = cache.find({u, v});
    if (it == cache.end()) it = cache.emplace(std::pair{u, v}, interval(dist, u, v)).first;
    return it->second;
  };

  TilingChoice choice(cells, 0);
  for (;;) {
    ++out.candidates;
    std::vector<Vertex> members = candidate_set(gg, choice).members();
    VertexSet covered(gg.graph.vertex_count());
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a; b < members.size(); ++b) covered |= iv(members[a], members[b]);
    if (covered.size() == gg.graph.vertex_count()) {
      out.status = NoCheckStatus::SomePass;
      out.passing = choice;
      return out;
    }
    std::size_t pos = cells;
    while (pos > 0 && choice[pos - 1] == gg.n - 1) choice[--pos] = 0;
    if (pos == 0) break;
    ++choice[pos - 1];
  }
  out.status = NoCheckStatus::AllFail;
  return out;
}

}  // namespace geodetic

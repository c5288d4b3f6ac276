#include <random>
#include <set>

#include "doctest.h"
#include "geodetic/generators.hpp"
#include "geodetic/geodesic.hpp"
#include "geodetic/oracle.hpp"
#include "geodetic/reduce.hpp"
#include "support/graphs.hpp"
#include "support/rule_audit.hpp"

using namespace geodetic;
using namespace geodetic::testing;

namespace {

int brute(const Graph& g) { return min_geodetic_brute(g).size; }

const PathRecord& path_of_length(const FeedbackEdgeDecomposition& feg, int h) {
  for (const PathRecord& p : feg.paths)
    if (p.length() == h) return p;
  throw std::runtime_error("no path of that length");
}

void check_feg_bounds(const Graph& g) {
  const int fen = feedback_edge_number(g);
  if (fen < 2 || !is_connected(g)) return;
  FeedbackEdgeDecomposition feg = build_feg(g);
  CHECK(static_cast<int>(feg.vertex_count()) <= 2 * fen - 2);
  CHECK(static_cast<int>(feg.edge_count()) <= 3 * fen - 3);
}

}  // namespace

TEST_CASE("feedback edge graph of named graphs") {
  FeedbackEdgeDecomposition k4 = build_feg(complete_graph(4));
  CHECK(k4.branch_vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(k4.edge_count() == 6);
  for (const PathRecord& p : k4.paths) CHECK(p.length() == 1);

  FeedbackEdgeDecomposition sub = build_feg(subdivide_all(complete_graph(4)));
  CHECK(sub.branch_vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(sub.edge_count() == 6);
  for (const PathRecord& p : sub.paths) CHECK(p.length() == 2);

  FeedbackEdgeDecomposition theta = build_feg(theta_graph({2, 3, 4}));
  CHECK(theta.vertex_count() == 2);
  std::vector<int> lengths;
  for (const PathRecord& p : theta.paths) lengths.push_back(p.length());
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{2, 3, 4});

  CHECK_THROWS_AS(build_feg(cycle_graph(5)), ContractViolation);
  CHECK_THROWS_AS(build_feg(path_graph(5)), ContractViolation);
}

TEST_CASE("decomposition reconstructs the graph") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    SubdividedParams p;
    p.branch = 2 + static_cast<int>(rng() % 3);
    p.edges = p.branch + 1 + static_cast<int>(rng() % 2);
    Graph g = random_subdivided_graph(p, rng());
    Reduction r = reduce_to_fixpoint(g, 100);
    if (r.route != Route::General) continue;
    const WorkGraph& w = r.state.graph;
    // Paths plus one leaf per leaf position give back every edge exactly once.
    std::size_t edges = 0;
    std::set<Vertex> covered;
    for (const PathRecord& path : r.feg->paths) {
      edges += static_cast<std::size_t>(path.length());
      for (Vertex v : path.vertices) covered.insert(v);
      for (int j = 1; j + 1 <= path.length(); ++j) CHECK(w.degree(path.at(j)) == 2 + (w.leaf_of(path.at(j)) >= 0));
    }
    std::size_t leaves = w.leaves().size();
    CHECK(edges + leaves == w.edge_count());
    CHECK(covered.size() + leaves == static_cast<std::size_t>(w.alive_count()));
  }
}

TEST_CASE("observation bounds on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    check_feg_bounds(random_fen_graph(8 + static_cast<int>(rng() % 14), 2 + static_cast<int>(rng() % 4), rng()));
    SubdividedParams p;
    p.branch = 1 + static_cast<int>(rng() % 4);
    p.edges = p.branch + 1 + static_cast<int>(rng() % 3);
    check_feg_bounds(random_subdivided_graph(p, rng()));
  }
}

TEST_CASE("rr1 on a path and a pendant path") {
  ReductionState s(path_graph(4), 5);
  REQUIRE(apply_rr1(s));
  CHECK_FALSE(s.graph.alive(0));
  CHECK(s.k == 5);
  CHECK(format_entry(s.trace.back()) == "RULE rr1 anchor=1 removed=0 dk=0");
  // The remaining path 1-2-3 loses one more endpoint.
  REQUIRE(apply_rr1(s));
  CHECK(s.graph.alive_count() == 2);
  CHECK_FALSE(apply_rr1(s));

  // C5 with a pendant path 0-5-6.
  Graph g = with_leaves(cycle_graph(5), {0});
  std::vector<Edge> e = g.edges();
  e.emplace_back(5, 6);
  Graph pendant = Graph::from_edges(7, e);
  ReductionState t(pendant, 3);
  REQUIRE(apply_rr1(t));
  CHECK_FALSE(t.graph.alive(6));
  CHECK(brute(pendant) == brute(t.graph.to_graph()));
}

TEST_CASE("rr2 on stars and spiders") {
  ReductionState s(star_graph(3), 3);
  REQUIRE(apply_rr2(s));
  CHECK(s.k == 2);
  CHECK(s.graph.alive_count() == 3);
  CHECK(format_entry(s.trace.back()) == "RULE rr2 removed=2 dk=1");
  CHECK(brute(star_graph(3)) == brute(s.graph.to_graph()) + 1);
  // P3 is left for rr1.
  CHECK_FALSE(apply_rr2(s));

  // Spider: centre 0 with legs 0-1, 0-2, 0-3-4.
  Graph spider = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  ReductionState t(spider, 3);
  REQUIRE(apply_rr2(t));
  CHECK(t.graph.alive_count() == 4);
  CHECK(brute(spider) == brute(t.graph.to_graph()) + 1);
}

TEST_CASE("rr3 adds a midpoint leaf only under the strict condition") {
  // Theta(2,2,6): d(v<-, v->) = 2, the long path has h = 6.
  Graph base = theta_graph({2, 2, 6});
  FeedbackEdgeDecomposition plain = build_feg(base);
  const PathRecord& lp = path_of_length(plain, 6);

  Graph fires = with_leaves(base, {lp.at(1), lp.at(6)});
  ReductionState s(fires, 10);
  FeedbackEdgeDecomposition feg = build_feg(s.graph);
  BranchDistances dist(s.graph, feg);
  REQUIRE(apply_rr3(s, feg, dist));
  CHECK(s.trace.back().rule == Rule::RR3);
  CHECK(s.trace.back().anchor == path_of_length(feg, 6).at(3));
  CHECK(brute(fires) == brute(s.graph.to_graph()));

  Graph equal = with_leaves(base, {lp.at(1), lp.at(5)});
  ReductionState t(equal, 10);
  FeedbackEdgeDecomposition feg2 = build_feg(t.graph);
  CHECK_FALSE(apply_rr3(t, feg2, BranchDistances(t.graph, feg2)));
}

TEST_CASE("rr4 attaches at the prescribed offset") {
  Graph base = theta_graph({2, 2, 6});
  const PathRecord lp = path_of_length(build_feg(base), 6);

  Graph far = with_leaves(base, {lp.at(5)});
  ReductionState s(far, 10);
  FeedbackEdgeDecomposition feg = build_feg(s.graph);
  REQUIRE(apply_rr4(s, feg, BranchDistances(s.graph, feg)));
  // l = l<- - floor((h + d) / 2) = 5 - 4.
  CHECK(s.trace.back().anchor == lp.at(1));
  CHECK(brute(far) == brute(s.graph.to_graph()));

  Graph mid = with_leaves(base, {lp.at(3)});
  ReductionState t(mid, 10);
  FeedbackEdgeDecomposition feg2 = build_feg(t.graph);
  CHECK_FALSE(apply_rr4(t, feg2, BranchDistances(t.graph, feg2)));
}

namespace {

// K4 with a cycle of `h` edges hanging at vertex 0; `leafed` are positions on
// that cycle (1..h-1) that get a pendant leaf.
Graph k4_with_loop(int h, std::vector<int> leafed) {
  std::vector<Edge> e = complete_graph(4).edges();
  int prev = 0, n = 4;
  std::vector<int> ids{0};
  for (int s = 1; s < h; ++s) {
    e.emplace_back(prev, n);
    ids.push_back(n);
    prev = n++;
  }
  e.emplace_back(0, prev);
  for (int pos : leafed) e.emplace_back(ids[pos], n++);
  return Graph::from_edges(n, e);
}

int rr5_dk(const Graph& g) {
  ReductionState s(g, 10);
  FeedbackEdgeDecomposition feg = build_feg(s.graph);
  REQUIRE(apply_rr5(s, feg));
  CHECK(brute(g) == brute(s.graph.to_graph()) + s.trace.back().dk);
  return s.trace.back().dk;
}

}  // namespace

TEST_CASE("rr5 budget changes") {
  CHECK(rr5_dk(k4_with_loop(4, {})) == 0);
  CHECK(rr5_dk(k4_with_loop(5, {})) == 1);
  CHECK(rr5_dk(k4_with_loop(6, {2, 3, 4})) == 2);

  ReductionState c(cycle_graph(6), 2);
  FeedbackEdgeDecomposition none;
  CHECK_THROWS_AS(apply_rr5(c, none), ContractViolation);
}

TEST_CASE("reduce to fixpoint routes and invariants") {
  CHECK(reduce_to_fixpoint(path_graph(7), 2).route == Route::Tree);
  CHECK(reduce_to_fixpoint(with_leaves(cycle_graph(9), {0}), 2).route == Route::Fen1);
  CHECK(reduce_to_fixpoint(complete_graph(4), 4).route == Route::General);
  CHECK_THROWS_AS(reduce_to_fixpoint(make_graph(3, {{0, 1}}), 1), DisconnectedError);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    SubdividedParams p;
    p.branch = 1 + static_cast<int>(rng() % 4);
    p.edges = p.branch + 1 + static_cast<int>(rng() % 3);
    p.leaf_chance = 0.3;
    p.max_vertices = 40;
    Graph g = random_subdivided_graph(p, rng());
    Reduction r = reduce_to_fixpoint(g, 20);

    // Determinism and replay.
    Reduction again = reduce_to_fixpoint(g, 20);
    CHECK(again.state.trace == r.state.trace);
    ReductionState re = replay(g, 20, r.state.trace);
    CHECK(re.graph.to_graph() == r.state.graph.to_graph());
    CHECK(re.k == r.state.k);

    if (r.route != Route::General) continue;
    ReductionState s = r.state;
    CHECK_FALSE(apply_rr1(s));
    CHECK_FALSE(apply_rr2(s));
    const FeedbackEdgeDecomposition& feg = *r.feg;
    BranchDistances dist(s.graph, feg);
    CHECK_FALSE(apply_rr3(s, feg, dist));
    CHECK_FALSE(apply_rr4(s, feg, dist));
    for (const PathRecord& path : feg.paths) {
      CHECK_FALSE(path.is_loop());
      if (!path.has_leaves()) continue;
      const int h = path.length(), d = dist(path.left(), path.right());
      const int lo = path.leftmost_leaf(), hi = path.rightmost_leaf();
      CHECK(lo <= (h - lo) + d);
      CHECK(h - hi <= hi + d);
    }
    for (Vertex v : s.graph.alive_vertices()) {
      int leaves = 0;
      for (Vertex w : s.graph.neighbors(v)) leaves += s.graph.degree(w) == 1;
      CHECK(leaves <= 1);
    }

    // Idempotence.
    Reduction twice = reduce_to_fixpoint(r.state);
    CHECK(twice.state.trace.size() == r.state.trace.size());
  }
}

TEST_CASE("rule soundness on random corpora") {
  RuleAudit audit;
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    SubdividedParams p;
    p.branch = 1 + static_cast<int>(rng() % 3);
    p.edges = p.branch + 1 + static_cast<int>(rng() % 2);
    p.leaf_chance = 0.35;
    p.max_vertices = 13;
    Graph g = random_subdivided_graph(p, rng());
    Reduction r = reduce_to_fixpoint(g, 20);
    audit_trace(g, r.state.trace, audit);
  }
  for (const std::string& f : audit.failures) INFO(f);
  CHECK(audit.failures.empty());
  CHECK(audit.applications[0] > 0);
  CHECK(audit.applications[2] + audit.applications[3] > 0);
}

TEST_CASE("lifting through the trace") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    SubdividedParams p;
    p.branch = 1 + static_cast<int>(rng() % 3);
    p.edges = p.branch + 1;
    p.max_vertices = 14;
    Graph g = random_subdivided_graph(p, rng());
    Reduction r = reduce_to_fixpoint(g, 20);
    std::vector<Vertex> ids;
    Graph reduced = r.state.graph.to_graph(&ids);
    BruteResult br = min_geodetic_brute(reduced);
    std::vector<Vertex> sol;
    for (Vertex v : br.witness.members()) sol.push_back(ids[v]);
    std::vector<Vertex> lifted = lift(r.state.trace, sol);
    VertexSet s(g.vertex_count());
    for (Vertex v : lifted) s.insert(v);
    CHECK(is_geodetic(g, s));
    CHECK(s.size() == br.size + (20 - r.state.k));
    CHECK(s.size() == brute(g));
  }
}

TEST_CASE("tree solver") {
  CHECK(solve_tree(path_graph(6)) == 2);
  CHECK(solve_tree(star_graph(5)) == 5);
  CHECK(solve_tree(Graph(1)) == 1);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    Graph t = random_tree(1 + static_cast<int>(rng() % 15), rng);
    CHECK(solve_tree(t) == brute(t));
  }
  CHECK_THROWS_AS(solve_tree(cycle_graph(4)), ContractViolation);
}

TEST_CASE("fen one solver") {
  CHECK(solve_fen1(cycle_graph(6), 2));
  CHECK_FALSE(solve_fen1(cycle_graph(6), 1));
  CHECK(solve_fen1(cycle_graph(7), 3));
  CHECK_FALSE(solve_fen1(cycle_graph(7), 2));
  CHECK_THROWS_AS(solve_fen1(complete_graph(4), 4), ContractViolation);

  for (int len = 3; len <= 10; ++len)
    for (int leaves = 0; leaves <= 3; ++leaves) {
      Graph g = cycle_with_leaves(len, std::min(leaves, len), static_cast<std::uint64_t>(len * 7 + leaves));
      Reduction r = reduce_to_fixpoint(g, 0);
      REQUIRE(r.route == Route::Fen1);
      SpecialSolution s = solve_fen1(r.state);
      CHECK(s.size - r.state.k == brute(g));
      std::vector<Vertex> lifted = lift(r.state.trace, s.witness);
      CHECK(is_geodetic(g, VertexSet::of(g.vertex_count(), lifted)));
    }
}

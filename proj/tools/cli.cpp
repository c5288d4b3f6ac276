#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "geodetic/fpt.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/geodesic.hpp"
#include "geodetic/graph_io.hpp"
#include "geodetic/grid_tiling.hpp"
#include "geodetic/hardness.hpp"
#include "geodetic/oracle.hpp"
#include "geodetic/reduce.hpp"

namespace geodetic::cli {
namespace {

struct SolveArgs {
  std::string path;
  std::optional<long long> k;
  std::string algo = "auto";
  bool cross_check = false;
  bool per_component = false;
  int threads = 1;
  bool deterministic = false;
  bool quiet = false;
  std::uint64_t budget = FptOptions{}.node_budget;
  int auto_fen = 8;
};

struct ReduceArgs {
  std::string path;
  long long k = 0;
  std::string output;
  std::string trace;
};

struct VerifyArgs {
  std::string path;
  std::string set_path;
};

struct StatsArgs {
  std::string path;
  int diameter_limit = 5000;
};

struct GenerateArgs {
  std::string kind;
  std::string output;
  std::uint64_t seed = 1;
  int n = 20;
  int fen = 3;
  int length = 6;
  int leaves = 0;
  int k = 2;
  int m = 1;
  int tiles = 1;
  bool planted = true;
  std::string instance;
  int vertical_coefficient = 1;
};

void print_list(std::ostream& out, std::string_view key, const std::vector<Vertex>& vs) {
  out << key;
  for (Vertex v : vs) out << ' ' << v;
  out << '\n';
}

struct Solved {
  bool known = true;
  int optimum = 0;
  std::vector<Vertex> witness;
  std::string route;
  std::uint64_t guesses = 0;
  std::uint64_t nodes = 0;
};

Solved solve_connected(const Graph& g, const std::string& algo, const SolveArgs& a) {
  Solved s;
  if (algo == "brute") {
    BruteOptions opts;
    BruteResult r = min_geodetic_brute(g, opts);
    s.known = r.status == BruteStatus::Optimal;
    s.optimum = r.size;
    s.witness = r.witness.members();
    s.route = "brute";
    s.nodes = r.nodes;
    return s;
  }
  FptOptions opts;
  opts.threads = a.threads;
  opts.deterministic = a.deterministic;
  opts.node_budget = a.budget;
  FptResult r = solve_fpt(g, opts);
  s.known = r.status == FptStatus::Solved;
  s.optimum = r.optimum;
  s.witness = r.witness;
  s.route = std::string(route_name(r.stats.route));
  s.guesses = r.stats.guesses;
  s.nodes = r.stats.nodes;
  return s;
}

// Solves each component on its own and maps witnesses back to input ids.
Solved solve_graph(const Graph& g, const std::string& algo, const SolveArgs& a, int* components) {
  int count = 0;
  std::vector<int> label = connected_components(g, &count);
  *components = count;
  if (count == 1) return solve_connected(g, algo, a);
  Solved total;
  for (int c = 0; c < count; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (label[static_cast<std::size_t>(v)] == c) members.push_back(v);
    Solved part = solve_connected(induced_subgraph(g, members), algo, a);
    total.known = total.known && part.known;
    total.optimum += part.optimum;
    for (Vertex v : part.witness) total.witness.push_back(members[static_cast<std::size_t>(v)]);
    total.guesses += part.guesses;
    total.nodes += part.nodes;
    if (total.route.empty())
      total.route = part.route;
    else if (total.route != part.route)
      total.route = "mixed";
  }
  std::sort(total.witness.begin(), total.witness.end());
  return total;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(a.path);
  if (g.vertex_count() == 0) throw InputError("empty graph");
  if (!a.per_component && !is_connected(g))
    throw DisconnectedError("graph is disconnected; pass --per-component to sum component optima");
  std::string algo = a.algo;
  if (algo == "auto") algo = feedback_edge_number(g) <= a.auto_fen ? "fpt" : "brute";

  const auto start = std::chrono::steady_clock::now();
  int components = 1;
  Solved s = solve_graph(g, algo, a, &components);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  std::optional<Solved> other;
  if (a.cross_check) {
    other = solve_graph(g, algo == "brute" ? "fpt" : "brute", a, &components);
    if (!s.known || !other->known || s.optimum != other->optimum) {
      err << "cross-check mismatch: " << algo << ' ' << s.optimum << (s.known ? "" : "?") << ' '
          << (algo == "brute" ? "fpt" : "brute") << ' ' << other->optimum << (other->known ? "" : "?")
          << '\n';
      return kError;
    }
  }

  int code = kYes;
  if (!s.known && !(a.k && !s.witness.empty() && s.optimum <= *a.k))
    code = kUnknown;
  else if (a.k)
    code = s.optimum <= *a.k ? kYes : kNo;

  if (a.quiet) return code;
  out << "algo " << algo << '\n';
  out << "route " << s.route << '\n';
  out << "vertices " << g.vertex_count() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "fen " << feedback_edge_number(g) << '\n';
  out << "components " << components << '\n';
  out << "status " << (s.known ? "solved" : "unknown") << '\n';
  out << (s.known ? "optimum " : "upper_bound ") << s.optimum << '\n';
  print_list(out, "witness", s.witness);
  if (algo == "fpt") out << "guesses " << s.guesses << '\n';
  out << "nodes " << s.nodes << '\n';
  if (other) out << "cross_check agree\n";
  if (a.k) {
    out << "k " << *a.k << '\n';
    out << "answer " << (code == kYes ? "yes" : code == kNo ? "no" : "unknown") << '\n';
  }
  if (!a.deterministic)
    out << "time_ms " << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << '\n';
  return code;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.path);
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  Reduction red = reduce_to_fixpoint(g, a.k);
  std::vector<Vertex> ids;
  const Graph reduced = red.state.graph.to_graph(&ids);

  std::ostringstream graph_text;
  graph_text << "# working ids";
  for (Vertex v : ids) graph_text << ' ' << v;
  graph_text << '\n';
  write_graph(graph_text, reduced);
  std::ostringstream trace_text;
  for (const TraceEntry& e : red.state.trace) trace_text << format_entry(e) << '\n';

  out << "route " << route_name(red.route) << '\n';
  out << "k_before " << a.k << '\n';
  out << "k_after " << red.state.k << '\n';
  out << "vertices " << reduced.vertex_count() << '\n';
  out << "edges " << reduced.edge_count() << '\n';
  out << "fen " << feedback_edge_number(reduced) << '\n';
  out << "rules " << red.state.trace.size() << '\n';
  if (red.feg) {
    out << "feg_vertices " << red.feg->vertex_count() << '\n';
    out << "feg_edges " << red.feg->edge_count() << '\n';
  }
  if (a.output.empty())
    out << graph_text.str();
  else
    write_text(a.output, graph_text.str());
  if (a.trace.empty())
    out << trace_text.str();
  else
    write_text(a.trace, trace_text.str());
  return kYes;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.path);
  const std::vector<Vertex> set = read_vertex_list_file(a.set_path);
  for (Vertex v : set) g.check_vertex(v);
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  DistanceOracle dist(g);
  const VertexSet s = VertexSet::of(g.vertex_count(), set);
  const std::optional<Vertex> missing = first_uncovered(dist, s);
  out << "size " << s.size() << '\n';
  out << "geodetic " << (missing ? "no" : "yes") << '\n';
  if (missing) out << "uncovered " << *missing << '\n';
  return missing ? kNo : kYes;
}

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.path);
  int components = 0;
  connected_components(g, &components);
  const int fen = feedback_edge_number(g);
  out << "vertices " << g.vertex_count() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "components " << components << '\n';
  out << "fen " << fen << '\n';
  if (components != 1) {
    out << "feg none (disconnected)\n";
    return kYes;
  }
  if (g.vertex_count() <= a.diameter_limit) out << "diameter " << diameter(g) << '\n';
  if (fen == 0) {
    out << "feg empty (tree)\n";
    return kYes;
  }
  if (fen == 1) {
    out << "feg empty (single cycle)\n";
    return kYes;
  }
  const FeedbackEdgeDecomposition feg = build_feg(g);
  const auto nv = static_cast<int>(feg.vertex_count());
  const auto ne = static_cast<int>(feg.edge_count());
  out << "feg_vertices " << nv << '\n';
  out << "feg_edges " << ne << '\n';
  out << "feg_vertex_bound " << 2 * fen - 2 << ' ' << (nv <= 2 * fen - 2 ? "ok" : "violated") << '\n';
  out << "feg_edge_bound " << 3 * fen - 3 << ' ' << (ne <= 3 * fen - 3 ? "ok" : "violated") << '\n';
  for (std::size_t i = 0; i < feg.paths.size(); ++i) {
    const PathRecord& p = feg.paths[i];
    out << "path " << i << " ends " << p.left() << ' ' << p.right() << " length " << p.length() << " leaves "
        << p.leaf_positions.size() << '\n';
  }
  return kYes;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  out << "kind " << a.kind << '\n';
  out << "seed " << a.seed << '\n';
  if (a.kind == "random-fen") {
    if (a.n < 1 || a.fen < 0 || a.fen > a.n * (a.n - 1) / 2 - (a.n - 1))
      throw InputError("random-fen: need n >= 1 and 0 <= fen <= n(n-1)/2 - (n-1)");
    const Graph g = random_fen_graph(a.n, a.fen, a.seed);
    write_text(a.output, format_graph(g));
    out << "vertices " << g.vertex_count() << '\n';
    out << "edges " << g.edge_count() << '\n';
    out << "fen " << feedback_edge_number(g) << '\n';
  } else if (a.kind == "cycle-leaves") {
    if (a.length < 3 || a.leaves < 0 || a.leaves > a.length)
      throw InputError("cycle-leaves: need len >= 3 and 0 <= leaves <= len");
    const Graph g = cycle_with_leaves(a.length, a.leaves, a.seed);
    write_text(a.output, format_graph(g));
    out << "vertices " << g.vertex_count() << '\n';
    out << "edges " << g.edge_count() << '\n';
  } else if (a.kind == "grid-tiling" || a.kind == "gadget") {
    GridTilingInstance inst;
    TilingChoice planted;
    bool have_planted = false;
    if (!a.instance.empty()) {
      inst = read_grid_tiling_file(a.instance);
      if (auto t = grid_tiling_brute(inst)) planted = *t, have_planted = true;
    } else if (a.planted) {
      inst = random_planted_instance(a.k, a.m, a.tiles, a.seed, &planted);
      have_planted = true;
    } else {
      auto no = random_no_instance(a.k, a.m, a.tiles, a.seed);
      if (!no) throw InputError("no tiling-free instance found for these parameters");
      inst = *no;
    }
    out << "k " << inst.k() << '\n';
    out << "m " << inst.m() << '\n';
    out << "n " << inst.n() << '\n';
    out << "has_tiling " << (have_planted ? "yes" : "no") << '\n';
    if (a.kind == "grid-tiling") {
      write_text(a.output, format_grid_tiling(inst));
      if (have_planted) {
        std::ostringstream s;
        for (int c : planted) s << c << '\n';
        write_text(a.output + ".tiling", s.str());
      }
    } else {
      GadgetGraph gg = build_gadget(inst, GadgetOptions{a.vertical_coefficient});
      write_text(a.output, format_graph(gg.graph));
      std::ostringstream reg;
      write_registry(reg, gg);
      write_text(a.output + ".registry", reg.str());
      out << "vertices " << gg.graph.vertex_count() << '\n';
      out << "edges " << gg.graph.edge_count() << '\n';
      out << "expected_k " << gg.budget << '\n';
      if (have_planted) {
        std::ostringstream s;
        for (Vertex v : canonical_solution(gg, inst, planted).members()) s << v << '\n';
        write_text(a.output + ".solution", s.str());
      }
    }
  } else {
    throw InputError("unknown kind " + a.kind);
  }
  out << "output " << a.output << '\n';
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum geodetic sets for sparse graphs", "geodetic"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Minimum geodetic set, or the decision answer with --k");
  solve->add_option("graph", sa.path, "Graph file")->required();
  solve->add_option("--k", sa.k, "Decision budget");
  solve->add_option("--algo", sa.algo, "fpt, brute or auto")->check(CLI::IsMember({"fpt", "brute", "auto"}));
  solve->add_flag("--cross-check", sa.cross_check, "Also run the other algorithm and compare");
  solve->add_flag("--per-component", sa.per_component, "Sum optima over connected components");
  solve->add_option("--threads", sa.threads, "Worker threads for the guess search")->check(CLI::PositiveNumber);
  solve->add_flag("--deterministic", sa.deterministic, "Single worker, no timing in the report");
  solve->add_flag("--quiet", sa.quiet, "Exit code only");
  solve->add_option("--budget", sa.budget, "Search nodes per guess");
  solve->add_option("--auto-fen", sa.auto_fen, "Largest fen that auto sends to fpt");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Apply the reduction rules to a fixpoint");
  reduce->add_option("graph", ra.path, "Graph file")->required();
  reduce->add_option("--k", ra.k, "Budget to carry through the rules");
  reduce->add_option("-o,--output", ra.output, "Reduced graph file (default stdout)");
  reduce->add_option("--trace", ra.trace, "Trace file (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check whether a vertex set is geodetic");
  verify->add_option("graph", va.path, "Graph file")->required();
  verify->add_option("set", va.set_path, "Vertex list file")->required();

  StatsArgs ta;
  auto* stats = app.add_subcommand("stats", "Size, fen and feedback edge graph of a graph");
  stats->add_option("graph", ta.path, "Graph file")->required();
  stats->add_option("--diameter-limit", ta.diameter_limit, "Skip the diameter above this many vertices");

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a random or gadget instance");
  generate->add_option("kind", ga.kind, "random-fen, cycle-leaves, grid-tiling or gadget")
      ->required()
      ->check(CLI::IsMember({"random-fen", "cycle-leaves", "grid-tiling", "gadget"}));
  generate->add_option("-o,--output", ga.output, "Output file")->required();
  generate->add_option("--seed", ga.seed, "RNG seed");
  generate->add_option("--n", ga.n, "random-fen: vertices");
  generate->add_option("--fen", ga.fen, "random-fen: feedback edge number");
  generate->add_option("--len", ga.length, "cycle-leaves: cycle length");
  generate->add_option("--leaves", ga.leaves, "cycle-leaves: pendant count");
  generate->add_option("--k", ga.k, "Grid side");
  generate->add_option("--m", ga.m, "Coordinate range");
  generate->add_option("--tiles", ga.tiles, "Tiles per set");
  std::string planted = "yes";
  generate->add_option("--planted", planted, "Plant a tiling (yes) or sample a tiling-free instance (no)")
      ->check(CLI::IsMember({"yes", "no"}));
  generate->add_option("--instance", ga.instance, "gadget: read the Grid Tiling instance from a file");
  generate->add_option("--vertical-coefficient", ga.vertical_coefficient, "gadget: multiplier on y (1 or 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  try {
    if (*solve) return cmd_solve(sa, out, err);
    if (*reduce) return cmd_reduce(ra, out);
    if (*verify) return cmd_verify(va, out);
    if (*stats) return cmd_stats(ta, out);
    if (*generate) {
      ga.planted = planted == "yes";
      return cmd_generate(ga, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace geodetic::cli

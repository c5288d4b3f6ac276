#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "geodetic/fpt.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/geodesic.hpp"
#include "geodetic/graph_io.hpp"
#include "geodetic/grid_tiling.hpp"
#include "geodetic/hardness.hpp"
#include "geodetic/oracle.hpp"
#include "geodetic/reduce.hpp"

namespace py = pybind11;
using namespace geodetic;

namespace {

VertexSet to_set(const Graph& g, const std::vector<Vertex>& vs) {
  for (Vertex v : vs) g.check_vertex(v);
  return VertexSet::of(g.vertex_count(), vs);
}

std::vector<Tile> to_tiles(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Tile> out;
  for (auto [x, y] : pairs) out.push_back({x, y});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact geodetic set solver";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static("from_edges",
                  [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
                  py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto n = g.neighbors(v);
             return std::vector<Vertex>(n.begin(), n.end());
           })
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("format_graph", &format_graph, py::arg("graph"));
  m.def("read_graph_file", &read_graph_file, py::arg("path"));
  m.def("is_connected", &is_connected);
  m.def("feedback_edge_number", &feedback_edge_number);
  m.def("diameter", &diameter);

  m.def(
      "interval",
      [](const Graph& g, Vertex u, Vertex v) {
        DistanceOracle dist(g);
        return interval(dist, u, v).members();
      },
      py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def(
      "interval_closure",
      [](const Graph& g, const std::vector<Vertex>& s) { return interval_closure(g, to_set(g, s)).members(); },
      py::arg("graph"), py::arg("vertices"));
  m.def(
      "is_geodetic", [](const Graph& g, const std::vector<Vertex>& s) { return is_geodetic(g, to_set(g, s)); },
      py::arg("graph"), py::arg("vertices"));

  m.def(
      "min_geodetic_brute",
      [](const Graph& g) {
        BruteResult r = min_geodetic_brute(g);
        return py::make_tuple(r.size, r.witness.members());
      },
      py::arg("graph"), "Returns (optimum, witness) by exhaustive search.");

  py::class_<FptResult>(m, "FptResult")
      .def_property_readonly("solved", [](const FptResult& r) { return r.status == FptStatus::Solved; })
      .def_readonly("optimum", &FptResult::optimum)
      .def_readonly("witness", &FptResult::witness)
      .def_property_readonly("route", [](const FptResult& r) { return std::string(route_name(r.stats.route)); })
      .def_property_readonly("guesses", [](const FptResult& r) { return r.stats.guesses; })
      .def_property_readonly("trace", [](const FptResult& r) {
        std::vector<std::string> out;
        for (const TraceEntry& e : r.trace) out.push_back(format_entry(e));
        return out;
      });

  m.def(
      "solve_fpt",
      [](const Graph& g, int threads, bool deterministic, std::uint64_t node_budget) {
        FptOptions o;
        o.threads = threads;
        o.deterministic = deterministic;
        o.node_budget = node_budget;
        py::gil_scoped_release release;
        return solve_fpt(g, o);
      },
      py::arg("graph"), py::arg("threads") = 1, py::arg("deterministic") = false,
      py::arg("node_budget") = FptOptions{}.node_budget);

  m.def(
      "reduce",
      [](const Graph& g, long long k) {
        Reduction red = reduce_to_fixpoint(g, k);
        std::vector<Vertex> ids;
        Graph reduced = red.state.graph.to_graph(&ids);
        std::vector<std::string> trace;
        for (const TraceEntry& e : red.state.trace) trace.push_back(format_entry(e));
        py::dict d;
        d["route"] = std::string(route_name(red.route));
        d["k"] = red.state.k;
        d["graph"] = reduced;
        d["ids"] = ids;
        d["trace"] = trace;
        return d;
      },
      py::arg("graph"), py::arg("k") = 0);

  m.def("random_fen_graph", &random_fen_graph, py::arg("n"), py::arg("fen"), py::arg("seed"));
  m.def("cycle_with_leaves", &cycle_with_leaves, py::arg("length"), py::arg("leaves"), py::arg("seed"));

  py::class_<GridTilingInstance>(m, "GridTilingInstance")
      .def(py::init([](int k, int mm, int n, const std::vector<std::vector<std::pair<int, int>>>& sets) {
             std::vector<std::vector<Tile>> tiles;
             for (const auto& s : sets) tiles.push_back(to_tiles(s));
             return GridTilingInstance(k, mm, n, tiles);
           }),
           py::arg("k"), py::arg("m"), py::arg("n"), py::arg("sets"))
      .def_property_readonly("k", &GridTilingInstance::k)
      .def_property_readonly("m", &GridTilingInstance::m)
      .def_property_readonly("n", &GridTilingInstance::n)
      .def("__str__", &format_grid_tiling);

  m.def(
      "random_planted_instance",
      [](int k, int mm, int n, std::uint64_t seed) {
        TilingChoice planted;
        GridTilingInstance inst = random_planted_instance(k, mm, n, seed, &planted);
        return py::make_tuple(inst, planted);
      },
      py::arg("k"), py::arg("m"), py::arg("n"), py::arg("seed"));
  m.def("grid_tiling_brute", &grid_tiling_brute, py::arg("instance"));

  py::class_<GadgetGraph>(m, "GadgetGraph")
      .def_readonly("graph", &GadgetGraph::graph)
      .def_readonly("budget", &GadgetGraph::budget)
      .def_readonly("pendants", &GadgetGraph::pendants)
      .def_readonly("hubs", &GadgetGraph::hubs)
      .def_readonly("starred_hubs", &GadgetGraph::starred_hubs)
      .def("id", &GadgetGraph::id)
      .def("registry", [](const GadgetGraph& gg) {
        std::ostringstream s;
        write_registry(s, gg);
        return s.str();
      });

  m.def(
      "build_gadget",
      [](const GridTilingInstance& inst, int vertical_coefficient) {
        return build_gadget(inst, GadgetOptions{vertical_coefficient});
      },
      py::arg("instance"), py::arg("vertical_coefficient") = 1);
  m.def(
      "canonical_solution",
      [](const GadgetGraph& gg, const GridTilingInstance& inst, const TilingChoice& choice) {
        return canonical_solution(gg, inst, choice).members();
      },
      py::arg("gadget"), py::arg("instance"), py::arg("choice"));
  m.def(
      "verify_structure",
      [](const GadgetGraph& gg) {
        StructureReport r = verify_structure(gg);
        py::dict d;
        d["hubs_cut_cycles"] = r.hubs_cut_cycles;
        d["pendant_closure_exact"] = r.pendant_closure_exact;
        d["diameter_ok"] = r.diameter_ok;
        d["diameter"] = r.diameter;
        d["pendants_only_leaves"] = r.pendants_only_leaves;
        return d;
      },
      py::arg("gadget"));
  m.def(
      "exhaustive_no_check",
      [](const GadgetGraph& gg, const GridTilingInstance& inst, std::uint64_t limit) {
        return std::string(no_check_status_name(exhaustive_no_check(gg, inst, limit).status));
      },
      py::arg("gadget"), py::arg("instance"), py::arg("limit") = 10'000);
}

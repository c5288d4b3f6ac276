#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "geodetic/graph_io.hpp"
#include "geodetic/grid_tiling.hpp"
#include "support/graphs.hpp"

using namespace geodetic;
using namespace geodetic::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("geodetic_cli_" + std::to_string(counter_++) + "_" +
                                         std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name), std::ios::binary) << text;
    return file(name);
  }
  std::string graph(const std::string& name, const Graph& g) const { return write(name, format_graph(g)); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("solve reports") {
  TempDir dir;
  const std::string c6 = dir.graph("c6.txt", cycle_graph(6));
  const std::string p4 = dir.graph("p4.txt", path_graph(4));

  Run a = run({"solve", c6, "--algo", "fpt"});
  CHECK(a.code == 0);
  CHECK(has_line(a.out, "optimum 2"));

  Run b = run({"solve", p4, "--algo", "brute"});
  CHECK(b.code == 0);
  CHECK(has_line(b.out, "optimum 2"));
  CHECK(has_line(b.out, "witness 0 3"));

  Run c = run({"solve", c6, "--cross-check", "--deterministic"});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "cross_check agree"));
  CHECK(c.out.find("time_ms") == std::string::npos);
  CHECK(run({"solve", c6}).out.find("time_ms") != std::string::npos);
}

TEST_CASE("solve exit codes") {
  TempDir dir;
  const std::string k4 = dir.graph("k4.txt", complete_graph(4));
  CHECK(run({"solve", k4, "--k", "4"}).code == cli::kYes);
  CHECK(run({"solve", k4, "--k", "3"}).code == cli::kNo);
  CHECK(has_line(run({"solve", k4, "--k", "3"}).out, "answer no"));

  Run quiet = run({"solve", k4, "--k", "3", "--quiet"});
  CHECK(quiet.code == cli::kNo);
  CHECK(quiet.out.empty());

  CHECK(run({"solve", dir.file("missing.txt")}).code == cli::kError);
  CHECK(run({"solve", dir.write("bad.txt", "3 1\n0 7\n")}).code == cli::kError);
  CHECK(run({"solve", k4, "--algo", "magic"}).code == cli::kError);
  CHECK(run({}).code == cli::kError);

  // K5 goes to the guess search; a one-node budget cannot settle it.
  const std::string k5 = dir.graph("k5.txt", complete_graph(5));
  Run unknown = run({"solve", k5, "--algo", "fpt", "--budget", "1"});
  CHECK(unknown.code == cli::kUnknown);
  CHECK(has_line(unknown.out, "status unknown"));
}

TEST_CASE("disconnected input") {
  TempDir dir;
  const std::string two = dir.graph("two.txt", make_graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}}));
  Run r = run({"solve", two});
  CHECK(r.code == cli::kError);
  CHECK(r.err.find("per-component") != std::string::npos);

  Run p = run({"solve", two, "--per-component", "--algo", "brute"});
  CHECK(p.code == cli::kYes);
  CHECK(has_line(p.out, "components 2"));
  CHECK(has_line(p.out, "optimum 4"));
  CHECK(has_line(p.out, "witness 0 2 3 5"));
  CHECK(has_line(run({"solve", two, "--per-component", "--algo", "fpt"}).out, "optimum 4"));
}

TEST_CASE("verify") {
  TempDir dir;
  const std::string p4 = dir.graph("p4.txt", path_graph(4));
  const std::string k4 = dir.graph("k4.txt", complete_graph(4));
  CHECK(run({"verify", p4, dir.write("ends.txt", "0 3\n")}).code == 0);

  Run miss = run({"verify", k4, dir.write("three.txt", "0 1 2\n")});
  CHECK(miss.code == 1);
  CHECK(has_line(miss.out, "uncovered 3"));

  CHECK(run({"verify", k4, dir.write("far.txt", "0 9\n")}).code == cli::kError);
}

TEST_CASE("stats") {
  TempDir dir;
  Run k4 = run({"stats", dir.graph("k4.txt", complete_graph(4))});
  CHECK(has_line(k4.out, "fen 3"));
  CHECK(has_line(k4.out, "feg_vertices 4"));
  CHECK(has_line(k4.out, "feg_vertex_bound 4 ok"));

  Run theta = run({"stats", dir.graph("theta.txt", theta_graph({3, 3, 4}))});
  CHECK(has_line(theta.out, "fen 2"));
  CHECK(has_line(theta.out, "feg_vertices 2"));
  CHECK(has_line(theta.out, "feg_edges 3"));

  Run tree = run({"stats", dir.graph("tree.txt", star_graph(4))});
  CHECK(has_line(tree.out, "fen 0"));
  CHECK(has_line(tree.out, "feg empty (tree)"));
}

TEST_CASE("reduce writes graph and trace") {
  TempDir dir;
  // Two leaves on one vertex: one goes, then the pendant path shortens.
  const std::string g = dir.graph("g.txt", make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {3, 5}}));
  Run r = run({"reduce", g, "--k", "4", "-o", dir.file("out.txt"), "--trace", dir.file("trace.txt")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "k_after 3"));
  const std::string trace = read(dir.file("trace.txt"));
  CHECK(trace == "RULE rr2 removed=5 dk=1\nRULE rr1 anchor=3 removed=4 dk=0\n");
  CHECK(parse_graph(read(dir.file("out.txt"))).vertex_count() == 4);
}

TEST_CASE("generate") {
  TempDir dir;
  Run fen = run({"generate", "random-fen", "-o", dir.file("rf.txt"), "--n", "20", "--fen", "3", "--seed", "7"});
  CHECK(fen.code == 0);
  CHECK(has_line(fen.out, "seed 7"));
  const Graph rf = read_graph_file(dir.file("rf.txt"));
  CHECK(feedback_edge_number(rf) == 3);
  CHECK(rf.vertex_count() == 20);
  CHECK(format_graph(rf) == read(dir.file("rf.txt")));

  run({"generate", "cycle-leaves", "-o", dir.file("c.txt"), "--len", "6", "--leaves", "0"});
  CHECK(read_graph_file(dir.file("c.txt")) == cycle_graph(6));

  Run gad = run({"generate", "gadget", "-o", dir.file("gad.txt"), "--k", "2", "--m", "1", "--tiles", "1",
                 "--planted", "yes"});
  CHECK(gad.code == 0);
  CHECK(has_line(gad.out, "expected_k 8"));
  CHECK(read(dir.file("gad.txt.registry")).starts_with("alpha -> 0\n"));
  CHECK(read_vertex_list_file(dir.file("gad.txt.solution")).size() == 8);
  CHECK(read_graph_file(dir.file("gad.txt")).vertex_count() == 1100);

  Run grid = run({"generate", "grid-tiling", "-o", dir.file("gt.txt"), "--k", "2", "--m", "2", "--tiles", "2",
                  "--planted", "no", "--seed", "3"});
  CHECK(grid.code == 0);
  CHECK(has_line(grid.out, "has_tiling no"));
  CHECK(read_grid_tiling_file(dir.file("gt.txt")).n() == 2);

  Run from_file = run({"generate", "gadget", "-o", dir.file("g2.txt"), "--instance", dir.file("gt.txt")});
  CHECK(from_file.code == 0);
  CHECK(has_line(from_file.out, "has_tiling no"));

  CHECK(run({"generate", "gadget", "-o", dir.file("x.txt"), "--k", "3"}).code == cli::kError);
  CHECK(run({"generate", "random-fen", "-o", dir.file("x.txt"), "--n", "3", "--fen", "9"}).code == cli::kError);
}

TEST_CASE("deterministic reports repeat byte for byte") {
  TempDir dir;
  run({"generate", "random-fen", "-o", dir.file("a.txt"), "--n", "18", "--fen", "4", "--seed", "11"});
  run({"generate", "random-fen", "-o", dir.file("b.txt"), "--n", "18", "--fen", "4", "--seed", "11"});
  CHECK(read(dir.file("a.txt")) == read(dir.file("b.txt")));
  Run first = run({"solve", dir.file("a.txt"), "--deterministic"});
  Run second = run({"solve", dir.file("b.txt"), "--deterministic"});
  CHECK(first.out == second.out);
  Run threaded = run({"solve", dir.file("a.txt"), "--threads", "4", "--deterministic"});
  CHECK(threaded.out == first.out);
}

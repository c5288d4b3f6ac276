#include "geodetic/grid_tiling.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "geodetic/graph.hpp"
#include "geodetic/oracle.hpp"

namespace geodetic {

GridTilingInstance::GridTilingInstance(int k, int m, int n, std::vector<std::vector<Tile>> sets)
    : k_(k), m_(m), n_(n), sets_(std::move(sets)) {
  if (k < 2 || k % 2 != 0) throw InputError("grid tiling: k must be even and at least 2");
  if (m < 1) throw InputError("grid tiling: m must be positive");
  if (n < 1) throw InputError("grid tiling: n must be positive");
  if (sets_.size() != static_cast<std::size_t>(k) * k)
    throw InputError("grid tiling: expected k*k tile sets");
  for (const auto& s : sets_) {
    if (static_cast<int>(s.size()) != n) throw InputError("grid tiling: tile set size differs from n");
    std::set<Tile> seen;
    for (const Tile& t : s) {
      if (t.x < 1 || t.x > m || t.y < 1 || t.y > m)
        throw InputError("grid tiling: tile coordinate outside [m]");
      if (!seen.insert(t).second) throw InputError("grid tiling: repeated tile in a set");
    }
  }
}

std::size_t GridTilingInstance::index(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > k_) throw InputError("grid tiling: cell index out of range");
  return static_cast<std::size_t>(i - 1) * k_ + (j - 1);
}

bool is_valid_tiling(const GridTilingInstance& inst, const TilingChoice& choice) {
  const int k = inst.k();
  if (choice.size() != static_cast<std::size_t>(k) * k) return false;
  for (std::size_t c = 0; c < choice.size(); ++c)
    if (choice[c] < 0 || choice[c] >= inst.n()) return false;
  auto tile = [&](int i, int j) { return inst.set(i, j)[choice[inst.index(i, j)]]; };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (tile(i, j).x != tile(i, inst.next(j)).x) return false;
      if (tile(i, j).y != tile(inst.next(i), j).y) return false;
    }
  return true;
}

GridTilingInstance read_grid_tiling(std::istream& in) {
  std::string line;
  std::vector<std::vector<long long>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t\r")] == '#') continue;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream ss(line);
    std::vector<long long> ints;
    long long v;
    while (ss >> v) ints.push_back(v);
    if (!ss.eof()) throw InputError("grid tiling: non-integer token");
    rows.push_back(std::move(ints));
  }
  if (rows.empty() || rows[0].size() != 3) throw InputError("grid tiling: header must be `k m n`");
  const int k = static_cast<int>(rows[0][0]);
  const int m = static_cast<int>(rows[0][1]);
  const int n = static_cast<int>(rows[0][2]);
  if (k < 1 || n < 1) throw InputError("grid tiling: bad header");
  if (rows.size() != static_cast<std::size_t>(k) * k + 1)
    throw InputError("grid tiling: expected k*k tile-set lines");
  std::vector<std::vector<Tile>> sets;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<std::size_t>(2 * n))
      throw InputError("grid tiling: line " + std::to_string(r + 1) + " does not hold n pairs");
    std::vector<Tile> s;
    for (int t = 0; t < n; ++t)
      s.push_back({static_cast<int>(rows[r][2 * t]), static_cast<int>(rows[r][2 * t + 1])});
    sets.push_back(std::move(s));
  }
  return GridTilingInstance(k, m, n, std::move(sets));
}

GridTilingInstance read_grid_tiling_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_grid_tiling(in);
}

void write_grid_tiling(std::ostream& out, const GridTilingInstance& inst) {
  out << inst.k() << ' ' << inst.m() << ' ' << inst.n() << '\n';
  for (const auto& s : inst.sets()) {
    for (std::size_t t = 0; t < s.size(); ++t) out << (t ? " " : "") << s[t].x << ',' << s[t].y;
    out << '\n';
  }
}

std::string format_grid_tiling(const GridTilingInstance& inst) {
  std::ostringstream out;
  write_grid_tiling(out, inst);
  return out.str();
}

namespace {

// Pads `fixed` (may be empty) with distinct random tiles up to size n, then
// shuffles; returns the position of `fixed` or -1.
std::vector<Tile> random_tile_set(int m, int n, const std::optional<Tile>& fixed, std::mt19937_64& rng,
                                  int* fixed_pos) {
  if (n > m * m) throw InputError("grid tiling: n exceeds m*m");
  std::vector<Tile> all;
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      if (!fixed || Tile{x, y} != *fixed) all.push_back({x, y});
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Tile> s;
  if (fixed) s.push_back(*fixed);
  for (const Tile& t : all) {
    if (static_cast<int>(s.size()) == n) break;
    s.push_back(t);
  }
  std::shuffle(s.begin(), s.end(), rng);
  if (fixed_pos) {
    *fixed_pos = -1;
    if (fixed)
      for (std::size_t p = 0; p < s.size(); ++p)
        if (s[p] == *fixed) *fixed_pos = static_cast<int>(p);
  }
  return s;
}

}  // namespace

GridTilingInstance random_planted_instance(int k, int m, int n, std::uint64_t seed,
                                           TilingChoice* planted) {
  if (k < 2 || k % 2 != 0) throw InputError("grid tiling: k must be even and at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(1, m);
  // A consistent tiling has one x per row and one y per column.
  std::vector<int> row_x(static_cast<std::size_t>(k)), col_y(static_cast<std::size_t>(k));
  for (auto& x : row_x) x = coord(rng);
  for (auto& y : col_y) y = coord(rng);
  std::vector<std::vector<Tile>> sets;
  TilingChoice choice;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      int pos = -1;
      sets.push_back(random_tile_set(m, n, Tile{row_x[i - 1], col_y[j - 1]}, rng, &pos));
      choice.push_back(pos);
    }
  if (planted) *planted = choice;
  return GridTilingInstance(k, m, n, std::move(sets));
}

std::optional<GridTilingInstance> random_no_instance(int k, int m, int n, std::uint64_t seed,
                                                     int attempts) {
  if (k < 2 || k % 2 != 0) throw InputError("grid tiling: k must be even and at least 2");
  std::mt19937_64 rng(seed);
  for (int a = 0; a < attempts; ++a) {
    std::vector<std::vector<Tile>> sets;
    for (int c = 0; c < k * k; ++c) sets.push_back(random_tile_set(m, n, std::nullopt, rng, nullptr));
    GridTilingInstance inst(k, m, n, std::move(sets));
    if (!grid_tiling_brute(inst)) return inst;
  }
  return std::nullopt;
}

}  // namespace geodetic

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geodetic {

struct Tile {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

/// Grid Tiling instance: k*k tile sets, each a set of exactly n tiles from
/// [m] x [m]. Cells are addressed with 1-based (i, j) like the problem
/// statement; storage is row-major.
class GridTilingInstance {
 public:
  GridTilingInstance() = default;
  /// Validates: k even and >= 2, every set has n distinct tiles in [m]x[m].
  GridTilingInstance(int k, int m, int n, std::vector<std::vector<Tile>> sets);

  int k() const { return k_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Tile>& set(int i, int j) const { return sets_[index(i, j)]; }
  const std::vector<std::vector<Tile>>& sets() const { return sets_; }

  /// Successor index with wrap-around: j' = (j + 1) mod k in [k].
  int next(int index) const { return index % k_ + 1; }

  std::size_t index(int i, int j) const;

  friend bool operator==(const GridTilingInstance&, const GridTilingInstance&) = default;

 private:
  int k_ = 0, m_ = 0, n_ = 0;
  std::vector<std::vector<Tile>> sets_;
};

/// Chosen tile index (into the cell's tile list) per cell, row-major.
using TilingChoice = std::vector<int>;

/// True iff the choice picks matching x along rows and matching y along
/// columns, with wrap-around.
bool is_valid_tiling(const GridTilingInstance& inst, const TilingChoice& choice);

// Text format: line 1 `k m n`, then k*k lines in row-major (i, j) order, each
// holding n pairs `x,y` separated by spaces.
GridTilingInstance read_grid_tiling(std::istream& in);
GridTilingInstance read_grid_tiling_file(const std::string& path);
void write_grid_tiling(std::ostream& out, const GridTilingInstance& inst);
std::string format_grid_tiling(const GridTilingInstance& inst);

/// Random instance with a planted consistent tiling (returned through `planted`).
GridTilingInstance random_planted_instance(int k, int m, int n, std::uint64_t seed,
                                           TilingChoice* planted = nullptr);

/// Random instance without any valid tiling, rejection-sampled against the
/// brute-force solver. Returns nullopt when `attempts` samples all had a tiling.
std::optional<GridTilingInstance> random_no_instance(int k, int m, int n, std::uint64_t seed,
                                                     int attempts = 1000);

}  // namespace geodetic

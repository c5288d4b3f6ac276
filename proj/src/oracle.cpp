#include "geodetic/oracle.hpp"

#include <algorithm>

#include "geodetic/geodesic.hpp"

namespace geodetic {

namespace {

// Flat table of pairwise intervals, one bitset of `words` words per ordered pair.
class IntervalTable {
 public:
  explicit IntervalTable(const Graph& g) : n_(g.vertex_count()), words_((n_ + 63) / 64) {
    DistanceOracle dist(g);
    bits_.assign(static_cast<std::size_t>(n_) * n_ * words_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u; v < n_; ++v) {
        VertexSet s = interval(dist, u, v);
        std::copy(s.words().begin(), s.words().end(), at(u, v));
        std::copy(s.words().begin(), s.words().end(), at(v, u));
      }
  }

  int words() const { return words_; }
  const std::uint64_t* get(Vertex u, Vertex v) const {
    return bits_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
  }

 private:
  std::uint64_t* at(Vertex u, Vertex v) {
    return bits_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, const BruteOptions& options, std::vector<Vertex> forced,
               std::vector<Vertex> free)
      : n_(g.vertex_count()),
        table_(g),
        options_(options),
        forced_(std::move(forced)),
        free_(std::move(free)) {
    full_.assign(static_cast<std::size_t>(table_.words()), 0);
    for (Vertex v = 0; v < n_; ++v) full_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  BruteResult run() {
    BruteResult result;
    const int w = table_.words();
    std::vector<std::uint64_t> base(static_cast<std::size_t>(w), 0);
    for (std::size_t a = 0; a < forced_.size(); ++a)
      for (std::size_t b = a; b < forced_.size(); ++b) or_into(base.data(), forced_[a], forced_[b]);

    const int forced_count = static_cast<int>(forced_.size());
    const int max_extra = static_cast<int>(free_.size());
    for (int extra = 0; extra <= max_extra; ++extra) {
      if (options_.upper && forced_count + extra > *options_.upper) {
        result.status = BruteStatus::ExceedsUpper;
        result.nodes = nodes_;
        return result;
      }
      chosen_.clear();
      target_ = extra;
      layers_.assign(static_cast<std::size_t>(extra + 1) * w, 0);
      std::copy(base.begin(), base.end(), layers_.begin());
      bool found = false;
      try {
        found = descend(0, 0);
      } catch (const BudgetHit&) {
        result.status = BruteStatus::BudgetExhausted;
        result.nodes = nodes_;
        return result;
      }
      if (found) {
        result.status = BruteStatus::Optimal;
        result.size = forced_count + extra;
        result.witness = VertexSet(n_);
        for (Vertex v : forced_) result.witness.insert(v);
        for (Vertex v : chosen_) result.witness.insert(v);
        result.nodes = nodes_;
        return result;
      }
    }
    // Unreachable for connected graphs: V(G) itself is geodetic.
    throw ContractViolation("no geodetic set found");
  }

 private:
  struct BudgetHit {};

  void or_into(std::uint64_t* dst, Vertex u, Vertex v) const {
    const std::uint64_t* src = table_.get(u, v);
    for (int i = 0; i < table_.words(); ++i) dst[i] |= src[i];
  }

  bool covers_all(const std::uint64_t* bits) const {
    for (int i = 0; i < table_.words(); ++i)
      if (bits[i] != full_[i]) return false;
    return true;
  }

  // Picks free_[start..] for position `depth`; layer depth holds the closure of
  // forced + chosen_[0..depth).
  bool descend(int depth, std::size_t start) {
    const int w = table_.words();
    std::uint64_t* cur = layers_.data() + static_cast<std::size_t>(depth) * w;
    if (depth == target_) {
      if (++nodes_ > options_.node_budget) throw BudgetHit{};
      return covers_all(cur);
    }
    const std::size_t remaining = static_cast<std::size_t>(target_ - depth);
    for (std::size_t idx = start; idx + remaining <= free_.size(); ++idx) {
      const Vertex c = free_[idx];
      std::uint64_t* next = cur + w;
      std::copy(cur, cur + w, next);
      for (Vertex f : forced_) or_into(next, c, f);
      for (Vertex s : chosen_) or_into(next, c, s);
      or_into(next, c, c);
      chosen_.push_back(c);
      if (descend(depth + 1, idx + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  int n_;
  IntervalTable table_;
  const BruteOptions& options_;
  std::vector<Vertex> forced_;
  std::vector<Vertex> free_;
  std::vector<std::uint64_t> full_;
  std::vector<std::uint64_t> layers_;
  std::vector<Vertex> chosen_;
  int target_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BruteResult min_geodetic_brute(const Graph& g, const BruteOptions& options) {
  if (!is_connected(g)) throw DisconnectedError("min_geodetic_brute requires a connected graph");
  std::vector<Vertex> forced, free;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (options.force_leaves && g.degree(v) == 1)
      forced.push_back(v);
    else
      free.push_back(v);
  }
  SubsetSearch search(g, options, std::move(forced), std::move(free));
  return search.run();
}

std::optional<TilingChoice> grid_tiling_brute(const GridTilingInstance& inst) {
  const int k = inst.k();
  const std::size_t cells = static_cast<std::size_t>(k) * k;
  TilingChoice choice(cells, -1);

  // Cells are filled row-major; a cell is checked against its already fixed
  // left and upper neighbours, and the wrap-around partners once they exist.
  auto consistent = [&](int i, int j) {
    const Tile& t = inst.set(i, j)[choice[inst.index(i, j)]];
    auto check_left = [&](int li, int lj) {
      int c = choice[inst.index(li, lj)];
      return c < 0 || inst.set(li, lj)[c].x == t.x;
    };
    auto check_up = [&](int ui, int uj) {
      int c = choice[inst.index(ui, uj)];
      return c < 0 || inst.set(ui, uj)[c].y == t.y;
    };
    int left_j = j == 1 ? k : j - 1;
    int up_i = i == 1 ? k : i - 1;
    return check_left(i, left_j) && check_left(i, inst.next(j)) && check_up(up_i, j) &&
           check_up(inst.next(i), j);
  };

  auto recurse = [&](auto&& self, std::size_t cell) -> bool {
    if (cell == cells) return true;
    const int i = static_cast<int>(cell / k) + 1;
    const int j = static_cast<int>(cell % k) + 1;
    for (int c = 0; c < inst.n(); ++c) {
      choice[cell] = c;
      if (consistent(i, j) && self(self, cell + 1)) return true;
    }
    choice[cell] = -1;
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return choice;
}

}  // namespace geodetic

#pragma once

// Slow reference implementations used only by tests. None of them call into
// the BFS, interval or brute-force code of the library.

#include <algorithm>
#include <climits>
#include <functional>
#include <vector>

#include "geodetic/graph.hpp"
#include "geodetic/ilp.hpp"

namespace geodetic::testing {

inline constexpr int kInf = INT_MAX / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (d[a][m] + d[m][b] < d[a][b]) d[a][b] = d[a][m] + d[m][b];
  return d;
}

// Vertices on some shortest u-v path, found by enumerating simple paths.
inline std::vector<char> interval_by_paths(const Graph& g, int u, int v) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> paths;
  std::vector<int> cur{u};
  std::vector<char> used(n, 0);
  used[u] = 1;
  std::function<void(int)> walk = [&](int x) {
    if (x == v) {
      paths.push_back(cur);
      return;
    }
    for (int w : g.neighbors(x))
      if (!used[w]) {
        used[w] = 1;
        cur.push_back(w);
        walk(w);
        cur.pop_back();
        used[w] = 0;
      }
  };
  walk(u);
  std::vector<char> in(n, 0);
  std::size_t best = SIZE_MAX;
  for (const auto& p : paths) best = std::min(best, p.size());
  for (const auto& p : paths)
    if (p.size() == best)
      for (int x : p) in[x] = 1;
  return in;
}

// Minimum geodetic set size over all subsets, straight from the definition.
inline int min_geodetic_plain(const Graph& g) {
  const int n = g.vertex_count();
  auto d = floyd_warshall(g);
  int best = n;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool all = true;
    for (int w = 0; w < n && all; ++w) {
      bool hit = false;
      for (int a = 0; a < n && !hit; ++a) {
        if (!(mask >> a & 1)) continue;
        for (int b = a; b < n && !hit; ++b)
          if ((mask >> b & 1) && d[a][w] + d[w][b] == d[a][b]) hit = true;
      }
      all = hit;
    }
    if (all) best = size;
  }
  return best;
}

// Every assignment inside the bounds; returns whether one satisfies the model.
inline bool ilp_feasible_by_enumeration(const IlpModel& model) {
  const auto& vars = model.variables();
  std::vector<long long> x(vars.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) return model.satisfied_by(x);
    for (long long v = vars[i].lower; v <= vars[i].upper; ++v) {
      x[i] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace geodetic::testing

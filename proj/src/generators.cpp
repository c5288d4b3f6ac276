#include "geodetic/generators.hpp"

#include <algorithm>
#include <set>

namespace geodetic {

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random tree needs at least one vertex");
  if (n == 1) return Graph(1);
  if (n == 2) {
    std::vector<Edge> e{{0, 1}};
    return Graph::from_edges(2, e);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (int& p : prufer) p = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int p : prufer) ++degree[p];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (int p : prufer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
    if (--degree[p] == 1) leaves.insert(p);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph random_fen_graph(int n, int fen, std::uint64_t seed) {
  if (fen < 0) throw InputError("fen must be non-negative");
  const long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
  if (fen > max_extra) throw InputError("fen too large for n");
  std::mt19937_64 rng(seed);
  Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  std::set<Edge> present(edges.begin(), edges.end());
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(edges.size()) < n - 1 + fen) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    Edge e{std::min(u, v), std::max(u, v)};
    if (present.insert(e).second) edges.push_back(e);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_with_leaves(int length, int leaves, std::uint64_t seed) {
  if (length < 3) throw InputError("cycle length must be at least 3");
  if (leaves < 0 || leaves > length) throw InputError("leaf count must be in [0, length]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 0; v < length; ++v) edges.emplace_back(std::min(v, (v + 1) % length), std::max(v, (v + 1) % length));
  std::vector<int> spots(static_cast<std::size_t>(length));
  for (int v = 0; v < length; ++v) spots[v] = v;
  std::shuffle(spots.begin(), spots.end(), rng);
  for (int t = 0; t < leaves; ++t) edges.emplace_back(spots[t], length + t);
  return Graph::from_edges(length + leaves, edges);
}

Graph random_subdivided_graph(const SubdividedParams& p, std::uint64_t seed) {
  if (p.branch < 1 || p.edges < p.branch - 1 || p.max_length < 1)
    throw InputError("invalid subdivided-graph parameters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, p.branch - 1);
  std::uniform_int_distribution<int> length(1, p.max_length);
  std::bernoulli_distribution leaf(p.leaf_chance);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> core;
    for (int v = 1; v < p.branch; ++v) {
      std::uniform_int_distribution<int> parent(0, v - 1);
      core.emplace_back(parent(rng), v);
    }
    while (static_cast<int>(core.size()) < p.edges) {
      int u = pick(rng), v = pick(rng);
      core.emplace_back(std::min(u, v), std::max(u, v));
    }
    int n = p.branch;
    std::vector<Edge> edges;
    std::set<Edge> direct;
    for (const Edge& e : core) {
      int h = length(rng);
      if (e.first == e.second) h = std::max(h, 3);
      if (h == 1 && direct.count(e)) h = 2;
      if (h == 1) {
        direct.insert(e);
        edges.push_back(e);
        continue;
      }
      int prev = e.first;
      for (int s = 1; s < h; ++s) {
        edges.emplace_back(prev, n);
        prev = n++;
      }
      edges.emplace_back(std::min(prev, e.second), std::max(prev, e.second));
    }
    const int base = n;
    for (int v = 0; v < base; ++v)
      if (leaf(rng)) edges.emplace_back(v, n++);
    if (n > p.max_vertices) continue;
    return Graph::from_edges(n, edges);
  }
  throw InputError("could not sample a subdivided graph within the vertex limit");
}

}  // namespace geodetic

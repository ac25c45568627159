#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "locgame/graph.hpp"
#include "locgame/random.hpp"

// Vertex numbering for every family is fixed and part of the contract:
//   path(n)                 0-1-...-(n-1)
//   cycle(n)                path plus edge {0, n-1}
//   star(n)                 center 0, leaves 1..n-1
//   complete_bipartite(a,b) part A = 0..a-1, part B = a..a+b-1
//   ary_tree(r,h)           breadth-first; children of v are r*v+1 .. r*v+r
//   interval(I)             vertex i is interval I[i]
//   add_universal/isolated  new vertex is n
//   subdivide(g,s)          edge j (sorted, u<v) gets vertices n+j*s .. n+j*s+s-1, from u to v
namespace locgame::gen {

struct Interval {
  double lo;
  double hi;
};

inline void require_positive(int n, const char* family) {
  if (n <= 0) throw invalid_input(std::string(family) + ": vertex count must be positive");
}

inline Graph path(int n) {
  require_positive(n, "path");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw invalid_input("cycle: needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

inline Graph star(int n) {
  require_positive(n, "star");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

inline Graph complete(int n) {
  require_positive(n, "complete");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  require_positive(a, "complete_bipartite");
  require_positive(b, "complete_bipartite");
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) e.emplace_back(u, v);
  return Graph(a + b, e);
}

/// Uniform labeled tree via a random Prufer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
  require_positive(n, "random_tree");
  if (n == 1) return Graph(1, std::vector<Edge>{});
  if (n == 2) return path(2);
  Rng rng(seed);
  std::vector<Vertex> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<Vertex>(uniform_below(rng, n));
  std::vector<int> degree(n, 1);
  for (Vertex x : prufer) ++degree[x];
  std::vector<Edge> e;
  for (Vertex x : prufer) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    e.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  Vertex u = -1;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) u = v;
      else e.emplace_back(u, v);
    }
  return Graph(n, e);
}

/// Random spanning tree (as random_tree) plus every other pair independently with probability p.
inline Graph random_connected(int n, double p, std::uint64_t seed) {
  require_positive(n, "random_connected");
  if (!(p >= 0.0 && p <= 1.0)) throw invalid_input("random_connected: p outside [0,1]");
  Graph tree = random_tree(n, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> e = tree.edges();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      double x = uniform_unit(rng);
      if (!tree.adjacent(u, v) && x < p) e.emplace_back(u, v);
    }
  return Graph(n, e);
}

/// Intersection graph of closed intervals.
inline Graph interval(const std::vector<Interval>& intervals) {
  if (intervals.empty()) throw invalid_input("interval: no intervals");
  for (const auto& iv : intervals)
    if (!(iv.lo <= iv.hi)) throw invalid_input("interval: lo > hi");
  std::vector<Edge> e;
  const int n = static_cast<int>(intervals.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (intervals[u].lo <= intervals[v].hi && intervals[v].lo <= intervals[u].hi)
        e.emplace_back(u, v);
  return Graph(n, e);
}

/// Number of vertices of the complete r-ary tree of height h, or nullopt past `cap`.
inline std::optional<std::uint64_t> ary_tree_order(std::uint64_t arity, int height,
                                                   std::uint64_t cap) {
  std::uint64_t total = 1, level = 1;
  for (int i = 0; i < height; ++i) {
    if (level > cap / arity) return std::nullopt;
    level *= arity;
    total += level;
    if (total > cap) return std::nullopt;
  }
  return total;
}

inline constexpr std::uint64_t max_generated_order = 100'000'000;

inline Graph ary_tree(int arity, int height) {
  if (arity < 1 || height < 0) throw invalid_input("ary_tree: arity >= 1 and height >= 0 required");
  auto n = ary_tree_order(arity, height, max_generated_order);
  if (!n) throw invalid_input("ary_tree: more than 1e8 vertices");
  std::vector<Edge> e;
  e.reserve(*n - 1);
  for (std::uint64_t c = 1; c < *n; ++c)
    e.emplace_back(static_cast<Vertex>((c - 1) / arity), static_cast<Vertex>(c));
  return Graph(static_cast<int>(*n), e);
}

inline Graph add_universal(const Graph& g) {
  std::vector<Edge> e = g.edges();
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, n);
  return Graph(n + 1, e);
}

inline Graph add_isolated(const Graph& g) { return Graph(g.order() + 1, g.edges()); }

inline Graph subdivide(const Graph& g, int s) {
  if (s < 0) throw invalid_input("subdivide: negative subdivision count");
  const auto old = g.edges();
  const std::uint64_t total = std::uint64_t(g.order()) + std::uint64_t(s) * old.size();
  if (total > max_generated_order) throw invalid_input("subdivide: more than 1e8 vertices");
  std::vector<Edge> e;
  e.reserve(old.size() * (s + 1));
  Vertex next = g.order();
  for (auto [u, v] : old) {
    Vertex prev = u;
    for (int i = 0; i < s; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  return Graph(static_cast<int>(total), e);
}

}  // namespace locgame::gen

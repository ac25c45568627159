#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locgame/vertex_set.hpp"

namespace locgame {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Rejects loops, duplicate edges and
  /// out-of-range endpoints; edge orientation is irrelevant.
  Graph(int n, std::span<const Edge> edges) : adj_(check_order(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw invalid_input("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
      if (u == v) throw invalid_input("loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw invalid_input("duplicate edge");
    }
    edge_count_ = edges.size();
  }
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool connected() const {
    if (order() == 0) return true;
    std::vector<char> seen(order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == order();
  }

  /// Closed neighborhoods N[v] as bitmasks; only for graphs with <= 64 vertices.
  std::vector<VertexSet> closed_neighborhoods() const {
    require_small("closed_neighborhoods");
    std::vector<VertexSet> out(order());
    for (Vertex v = 0; v < order(); ++v) {
      out[v].insert(v);
      for (Vertex w : adj_[v]) out[v].insert(w);
    }
    return out;
  }

  void require_small(const char* what) const {
    if (order() > VertexSet::capacity)
      throw invalid_input(std::string(what) + ": graph has more than 64 vertices");
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static int check_order(int n) {
    if (n < 0) throw invalid_input("negative vertex count");
    return n;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// N[S] = union of closed neighborhoods of members of S.
inline VertexSet closed_neighborhood(std::span<const VertexSet> nbhd, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out |= nbhd[v];
  return out;
}

/// Hop distances between all pairs. Unreachable pairs have no value.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  explicit DistanceMatrix(const Graph& g) : n_(g.order()), d_(std::size_t(n_) * n_, unreachable_) {
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
      auto* row = &d_[std::size_t(s) * n_];
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        Vertex u = queue[head++];
        for (Vertex w : g.neighbors(u))
          if (row[w] == unreachable_) {
            row[w] = static_cast<std::uint16_t>(row[u] + 1);
            queue[tail++] = w;
          }
      }
    }
  }

  int order() const { return n_; }
  bool reachable(Vertex u, Vertex v) const { return raw(u, v) != unreachable_; }
  std::optional<int> operator()(Vertex u, Vertex v) const {
    if (!reachable(u, v)) return std::nullopt;
    return raw(u, v);
  }
  /// Distance for a pair known to be connected.
  int hops(Vertex u, Vertex v) const {
    if (!reachable(u, v)) throw invalid_input("vertices in different components");
    return raw(u, v);
  }

  /// Largest finite distance from v.
  int eccentricity(Vertex v) const {
    int e = 0;
    for (Vertex w = 0; w < n_; ++w)
      if (reachable(v, w)) e = std::max<int>(e, raw(v, w));
    return e;
  }

  /// Diameter of a connected graph; nullopt when disconnected.
  std::optional<int> diameter() const {
    int best = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) {
        if (!reachable(u, v)) return std::nullopt;
        best = std::max<int>(best, raw(u, v));
      }
    return best;
  }

  /// rings()[v][d] = vertices at distance exactly d from v (graphs <= 64 vertices).
  std::vector<std::vector<VertexSet>> rings() const {
    std::vector<std::vector<VertexSet>> out(n_);
    for (Vertex v = 0; v < n_; ++v) {
      out[v].resize(eccentricity(v) + 1);
      for (Vertex w = 0; w < n_; ++w)
        if (reachable(v, w)) out[v][raw(v, w)].insert(w);
    }
    return out;
  }

 private:
  static constexpr std::uint16_t unreachable_ = std::numeric_limits<std::uint16_t>::max();
  std::uint16_t raw(Vertex u, Vertex v) const { return d_[std::size_t(u) * n_ + v]; }

  int n_ = 0;
  std::vector<std::uint16_t> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

/// Induced subgraph check used by reduction tests: same adjacency on 0..n-1.
inline bool contains_induced_prefix(const Graph& big, const Graph& small) {
  if (big.order() < small.order()) return false;
  for (Vertex u = 0; u < small.order(); ++u)
    for (Vertex v = u + 1; v < small.order(); ++v)
      if (big.adjacent(u, v) != small.adjacent(u, v)) return false;
  return true;
}

}  // namespace locgame

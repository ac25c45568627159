#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "locgame/graph.hpp"

// Isomorph-free catalogues of small graphs. Canonical form: the
// lexicographically smallest upper-triangle adjacency code over all orderings
// reachable by individualisation-refinement; exact for n <= 11.
namespace locgame::catalogue {

inline constexpr int max_canonical_order = 11;

namespace detail {

using Coloring = std::vector<int>;

/// Colour refinement until stable. Colours are ranks of (colour, sorted
/// neighbour colours), so the result is invariant under relabelling.
inline Coloring refine(const std::vector<std::uint32_t>& adj, Coloring color) {
  const int n = static_cast<int>(adj.size());
  int classes = 1 + *std::max_element(color.begin(), color.end());
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::vector<int> nb;
      for (std::uint32_t r = adj[v]; r; r &= r - 1) nb.push_back(color[std::countr_zero(r)]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys[v] = {std::move(key), v};
    }
    std::vector<std::vector<int>> distinct;
    for (auto& [k, v] : keys) distinct.push_back(k);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Coloring next(n);
    for (auto& [k, v] : keys)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), k) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    color = std::move(next);
    if (now == classes) return color;
    classes = now;
  }
}

inline std::uint64_t code_for(const std::vector<std::uint32_t>& adj, const Coloring& color) {
  const int n = static_cast<int>(adj.size());
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[color[v]] = v;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | ((adj[at[i]] >> at[j]) & 1U);
  return code;
}

inline void search(const std::vector<std::uint32_t>& adj, const Coloring& color, std::uint64_t& best,
                   bool& found) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> cell_size(n, 0);
  for (int c : color) ++cell_size[c];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (cell_size[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::uint64_t code = code_for(adj, color);
    if (!found || code < best) best = code;
    found = true;
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    Coloring split(n);
    for (Vertex w = 0; w < n; ++w) split[w] = 2 * color[w] + (color[w] == target && w != v ? 1 : 0);
    search(adj, refine(adj, split), best, found);
  }
}

inline std::vector<std::uint32_t> bit_adjacency(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1U << w;
  return adj;
}

}  // namespace detail

/// Canonical adjacency code; isomorphic graphs of equal order get equal codes.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > max_canonical_order) throw invalid_input("canonical_code: more than 11 vertices");
  if (g.order() <= 1) return 0;
  auto adj = detail::bit_adjacency(g);
  std::uint64_t best = 0;
  bool found = false;
  detail::search(adj, detail::refine(adj, detail::Coloring(g.order(), 0)), best, found);
  return best;
}

inline Graph from_code(int n, std::uint64_t code) {
  std::vector<Edge> e;
  int bit = n * (n - 1) / 2 - 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, --bit)
      if ((code >> bit) & 1U) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph canonical_form(const Graph& g) { return from_code(g.order(), canonical_code(g)); }

/// All graphs on n vertices up to isomorphism (connected or not), in canonical form.
/// Built by attaching a new vertex to every subset of each (n-1)-vertex graph.
inline const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > 9) throw invalid_input("all_graphs: supported for 1 <= n <= 9");
  static std::map<int, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1, std::vector<Edge>{}));
  } else {
    std::set<std::uint64_t> codes;
    for (const Graph& base : all_graphs(n - 1)) {
      auto base_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        auto e = base_edges;
        for (Vertex v = 0; v < n - 1; ++v)
          if ((mask >> v) & 1U) e.emplace_back(v, n - 1);
        codes.insert(canonical_code(Graph(n, e)));
      }
    }
    for (auto c : codes) out.push_back(from_code(n, c));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (const auto& g : all_graphs(n))
    if (g.connected()) out.push_back(g);
  return out;
}

/// Connected graphs with min_n <= n <= max_n.
inline std::vector<Graph> connected_graphs(int min_n, int max_n) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace detail {

inline std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<Vertex> tree_centers(const Graph& t) {
  const int n = t.order();
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace detail

/// AHU code of a free tree: minimum rooted code over its centres.
inline std::string tree_code(const Graph& t) {
  std::string best;
  for (Vertex c : detail::tree_centers(t)) {
    auto s = detail::rooted_code(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// All trees on n vertices up to isomorphism, ordered by AHU code.
inline std::vector<Graph> trees(int n) {
  if (n < 1 || n > 16) throw invalid_input("trees: supported for 1 <= n <= 16");
  std::map<std::string, Graph> level{{"()", Graph(1, std::vector<Edge>{})}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        auto e = t.edges();
        e.emplace_back(v, m - 1);
        Graph g(m, e);
        next.emplace(tree_code(g), std::move(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : level) out.push_back(t);
  return out;
}

}  // namespace locgame::catalogue

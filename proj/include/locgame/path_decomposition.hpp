#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

/// Sequence of bags X_1..X_t. Each bag is kept sorted and duplicate-free.
struct PathDecomposition {
  std::vector<std::vector<Vertex>> bags;

  int width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return static_cast<int>(w) - 1;
  }

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

namespace detail {

inline bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

inline bool bag_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline void canonicalize_bags(PathDecomposition& pd) {
  for (auto& b : pd.bags) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
}

}  // namespace detail

/// Returns a description of the first violated condition, or nullopt if `pd`
/// is a path decomposition of `g`: every vertex and edge lies in some bag and
/// each vertex occupies a contiguous run of bags.
inline std::optional<std::string> decomposition_error(const Graph& g, const PathDecomposition& pd) {
  const int n = g.order();
  std::vector<int> first(n, -1), last(n, -1), count(n, 0);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    const auto& bag = pd.bags[i];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return "bag " + std::to_string(i) + " is not a sorted set";
    for (Vertex v : bag) {
      if (v < 0 || v >= n) return "bag " + std::to_string(i) + " has out-of-range vertex";
      if (first[v] < 0) first[v] = i;
      last[v] = i;
      ++count[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (first[v] < 0) return "vertex " + std::to_string(v) + " is in no bag";
    if (last[v] - first[v] + 1 != count[v])
      return "bags containing vertex " + std::to_string(v) + " are not contiguous";
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i = std::max(first[u], first[v]); i <= std::min(last[u], last[v]) && !covered; ++i)
      covered = detail::bag_contains(pd.bags[i], u) && detail::bag_contains(pd.bags[i], v);
    if (!covered) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
  }
  return std::nullopt;
}

inline bool is_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  return !decomposition_error(g, pd).has_value();
}

/// Normal form used by the pathwidth strategy: no bag is contained in an
/// adjacent bag, and every u in X_i \ X_{i+1} has a neighbour inside X_i.
inline bool is_normalized(const Graph& g, const PathDecomposition& pd) {
  const auto& b = pd.bags;
  const std::size_t t = b.size();
  for (std::size_t i = 0; i + 1 < t; ++i) {
    if (detail::bag_subset(b[i], b[i + 1])) return false;
    for (Vertex u : b[i]) {
      if (detail::bag_contains(b[i + 1], u)) continue;
      bool has_nbr = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                 [&](Vertex w) { return detail::bag_contains(b[i], w); });
      if (!has_nbr) return false;
    }
  }
  if (t >= 2 && detail::bag_subset(b[t - 1], b[t - 2])) return false;
  return t > 0;
}

/// Drops bags contained in a neighbouring bag and trims vertices that leave
/// a bag without having a neighbour in it. Width never increases.
inline PathDecomposition normalize_decomposition(const Graph& g, PathDecomposition pd) {
  detail::canonicalize_bags(pd);
  if (auto err = decomposition_error(g, pd))
    throw invalid_input("not a path decomposition: " + *err);
  auto& b = pd.bags;
  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(b, [](const auto& bag) { return bag.empty(); });
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      if (detail::bag_subset(b[i], b[i + 1])) {
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    if (changed) continue;
    if (b.size() >= 2 && detail::bag_subset(b.back(), b[b.size() - 2])) {
      b.pop_back();
      changed = true;
      continue;
    }
    for (std::size_t i = 0; i + 1 < b.size() && !changed; ++i) {
      for (Vertex u : b[i]) {
        if (detail::bag_contains(b[i + 1], u)) continue;
        bool has_nbr = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                   [&](Vertex w) { return detail::bag_contains(b[i], w); });
        // u must survive in an earlier bag, otherwise it would vanish.
        bool elsewhere = i > 0 && detail::bag_contains(b[i - 1], u);
        if (!has_nbr && elsewhere) {
          b[i].erase(std::find(b[i].begin(), b[i].end(), u));
          changed = true;
          break;
        }
      }
    }
  }
  return pd;
}

struct PathwidthResult {
  int width;
  PathDecomposition decomposition;
  std::vector<Vertex> layout;  // optimal vertex-separation ordering
};

/// Bags X_i = {v_i} plus the vertices of v_1..v_{i-1} that still have a
/// neighbour among v_i..v_n. Width equals the layout's vertex separation.
inline PathDecomposition decomposition_from_layout(const Graph& g, const std::vector<Vertex>& layout) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[layout[i]] = i;
  std::vector<int> last_nbr(n);
  for (Vertex v = 0; v < n; ++v) {
    last_nbr[v] = pos[v];
    for (Vertex w : g.neighbors(v)) last_nbr[v] = std::max(last_nbr[v], pos[w]);
  }
  PathDecomposition pd;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> bag{layout[i]};
    for (int j = 0; j < i; ++j)
      if (last_nbr[layout[j]] >= i) bag.push_back(layout[j]);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

/// Exact pathwidth through the vertex separation number, memoised over vertex
/// subsets: vs(S) = max(|boundary(S)|, min_{v in S} vs(S \ v)).
inline PathwidthResult pathwidth_exact(const Graph& g, int limit = 10) {
  const int n = g.order();
  if (n == 0) throw invalid_input("pathwidth_exact: empty graph");
  if (n > limit) throw invalid_input("pathwidth_exact: graph exceeds size limit " + std::to_string(limit));
  if (n > 26) throw invalid_input("pathwidth_exact: more than 26 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1U << w;
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  auto boundary = [&](std::uint32_t s) {
    int c = 0;
    for (std::uint32_t r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (nbr[v] & ~s) ++c;
    }
    return c;
  };
  std::vector<std::uint8_t> vs(std::size_t(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = n;
    for (std::uint32_t r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      best = std::min<int>(best, vs[s & ~(1U << v)]);
    }
    vs[s] = static_cast<std::uint8_t>(std::max(best, boundary(s)));
  }
  std::vector<Vertex> layout(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    for (std::uint32_t r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (std::max<int>(vs[s & ~(1U << v)], boundary(s)) == vs[s]) {
        layout[i] = v;
        s &= ~(1U << v);
        break;
      }
    }
  }
  PathDecomposition pd = decomposition_from_layout(g, layout);
  if (g.connected()) pd = normalize_decomposition(g, std::move(pd));
  return {vs[full], std::move(pd), std::move(layout)};
}

}  // namespace locgame

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "locgame/generators.hpp"
#include "locgame/localization.hpp"
#include "locgame/strategies.hpp"

namespace locgame {

/// L is locating iff the traces N[u] & L differ for all distinct u, v outside L.
inline bool is_locating_set(const Graph& g, VertexSet l) {
  const auto nb = g.closed_neighborhoods();
  std::unordered_set<std::uint64_t> traces;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (l.contains(v)) continue;
    if (!traces.insert((nb[v] & l).bits()).second) return false;
  }
  return true;
}

inline bool is_dominating_set(const Graph& g, VertexSet l) {
  return closed_neighborhood(g.closed_neighborhoods(), l) == VertexSet::all(g.order());
}

inline bool is_dominating_locating_set(const Graph& g, VertexSet l) {
  return is_dominating_set(g, l) && is_locating_set(g, l);
}

/// |V \ N[L]| <= 1; every locating set satisfies this.
inline bool sees_almost_all(const Graph& g, VertexSet l) {
  return (VertexSet::all(g.order()) - closed_neighborhood(g.closed_neighborhoods(), l)).size() <= 1;
}

struct MinSet {
  int size;
  std::vector<Vertex> witness;
};

inline constexpr int max_locating_order = 20;

namespace detail {

template <typename Pred>
MinSet min_subset(const Graph& g, Pred&& ok, const char* what) {
  if (g.order() > max_locating_order)
    throw invalid_input(std::string(what) + ": more than " + std::to_string(max_locating_order) + " vertices");
  const int n = g.order();
  for (int r = 0; r <= n; ++r) {
    std::optional<std::vector<Vertex>> hit;
    for_each_combination(n, r, [&](const std::vector<Vertex>& c) {
      if (ok(VertexSet::of(c))) hit = c;
      return !hit;
    });
    if (hit) return {r, *hit};
  }
  throw std::logic_error("V is always locating and dominating");
}

}  // namespace detail

/// Minimum locating set by ascending size; the witness is lexicographically least.
inline MinSet min_locating_set(const Graph& g) {
  return detail::min_subset(g, [&](VertexSet l) { return is_locating_set(g, l); }, "min_locating_set");
}

inline MinSet min_dominating_locating_set(const Graph& g) {
  return detail::min_subset(g, [&](VertexSet l) { return is_dominating_locating_set(g, l); },
                            "min_dominating_locating_set");
}

struct ReductionOutput {
  Graph graph;
  std::string construction;
  std::vector<std::pair<Vertex, std::string>> added;  // new vertex and its label
};

/// G plus an isolated vertex x (= n).
inline ReductionOutput reduce_add_isolated(const Graph& g) {
  return {gen::add_isolated(g), "isolated", {{g.order(), "x"}}};
}

/// G plus u (= n, universal), v (= n+1), w (= n+2) and the edge v-w.
inline ReductionOutput reduce_add_uvw(const Graph& g) {
  if (g.order() < 2) throw invalid_input("reduce_add_uvw: needs at least 2 vertices");
  const int n = g.order();
  const Vertex u = n, v = n + 1, w = n + 2;
  auto e = g.edges();
  for (Vertex x = 0; x < n; ++x) e.emplace_back(x, u);
  e.emplace_back(u, v);
  e.emplace_back(u, w);
  e.emplace_back(v, w);
  return {Graph(n + 3, e), "uvw", {{u, "u"}, {v, "v"}, {w, "w"}}};
}

/// G plus n+1 pairwise non-adjacent vertices x_1..x_{n+1} (= n..2n), each
/// adjacent to all of V(G). G must be connected with diameter <= 2 so that it
/// stays isometric in the output.
inline ReductionOutput reduce_multiuniversal(const Graph& g) {
  if (g.order() == 0 || !g.connected()) throw invalid_input("reduce_multiuniversal: graph must be connected");
  auto diam = DistanceMatrix(g).diameter();
  if (!diam || *diam > 2) throw invalid_input("reduce_multiuniversal: diameter must be at most 2");
  const int n = g.order();
  auto e = g.edges();
  ReductionOutput out{Graph(), "multiuniversal", {}};
  for (int i = 0; i <= n; ++i) {
    for (Vertex x = 0; x < n; ++x) e.emplace_back(x, n + i);
    out.added.emplace_back(n + i, "x_" + std::to_string(i + 1));
  }
  out.graph = Graph(2 * n + 1, e);
  return out;
}

/// lhs: value predicted from the input graph (offset included); rhs: value
/// measured on the constructed graph.
struct EquivalenceReport {
  std::string construction;
  int lhs = 0;
  int rhs = 0;
  std::vector<Vertex> witness_lhs;
  std::vector<Vertex> witness_rhs;
  bool equal() const { return lhs == rhs; }
  std::optional<bool> proof_strategy_verified;  // multiuniversal only
};

/// min dominating-locating(G) == min locating(G + isolated x).
inline EquivalenceReport verify_add_isolated(const Graph& g) {
  auto ld = min_dominating_locating_set(g);
  auto l = min_locating_set(reduce_add_isolated(g).graph);
  return {"isolated", ld.size, l.size, ld.witness, l.witness, std::nullopt};
}

/// min locating(G) + 1 == min locating(G + u, v, w).
inline EquivalenceReport verify_add_uvw(const Graph& g) {
  auto l = min_locating_set(g);
  auto l2 = min_locating_set(reduce_add_uvw(g).graph);
  return {"uvw", l.size + 1, l2.size, l.witness, l2.witness, std::nullopt};
}

/// Turn i probes C plus x_i (i = 1..n+1), with C a locating set of G and
/// the output numbering of reduce_multiuniversal.
inline Strategy multiuniversal_strategy(int n, std::vector<Vertex> locating) {
  Strategy s;
  s.name = "multiuniversal";
  s.k = static_cast<int>(locating.size()) + 1;
  s.claimed_turns = n + 1;
  s.next_probe = [n, locating](const History& h) {
    auto probe = locating;
    probe.push_back(n + static_cast<Vertex>(std::min<std::size_t>(h.size(), n)));
    return probe;
  };
  s.phase = [n](const History& h) { return std::uint64_t(std::min<std::size_t>(h.size(), n)); };
  return s;
}

/// zeta(G') == min locating(G) + 1 for G' = reduce_multiuniversal(G): the
/// locating set by brute force, zeta(G') by the exact solver. Also replays
/// the constructive (k+1)-cop strategy through the verifier.
inline EquivalenceReport verify_theorem_5_3(const Graph& g, SolverBudget budget = {}, int max_n = 4) {
  if (g.order() > max_n) throw invalid_input("verify_theorem_5_3: graph larger than " + std::to_string(max_n));
  auto red = reduce_multiuniversal(g);
  auto l = min_locating_set(g);
  auto z = localization_number(red.graph, red.graph.order(), budget);
  EquivalenceReport rep{"multiuniversal", l.size + 1, z.zeta.value_or(-1), l.witness, {}, std::nullopt};
  if (!z.strategy.empty()) rep.witness_rhs = z.strategy.front().probe;
  auto proof = verify_strategy(red.graph, multiuniversal_strategy(g.order(), l.witness), 2 * g.order() + 4);
  rep.proof_strategy_verified = proof.verified();
  return rep;
}

}  // namespace locgame

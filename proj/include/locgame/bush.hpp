#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "locgame/generators.hpp"
#include "locgame/localization.hpp"
#include "locgame/random.hpp"

// Bush cutting and the blind localization game.
//
// Both run on one deterministic single-player dynamics. A state is a vertex
// set S (bush, or the blind cops' belief). Cutting/probing B clears N[B]:
// cleared = S \ N[B]. The game ends when cleared is empty; otherwise the
// bush regrows (the robber moves) to N[cleared].
namespace locgame {

struct BushStep {
  VertexSet cleared;
  VertexSet regrown;
};

inline BushStep bush_step(VertexSet bush, std::span<const Vertex> cut, const Graph& g) {
  const auto nb = g.closed_neighborhoods();
  VertexSet hit;
  for (Vertex v : cut) hit |= nb[v];
  VertexSet cleared = bush - hit;
  return {cleared, closed_neighborhood(nb, cleared)};
}

using CutSchedule = std::vector<std::vector<Vertex>>;

struct BushSearch {
  std::optional<int> k;  // nullopt: no k <= max_k clears the bush
  CutSchedule schedule;
  std::size_t states = 0;
};

/// Shortest clearing schedule with k cutters, breadth-first over bush states
/// reachable from V. Cuts are sets of exactly min(k, n) vertices: a larger
/// cut never leaves more bush. Returns nullopt when the bush can never be cleared.
inline std::optional<CutSchedule> clearing_schedule(const Graph& g, int k, std::size_t max_states,
                                                    std::size_t* states_out = nullptr) {
  if (k < 1) throw invalid_input("need at least one cutter");
  g.require_small("bush search");
  const int n = g.order();
  const auto nb = g.closed_neighborhoods();
  struct Move {
    VertexSet hit;
    std::vector<Vertex> cut;
  };
  std::vector<Move> moves;
  {
    std::unordered_map<std::uint64_t, bool> seen_hits;
    for_each_combination(n, std::min(k, n), [&](const std::vector<Vertex>& c) {
      VertexSet hit;
      for (Vertex v : c) hit |= nb[v];
      if (seen_hits.emplace(hit.bits(), true).second) moves.push_back({hit, c});
      return true;
    });
    // A cut whose cleared area is strictly inside another's is dominated.
    std::vector<Move> kept;
    for (const auto& m : moves) {
      bool dominated = std::any_of(moves.begin(), moves.end(), [&](const Move& o) {
        return o.hit != m.hit && m.hit.subset_of(o.hit);
      });
      if (!dominated) kept.push_back(m);
    }
    moves = std::move(kept);
  }
  struct Parent {
    std::uint64_t prev;
    std::uint32_t move;
  };
  std::unordered_map<std::uint64_t, Parent> parent;
  std::vector<VertexSet> queue{VertexSet::all(n)};
  parent.emplace(queue[0].bits(), Parent{0, 0});
  auto rebuild = [&](VertexSet last, std::uint32_t final_move) {
    CutSchedule out{moves[final_move].cut};
    std::uint64_t cur = last.bits();
    while (cur != queue[0].bits()) {
      const auto& p = parent.at(cur);
      out.push_back(moves[p.move].cut);
      cur = p.prev;
    }
    std::reverse(out.begin(), out.end());
    return out;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexSet s = queue[head];
    for (std::uint32_t m = 0; m < moves.size(); ++m) {
      VertexSet cleared = s - moves[m].hit;
      if (cleared.empty()) {
        if (states_out) *states_out = parent.size();
        return rebuild(s, m);
      }
      VertexSet next = closed_neighborhood(nb, cleared);
      if (parent.try_emplace(next.bits(), Parent{s.bits(), m}).second) {
        if (parent.size() > max_states)
          throw budget_exceeded("bush search exceeds " + std::to_string(max_states) + " states");
        queue.push_back(next);
      }
    }
  }
  if (states_out) *states_out = parent.size();
  return std::nullopt;
}

inline BushSearch bush_number(const Graph& g, int max_k, std::size_t max_states = std::size_t{1} << 22) {
  if (g.order() == 0 || !g.connected()) throw invalid_input("bush_number: graph must be connected");
  BushSearch out;
  for (int k = 1; k <= max_k; ++k) {
    std::size_t states = 0;
    auto sched = clearing_schedule(g, k, max_states, &states);
    out.states += states;
    if (sched) {
      out.k = k;
      out.schedule = std::move(*sched);
      return out;
    }
  }
  return out;
}

/// The blind cops' belief obeys the bush dynamics exactly, so this shares the engine.
inline std::optional<int> blind_localization_number(const Graph& g, int max_k,
                                                     std::size_t max_states = std::size_t{1} << 22) {
  return bush_number(g, max_k, max_states).k;
}

/// Bush states before each cut, plus the final (empty) state.
inline std::vector<VertexSet> replay_schedule(const Graph& g, const CutSchedule& schedule) {
  std::vector<VertexSet> states{VertexSet::all(g.order())};
  for (const auto& cut : schedule) {
    auto st = bush_step(states.back(), cut, g);
    states.push_back(st.regrown);
    if (st.cleared.empty()) break;
  }
  return states;
}

struct Domination {
  int size;
  std::vector<Vertex> witness;
};

inline Domination domination_number(const Graph& g) {
  g.require_small("domination_number");
  const int n = g.order();
  const auto nb = g.closed_neighborhoods();
  for (int r = 0; r <= n; ++r) {
    std::optional<std::vector<Vertex>> hit;
    for_each_combination(n, r, [&](const std::vector<Vertex>& c) {
      VertexSet cov;
      for (Vertex v : c) cov |= nb[v];
      if (cov == VertexSet::all(n)) hit = c;
      return !hit;
    });
    if (hit) return {r, *hit};
  }
  throw std::logic_error("unreachable");
}

struct ChainReport {
  int bush = 0;
  int blind = 0;
  int universal_zeta = 0;
  bool holds() const { return bush <= blind && blind <= universal_zeta; }
};

/// B(G) <= zeta_b(G) <= zeta(G + universal vertex), each computed exactly.
inline ChainReport check_chain(const Graph& g, SolverBudget budget = {}, int max_n = 6) {
  if (g.order() > max_n) throw invalid_input("check_chain: graph larger than " + std::to_string(max_n));
  const int n = g.order();
  auto b = bush_number(g, n, budget.max_states);
  auto zb = blind_localization_number(g, n, budget.max_states);
  auto zu = localization_number(gen::add_universal(g), n + 1, budget);
  if (!b.k || !zb || !zu.zeta) throw std::logic_error("check_chain: a parameter exceeded n");
  return {*b.k, *zb, *zu.zeta};
}

/// Tree with a {0,1} vertex colouring; `regular` marks non-subdivision vertices.
struct ColoredTree {
  Graph tree;
  Vertex root = 0;
  std::vector<int> colors;
  std::vector<bool> regular;

  int regular_count() const { return static_cast<int>(std::count(regular.begin(), regular.end(), true)); }
};

struct TreeCounts {
  std::uint64_t regular;
  std::uint64_t total;
};

/// Vertex counts of the complete `arity`-ary tree of height `height` with
/// every edge subdivided `subdivisions` times, without building it.
inline TreeCounts subdivided_tree_counts(std::uint64_t arity, int height, int subdivisions) {
  auto reg = gen::ary_tree_order(arity, height, ~std::uint64_t{0} / 4);
  if (!reg) throw invalid_input("tree too large to count");
  return {*reg, *reg + std::uint64_t(subdivisions) * (*reg - 1)};
}

/// Regular vertices 0..R-1 in breadth-first order, then subdivision vertices
/// edge by edge. All colours start at 0.
inline ColoredTree build_T(int arity, int height, int subdivisions) {
  if (arity < 1 || height < 1 || subdivisions < 0) throw invalid_input("build_T: need arity>=1, height>=1, subdivisions>=0");
  auto counts = subdivided_tree_counts(arity, height, subdivisions);
  if (counts.total > gen::max_generated_order) throw invalid_input("build_T: more than 1e8 vertices");
  Graph t = gen::subdivide(gen::ary_tree(arity, height), subdivisions);
  ColoredTree out{std::move(t), 0, {}, {}};
  out.colors.assign(out.tree.order(), 0);
  out.regular.assign(out.tree.order(), false);
  std::fill(out.regular.begin(), out.regular.begin() + static_cast<std::ptrdiff_t>(counts.regular), true);
  return out;
}

using BicoloredMatching = std::vector<Edge>;

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && static_cast<int>(g.size()) == g.order() - 1 && g.connected();
}

/// Maximum matching using only edges whose endpoints differ in colour.
/// Tree DP: free[v] = best in subtree(v) with v unmatched, best[v] = best overall.
inline BicoloredMatching max_bicolored_matching(const ColoredTree& t) {
  const Graph& g = t.tree;
  if (!is_tree(g)) throw invalid_input("max_bicolored_matching: input is not a tree");
  if (static_cast<int>(t.colors.size()) != g.order()) throw invalid_input("coloring size mismatch");
  const int n = g.order();
  std::vector<Vertex> order, parent(n, -1);
  order.reserve(n);
  order.push_back(t.root);
  parent[t.root] = t.root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<int> free(n, 0), best(n, 0);
  std::vector<Vertex> partner(n, -1);  // child matched to v when best[v] uses it
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    for (Vertex c : g.neighbors(v))
      if (parent[c] == v) free[v] += best[c];
    best[v] = free[v];
    for (Vertex c : g.neighbors(v)) {
      if (parent[c] != v || t.colors[c] == t.colors[v]) continue;
      int with = free[v] - best[c] + free[c] + 1;
      if (with > best[v]) {
        best[v] = with;
        partner[v] = c;
      }
    }
  }
  BicoloredMatching m;
  // (vertex, may this vertex use its partner edge)
  std::vector<std::pair<Vertex, bool>> stack{{t.root, true}};
  while (!stack.empty()) {
    auto [v, can_match] = stack.back();
    stack.pop_back();
    Vertex p = can_match ? partner[v] : -1;
    if (p >= 0) m.emplace_back(std::min(v, p), std::max(v, p));
    for (Vertex c : g.neighbors(v))
      if (parent[c] == v) stack.push_back({c, c != p});
  }
  std::sort(m.begin(), m.end());
  return m;
}

/// Which vertex count of the complete (12k+1)-ary tree T_h^k enters the
/// lemma's colour-count hypothesis. The closed form given with the lemma,
/// (12k+1)^h + 1, and the true count ((12k+1)^{h+1} - 1) / (12k) differ for h >= 2.
enum class TreeCount { stated, actual };

inline const char* to_string(TreeCount c) { return c == TreeCount::stated ? "stated" : "actual"; }

inline std::int64_t lemma_tree_count(int k, int h, TreeCount which) {
  const std::int64_t r = 12LL * k + 1;
  std::int64_t p = 1;
  for (int i = 0; i < h; ++i) p *= r;
  return which == TreeCount::stated ? p + 1 : (p * r - 1) / (r - 1);
}

/// (n + h - 8k)/2 <= ones < (n + 6k - h)/2, evaluated in integers.
inline bool lemma_hypothesis(int k, int h, std::int64_t ones, TreeCount which) {
  const std::int64_t n = lemma_tree_count(k, h, which);
  return n + h - 8LL * k <= 2 * ones && 2 * ones < n + 6LL * k - h;
}

struct LemmaCheck {
  TreeCount count;
  bool hypothesis = false;
  BicoloredMatching matching;  // filled when the hypothesis holds
  int required = 0;
  bool holds() const { return !hypothesis || static_cast<int>(matching.size()) >= required; }
};

inline ColoredTree lemma_tree(int k, int h) {
  if (k < 1 || h < 1 || h > 6 * k) throw invalid_input("lemma tree: need k >= 1 and 1 <= h <= 6k");
  ColoredTree t{gen::ary_tree(12 * k + 1, h), 0, {}, {}};
  t.colors.assign(t.tree.order(), 0);
  t.regular.assign(t.tree.order(), true);
  return t;
}

/// Checks one colouring of the complete (12k+1)-ary tree of height h under one
/// count interpretation. A colouring violating the hypothesis is rejected.
inline LemmaCheck lemma_bimatching_check(int k, int h, const std::vector<int>& coloring, TreeCount which) {
  ColoredTree t = lemma_tree(k, h);
  if (static_cast<int>(coloring.size()) != t.tree.order())
    throw invalid_input("coloring must have one entry per tree vertex");
  const auto ones = std::count(coloring.begin(), coloring.end(), 1);
  LemmaCheck out{which, lemma_hypothesis(k, h, ones, which), {}, h};
  if (!out.hypothesis) throw invalid_input("colouring violates the lemma hypothesis");
  t.colors = coloring;
  out.matching = max_bicolored_matching(t);
  return out;
}

/// Uniformly random count of ones inside the hypothesis window, then a
/// uniformly random placement of that many ones.
inline std::vector<int> random_hypothesis_coloring(int k, int h, TreeCount which, Rng& rng) {
  const std::int64_t n = lemma_tree(k, h).tree.order();
  const std::int64_t m = lemma_tree_count(k, h, which);
  std::int64_t lo = std::max<std::int64_t>(0, (m + h - 8LL * k + 1) / 2);
  while (lo > 0 && lemma_hypothesis(k, h, lo - 1, which)) --lo;
  while (!lemma_hypothesis(k, h, lo, which)) ++lo;
  std::int64_t hi = lo;
  while (hi + 1 <= n && lemma_hypothesis(k, h, hi + 1, which)) ++hi;
  if (hi > n) throw invalid_input("hypothesis window lies outside [0, n]");
  const std::int64_t ones = lo + static_cast<std::int64_t>(uniform_below(rng, std::uint64_t(hi - lo + 1)));
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<int> col(n, 0);
  for (std::int64_t i = 0; i < ones; ++i) {
    auto j = i + static_cast<std::int64_t>(uniform_below(rng, std::uint64_t(n - i)));
    std::swap(idx[i], idx[j]);
    col[idx[i]] = 1;
  }
  return col;
}

struct ScalingRow {
  int arity = 0;
  int height = 0;
  int subdivisions = 2;
  int vertices = 0;
  int regular = 0;
  std::string status;  // "ok", "none" (no k in range), "budget"
  std::optional<int> bush;
  CutSchedule schedule;
  std::vector<int> clean_regular;  // m_t before each cut, then after the last
  std::size_t states = 0;
};

/// Bush numbers of small twice-subdivided complete trees with the number of
/// clean regular vertices along the optimal schedule.
inline std::vector<ScalingRow> bush_scaling_experiment(const std::vector<std::pair<int, int>>& params, int max_k,
                                                       std::size_t max_states, int subdivisions = 2) {
  std::vector<ScalingRow> rows;
  for (auto [arity, height] : params) {
    ColoredTree t = build_T(arity, height, subdivisions);
    ScalingRow row;
    row.arity = arity;
    row.height = height;
    row.subdivisions = subdivisions;
    row.vertices = t.tree.order();
    row.regular = t.regular_count();
    if (t.tree.order() > VertexSet::capacity) {
      row.status = "budget";
      rows.push_back(row);
      continue;
    }
    try {
      auto res = bush_number(t.tree, max_k, max_states);
      row.states = res.states;
      row.bush = res.k;
      row.status = res.k ? "ok" : "none";
      row.schedule = res.schedule;
      if (res.k) {
        VertexSet reg;
        for (Vertex v = 0; v < row.regular; ++v) reg.insert(v);
        for (VertexSet s : replay_schedule(t.tree, res.schedule))
          row.clean_regular.push_back(row.regular - (s & reg).size());
      }
    } catch (const budget_exceeded&) {
      row.status = "budget";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace locgame

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "locgame/generators.hpp"
#include "locgame/localization.hpp"
#include "locgame/path_decomposition.hpp"

namespace locgame {

struct Observation {
  std::vector<Vertex> probe;
  Signature signature;
};
using History = std::vector<Observation>;

/// A deterministic cop strategy: observation history -> next probe set.
///
/// `phase`, when present, must summarise everything the strategy remembers:
/// two histories with equal phase lead to the same future behaviour on equal
/// continuations. The verifier then treats a repeated (belief, phase) pair as
/// a cycle the robber can follow forever.
struct Strategy {
  std::string name;
  int k = 0;
  std::optional<int> claimed_turns;
  std::function<std::vector<Vertex>(const History&)> next_probe;
  std::function<std::uint64_t(const History&)> phase;
};

struct TraceStep {
  std::vector<Vertex> probe;
  VertexSet cls;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

enum class Verdict { verified, cycle, timeout };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::cycle: return "counterexample";
    case Verdict::timeout: return "counterexample";
  }
  return "?";
}

/// Outcome of playing a strategy against every robber behaviour.
/// `trace` is a counterexample line of play, or for a verified strategy one
/// of its longest lines. `turns` is the largest number of probes any line used.
struct VerificationReport {
  Verdict verdict = Verdict::verified;
  int turns = 0;
  std::uint64_t branches = 0;
  std::vector<TraceStep> trace;

  bool verified() const { return verdict == Verdict::verified; }
};

namespace detail {

class Verifier {
 public:
  Verifier(const Graph& g, const Strategy& s, int max_turns) : board_(g), s_(s), max_turns_(max_turns) {}

  VerificationReport run() {
    History h;
    auto r = visit(VertexSet::all(board_.order()), h);
    VerificationReport rep;
    rep.branches = branches_;
    if (r.fail) {
      rep.verdict = *r.fail;
      rep.turns = static_cast<int>(line_.size());
      rep.trace = line_;
    } else {
      rep.turns = r.turns;
      rep.trace = r.worst;
    }
    return rep;
  }

 private:
  struct Outcome {
    std::optional<Verdict> fail;
    int turns = 0;  // probes still needed from this node
    std::vector<TraceStep> worst;
  };

  std::vector<Vertex> checked_probe(const History& h) {
    auto probe = s_.next_probe(h);
    std::vector<Vertex> sorted = probe;
    std::sort(sorted.begin(), sorted.end());
    if (probe.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        static_cast<int>(probe.size()) > s_.k || sorted.front() < 0 || sorted.back() >= board_.order())
      throw invalid_input("strategy '" + s_.name + "' produced an illegal probe set");
    return probe;
  }

  Outcome visit(VertexSet belief, History& h) {
    const int turn = static_cast<int>(h.size()) + 1;
    if (turn > max_turns_) return {Verdict::timeout};
    std::optional<std::pair<std::uint64_t, std::uint64_t>> key;
    if (s_.phase) {
      key = std::pair{belief.bits(), s_.phase(h)};
      if (on_path_.count(*key)) return {Verdict::cycle};
      if (auto it = memo_.find(*key); it != memo_.end() && it->second.turns + turn - 1 <= max_turns_)
        return it->second;
      on_path_.insert(*key);
    }
    auto probe = checked_probe(h);
    Outcome out{std::nullopt, 1, {}};
    for (auto& cls : board_.partition(belief, probe)) {
      if (cls.members.size() < 2) continue;
      ++branches_;
      line_.push_back({probe, cls.members});
      h.push_back({probe, cls.signature});
      Outcome sub = visit(board_.closed_neighborhood(cls.members), h);
      h.pop_back();
      if (sub.fail) {
        if (key) on_path_.erase(*key);
        return sub;  // line_ keeps the failing line
      }
      line_.pop_back();
      if (sub.turns + 1 > out.turns) {
        out.turns = sub.turns + 1;
        out.worst.assign(1, {probe, cls.members});
        out.worst.insert(out.worst.end(), sub.worst.begin(), sub.worst.end());
      }
    }
    if (key) {
      on_path_.erase(*key);
      memo_.emplace(*key, out);
    }
    return out;
  }

  GameBoard board_;
  const Strategy& s_;
  int max_turns_;
  std::uint64_t branches_ = 0;
  std::vector<TraceStep> line_;
  std::set<std::pair<std::uint64_t, std::uint64_t>> on_path_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Outcome> memo_;
};

inline std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Two-colouring of a connected graph; part 0 holds vertex 0. Nullopt if not bipartite.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        stack.push_back(w);
      } else if (side[w] == side[u]) {
        return std::nullopt;
      }
    }
  }
  return side;
}

/// Probes all of `a` but its last vertex plus the (turn mod |b|)-th vertex of `b`.
inline Strategy a_minus_one_plus_rotating_b(std::string name, std::vector<Vertex> a_kept,
                                            std::vector<Vertex> b, int k) {
  Strategy s;
  s.name = std::move(name);
  s.k = k;
  s.claimed_turns = static_cast<int>(b.size());
  s.next_probe = [a_kept, b](const History& h) {
    auto probe = a_kept;
    probe.push_back(b[h.size() % b.size()]);
    return probe;
  };
  const auto period = b.size();
  s.phase = [period](const History& h) { return std::uint64_t(h.size() % period); };
  return s;
}

}  // namespace detail

/// Plays `s` against every robber behaviour: depth-first over all surviving
/// classes with the belief maintained by the engine.
inline VerificationReport verify_strategy(const Graph& g, const Strategy& s, int max_turns = 64) {
  if (g.order() == 0 || !g.connected()) throw invalid_input("verify_strategy: graph must be connected");
  detail::Verifier v(g, s, max_turns);
  return v.run();
}

/// Probes one end of a path, once.
inline Strategy path_strategy(const Graph& g) {
  const int n = g.order();
  bool is_path = n >= 1 && g.connected() && static_cast<int>(g.size()) == n - 1;
  for (Vertex v = 0; v < n && is_path; ++v) is_path = g.degree(v) <= 2;
  if (!is_path) throw invalid_input("path_strategy: graph is not a path");
  Vertex end = 0;
  while (g.degree(end) > 1) ++end;
  Strategy s{"path", 1, 1, [end](const History&) { return std::vector<Vertex>{end}; },
             [](const History&) { return std::uint64_t{0}; }};
  return s;
}

/// Probes the leaves one per turn in index order.
inline Strategy star_strategy(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !g.connected() || static_cast<int>(g.size()) != n - 1)
    throw invalid_input("star_strategy: graph is not a star");
  Vertex center = 0;
  if (n >= 3) {
    while (center < n && g.degree(center) != n - 1) ++center;
    if (center == n) throw invalid_input("star_strategy: graph is not a star");
  }
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (v != center) leaves.push_back(v);
  if (leaves.empty()) leaves.push_back(center);
  Strategy s;
  s.name = "star";
  s.k = 1;
  s.claimed_turns = std::max(1, static_cast<int>(leaves.size()) - 1);
  s.next_probe = [leaves](const History& h) { return std::vector<Vertex>{leaves[h.size() % leaves.size()]}; };
  s.phase = [m = leaves.size()](const History& h) { return std::uint64_t(h.size() % m); };
  return s;
}

/// Strategy for K_{a,b} in generator numbering (A = 0..a-1, B = a..a+b-1).
/// Each turn: the smaller part except its highest vertex, plus the next vertex
/// of the larger part in index order. `k` below min(a,b) probes only the first
/// k-1 vertices of the smaller part (a losing variant, for lower-bound checks).
inline Strategy complete_bipartite_strategy(int a, int b, std::optional<int> k = std::nullopt) {
  if (a < 1 || b < 1) throw invalid_input("complete_bipartite_strategy: parts must be nonempty");
  std::vector<Vertex> small, large;
  for (Vertex v = 0; v < a; ++v) (a <= b ? small : large).push_back(v);
  for (Vertex v = a; v < a + b; ++v) (a <= b ? large : small).push_back(v);
  const int team = k.value_or(static_cast<int>(small.size()));
  if (team < 1) throw invalid_input("complete_bipartite_strategy: k must be at least 1");
  std::vector<Vertex> kept(small.begin(), small.begin() + std::min<int>(team - 1, static_cast<int>(small.size()) - 1));
  return detail::a_minus_one_plus_rotating_b("complete_bipartite", kept, large, team);
}

/// Same shape on any connected bipartite graph: the parity of the answer from
/// the probed vertex of the larger part tells the cops which side the robber is on.
inline Strategy bipartite_parity_strategy(const Graph& g) {
  if (g.order() < 2 || !g.connected()) throw invalid_input("bipartite_parity_strategy: need a connected graph");
  auto side = detail::two_coloring(g);
  if (!side) throw invalid_input("bipartite_parity_strategy: graph is not bipartite");
  std::vector<Vertex> part[2];
  for (Vertex v = 0; v < g.order(); ++v) part[(*side)[v]].push_back(v);
  const auto& small = part[0].size() <= part[1].size() ? part[0] : part[1];
  const auto& large = part[0].size() <= part[1].size() ? part[1] : part[0];
  std::vector<Vertex> kept(small.begin(), small.end() - 1);
  return detail::a_minus_one_plus_rotating_b("bipartite_parity", kept, large, static_cast<int>(small.size()));
}

/// Turn i probes X_i minus v_i, where v_i is a neighbour inside X_i of the
/// lowest vertex u_i leaving after X_i; in the last bag v_t is the lowest
/// vertex not in X_{t-1}. Needs a normalised decomposition.
inline Strategy pathwidth_strategy(const Graph& g, const PathDecomposition& pd) {
  if (g.order() < 2 || !g.connected()) throw invalid_input("pathwidth_strategy: need a connected graph with n >= 2");
  if (auto err = decomposition_error(g, pd)) throw invalid_input("pathwidth_strategy: " + *err);
  if (!is_normalized(g, pd)) throw invalid_input("pathwidth_strategy: decomposition is not normalised");
  const auto& bags = pd.bags;
  const std::size_t t = bags.size();
  std::vector<std::vector<Vertex>> probes;
  for (std::size_t i = 0; i < t; ++i) {
    Vertex spared = -1;
    if (i + 1 < t) {
      Vertex u = -1;
      for (Vertex x : bags[i])
        if (!std::binary_search(bags[i + 1].begin(), bags[i + 1].end(), x)) {
          u = x;
          break;
        }
      for (Vertex w : g.neighbors(u))
        if (std::binary_search(bags[i].begin(), bags[i].end(), w)) {
          spared = w;
          break;
        }
    } else {
      for (Vertex x : bags[i])
        if (i == 0 || !std::binary_search(bags[i - 1].begin(), bags[i - 1].end(), x)) {
          spared = x;
          break;
        }
    }
    std::vector<Vertex> probe;
    for (Vertex x : bags[i])
      if (x != spared) probe.push_back(x);
    probes.push_back(std::move(probe));
  }
  Strategy s;
  s.name = "pathwidth";
  s.k = pd.width();
  s.claimed_turns = static_cast<int>(t);
  s.next_probe = [probes](const History& h) { return probes[std::min(h.size(), probes.size() - 1)]; };
  s.phase = [t](const History& h) { return std::uint64_t(std::min(h.size(), t - 1)); };
  return s;
}

/// Replays a solver table: the belief is rebuilt from the history and the
/// solver's optimal probe for it is played.
inline Strategy solver_strategy(std::shared_ptr<const LocalizationSolver> solver) {
  if (!solver->cop_wins()) throw invalid_input("solver_strategy: cops do not win with this k");
  Strategy s;
  s.name = "solver";
  s.k = solver->k();
  s.claimed_turns = solver->win_depth(solver->start());
  auto belief_of = [solver](const History& h) {
    const auto& board = solver->board();
    VertexSet belief = solver->start();
    for (const auto& obs : h) {
      VertexSet cls;
      for (Vertex v : belief) {
        bool match = true;
        for (std::size_t i = 0; i < obs.probe.size() && match; ++i)
          match = board.distances().hops(v, obs.probe[i]) == obs.signature[i];
        if (match) cls.insert(v);
      }
      belief = board.closed_neighborhood(cls);
    }
    return belief;
  };
  s.next_probe = [solver, belief_of](const History& h) {
    auto p = solver->best_probe(belief_of(h));
    if (!p) throw invalid_input("solver_strategy: history leaves the solved region");
    return *p;
  };
  s.phase = [](const History&) { return std::uint64_t{0}; };
  return s;
}

/// Always probes the same set. Handy as a baseline and for lower-bound checks.
inline Strategy fixed_probe_strategy(std::vector<Vertex> probe) {
  probe = detail::sorted_unique(std::move(probe));
  const int k = static_cast<int>(probe.size());
  return {"fixed", k, std::nullopt, [probe](const History&) { return probe; },
          [](const History&) { return std::uint64_t{0}; }};
}

}  // namespace locgame

#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <thread>
#include <unordered_map>
#include <vector>

#include "locgame/graph.hpp"
#include "locgame/vertex_set.hpp"

// Exact solver for the localization game.
//
// The cop's knowledge is a belief: the set of vertices the robber may occupy
// at the start of a cop turn (initially all of V). Probing B splits the belief
// into classes of equal distance vectors; a singleton class locates the
// robber, any other class C survives and becomes the belief N[C] after the
// robber's move.
//
// Probe sets are sets of exactly min(k, n) distinct vertices. Repeating a
// vertex repeats a distance column and adds nothing, and probing a superset
// only refines the partition, so this loses no cop strategy.
//
// Strategies are positional in the belief: the belief summarises the whole
// observation history, and against an adversarial robber nothing else matters.
namespace locgame {

using Signature = std::vector<int>;

struct SignatureClass {
  Signature signature;
  VertexSet members;
  friend bool operator==(const SignatureClass&, const SignatureClass&) = default;
};

/// Splits `belief` by distance vectors to `probe`. Classes come out ordered
/// lexicographically by signature.
inline std::vector<SignatureClass> partition_by_signature(VertexSet belief, std::span<const Vertex> probe,
                                                          const DistanceMatrix& d) {
  if (belief.empty()) throw invalid_input("partition_by_signature: empty belief");
  std::map<Signature, VertexSet> groups;
  for (Vertex v : belief) {
    Signature sig;
    sig.reserve(probe.size());
    for (Vertex b : probe) sig.push_back(d.hops(v, b));
    groups[sig].insert(v);
  }
  std::vector<SignatureClass> out;
  out.reserve(groups.size());
  for (auto& [sig, members] : groups) out.push_back({sig, members});
  return out;
}

/// Belief after the robber survives in class `cls`: the closed neighbourhood N[cls].
inline VertexSet belief_step(VertexSet belief, VertexSet cls, const Graph& g) {
  if (cls.size() < 2) throw invalid_input("belief_step: class of size < 2 means the robber was located");
  if (!cls.subset_of(belief)) throw invalid_input("belief_step: class is not inside the belief");
  VertexSet out;
  for (Vertex v : cls) {
    out.insert(v);
    for (Vertex w : g.neighbors(v)) out.insert(w);
  }
  return out;
}

/// Precomputed tables for fast partitioning on one graph.
class GameBoard {
 public:
  explicit GameBoard(const Graph& g)
      : graph_(g), dist_(g), rings_((g.require_small("GameBoard"), dist_.rings())),
        nbhd_(g.closed_neighborhoods()) {}

  const Graph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return dist_; }
  int order() const { return graph_.order(); }
  VertexSet closed_neighborhood(VertexSet s) const { return locgame::closed_neighborhood(nbhd_, s); }
  VertexSet closed_neighborhood(Vertex v) const { return nbhd_[v]; }

  /// Calls fn(members) per class in signature order. Classes are produced by
  /// refining the belief with the distance rings of each probe in turn.
  template <typename Fn>
  void for_each_class(VertexSet belief, std::span<const Vertex> probe, Fn&& fn) const {
    thread_local std::vector<VertexSet> cur, next;
    cur.assign(1, belief);
    for (Vertex b : probe) {
      next.clear();
      const auto& ring = rings_[b];
      for (VertexSet c : cur) {
        if (c.size() == 1) {
          next.push_back(c);
          continue;
        }
        for (VertexSet r : ring) {
          VertexSet x = c & r;
          if (!x.empty()) next.push_back(x);
        }
      }
      std::swap(cur, next);
    }
    for (VertexSet c : cur) fn(c);
  }

  std::vector<SignatureClass> partition(VertexSet belief, std::span<const Vertex> probe) const {
    std::vector<SignatureClass> out;
    for_each_class(belief, probe, [&](VertexSet c) {
      Signature sig;
      for (Vertex b : probe) sig.push_back(dist_.hops(c.first(), b));
      out.push_back({std::move(sig), c});
    });
    return out;
  }

 private:
  Graph graph_;
  DistanceMatrix dist_;
  std::vector<std::vector<VertexSet>> rings_;
  std::vector<VertexSet> nbhd_;
};

struct SolverBudget {
  std::size_t max_states = std::size_t{1} << 22;
  std::uint64_t max_partitions = 1'000'000'000;
  unsigned threads = 1;
};

struct StrategyEntry {
  VertexSet belief;
  std::vector<Vertex> probe;
  friend bool operator==(const StrategyEntry&, const StrategyEntry&) = default;
};

struct SolveResult {
  std::optional<int> zeta;  // nullopt: exceeds max_k
  int turns = 0;
  std::vector<StrategyEntry> strategy;
  std::size_t states = 0;
  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// Solves the game for a fixed team size k.
///
/// Forward pass: every belief reachable from the start belief under every
/// probe set, expanded breadth-first (optionally in parallel, merged in a
/// fixed order). Backward pass: win depths as a least fixed point; depth 1
/// means some probe locates the robber outright, depth t means some probe
/// sends every surviving class to beliefs of depth < t. Unlabelled beliefs
/// are robber wins once the iteration is complete.
class LocalizationSolver {
 public:
  LocalizationSolver(const Graph& g, int k, SolverBudget budget = {}, bool full_fixed_point = false,
                     std::optional<VertexSet> start = std::nullopt)
      : board_(std::make_shared<GameBoard>(check_input(g, k))), k_(k), budget_(budget) {
    const int n = g.order();
    start_ = start.value_or(VertexSet::all(n));
    if (start_.empty() || !start_.subset_of(VertexSet::all(n)))
      throw invalid_input("LocalizationSolver: start belief must be a nonempty vertex set");
    for_each_combination(n, std::min(k, n), [&](const std::vector<Vertex>& c) {
      probes_.push_back(c);
      return true;
    });
    expand();
    label(full_fixed_point);
  }

  int k() const { return k_; }
  const GameBoard& board() const { return *board_; }
  std::shared_ptr<const GameBoard> shared_board() const { return board_; }
  std::size_t states() const { return beliefs_.size(); }
  std::uint64_t partitions() const { return partitions_; }
  bool complete() const { return complete_; }
  VertexSet start() const { return start_; }

  bool cop_wins() const { return depth_[0] > 0; }

  bool knows(VertexSet belief) const { return index_.count(belief.bits()) > 0; }

  /// Turns the cops need from `belief` under optimal play; nullopt if the
  /// belief is losing (or, before the fixed point is complete, not yet labelled).
  std::optional<int> win_depth(VertexSet belief) const {
    auto it = index_.find(belief.bits());
    if (it == index_.end() || depth_[it->second] == 0) return std::nullopt;
    return depth_[it->second];
  }

  /// Lexicographically first probe set achieving the optimal depth.
  std::optional<std::vector<Vertex>> best_probe(VertexSet belief) const {
    auto it = index_.find(belief.bits());
    if (it == index_.end() || depth_[it->second] == 0) return std::nullopt;
    return probes_[best_probe_index(it->second)];
  }

  /// Belief-to-probe map restricted to beliefs reachable from the start
  /// belief when the cops follow it, in breadth-first discovery order.
  std::vector<StrategyEntry> strategy() const {
    std::vector<StrategyEntry> out;
    if (!cop_wins()) return out;
    std::vector<char> seen(beliefs_.size(), 0);
    std::vector<std::uint32_t> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t s = queue[head];
      std::size_t p = best_probe_index(s);
      out.push_back({beliefs_[s], probes_[p]});
      for (auto [b, e] = pair_range(s, p); b != e; ++b)
        if (!seen[succ_[b]]) {
          seen[succ_[b]] = 1;
          queue.push_back(succ_[b]);
        }
    }
    return out;
  }

  SolveResult result() const {
    SolveResult r;
    r.states = states();
    if (cop_wins()) {
      r.zeta = k_;
      r.turns = depth_[0];
      r.strategy = strategy();
    }
    return r;
  }

 private:
  static const Graph& check_input(const Graph& g, int k) {
    if (k < 1) throw invalid_input("team size k must be at least 1");
    if (g.order() == 0) throw invalid_input("empty graph");
    if (!g.connected()) throw invalid_input("graph must be connected");
    g.require_small("localization solver");
    return g;
  }

  std::pair<std::size_t, std::size_t> pair_range(std::size_t s, std::size_t p) const {
    std::size_t id = s * probes_.size() + p;
    return {offsets_[id], offsets_[id + 1]};
  }

  std::size_t best_probe_index(std::uint32_t s) const {
    const int limit = depth_[s] - 1;
    for (std::size_t p = 0; p < probes_.size(); ++p) {
      bool ok = true;
      for (auto [b, e] = pair_range(s, p); b != e && ok; ++b) {
        int d = depth_[succ_[b]];
        ok = d > 0 && d <= limit;
      }
      if (ok) return p;
    }
    throw std::logic_error("winning belief without a winning probe");
  }

  std::uint32_t intern(VertexSet b) {
    auto [it, inserted] = index_.try_emplace(b.bits(), static_cast<std::uint32_t>(beliefs_.size()));
    if (inserted) {
      if (beliefs_.size() >= budget_.max_states)
        throw budget_exceeded("belief table exceeds " + std::to_string(budget_.max_states) + " states");
      beliefs_.push_back(b);
    }
    return it->second;
  }

  // Successor beliefs of one state under every probe, deduplicated per probe.
  void successors_of(VertexSet belief, std::vector<std::vector<VertexSet>>& out) const {
    out.resize(probes_.size());
    for (std::size_t p = 0; p < probes_.size(); ++p) {
      auto& list = out[p];
      list.clear();
      board_->for_each_class(belief, probes_[p], [&](VertexSet c) {
        if (c.size() >= 2) list.push_back(board_->closed_neighborhood(c));
      });
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  void expand() {
    intern(start_);
    offsets_.push_back(0);
    std::size_t layer_begin = 0;
    const unsigned threads = std::max(1U, budget_.threads);
    while (layer_begin < beliefs_.size()) {
      const std::size_t layer_end = beliefs_.size();
      const std::size_t count = layer_end - layer_begin;
      partitions_ += std::uint64_t(count) * probes_.size();
      if (partitions_ > budget_.max_partitions)
        throw budget_exceeded("partition evaluations exceed " + std::to_string(budget_.max_partitions));
      std::vector<std::vector<std::vector<VertexSet>>> found(count);
      auto work = [&](unsigned tid) {
        for (std::size_t i = tid; i < count; i += threads) successors_of(beliefs_[layer_begin + i], found[i]);
      };
      if (threads == 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) successors_of(beliefs_[layer_begin + i], found[i]);
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
      }
      for (std::size_t i = 0; i < count; ++i) {
        for (auto& list : found[i]) {
          for (VertexSet b : list) succ_.push_back(intern(b));
          offsets_.push_back(succ_.size());
        }
        found[i].clear();
        found[i].shrink_to_fit();
      }
      layer_begin = layer_end;
    }
  }

  void label(bool full) {
    depth_.assign(beliefs_.size(), 0);
    std::vector<std::uint32_t> fresh;
    for (int round = 1;; ++round) {
      fresh.clear();
      for (std::uint32_t s = 0; s < beliefs_.size(); ++s) {
        if (depth_[s] != 0) continue;
        for (std::size_t p = 0; p < probes_.size(); ++p) {
          bool ok = true;
          for (auto [b, e] = pair_range(s, p); b != e && ok; ++b) ok = depth_[succ_[b]] > 0;
          if (ok) {
            fresh.push_back(s);
            break;
          }
        }
      }
      if (fresh.empty()) {
        complete_ = true;
        return;
      }
      for (auto s : fresh) depth_[s] = round;
      if (!full && depth_[0] > 0) return;
    }
  }

  std::shared_ptr<GameBoard> board_;
  int k_;
  SolverBudget budget_;
  VertexSet start_;
  std::vector<std::vector<Vertex>> probes_;
  std::vector<VertexSet> beliefs_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> succ_;
  std::vector<int> depth_;
  std::uint64_t partitions_ = 0;
  bool complete_ = false;
};

/// Whether k cops win on g; on success the result carries the extracted strategy.
inline std::pair<bool, SolveResult> cop_wins(const Graph& g, int k, SolverBudget budget = {}) {
  LocalizationSolver solver(g, k, budget);
  return {solver.cop_wins(), solver.result()};
}

/// Smallest k <= max_k for which the cops win; zeta is empty past max_k.
/// `states` sums the belief tables of every k tried.
inline SolveResult localization_number(const Graph& g, int max_k, SolverBudget budget = {}) {
  if (max_k < 1) throw invalid_input("max_k must be at least 1");
  std::size_t states = 0;
  for (int k = 1; k <= max_k; ++k) {
    LocalizationSolver solver(g, k, budget);
    states += solver.states();
    if (solver.cop_wins()) {
      auto r = solver.result();
      r.states = states;
      return r;
    }
    if (k >= g.order()) break;
  }
  SolveResult r;
  r.states = states;
  return r;
}

/// Robber that knows the cops' strategy: among the surviving classes it picks
/// the one whose next belief keeps it alive longest (forever if losing for
/// the cops), ties to the class with the smallest vertex.
class AdversarialRobber {
 public:
  AdversarialRobber(const Graph& g, int k, SolverBudget budget = {})
      : graph_(g), k_(k), budget_(budget),
        main_(std::make_shared<LocalizationSolver>(g, k, budget, true)) {}

  const LocalizationSolver& solver() const { return *main_; }

  /// Turns the robber survives from `belief`; nullopt means forever.
  std::optional<int> survival(VertexSet belief) const {
    const LocalizationSolver& s = solver_for(belief);
    return s.win_depth(belief);
  }

  /// The class the robber hides in, or nullopt if every class is a singleton.
  std::optional<SignatureClass> choose(const std::vector<SignatureClass>& classes) const {
    std::optional<SignatureClass> best;
    long best_score = -1;
    for (const auto& c : classes) {
      if (c.members.size() < 2) continue;
      auto d = survival(main_->board().closed_neighborhood(c.members));
      long score = d ? *d : LONG_MAX;
      if (score > best_score || (score == best_score && c.members.first() < best->members.first())) {
        best = c;
        best_score = score;
      }
    }
    return best;
  }

 private:
  const LocalizationSolver& solver_for(VertexSet belief) const {
    if (main_->knows(belief)) return *main_;
    auto it = extra_.find(belief.bits());
    if (it == extra_.end())
      it = extra_.emplace(belief.bits(), std::make_shared<LocalizationSolver>(graph_, k_, budget_, true, belief)).first;
    return *it->second;
  }

  Graph graph_;
  int k_;
  SolverBudget budget_;
  std::shared_ptr<LocalizationSolver> main_;
  mutable std::map<std::uint64_t, std::shared_ptr<LocalizationSolver>> extra_;
};

struct MetricDimension {
  int dimension;
  std::vector<Vertex> witness;
};

/// Minimum resolving set by ascending-size search; lexicographically first witness.
inline MetricDimension metric_dimension(const Graph& g) {
  if (g.order() == 0 || !g.connected()) throw invalid_input("metric_dimension: graph must be connected");
  GameBoard board(g);
  const int n = g.order();
  const VertexSet all = VertexSet::all(n);
  for (int r = 0; r <= n; ++r) {
    std::optional<std::vector<Vertex>> hit;
    for_each_combination(n, r, [&](const std::vector<Vertex>& c) {
      bool resolving = true;
      board.for_each_class(all, c, [&](VertexSet cls) { resolving = resolving && cls.size() == 1; });
      if (resolving) hit = c;
      return !resolving;
    });
    if (hit) return {r, *hit};
  }
  throw std::logic_error("metric_dimension: V itself must resolve");
}

}  // namespace locgame

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "locgame/bush.hpp"
#include "locgame/catalogue.hpp"
#include "locgame/cli.hpp"
#include "locgame/generators.hpp"
#include "locgame/localization.hpp"
#include "locgame/locating.hpp"
#include "locgame/path_decomposition.hpp"
#include "locgame/plane.hpp"
#include "locgame/strategies.hpp"
#include "oracles.hpp"

using namespace locgame;

namespace {

constexpr double kTrilaterationTol = 1e-9;
constexpr double kTwoCopTol = 1e-6;
constexpr double kSeparationMin = 1e-6;
constexpr double kRootExpected = 0.09582;
constexpr double kRootTol = 5e-6;
constexpr double kPerInstanceSeconds = 60.0;

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!c.ok) ++failures;
  std::printf("%s %2d %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.detail.empty() ? "" : ": ",
              c.detail.c_str());
  std::fflush(stdout);
}

int zeta(const Graph& g, SolverBudget budget = {}) {
  auto r = localization_number(g, std::max(1, g.order()), budget);
  if (!r.zeta) throw std::logic_error("no winning team size");
  return *r.zeta;
}

std::string name(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.order() << " edges=" << g.size();
  return s.str();
}

Graph fig1() {
  // K4 on a,b,c,d = 0..3; e = 4 adjacent to a,b; f = 5 adjacent to b,c
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}});
}

void exact_values(Check& c) {
  for (int n = 2; n <= 10; ++n) c.expect(zeta(gen::path(n)) == 1, "path " + std::to_string(n));
  for (int n = 1; n <= 9; ++n) c.expect(zeta(gen::star(n)) == 1, "star " + std::to_string(n));
  for (int n = 2; n <= 7; ++n) c.expect(zeta(gen::complete(n)) == n - 1, "complete " + std::to_string(n));
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      c.expect(zeta(gen::complete_bipartite(a, b)) == std::min(a, b),
               "complete bipartite " + std::to_string(a) + "," + std::to_string(b));
}

void fig1_pair(Check& c) {
  const int h = zeta(gen::complete(4));
  const int g = zeta(fig1());
  c.expect(h == 3, "zeta(K4) = " + std::to_string(h));
  c.expect(g == 2, "zeta(G) = " + std::to_string(g));
  c.detail = c.ok ? "zeta(K4)=3 zeta(G)=2" : c.detail;
}

void inequality_suite(Check& c) {
  std::vector<Graph> corpus = catalogue::connected_graphs(2, 6);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) corpus.push_back(gen::random_connected(7, 0.35, seed));
  int bipartite = 0;
  for (const auto& g : corpus) {
    const int z = zeta(g);
    c.expect(z <= metric_dimension(g).dimension, "zeta > dim on " + name(g));
    c.expect(z <= pathwidth_exact(g).width, "zeta > pw on " + name(g));
    c.expect(z <= oracle::pathwidth(g), "zeta > oracle pw on " + name(g));
    if (auto side = detail::two_coloring(g)) {
      const int ones = static_cast<int>(std::count(side->begin(), side->end(), 1));
      c.expect(z <= std::min(ones, g.order() - ones), "zeta > min part on " + name(g));
      ++bipartite;
    }
  }
  c.detail = c.ok ? std::to_string(corpus.size()) + " graphs, " + std::to_string(bipartite) + " bipartite" : c.detail;
}

void interval_tightness(Check& c) {
  // Overlapping windows of w+1 unit steps give interval graphs that are
  // powers of paths, with clique number w+1.
  for (int w = 1; w <= 3; ++w) {
    Graph k = gen::complete(w + 1);
    std::vector<gen::Interval> full;
    for (int i = 0; i <= w; ++i) full.push_back({0, 1});
    c.expect(gen::interval(full).size() == k.size(), "interval clique shape");
    c.expect(zeta(k) == w && pathwidth_exact(k).width == w, "K_" + std::to_string(w + 1));
    std::vector<gen::Interval> windows;
    for (int i = 0; i < w + 3; ++i) windows.push_back({double(i), double(i + w) + 0.5});
    Graph g = gen::interval(windows);
    c.expect(g.size() < g.order() * (g.order() - 1) / 2, "instance is complete");
    const int z = zeta(g), pw = pathwidth_exact(g).width;
    c.expect(z == w && pw == w, "w=" + std::to_string(w) + " non-complete gives zeta=" + std::to_string(z) +
                                    " pw=" + std::to_string(pw));
  }
}

void strategies(Check& c) {
  int verified = 0;
  auto run = [&](const Graph& g, const Strategy& s) {
    auto rep = verify_strategy(g, s);
    c.expect(rep.verified(), s.name + " on " + name(g) + ": " + to_string(rep.verdict));
    ++verified;
  };
  for (int n = 1; n <= 10; ++n) run(gen::path(n), path_strategy(gen::path(n)));
  for (int n = 1; n <= 9; ++n) run(gen::star(n), star_strategy(gen::star(n)));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) run(gen::complete_bipartite(a, b), complete_bipartite_strategy(a, b));
  for (const auto& g : catalogue::connected_graphs(2, 7)) {
    if (detail::two_coloring(g)) run(g, bipartite_parity_strategy(g));
    run(g, pathwidth_strategy(g, pathwidth_exact(g).decomposition));
  }
  c.detail = c.ok ? std::to_string(verified) + " verified" : c.detail;
}

void chain(Check& c) {
  int checked = 0;
  for (const auto& g : catalogue::connected_graphs(1, 6)) {
    auto r = check_chain(g);
    c.expect(r.holds(), "chain fails on " + name(g));
    ++checked;
  }
  for (const auto& g : catalogue::connected_graphs(1, 8)) {
    auto b = bush_number(g, g.order());
    c.expect(b.k && *b.k <= domination_number(g).size, "B > gamma on " + name(g));
    ++checked;
  }
  c.detail = c.ok ? std::to_string(checked) + " graph checks" : c.detail;
}

void lemma(Check& c) {
  const int n = lemma_tree(1, 1).tree.order();
  c.expect(n == 14, "tree order " + std::to_string(n));
  long hyp = 0;
  for (auto which : {TreeCount::stated, TreeCount::actual})
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const int ones = std::popcount(mask);
      if (!lemma_hypothesis(1, 1, ones, which)) continue;
      std::vector<int> col(n);
      for (int i = 0; i < n; ++i) col[i] = (mask >> i) & 1;
      auto r = lemma_bimatching_check(1, 1, col, which);
      c.expect(r.matching.size() >= 1, "k=1 h=1 matching 0");
      ++hyp;
    }
  Rng rng(2024);
  for (auto which : {TreeCount::stated, TreeCount::actual})
    for (int i = 0; i < 10000; ++i) {
      auto r = lemma_bimatching_check(1, 2, random_hypothesis_coloring(1, 2, which, rng), which);
      c.expect(r.matching.size() >= 2, "k=1 h=2 matching below 2");
    }
  c.detail = c.ok ? std::to_string(hyp) + " exhaustive hypothesis colourings, 2x10^4 sampled" : c.detail;
}

void matching(Check& c) {
  Rng rng(77);
  long cases = 0;
  for (int n = 1; n <= 10; ++n)
    for (const auto& t : catalogue::trees(n))
      for (int trial = 0; trial < 1000; ++trial) {
        ColoredTree ct{t, 0, std::vector<int>(n), {}};
        for (auto& x : ct.colors) x = static_cast<int>(uniform_below(rng, 2));
        const int dp = static_cast<int>(max_bicolored_matching(ct).size());
        c.expect(dp == oracle::bicolored_matching(t, ct.colors), "mismatch on tree n=" + std::to_string(n));
        ++cases;
      }
  c.detail = c.ok ? std::to_string(cases) + " coloured trees" : c.detail;
}

void tree_counts(Check& c) {
  auto a = subdivided_tree_counts(13, 1, 2);
  auto b = subdivided_tree_counts(13, 2, 2);
  c.expect(a.total == 40, "(13,1,2) total " + std::to_string(a.total));
  c.expect(b.total == 547, "(13,2,2) total " + std::to_string(b.total));
  c.expect(b.regular == 183, "(13,2,2) regular " + std::to_string(b.regular));
  c.expect(b.regular == (13 * 13 * 13 - 1) / 12, "regular count formula");
  c.expect(build_T(13, 1, 2).tree.order() == 40, "built tree order");
  std::string trend;
  for (const auto& r : bush_scaling_experiment({{2, 1}, {3, 1}, {2, 2}, {3, 2}}, 2, 1 << 20))
    trend += " (" + std::to_string(r.arity) + "," + std::to_string(r.height) + ")->" +
             (r.bush ? std::to_string(*r.bush) : r.status);
  c.detail = c.ok ? "40 / 547 / 183; scaling B:" + trend : c.detail;
}

void reductions(Check& c) {
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : catalogue::all_graphs(n)) {
      auto r = verify_add_isolated(g);
      c.expect(r.equal(), "add_isolated on " + name(g));
      ++checked;
    }
  for (const auto& g : catalogue::connected_graphs(2, 5)) {
    auto r = verify_add_uvw(g);
    c.expect(r.equal(), "add_uvw on " + name(g));
    ++checked;
  }
  for (const auto& g : catalogue::connected_graphs(1, 4)) {
    auto d = DistanceMatrix(g).diameter();
    if (!d || *d > 2) continue;
    auto r = verify_theorem_5_3(g);
    c.expect(r.equal(), "multiuniversal on " + name(g));
    c.expect(r.proof_strategy_verified.value_or(false), "construction strategy on " + name(g));
    ++checked;
  }
  const int loc = min_locating_set(gen::cycle(4)).size;
  const int z = zeta(reduce_multiuniversal(gen::cycle(4)).graph);
  c.expect(loc == 2 && z == 3, "C4 gives (" + std::to_string(loc) + ", " + std::to_string(z) + ")");
  c.detail = c.ok ? std::to_string(checked) + " equivalences, C4 -> (2, 3)" : c.detail;
}

void geometry(Check& c) {
  using namespace plane;
  Rng rng(31);
  auto pt = [&](double r) { return Point{uniform_real(rng, -r, r), uniform_real(rng, -r, r)}; };
  double worst = 0;
  for (int done = 0; done < 10000;) {
    Point x = pt(100);
    Point p[3] = {pt(100), pt(100), pt(100)};
    if (std::abs(cross(p[1] - p[0], p[2] - p[0])) < 1e-3 * dist(p[1], p[0]) * dist(p[2], p[0])) continue;
    double d[3] = {dist(x, p[0]), dist(x, p[1]), dist(x, p[2])};
    worst = std::max(worst, dist(trilaterate(p, d), x));
    ++done;
  }
  c.expect(worst <= kTrilaterationTol, "trilateration error " + describe(worst));

  for (std::uint64_t s = 0; s < 1000; ++s) {
    Point start = pt(50);
    RobberModel robber = s % 3 == 0   ? RobberModel::stationary(start)
                         : s % 3 == 1 ? RobberModel::random_walk(start, s)
                                      : RobberModel::evasive(start, s);
    auto r = two_cop_play(robber);
    c.expect(r.rounds <= 2 && dist(r.located, r.robber) <= kTwoCopTol, "two-cop trajectory " + std::to_string(s));
  }

  const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
  const std::vector<std::pair<std::string, Prober>> probers = {
      {"center", [](Point p, const auto&) { return p; }},
      {"far", [](Point p, const auto&) { return p + Point{1000, 0}; }},
      {"near", [](Point p, const auto&) { return p + Point{0.3, -0.2}; }},
      {"predictive", [golden](Point p, const std::vector<EscapeRound>& h) { return p + polar(0.9, golden * h.size()); }},
  };
  for (const auto& [label, prober] : probers)
    for (const auto& r : one_cop_escape(prober, 1000)) {
      c.expect(r.separation >= kSeparationMin, label + " prober separation " + describe(r.separation));
      c.expect(dist(r.position, r.previous) <= 1 && dist(r.witness, r.previous) <= 1, label + " illegal move");
    }

  const double root = derive_delta(0.1).root;
  c.expect(std::abs(root - kRootExpected) <= kRootTol, "root " + describe(root));
  for (double eps : {0.5, 0.1, 0.01})
    for (std::uint64_t s = 0; s < 1000; ++s) {
      Point start = pt(40);
      auto robber = s % 2 ? RobberModel::random_walk(start, s) : RobberModel::evasive(start, s);
      auto r = approx_one_cop(robber, eps);
      const double err = dist(r.estimate, r.robber);
      c.expect(err <= 1 + eps && r.error_bound <= 1 + eps, "approx eps=" + describe(eps) + " error " + describe(err));
    }
  c.detail = c.ok ? "worst trilateration error " + describe(worst) + ", root " + describe(root) : c.detail;
}

void performance(Check& c) {
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  double slowest = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = gen::random_connected(10, 0.25, seed);
    const auto t0 = std::chrono::steady_clock::now();
    auto r = localization_number(g, 3);
    LocalizationSolver full(g, 3, {});
    (void)full.result();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    slowest = std::max(slowest, secs);
    c.expect(secs < kPerInstanceSeconds, "seed " + std::to_string(seed) + " took " + plane::describe(secs));
    SolverBudget par;
    par.threads = hw;
    c.expect(localization_number(g, 3, par) == r, "thread count changed the result");

    const std::string file = "/tmp/locgame_acceptance_" + std::to_string(seed) + ".txt";
    std::istringstream in;
    std::ostringstream o1, o2, err;
    cli::run({"--seed", std::to_string(seed), "graph", "gen", "random_connected", "10", "0.25", "-o", file}, in, o1, err);
    std::ostringstream a, b;
    const int ca = cli::run({"--threads", "1", "solve", "zeta", file, "--max-k", "3"}, in, a, err);
    const int cb = cli::run({"--threads", std::to_string(hw), "solve", "zeta", file, "--max-k", "3"}, in, b, err);
    c.expect(ca == 0 && cb == 0 && a.str() == b.str(), "CLI output differs across --threads");
    std::remove(file.c_str());
  }
  c.detail = c.ok ? "slowest instance " + plane::describe(slowest) + "s, threads 1 vs " + std::to_string(hw) + " identical"
                  : c.detail;
}

}  // namespace

int main() {
  criterion(1, "exact values on paths, stars, cliques, complete bipartite", exact_values);
  criterion(2, "non-monotone pair", fig1_pair);
  criterion(3, "inequality suite", inequality_suite);
  criterion(4, "interval graph tightness", interval_tightness);
  criterion(5, "scripted strategies verified", strategies);
  criterion(6, "bush chain and domination bound", chain);
  criterion(7, "bicoloured matching lemma", lemma);
  criterion(8, "matching DP against brute force", matching);
  criterion(9, "subdivided tree counts", tree_counts);
  criterion(10, "locating reductions", reductions);
  criterion(11, "plane geometry", geometry);
  criterion(12, "performance and thread determinism", performance);
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <thread>

#include "locgame/catalogue.hpp"
#include "locgame/graph_io.hpp"
#include "locgame/serialize.hpp"

// Command-line front end. run() takes the arguments without the program name
// and writes results to `out`, prompts and diagnostics to `err`.
namespace locgame::cli {

enum Exit : int { ok = 0, usage = 1, bad_input = 2, limit = 3, failed = 4 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  std::size_t max_states = 0;  // 0: LOCGAME_MAX_STATES or the solver default
  int max_turns = 64;

  SolverBudget budget() const {
    SolverBudget b;
    if (max_states) {
      b.max_states = max_states;
    } else if (const char* env = std::getenv("LOCGAME_MAX_STATES")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (!*env || *end || v == 0) throw usage_error("LOCGAME_MAX_STATES must be a positive integer");
      b.max_states = v;
    }
    b.threads = threads;
    return b;
  }
};

namespace detail {

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open " + path);
  return io::read_graph(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write " + path);
  io::write_graph(out, g);
}

/// One bag per line as whitespace-separated vertices; `#` lines are comments.
inline PathDecomposition load_decomposition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open " + path);
  PathDecomposition pd;
  std::string line;
  int lineno = 0;
  while (io::detail::next_content_line(in, line, lineno)) {
    std::vector<Vertex> bag;
    for (long long x : io::detail::parse_ints(line, lineno)) {
      if (x < 0 || x > 63) throw invalid_input("decomposition line " + std::to_string(lineno) + ": bad vertex");
      bag.push_back(static_cast<Vertex>(x));
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

inline long long to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw invalid_input(std::string(what) + ": not an integer: " + s);
  return v;
}

inline double to_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw invalid_input(std::string(what) + ": not a number: " + s);
  return v;
}

inline int small_int(const std::string& s, const char* what) {
  const long long v = to_int(s, what);
  if (v < 0 || v > 1'000'000) throw invalid_input(std::string(what) + ": out of range: " + s);
  return static_cast<int>(v);
}

inline Graph generate(const std::string& family, const std::vector<std::string>& p, std::uint64_t seed) {
  auto need = [&](std::size_t count, const char* shape) {
    if (p.size() != count) throw usage_error("graph gen " + family + " expects " + shape);
  };
  if (family == "path") return need(1, "N"), gen::path(small_int(p[0], "n"));
  if (family == "cycle") return need(1, "N"), gen::cycle(small_int(p[0], "n"));
  if (family == "star") return need(1, "N"), gen::star(small_int(p[0], "n"));
  if (family == "complete") return need(1, "N"), gen::complete(small_int(p[0], "n"));
  if (family == "complete_bipartite" || family == "cbip")
    return need(2, "A B"), gen::complete_bipartite(small_int(p[0], "a"), small_int(p[1], "b"));
  if (family == "random_tree") return need(1, "N"), gen::random_tree(small_int(p[0], "n"), seed);
  if (family == "random_connected")
    return need(2, "N P"), gen::random_connected(small_int(p[0], "n"), to_double(p[1], "p"), seed);
  if (family == "ary_tree") return need(2, "ARITY HEIGHT"), gen::ary_tree(small_int(p[0], "arity"), small_int(p[1], "height"));
  if (family == "interval") {
    if (p.empty() || p.size() % 2) throw usage_error("graph gen interval expects LO HI pairs");
    std::vector<gen::Interval> iv;
    for (std::size_t i = 0; i < p.size(); i += 2) iv.push_back({to_double(p[i], "lo"), to_double(p[i + 1], "hi")});
    return gen::interval(iv);
  }
  if (family == "add_universal") return need(1, "FILE"), gen::add_universal(load_graph(p[0]));
  if (family == "add_isolated") return need(1, "FILE"), gen::add_isolated(load_graph(p[0]));
  if (family == "subdivide") return need(2, "FILE S"), gen::subdivide(load_graph(p[0]), small_int(p[1], "s"));
  throw usage_error("unknown family: " + family);
}

/// Part A = {0..a-1} of a complete bipartite graph in generator numbering.
inline std::pair<int, int> complete_bipartite_shape(const Graph& g) {
  const int n = g.order();
  const int a = n - (n ? g.degree(0) : 0);
  if (n < 2 || a < 1 || a >= n || static_cast<int>(g.size()) != a * (n - a))
    throw invalid_input("graph is not K_{a,b} with part A = 0..a-1");
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < n; ++v)
      if (!g.adjacent(u, v)) throw invalid_input("graph is not K_{a,b} with part A = 0..a-1");
  return {a, n - a};
}

/// The same strategy with only the first k probed vertices kept.
inline Strategy truncated(Strategy s, int k) {
  if (k >= s.k) return s;
  if (k < 1) throw invalid_input("k must be at least 1");
  s.name += "[k=" + std::to_string(k) + "]";
  s.k = k;
  s.next_probe = [inner = s.next_probe, k](const History& h) {
    auto p = inner(h);
    p.resize(std::min<std::size_t>(p.size(), k));
    return p;
  };
  return s;
}

inline json summary(const Graph& g) { return {{"n", g.order()}, {"m", g.size()}}; }

inline void print(std::ostream& out, const json& j, const RunConfig& cfg) {
  if (cfg.format == "json") {
    out << j.dump() << "\n";
    return;
  }
  if (!j.is_object()) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

/// Whitespace-separated vertex numbers; nullopt on anything else.
inline std::optional<std::vector<Vertex>> parse_vertices(const std::string& line) {
  std::istringstream ss(line);
  std::vector<Vertex> out;
  std::string tok;
  while (ss >> tok) {
    if (tok.size() > 3 || tok.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    out.push_back(std::stoi(tok));
  }
  return out;
}

inline std::string show(VertexSet s) { return to_string(s); }

inline std::string show(const Signature& sig) {
  std::string s = "(";
  for (std::size_t i = 0; i < sig.size(); ++i) s += (i ? "," : "") + std::to_string(sig[i]);
  return s + ")";
}

struct eof_abort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string prompt(std::istream& in, std::ostream& err, const std::string& text) {
  err << text << std::flush;
  std::string line;
  if (!std::getline(in, line)) throw eof_abort("end of input");
  return line;
}

/// Human robber against the solver's cop strategy.
inline json play_robber(const Graph& g, int k, const RunConfig& cfg, std::istream& in, std::ostream& err) {
  auto solver = std::make_shared<LocalizationSolver>(g, k, cfg.budget());
  if (!solver->cop_wins())
    throw invalid_input(std::to_string(k) + " cops have no winning strategy on this graph");
  const GameBoard& board = solver->board();
  json turns = json::array();
  VertexSet belief = VertexSet::all(g.order());
  std::optional<Vertex> position;
  std::string outcome;
  for (int turn = 1;; ++turn) {
    const auto probe = *solver->best_probe(belief);
    const auto classes = board.partition(belief, probe);
    err << "turn " << turn << ": cops probe " << json(probe).dump() << "; belief " << show(belief) << "\n";
    for (const auto& c : classes) err << "  answer " << show(c.signature) << " -> " << show(c.members) << "\n";
    const VertexSet legal = position ? board.closed_neighborhood(VertexSet::single(*position)) : belief;
    Vertex v = -1;
    while (true) {
      auto line = prompt(in, err, "your vertex " + show(legal) + ": ");
      auto vs = parse_vertices(line);
      if (vs && vs->size() == 1 && (*vs)[0] < g.order() && legal.contains((*vs)[0])) {
        v = (*vs)[0];
        break;
      }
      err << "illegal move\n";
    }
    position = v;
    const auto& cls = *std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.members.contains(v); });
    turns.push_back({{"probe", probe}, {"robber", v}, {"signature", cls.signature}, {"class", to_json(cls.members)}});
    if (cls.members.size() == 1) {
      err << "located at " << v << " after " << turn << " turn(s)\n";
      outcome = "cop wins";
      break;
    }
    belief = belief_step(belief, cls.members, g);
  }
  return {{"role", "robber"}, {"k", k}, {"outcome", outcome}, {"turns", turns}};
}

/// Human cop against the adversarial robber.
inline json play_cop(const Graph& g, int k, const RunConfig& cfg, std::istream& in, std::ostream& err) {
  AdversarialRobber robber(g, k, cfg.budget());
  const GameBoard& board = robber.solver().board();
  const int team = std::min(k, g.order());
  json turns = json::array();
  VertexSet belief = VertexSet::all(g.order());
  std::set<std::uint64_t> seen{belief.bits()};
  std::string outcome = "robber survives";
  for (int turn = 1; turn <= cfg.max_turns; ++turn) {
    err << "turn " << turn << ": robber could be at " << show(belief) << "\n";
    std::vector<Vertex> probe;
    while (true) {
      auto parsed = parse_vertices(prompt(in, err, "probe " + std::to_string(team) + " distinct vertices: "));
      probe = parsed.value_or(std::vector<Vertex>{});
      auto sorted = locgame::detail::sorted_unique(probe);
      bool okay = parsed && static_cast<int>(sorted.size()) == team && sorted.size() == probe.size();
      for (Vertex v : sorted) okay = okay && v >= 0 && v < g.order();
      if (okay) {
        probe = sorted;
        break;
      }
      err << "illegal probe\n";
    }
    const auto classes = board.partition(belief, probe);
    auto hide = robber.choose(classes);
    if (!hide) {
      const auto& cls = classes.front();
      turns.push_back({{"probe", probe}, {"signature", cls.signature}, {"class", to_json(cls.members)}});
      err << "located at " << cls.members.first() << "\n";
      outcome = "cop wins";
      break;
    }
    err << "answer " << show(hide->signature) << " -> " << show(hide->members) << "\n";
    turns.push_back({{"probe", probe}, {"signature", hide->signature}, {"class", to_json(hide->members)}});
    belief = belief_step(belief, hide->members, g);
    if (!seen.insert(belief.bits()).second && !robber.survival(belief)) {
      err << "belief repeated and " << k << " cops cannot win from it: robber wins\n";
      outcome = "robber wins";
      break;
    }
  }
  return {{"role", "cop"}, {"k", k}, {"outcome", outcome}, {"turns", turns}};
}

inline plane::Point random_point(Rng& rng, double lo, double hi) {
  return {uniform_real(rng, lo, hi), uniform_real(rng, lo, hi)};
}

inline plane::RobberModel make_robber(const std::string& kind, plane::Point start, std::uint64_t seed) {
  if (kind == "stationary") return plane::RobberModel::stationary(start);
  if (kind == "random") return plane::RobberModel::random_walk(start, seed);
  if (kind == "evasive") return plane::RobberModel::evasive(start, seed);
  throw usage_error("unknown robber model: " + kind);
}

inline plane::Prober make_prober(const std::string& kind, std::uint64_t seed) {
  using plane::Point;
  if (kind == "center") return [](Point prev, const auto&) { return prev; };
  if (kind == "far") return [](Point prev, const auto&) { return prev + Point{1000, 0}; };
  if (kind == "random") {
    auto rng = std::make_shared<Rng>(seed);
    return [rng](Point prev, const auto&) { return prev + random_point(*rng, -5, 5); };
  }
  if (kind == "predictive") {
    // Probes the point the escape rule would pick without its correction.
    return [](Point prev, const std::vector<plane::EscapeRound>& h) {
      const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
      return prev + plane::polar(0.9, golden * static_cast<double>(h.size()));
    };
  }
  throw usage_error("unknown prober: " + kind);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--format") cfg.format = args[i + 1];
  for (const auto& a : args)
    if (a.rfind("--format=", 0) == 0) cfg.format = a.substr(9);

  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    if (cfg.format == "json")
      err << json{{"error", kind}, {"message", message}, {"exit", code}}.dump() << "\n";
    else
      err << "error: " << message << "\n";
    return code;
  };

  CLI::App app{"Distance-query pursuit games: solvers, verifiers and simulators", "locgame"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "plain"}));
  app.add_option("--threads", cfg.threads, "Worker threads for the solver")->check(CLI::Range(1U, 1024U));
  app.add_option("--seed", cfg.seed, "Seed for random generators and simulations");
  app.add_option("--max-states", cfg.max_states, "Belief-state budget (default: LOCGAME_MAX_STATES or 4194304)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-turns", cfg.max_turns, "Turn limit for verification and play")->check(CLI::Range(1, 1 << 20));
  app.fallthrough();

  std::function<int()> action;

  // graph gen
  auto* graph = app.add_subcommand("graph", "Graph utilities")->require_subcommand(1);
  std::string family, output;
  std::vector<std::string> params;
  auto* gen_cmd = graph->add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("family", family, "path|cycle|star|complete|complete_bipartite|random_tree|random_connected|"
                                        "interval|ary_tree|add_universal|add_isolated|subdivide")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("-o,--output", output, "Output graph file")->required();
  gen_cmd->callback([&] {
    action = [&] {
      Graph g = detail::generate(family, params, cfg.seed);
      detail::save_graph(output, g);
      json j = detail::summary(g);
      j["family"] = family;
      j["output"] = output;
      detail::print(out, j, cfg);
      return ok;
    };
  });

  // solve
  auto* solve = app.add_subcommand("solve", "Exact game parameters")->require_subcommand(1);
  std::string file;
  std::optional<int> max_k;
  auto add_file = [&](CLI::App* c) { c->add_option("file", file, "Graph file")->required(); };
  for (const char* what : {"zeta", "dim", "bush", "blind"}) {
    auto* c = solve->add_subcommand(what, std::string("Compute ") + what);
    add_file(c);
    if (std::string(what) != "dim") c->add_option("--max-k", max_k, "Largest team size tried")->check(CLI::PositiveNumber);
    c->callback([&, w = std::string(what)] {
      action = [&, w] {
        Graph g = detail::load_graph(file);
        const int kmax = max_k.value_or(g.order());
        json j;
        if (w == "zeta") {
          if (g.order() == 0 || !g.connected()) throw invalid_input("graph must be connected");
          j = to_json(localization_number(g, kmax, cfg.budget()));
        } else if (w == "dim") {
          j = to_json(metric_dimension(g));
        } else {
          if (g.order() == 0 || !g.connected()) throw invalid_input("graph must be connected");
          auto b = bush_number(g, kmax, cfg.budget().max_states);
          j = to_json(b);
          if (w == "blind") j = {{"zeta_b", j["k"]}, {"schedule", j["schedule"]}, {"states", j["states"]}};
        }
        detail::print(out, j, cfg);
        return ok;
      };
    });
  }

  // check chain
  auto* check = app.add_subcommand("check", "Property checks")->require_subcommand(1);
  auto* chain = check->add_subcommand("chain", "B(G) <= zeta_b(G) <= zeta(G + universal vertex) and B(G) <= domination");
  add_file(chain);
  chain->callback([&] {
    action = [&] {
      Graph g = detail::load_graph(file);
      if (g.order() == 0 || !g.connected()) throw invalid_input("graph must be connected");
      auto rep = check_chain(g, cfg.budget(), 8);
      auto dom = domination_number(g);
      json j = to_json(rep);
      j["domination"] = dom.size;
      j["bush_le_domination"] = rep.bush <= dom.size;
      detail::print(out, j, cfg);
      return rep.holds() && rep.bush <= dom.size ? ok : failed;
    };
  });

  // strategy verify
  auto* strategy = app.add_subcommand("strategy", "Scripted strategies")->require_subcommand(1);
  auto* verify_s = strategy->add_subcommand("verify", "Verify a scripted strategy against every robber");
  std::string strat_family, decomp_file;
  std::optional<int> team_k;
  add_file(verify_s);
  verify_s->add_option("--family", strat_family, "Strategy family")
      ->required()
      ->check(CLI::IsMember({"path", "star", "cbip", "bipartite", "pathwidth"}));
  verify_s->add_option("--decomp", decomp_file, "Path decomposition file, one bag per line (pathwidth)");
  verify_s->add_option("--k", team_k, "Team size; smaller values keep a prefix of each probe")->check(CLI::PositiveNumber);
  verify_s->callback([&] {
    action = [&] {
      Graph g = detail::load_graph(file);
      Strategy s;
      if (strat_family == "path") {
        s = path_strategy(g);
      } else if (strat_family == "star") {
        s = star_strategy(g);
      } else if (strat_family == "cbip") {
        auto [a, b] = detail::complete_bipartite_shape(g);
        s = complete_bipartite_strategy(a, b, team_k);
      } else if (strat_family == "bipartite") {
        s = bipartite_parity_strategy(g);
      } else {
        PathDecomposition pd;
        if (decomp_file.empty()) {
          if (g.order() == 0 || !g.connected()) throw invalid_input("graph must be connected");
          pd = pathwidth_exact(g, 20).decomposition;
        } else {
          pd = normalize_decomposition(g, detail::load_decomposition(decomp_file));
        }
        s = pathwidth_strategy(g, pd);
      }
      if (team_k && strat_family != "cbip") s = detail::truncated(s, *team_k);
      auto rep = verify_strategy(g, s, cfg.max_turns);
      json j{{"family", strat_family}, {"strategy", s.name}, {"k", s.k}};
      const json body = to_json(rep);
      for (const auto& [key, value] : body.items()) j[key] = value;
      detail::print(out, j, cfg);
      return rep.verified() ? ok : failed;
    };
  });

  // locating min
  auto* locating = app.add_subcommand("locating", "Locating sets")->require_subcommand(1);
  auto* loc_min = locating->add_subcommand("min", "Minimum locating set");
  bool dominating = false;
  add_file(loc_min);
  loc_min->add_flag("--dominating", dominating, "Require the set to be dominating too");
  loc_min->callback([&] {
    action = [&] {
      Graph g = detail::load_graph(file);
      auto m = dominating ? min_dominating_locating_set(g) : min_locating_set(g);
      detail::print(out, json{{"size", m.size}, {"witness", m.witness}, {"dominating", dominating}}, cfg);
      return ok;
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Reduction gadgets")->require_subcommand(1);
  for (const char* what : {"isolated", "uvw", "multiuniversal"}) {
    auto* c = reduce->add_subcommand(what, std::string("Apply the ") + what + " construction");
    add_file(c);
    c->add_option("-o,--output", output, "Output graph file")->required();
    c->callback([&, w = std::string(what)] {
      action = [&, w] {
        Graph g = detail::load_graph(file);
        auto r = w == "isolated" ? reduce_add_isolated(g) : w == "uvw" ? reduce_add_uvw(g) : reduce_multiuniversal(g);
        detail::save_graph(output, r.graph);
        json added = json::array();
        for (auto& [v, label] : r.added) added.push_back({{"vertex", v}, {"label", label}});
        json j{{"construction", r.construction}};
        j["n"] = r.graph.order();
        j["m"] = r.graph.size();
        j["added"] = added;
        j["output"] = output;
        detail::print(out, j, cfg);
        return ok;
      };
    });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Reduction equivalences")->require_subcommand(1);
  for (const char* what : {"thm53", "isolated", "uvw"}) {
    auto* c = verify->add_subcommand(what, std::string("Check the ") + what + " equivalence on one graph");
    add_file(c);
    c->callback([&, w = std::string(what)] {
      action = [&, w] {
        Graph g = detail::load_graph(file);
        EquivalenceReport r = w == "thm53"      ? verify_theorem_5_3(g, cfg.budget(), 5)
                              : w == "isolated" ? verify_add_isolated(g)
                                                : verify_add_uvw(g);
        detail::print(out, to_json(r), cfg);
        return r.equal() && r.proof_strategy_verified.value_or(true) ? ok : failed;
      };
    });
  }

  // lemma bimatching
  auto* lemma = app.add_subcommand("lemma", "Tree colouring lemma")->require_subcommand(1);
  auto* bim = lemma->add_subcommand("bimatching", "Bicoloured matchings under the lemma hypothesis");
  bim->set_help_flag("--help", "Print this help message and exit");
  int lk = 1, lh = 1;
  std::optional<int> samples;
  std::string count_mode = "both";
  bim->add_option("--k", lk, "k")->required()->check(CLI::Range(1, 8));
  bim->add_option("--h", lh, "h")->required()->check(CLI::Range(1, 48));
  bim->add_option("--samples", samples, "Random colourings per count (default: exhaustive when the tree has <= 20 vertices)")
      ->check(CLI::PositiveNumber);
  bim->add_option("--count", count_mode, "Tree count interpretation")->check(CLI::IsMember({"stated", "actual", "both"}));
  bim->callback([&] {
    action = [&] {
      const ColoredTree t = lemma_tree(lk, lh);
      const int n = t.tree.order();
      const bool exhaustive = !samples && n <= 20;
      if (!exhaustive && !samples) samples = 1000;
      json results = json::array();
      bool all = true;
      for (TreeCount which : {TreeCount::stated, TreeCount::actual}) {
        const char* name = which == TreeCount::stated ? "stated" : "actual";
        if (count_mode != "both" && count_mode != name) continue;
        std::int64_t checked = 0;
        int min_matching = std::numeric_limits<int>::max();
        std::optional<std::vector<int>> counterexample;
        auto consider = [&](const std::vector<int>& col) {
          auto c = lemma_bimatching_check(lk, lh, col, which);
          ++checked;
          min_matching = std::min(min_matching, static_cast<int>(c.matching.size()));
          if (!c.holds() && !counterexample) counterexample = col;
        };
        if (exhaustive) {
          std::vector<int> col(n);
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (!lemma_hypothesis(lk, lh, std::popcount(mask), which)) continue;
            for (int i = 0; i < n; ++i) col[i] = (mask >> i) & 1;
            consider(col);
          }
        } else {
          Rng rng(cfg.seed);
          for (int s = 0; s < *samples; ++s) consider(random_hypothesis_coloring(lk, lh, which, rng));
        }
        const bool holds = !counterexample;
        all = all && holds;
        results.push_back({{"count", name},
                           {"tree_count", lemma_tree_count(lk, lh, which)},
                           {"checked", checked},
                           {"min_matching", checked ? json(min_matching) : json(nullptr)},
                           {"required", lh},
                           {"holds", holds},
                           {"counterexample", counterexample ? json(*counterexample) : json(nullptr)}});
      }
      detail::print(out,
                    json{{"k", lk}, {"h", lh}, {"vertices", n}, {"mode", exhaustive ? "exhaustive" : "sampled"},
                         {"results", results}},
                    cfg);
      return all ? ok : failed;
    };
  });

  // geom
  auto* geom = app.add_subcommand("geom", "Plane game")->require_subcommand(1);
  double eps = 0.1;
  int rounds = 10;
  int geom_samples = 1000;
  std::string robber_kind = "evasive", prober_kind = "predictive";
  for (const char* what : {"trilaterate", "two-cop", "escape", "approx"}) {
    auto* c = geom->add_subcommand(what, std::string("Run ") + what);
    c->add_option("--eps", eps, "Approximation slack epsilon")->check(CLI::PositiveNumber);
    c->add_option("--rounds", rounds, "Escape rounds")->check(CLI::Range(1, 1 << 20));
    c->add_option("--samples", geom_samples, "Trilateration instances")->check(CLI::Range(1, 1 << 24));
    c->add_option("--robber", robber_kind, "stationary|random|evasive");
    c->add_option("--prober", prober_kind, "center|random|far|predictive");
    c->callback([&, w = std::string(what)] {
      action = [&, w] {
        Rng rng(cfg.seed);
        json j;
        if (w == "trilaterate") {
          double worst = 0;
          for (int i = 0; i < geom_samples; ++i) {
            const plane::Point x = detail::random_point(rng, -100, 100);
            plane::Point p[3];
            do {
              for (auto& q : p) q = detail::random_point(rng, -100, 100);
            } while (std::abs(plane::cross(p[1] - p[0], p[2] - p[0])) < 1e-3 * plane::dist(p[1], p[0]) * plane::dist(p[2], p[0]));
            const double d[3] = {plane::dist(x, p[0]), plane::dist(x, p[1]), plane::dist(x, p[2])};
            worst = std::max(worst, plane::dist(plane::trilaterate(p, d), x));
          }
          j = {{"instances", geom_samples}, {"max_error", worst}};
        } else if (w == "two-cop") {
          const auto start = detail::random_point(rng, -20, 20);
          auto result = plane::two_cop_play(detail::make_robber(robber_kind, start, cfg.seed));
          j = plane::to_json(result);
          j["robber"] = plane::to_json(result.robber);
          j["error"] = plane::dist(result.robber, result.located);
        } else if (w == "escape") {
          auto trace = plane::one_cop_escape(detail::make_prober(prober_kind, cfg.seed), rounds);
          double sep = std::numeric_limits<double>::infinity();
          for (const auto& r : trace) sep = std::min(sep, r.separation);
          j = {{"prober", prober_kind}, {"rounds", plane::to_json(trace)}, {"min_separation", sep},
               {"survived", sep > 1e-6}};
        } else {
          const auto start = detail::random_point(rng, -20, 20);
          auto result = plane::approx_one_cop(detail::make_robber(robber_kind, start, cfg.seed), eps);
          j = plane::to_json(result);
          j["robber"] = plane::to_json(result.robber);
          j["error"] = plane::dist(result.robber, result.estimate);
        }
        detail::print(out, j, cfg);
        return ok;
      };
    });
  }

  // play
  auto* play = app.add_subcommand("play", "Interactive text-mode game");
  std::string role;
  int play_k = 1;
  std::string transcript;
  add_file(play);
  play->add_option("--role", role, "Your role")->required()->check(CLI::IsMember({"cop", "robber"}));
  play->add_option("--k", play_k, "Number of cops")->required()->check(CLI::PositiveNumber);
  play->add_option("--transcript", transcript, "Also save the JSON transcript here");
  play->callback([&] {
    action = [&] {
      Graph g = detail::load_graph(file);
      if (g.order() == 0 || !g.connected()) throw invalid_input("graph must be connected");
      json t = role == "robber" ? detail::play_robber(g, play_k, cfg, in, err) : detail::play_cop(g, play_k, cfg, in, err);
      if (!transcript.empty()) {
        std::ofstream f(transcript);
        if (!f) throw invalid_input("cannot write " + transcript);
        f << t.dump(2) << "\n";
      }
      detail::print(out, t, cfg);
      return ok;
    };
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    return fail(usage, "usage", e.what());
  }
  if (!action) return fail(usage, "usage", "no command given");
  try {
    return action();
  } catch (const usage_error& e) {
    return fail(usage, "usage", e.what());
  } catch (const detail::eof_abort& e) {
    return fail(usage, "aborted", e.what());
  } catch (const budget_exceeded& e) {
    return fail(limit, "budget_exceeded", e.what());
  } catch (const invalid_input& e) {
    return fail(bad_input, "invalid_input", e.what());
  } catch (const std::bad_alloc&) {
    return fail(limit, "out_of_memory", "out of memory");
  } catch (const std::exception& e) {
    return fail(bad_input, "error", e.what());
  }
}

}  // namespace locgame::cli

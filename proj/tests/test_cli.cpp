#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "locgame/cli.hpp"

// End-to-end runs of every subcommand against golden outputs in golden/.
// Set LOCGAME_UPDATE_GOLDEN=1 to rewrite them.

namespace fs = std::filesystem;
using locgame::json;

namespace {

const fs::path source_dir = LOCGAME_TEST_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("locgame_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

Run run(const std::string& cmdline, const std::string& input = "") {
  std::vector<std::string> args;
  std::istringstream ss(replace_all(replace_all(cmdline, "$DATA", (source_dir / "data").string()), "$TMP",
                                    scratch().string()));
  for (std::string tok; ss >> tok;) args.push_back(tok);
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = locgame::cli::run(args, in, out, err);
  return {code, replace_all(out.str(), scratch().string(), "$TMP"), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

bool updating() {
  const char* e = std::getenv("LOCGAME_UPDATE_GOLDEN");
  return e && std::string(e) == "1";
}

void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path file = source_dir / "golden" / name;
  if (updating()) {
    std::ofstream(file) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(file)) << file;
  EXPECT_EQ(actual, slurp(file)) << name;
}

struct Case {
  std::string name;
  std::string args;
  int code;
  std::string input;
  std::string produced;  // file written under $TMP, compared as <name>.graph
};

class Golden : public ::testing::TestWithParam<Case> {};

}  // namespace

TEST_P(Golden, MatchesStdoutAndExitCode) {
  const Case& c = GetParam();
  auto r = run(c.args, c.input);
  EXPECT_EQ(r.code, c.code) << r.err;
  expect_golden(c.name + ".out", r.out);
  if (!c.produced.empty()) expect_golden(c.name + ".graph", slurp(scratch() / c.produced));
  if (r.out.find('{') == 0) {
    EXPECT_NO_THROW((void)json::parse(r.out)) << r.out;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(
        Case{"gen_path", "graph gen path 5 -o $TMP/gen_path.txt", 0, "", "gen_path.txt"},
        Case{"gen_cbip", "graph gen complete_bipartite 2 3 -o $TMP/gen_cbip.txt", 0, "", "gen_cbip.txt"},
        Case{"gen_random_connected", "--seed 3 graph gen random_connected 8 0.3 -o $TMP/gen_rc.txt", 0, "", "gen_rc.txt"},
        Case{"gen_interval", "graph gen interval 0 2 1 3 2.5 4 -o $TMP/gen_iv.txt", 0, "", "gen_iv.txt"},
        Case{"gen_subdivide", "graph gen subdivide $DATA/s5.txt 1 -o $TMP/gen_sub.txt", 0, "", "gen_sub.txt"},
        Case{"solve_zeta_k23", "solve zeta $DATA/k23.txt", 0},
        Case{"solve_zeta_k4_maxk2", "solve zeta $DATA/k4.txt --max-k 2", 0},
        Case{"solve_zeta_fig1", "solve zeta $DATA/fig1.txt", 0},
        Case{"solve_dim_s5", "solve dim $DATA/s5.txt", 0},
        Case{"solve_bush_p6", "solve bush $DATA/p6.txt --max-k 2", 0},
        Case{"solve_blind_c6", "solve blind $DATA/c6.txt --max-k 2", 0},
        Case{"check_chain_k23", "check chain $DATA/k23.txt", 0},
        Case{"strategy_cbip", "strategy verify $DATA/k23.txt --family cbip", 0},
        Case{"strategy_cbip_k1", "strategy verify $DATA/k23.txt --family cbip --k 1", 4},
        Case{"strategy_path", "strategy verify $DATA/p6.txt --family path", 0},
        Case{"strategy_star", "strategy verify $DATA/s5.txt --family star", 0},
        Case{"strategy_bipartite_c6", "strategy verify $DATA/c6.txt --family bipartite", 0},
        Case{"strategy_pathwidth_decomp", "strategy verify $DATA/p6.txt --family pathwidth --decomp $DATA/p6.decomp", 0},
        Case{"strategy_pathwidth_fig1", "strategy verify $DATA/fig1.txt --family pathwidth", 0},
        Case{"strategy_star_k1_on_k4", "strategy verify $DATA/k4.txt --family star", 2},
        Case{"locating_min_c4", "locating min $DATA/c4.txt", 0},
        Case{"locating_min_dominating_c4", "locating min $DATA/c4.txt --dominating", 0},
        Case{"reduce_isolated", "reduce isolated $DATA/c4.txt -o $TMP/red_iso.txt", 0, "", "red_iso.txt"},
        Case{"reduce_uvw", "reduce uvw $DATA/c4.txt -o $TMP/red_uvw.txt", 0, "", "red_uvw.txt"},
        Case{"reduce_multiuniversal", "reduce multiuniversal $DATA/c4.txt -o $TMP/red_mu.txt", 0, "", "red_mu.txt"},
        Case{"verify_thm53_c4", "verify thm53 $DATA/c4.txt", 0},
        Case{"lemma_k1_h1", "lemma bimatching --k 1 --h 1", 0},
        Case{"lemma_k1_h2", "--seed 7 lemma bimatching --k 1 --h 2 --samples 50", 0},
        Case{"geom_trilaterate", "--seed 4 geom trilaterate --samples 200", 0},
        Case{"geom_two_cop", "--seed 5 geom two-cop --robber evasive", 0},
        Case{"geom_escape", "geom escape --rounds 3 --prober far", 0},
        Case{"geom_approx", "--seed 6 geom approx --eps 0.1 --robber random", 0},
        Case{"play_robber_s5", "play $DATA/s5.txt --role robber --k 1", 0, "3\n0\n"},
        Case{"play_cop_k4", "play $DATA/k4.txt --role cop --k 2", 0, "0 1\n"},
        Case{"play_cop_all", "play $DATA/k4.txt --role cop --k 4", 0, "0 1 2 3\n"},
        Case{"plain_zeta", "--format plain solve zeta $DATA/k23.txt", 0},
        Case{"budget_exceeded", "--max-states 1 solve zeta $DATA/fig1.txt", 3},
        Case{"missing_file", "solve zeta $DATA/no_such_file.txt", 2},
        Case{"duplicate_edge", "solve zeta $DATA/duplicate.txt", 2},
        Case{"unknown_command", "frobnicate", 1}),
    [](const auto& info) { return info.param.name; });

TEST(Cli, ErrorsAreSingleLineJsonOnStderr) {
  for (auto [cmd, code] : std::vector<std::pair<std::string, int>>{
           {"frobnicate", 1}, {"solve zeta $DATA/no_such_file.txt", 2}, {"--max-states 1 solve zeta $DATA/fig1.txt", 3}}) {
    auto r = run(cmd);
    EXPECT_EQ(r.code, code);
    EXPECT_TRUE(r.out.empty());
    ASSERT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    auto j = json::parse(r.err);
    EXPECT_EQ(j["exit"], code);
  }
}

TEST(Cli, PlainErrorsAreText) {
  auto r = run("--format plain solve zeta $DATA/no_such_file.txt");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  for (int seed = 1; seed <= 3; ++seed) {
    auto g = run("--seed " + std::to_string(seed) + " graph gen random_connected 10 0.2 -o $TMP/threads.txt");
    ASSERT_EQ(g.code, 0);
    auto a = run("--threads 1 solve zeta $TMP/threads.txt --max-k 3");
    auto b = run("--threads 4 solve zeta $TMP/threads.txt --max-k 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, SeedReproducesOutput) {
  EXPECT_EQ(run("--seed 9 geom approx --eps 0.01").out, run("--seed 9 geom approx --eps 0.01").out);
  EXPECT_NE(run("--seed 9 geom approx --eps 0.01").out, run("--seed 10 geom approx --eps 0.01").out);
}

TEST(Cli, EnvironmentBudgetFallback) {
  ::setenv("LOCGAME_MAX_STATES", "1", 1);
  auto r = run("solve zeta $DATA/fig1.txt");
  auto explicit_flag = run("--max-states 100000 solve zeta $DATA/fig1.txt");
  ::setenv("LOCGAME_MAX_STATES", "oops", 1);
  auto bad = run("solve zeta $DATA/fig1.txt");
  ::unsetenv("LOCGAME_MAX_STATES");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(explicit_flag.code, 0);
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, PlayRepromptsAndAbortsOnEof) {
  auto r = run("play $DATA/k4.txt --role cop --k 4", "0 1\nx y z w\n0 1 2 3\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("illegal probe"), std::string::npos);
  auto eof = run("play $DATA/k4.txt --role cop --k 4", "0 1\n");
  EXPECT_EQ(eof.code, 1);
  auto robber = run("play $DATA/s5.txt --role robber --k 1", "9\n3\n2\n0\n");
  EXPECT_EQ(robber.code, 0);
  EXPECT_NE(robber.err.find("illegal move"), std::string::npos);
}

TEST(Cli, PlayTranscriptFile) {
  auto r = run("play $DATA/s5.txt --role robber --k 1 --transcript $TMP/transcript.json", "3\n0\n");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(slurp(scratch() / "transcript.json"));
  EXPECT_EQ(j["outcome"], "cop wins");
  EXPECT_LE(j["turns"].size(), 3u);
}

TEST(Cli, HelpExitsCleanly) {
  auto r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

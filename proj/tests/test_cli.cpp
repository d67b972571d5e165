#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "bgp/cli.hpp"

using namespace bgp;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> tsv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, '\t');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, ExactOnPathOfTwelve) {
  const auto r = cli({"partition", "--gen", "path:12:0", "--k", "3", "--algo", "exact"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sizes"], (std::vector<int>{4, 4, 4}));
  EXPECT_EQ(j["certificate"]["tag"], "OracleExact");
}

TEST(Cli, StarVerifies) {
  const auto r = cli({"partition", "--gen", "star:7:0", "--k", "3", "--algo", "approx3", "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["certificate"]["tag"], "StarOptimal");
  EXPECT_EQ(j["certificate"]["witness"]["center"], 0);
  EXPECT_EQ(j["verification"]["certificate_ok"], true);
  EXPECT_EQ(j["verification"]["ratio"], "1");
}

TEST(Cli, MissingInputIsConfigError) {
  const auto r = cli({"partition", "--input", "missing.txt", "--k", "3", "--algo", "approx3"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("missing.txt"), std::string::npos);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(cli({"partition", "--gen", "path:12:0", "--k", "4", "--algo", "approx3"}).code, kExitConfig);
  EXPECT_EQ(cli({"partition", "--gen", "path:12:0", "--k", "3", "--algo", "magic"}).code, kExitConfig);
  EXPECT_EQ(cli({"partition", "--gen", "path:20:0", "--k", "3", "--algo", "exact"}).code, kExitConfig);
  EXPECT_EQ(cli({"partition", "--gen", "path:12:0", "--algo", "exact"}).code, kExitConfig);
  EXPECT_EQ(cli({"partition", "--k", "3", "--algo", "exact"}).code, kExitConfig);
  EXPECT_EQ(cli({"partition", "--gen", "path:12:0", "--input", "x", "--k", "3", "--algo", "exact"}).code, kExitConfig);
  EXPECT_EQ(cli({"partition", "--gen", "path:12:0", "--k", "3", "--algo", "exact", "--format", "xml"}).code, kExitConfig);
  EXPECT_EQ(cli({}).code, kExitConfig);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(Cli, ReadsEdgeListFiles) {
  const std::string path = ::testing::TempDir() + "bgp_cli_graph.txt";
  {
    std::ofstream out(path);
    out << "5 4\n0 1\n1 2\n2 3\n3 4\n";
  }
  const auto r = cli({"partition", "--input", path, "--k", "3", "--algo", "approx3", "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["n"], 5);
}

TEST(Cli, JsonReconstructsAFeasiblePartition) {
  for (const char* gen : {"random:12:4", "grid:12:0", "caterpillar:11:0"}) {
    const auto r = cli({"partition", "--gen", gen, "--k", "4", "--algo", "approx4", "--trace"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const Graph g = generate(parse_generator_spec(gen));
    const Partition p = partition_from_json(j);
    EXPECT_TRUE(check_feasible(g, p)) << gen;
    EXPECT_EQ(j["sizes"], rank(p).sizes);
    ASSERT_TRUE(j["trace"].is_array());
    for (const auto& step : j["trace"]) EXPECT_TRUE(step.contains("rank_after"));
  }
}

TEST(Cli, OutputIsByteDeterministic) {
  for (const char* fmt : {"json", "dot"}) {
    const std::vector<std::string> args{"partition", "--gen", "random:14:9", "--k", "4", "--algo", "approx4", "--format", fmt, "--trace"};
    EXPECT_EQ(cli(args).out, cli(args).out);
  }
}

TEST(Cli, TsvFormat) {
  const auto r = cli({"partition", "--gen", "path:9:0", "--k", "3", "--algo", "approx3", "--format", "tsv", "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = tsv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "family");
  EXPECT_EQ(rows[1][0], "path");
  EXPECT_EQ(rows[1][6], "3");
  EXPECT_NE(r.err.find("verification"), std::string::npos);
}

TEST(Dot, PathOfTwelve) {
  const auto r = cli({"partition", "--gen", "path:12:0", "--k", "3", "--algo", "exact", "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk);
  const std::regex node(R"(^  (\d+) \[fillcolor="([^"]+)\"[^\n]*\];$)");
  const std::regex edge(R"(^  \d+ -- \d+;$)");
  std::set<std::string> colors;
  int nodes = 0, edges = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_match(line, m, node)) {
      ++nodes;
      colors.insert(m[2]);
    } else if (std::regex_match(line, edge)) {
      ++edges;
    }
  }
  EXPECT_EQ(nodes, 12);
  EXPECT_EQ(edges, 11);
  EXPECT_EQ(colors.size(), 3u);
}

TEST(Dot, StarCenterDoubleCircled) {
  const auto r = cli({"partition", "--gen", "star:7:0", "--k", "3", "--algo", "approx3", "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("  0 [fillcolor=\"#bebada\", shape=doublecircle];"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("shape=doublecircle"), r.out.rfind("shape=doublecircle"));
}

TEST(Dot, GoldenFile) {
  const auto r = cli({"partition", "--gen", "random:10:42", "--k", "4", "--algo", "approx4", "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, read_file(std::string(BGP_GOLDEN_DIR) + "/random_10_42_approx4.dot"));
}

TEST(Bench, ShapeMismatchIsConfigError) {
  const auto r = cli({"bench", "--families", "random", "--sizes", "8..9", "--k", "4", "--algo", "approx3"});
  EXPECT_EQ(r.code, kExitConfig);
}

TEST(Bench, BadArguments) {
  EXPECT_EQ(cli({"bench", "--families", "random", "--sizes", "9..8", "--k", "4", "--algo", "approx4"}).code, kExitConfig);
  EXPECT_EQ(cli({"bench", "--families", "blob", "--sizes", "8", "--k", "4", "--algo", "approx4"}).code, kExitConfig);
  EXPECT_EQ(cli({"bench", "--families", "path", "--sizes", "14..15", "--k", "4", "--algo", "approx4"}).code, kExitConfig);
  EXPECT_EQ(cli({"bench", "--families", "path", "--sizes", "8", "--k", "4", "--algo", "approx4", "--count", "0"}).code,
            kExitConfig);
}

TEST(Bench, RandomApprox4WithinClaim) {
  const auto r = cli({"bench", "--families", "random", "--sizes", "8..12", "--count", "50", "--k", "4", "--algo", "approx4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = tsv_rows(r.out);
  ASSERT_EQ(rows.size(), 251u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto ratio = rows[i][7];
    const auto slash = ratio.find('/');
    const Fraction f = slash == std::string::npos ? Fraction(std::stoll(ratio))
                                                  : Fraction(std::stoll(ratio.substr(0, slash)), std::stoll(ratio.substr(slash + 1)));
    EXPECT_LE(f, Fraction(24, 13));
  }
  EXPECT_NE(r.out.find("# instances=250 "), std::string::npos);
  EXPECT_NE(r.out.find(" violations=0 certificate_failures=0"), std::string::npos);
}

TEST(Bench, StarsAreExact) {
  const auto r = cli({"bench", "--families", "star", "--sizes", "5..14", "--count", "2", "--k", "3", "--algo", "approx3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = tsv_rows(r.out);
  ASSERT_EQ(rows.size(), 21u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][7], "1");
  EXPECT_NE(r.out.find("max_ratio=1 "), std::string::npos);
}

TEST(Bench, RowsOrderedAndDeterministic) {
  const std::vector<std::string> args{"bench", "--families", "path,cycle", "--sizes", "6..7", "--count", "2", "--k", "4",
                                      "--algo", "approxk", "--seed", "5"};
  const auto a = cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const auto rows = tsv_rows(a.out);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[1][0], "path");
  EXPECT_EQ(rows[1][1], "6");
  EXPECT_EQ(rows[1][2], "5");
  EXPECT_EQ(rows[2][2], "6");
  EXPECT_EQ(rows[8][0], "cycle");
  EXPECT_EQ(rows[8][1], "7");
}

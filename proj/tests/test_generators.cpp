#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "bgp/edge_list.hpp"
#include "bgp/generators.hpp"

using namespace bgp;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Generate, PathAndStar) {
  const Graph p = generate({Family::Path, 12, 0});
  EXPECT_EQ(p.edge_count(), 11u);
  for (Vertex v = 1; v < 12; ++v) EXPECT_TRUE(p.has_edge(v - 1, v));
  const Graph s = generate({Family::Star, 7, 0});
  EXPECT_EQ(s.neighbors(0).size(), 6u);
  for (Vertex v = 1; v < 7; ++v) EXPECT_EQ(s.neighbors(v).size(), 1u);
}

TEST(Generate, OtherFamilies) {
  const Graph c = generate({Family::Cycle, 9, 0});
  EXPECT_EQ(c.edge_count(), 9u);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(c.neighbors(v).size(), 2u);
  const Graph grid = generate({Family::Grid, 12, 0});
  EXPECT_EQ(grid.edge_count(), 17u);  // 3x4
  const Graph cat = generate({Family::Caterpillar, 10, 0});
  EXPECT_EQ(cat.edge_count(), 9u);
  EXPECT_THROW(generate({Family::Cycle, 2, 0}), Error);
  EXPECT_THROW(generate({Family::Path, 0, 0}), Error);
}

TEST(Generate, RandomGoldenFile) {
  GeneratorSpec spec{Family::RandomConnected, 10, 42};
  const std::string text = to_edge_list(generate(spec));
  EXPECT_EQ(text, read_file(std::string(BGP_GOLDEN_DIR) + "/random_connected_10_42.txt"));
}

TEST(Generate, DeterministicInSeed) {
  for (Family f : {Family::RandomConnected, Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3})
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      const GeneratorSpec spec{f, 40, seed};
      EXPECT_EQ(to_edge_list(generate(spec)), to_edge_list(generate(spec)));
    }
  EXPECT_NE(to_edge_list(generate({Family::RandomConnected, 12, 1})), to_edge_list(generate({Family::RandomConnected, 12, 2})));
}

TEST(Generate, RandomGraphsAreConnectedTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorSpec spec{Family::RandomConnected, 25, seed};
    spec.edge_probability = 0;
    const Graph g = generate(spec);
    EXPECT_EQ(g.edge_count(), 24u);
  }
  GeneratorSpec full{Family::RandomConnected, 8, 3};
  full.edge_probability = 1;
  EXPECT_EQ(generate(full).edge_count(), 28u);
  full.edge_probability = 1.5;
  EXPECT_THROW(generate(full), Error);
}

TEST(Generate, PlantedPartitionShape) {
  for (Family f : {Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3})
    for (int n : {15, 30, 60}) {
      const Instance inst = generate_instance({f, n, 5});
      ASSERT_TRUE(inst.planted);
      const Partition& p = *inst.planted;
      EXPECT_TRUE(check_feasible(inst.graph, p));
      EXPECT_EQ(p.card(0), p.card(1));
      EXPECT_GT(5 * p.size(), 2 * n);
      EXPECT_LT(6 * p.card(1), p.size());
    }
  EXPECT_THROW(generate({Family::DoubleStarCase1, 10, 0}), Error);
}

TEST(ParseSpec, Forms) {
  const auto a = parse_generator_spec("path:12:3");
  EXPECT_EQ(a.family, Family::Path);
  EXPECT_EQ(a.n, 12);
  EXPECT_EQ(a.seed, 3u);
  const auto b = parse_generator_spec("random:10");
  EXPECT_EQ(b.family, Family::RandomConnected);
  EXPECT_EQ(b.seed, 0u);
  for (const char* bad : {"path", "blob:3:1", "path:x:1", "path:3:y", "path:3:1:2"}) {
    try {
      parse_generator_spec(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidSpec) << bad;
    }
  }
}

TEST(Rng, BoundedDrawsStayInRangeAndCoverIt) {
  Rng rng(7);
  std::vector<int> hits(6, 0);
  for (int i = 0; i < 6000; ++i) {
    const auto x = rng.between(3, 8);
    ASSERT_GE(x, 3);
    ASSERT_LE(x, 8);
    ++hits[static_cast<std::size_t>(x - 3)];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  Rng a(11), b(11);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.between(0, 1000), b.between(0, 1000));
}

#include <gtest/gtest.h>

#include <set>

#include "bgp/approx4.hpp"
#include "bgp/generators.hpp"
#include "bgp/verify.hpp"
#include "support/corpus.hpp"

using namespace bgp;

namespace {

Graph path(int n) { return generate({Family::Path, n, 0}); }

Graph bowtie() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

std::vector<GeneratorSpec> planted(Family f, int count) { return corpus::case_specs(f, count); }

}  // namespace

TEST(Merge4, PathOfTwenty) {
  const Graph g = path(20);
  const auto next = try_merge4(g, Partition({{0, 1}, {2, 3}, {4, 5}, VertexSet::range(6, 19)}));
  ASSERT_TRUE(next);
  EXPECT_EQ(rank(*next).sizes, (std::vector<int>{7, 7, 4, 2}));
  EXPECT_TRUE(check_feasible(g, *next));
}

TEST(Merge4, RequiresSumBelowLargest) {
  const Graph g = path(8);
  EXPECT_FALSE(try_merge4(g, Partition({{0}, {1, 2}, {3, 4}, VertexSet::range(5, 7)})));
  EXPECT_THROW(try_merge4(g, Partition({VertexSet::range(0, 3), VertexSet::range(4, 7)})), Error);
}

TEST(Pull4, PathOfTwenty) {
  const Graph g = path(20);
  const Partition before({{0}, {19}, VertexSet::range(1, 8), VertexSet::range(9, 18)});
  const auto next = try_pull4(g, before);
  ASSERT_TRUE(next);
  EXPECT_EQ(rank(*next).sizes, (std::vector<int>{10, 7, 2, 1}));
  EXPECT_TRUE(check_feasible(g, *next));
  EXPECT_TRUE(better_than(rank(*next), rank(before)));
}

TEST(BipartitionOrStar, PathInsideLargerGraph) {
  const Graph g = path(15);
  const auto r = bipartition_or_star(g, VertexSet::range(3, 11), 9);
  ASSERT_TRUE(r.balanced);
  EXPECT_EQ(r.smaller.size() + r.larger.size(), 9u);
  EXPECT_LE(r.larger.size(), 5u);
  EXPECT_TRUE(is_connected_subset(g, r.smaller));
  EXPECT_TRUE(is_connected_subset(g, r.larger));
}

TEST(BipartitionOrStar, StarOfSeven) {
  const Graph g = generate({Family::Star, 7, 0});
  const auto r = bipartition_or_star(g, g.vertices(), 7);
  ASSERT_FALSE(r.balanced);
  EXPECT_EQ(r.center, 0);
  EXPECT_EQ(r.components.size(), 6u);
}

TEST(BipartitionOrStar, BowtieIsBalanced) {
  const Graph g = bowtie();
  const auto r = bipartition_or_star(g, g.vertices(), 5);
  ASSERT_TRUE(r.balanced);
  EXPECT_EQ(r.smaller.size(), 2u);
  EXPECT_EQ(r.larger.size(), 3u);
  EXPECT_TRUE(is_connected_subset(g, r.smaller));
  EXPECT_TRUE(is_connected_subset(g, r.larger));
}

TEST(BipartitionOrStar, Errors) {
  const Graph g = path(6);
  try {
    bipartition_or_star(g, {0, 1}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateSubset);
  }
  try {
    bipartition_or_star(g, {0, 1, 3}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DisconnectedSubset);
  }
}

TEST(BipartitionOrStar, OutcomeMatchesBruteForce) {
  // A balanced answer exists unless every piece around some vertex is below a third.
  for (const auto& ng : corpus::random_graphs(120)) {
    const Graph& g = ng.graph;
    const auto r = bipartition_or_star(g, g.vertices(), g.order());
    const long long n = g.order();
    if (r.balanced) {
      EXPECT_LE(3 * static_cast<long long>(r.larger.size()), 2 * n);
      EXPECT_TRUE(is_connected_subset(g, r.smaller) && is_connected_subset(g, r.larger));
    } else {
      for (const auto& c : components_of_subset(g, g.vertices().minus(r.center)))
        EXPECT_LT(3 * static_cast<long long>(c.size()), n) << ng.label;
    }
  }
}

TEST(ClassifyCase, PlantedFamiliesClassifyAsIntended) {
  const std::pair<Family, int> families[] = {
      {Family::DoubleStarCase1, 1}, {Family::DoubleStarCase2, 2}, {Family::BiStarCase3, 3}};
  for (const auto& [family, want] : families)
    for (const auto& spec : planted(family, 12)) {
      const Instance inst = generate_instance(spec);
      ASSERT_TRUE(inst.planted);
      const auto cls = classify_case(inst.graph, *inst.planted);
      EXPECT_FALSE(cls.early) << spec.label();
      EXPECT_EQ(cls.structure.stall_case, want) << spec.label();
      if (want != 2) {
        EXPECT_TRUE(cls.structure.u.has_value());
      }
    }
}

TEST(Approx4, PathOfTwenty) {
  const Graph g = path(20);
  const Result r = approx4(g);
  EXPECT_EQ(rank(r.partition).sizes, (std::vector<int>{5, 5, 5, 5}));
  EXPECT_EQ(r.certificate.tag, CertificateTag::BoundMet);
  EXPECT_EQ(r.certificate.bound, Fraction(2, 5));
  EXPECT_TRUE(verify_certificate(g, r.partition, r.certificate));
}

TEST(Approx4, StarOfEleven) {
  const Graph g = generate({Family::Star, 11, 0});
  const Result r = approx4(g);
  EXPECT_EQ(rank(r.partition).sizes, (std::vector<int>{8, 1, 1, 1}));
  EXPECT_EQ(r.certificate.tag, CertificateTag::StarOptimal);
  EXPECT_EQ(exact_opt(g, 4).opt, 8);
  EXPECT_TRUE(verify_certificate(g, r.partition, r.certificate));
}

TEST(Approx4, RejectsTinyGraphs) {
  try {
    approx4(path(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NTooSmall);
  }
}

TEST(Approx4, RatioAndCertificatesOnRandomGraphs) {
  for (const auto& ng : corpus::random_graphs(200)) {
    const Graph& g = ng.graph;
    const Result r = approx4(g);
    ASSERT_TRUE(check_feasible(g, r.partition)) << ng.label;
    EXPECT_TRUE(at_most(r.partition.size(), Fraction(24, 13), exact_opt(g, 4).opt)) << ng.label;
    EXPECT_TRUE(verify_certificate(g, r.partition, r.certificate)) << ng.label;
  }
}

TEST(Approx4, PlantedStallsReachEveryUpdateAndCertificate) {
  std::set<OpKind> ops;
  std::set<std::pair<int, Fraction>> endings;
  for (Family f : {Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3})
    for (const auto& spec : planted(f, 40)) {
      const Instance inst = generate_instance(spec);
      const Result r = approx4_from(inst.graph, *inst.planted);
      const auto ok = verify_certificate(inst.graph, r.partition, r.certificate);
      EXPECT_TRUE(ok) << spec.label() << ": " << ok.reason;
      const long long n = inst.graph.order();
      EXPECT_LE(improvement_count(r.trace), static_cast<std::size_t>(5 * n * n));
      for (const auto& step : r.trace) {
        ops.insert(step.kind);
        EXPECT_TRUE(better_than(step.rank_after, step.rank_before)) << spec.label();
        EXPECT_TRUE(check_feasible(inst.graph, step.after)) << spec.label();
      }
      if (r.certificate.tag == CertificateTag::BiStarRatio) endings.insert({r.certificate.stall_case, r.certificate.ratio});
    }
  for (OpKind k : {OpKind::Bridge1, OpKind::Bridge2, OpKind::Bridge3, OpKind::Rebalance})
    EXPECT_TRUE(ops.count(k)) << "never applied " << to_string(k);
  EXPECT_TRUE(endings.count({1, Fraction(24, 13)}));
  EXPECT_TRUE(endings.count({1, Fraction(12, 7)}));
  EXPECT_TRUE(endings.count({2, Fraction(12, 7)}) || endings.count({2, Fraction(3, 2)}));
  EXPECT_TRUE(endings.count({3, Fraction(4, 3)}) || endings.count({3, Fraction(24, 13)}));
}

TEST(Bridge, FiresOnlyAboveThreshold) {
  for (const auto& spec : planted(Family::DoubleStarCase1, 30)) {
    const Instance inst = generate_instance(spec);
    const Partition& p = *inst.planted;
    const auto cls = classify_case(inst.graph, p);
    if (case1_ratio_holds(inst.graph, p, cls.structure)) {
      auto s = cls.structure;
      const auto split = bipartition_or_star(inst.graph, p.part(kV3), p.card(kV3));
      if (split.balanced) continue;
      s.v = split.center;
      s.comps3 = split.components;
      EXPECT_FALSE(try_bridge1(inst.graph, p, s)) << spec.label();
    }
  }
}

#include <gtest/gtest.h>

#include <set>

#include "ddg/construct.hpp"
#include "ddg/error.hpp"
#include "ddg/symplectic.hpp"
#include "ddg/verify.hpp"
#include "support.hpp"

namespace ddg {
namespace {

using testing::complete;
using testing::cycle;
using testing::from_edges;
using testing::petersen;
using testing::random_graph;
using testing::shuffled;

TEST(DdgVerify, SporadicGraph) {
  const auto s = sporadic28();
  const auto r = ddg_verify(s.graph, s.partition);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.params, (DdgParams{28, 6, 2, 1, 7, 4}));
  EXPECT_TRUE(r.params.proper());
}

TEST(DdgVerify, CompleteGraphIsImproper) {
  const auto r = ddg_verify(complete(4), Partition::blocks(2, 2));
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.params.lambda1, r.params.lambda2);
  EXPECT_FALSE(r.params.proper());
}

TEST(DdgVerify, PathIsNotRegular) {
  const auto r = ddg_verify(testing::path(4), Partition::blocks(2, 2));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failure, DdgFailure::NotRegular);
  EXPECT_GE(r.witness_x, 0);
}

TEST(DdgVerify, WrongPartitionReportsLambdaWitness) {
  const auto s = sporadic28();
  std::vector<int> labels = s.partition.labels();
  std::swap(labels[0], labels[27]);
  const auto r = ddg_verify(s.graph, Partition(labels));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.failure == DdgFailure::Lambda1 || r.failure == DdgFailure::Lambda2);
  EXPECT_NE(r.count, r.expected);
}

TEST(DdgVerify, MalformedPartitionThrows) {
  EXPECT_THROW(ddg_verify(complete(4), Partition::blocks(2, 3)), Error);
  EXPECT_THROW(ddg_verify(complete(4), Partition(std::vector<int>{0, 0, 0, 1})), Error);
  EXPECT_THROW(Partition(std::vector<int>{0, 2, 2, 0}), Error);
}

TEST(Discover, SymplecticGraphHasOneProperPartition) {
  LocalRing ring(RingKind::IntegersModPSquared, 2);
  SymplecticGraph y(SymplecticVariant::Y, 2, ring);
  const auto d = partitions_discover(y.graph());
  const auto proper = d.proper();
  ASSERT_EQ(proper.size(), 1u);
  EXPECT_EQ(proper[0]->params, (DdgParams{120, 28, 12, 6, 15, 8}));
  EXPECT_TRUE(ddg_verify(y.graph(), proper[0]->partition).ok);
  EXPECT_FALSE(d.srg.has_value());
}

std::set<std::set<int>> as_sets(const Partition& p) {
  std::set<std::set<int>> out;
  for (int c = 0; c < p.class_count(); ++c) out.insert({p.members(c).begin(), p.members(c).end()});
  return out;
}

TEST(Discover, SporadicGraphRecoversItsBlocks) {
  const auto s = sporadic28();
  const auto d = partitions_discover(s.graph);
  const auto proper = d.proper();
  ASSERT_EQ(proper.size(), 1u);
  EXPECT_EQ(as_sets(proper[0]->partition), as_sets(s.partition));
}

TEST(Discover, PetersenIsStronglyRegular) {
  const auto d = partitions_discover(petersen());
  ASSERT_TRUE(d.srg.has_value());
  EXPECT_EQ(*d.srg, (SrgParams{10, 3, 0, 1}));
  EXPECT_TRUE(d.proper().empty());
}

TEST(Discover, RejectsIrregularAndOversized) {
  EXPECT_THROW(partitions_discover(testing::path(5)), Error);
  Limits tight;
  tight.max_discover_vertices = 20;
  EXPECT_THROW(partitions_discover(sporadic28().graph, tight), BoundError);
}

TEST(Identity, Examples) {
  const auto a = identity_check({16, 6, 2, 2, 4, 4});
  EXPECT_EQ(a.lhs, 30);
  EXPECT_EQ(a.rhs, 30);
  EXPECT_TRUE(a.pass);
  const auto b = identity_check({120, 28, 12, 6, 15, 8});
  EXPECT_EQ(b.lhs, 756);
  EXPECT_EQ(b.rhs, 756);
  EXPECT_TRUE(b.pass);
  const auto c = identity_check({120, 28, 12, 6, 8, 15});
  EXPECT_EQ(c.lhs, 798);
  EXPECT_EQ(c.rhs, 756);
  EXPECT_FALSE(c.pass);
  EXPECT_TRUE(c.v_is_mn);
}

TEST(Refinement, DigestIsPermutationInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(30, 0.3, seed);
    const auto [h, perm] = shuffled(g, seed + 100);
    const auto cg = refine_colours(g), ch = refine_colours(h);
    EXPECT_EQ(cg.digest, ch.digest);
    EXPECT_EQ(cg.colour_count, ch.colour_count);
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_EQ(cg.colour[static_cast<std::size_t>(v)], ch.colour[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]);
    }
  }
}

TEST(Iso, GraphWithItself) {
  const auto g = petersen();
  const auto r = iso_check(g, g);
  ASSERT_EQ(r.status, IsoStatus::Isomorphic);
  EXPECT_TRUE(is_isomorphism(g, g, r.mapping));
}

TEST(Iso, HexagonVersusTwoTriangles) {
  const auto two_triangles = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto r = iso_check(cycle(6), two_triangles);
  EXPECT_EQ(r.status, IsoStatus::NonIsomorphic);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Iso, RandomRelabelingsAreFound) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_graph(25 + static_cast<int>(seed % 20), 0.4, seed);
    const auto [h, perm] = shuffled(g, seed + 1000);
    const auto r = iso_check(g, h);
    ASSERT_EQ(r.status, IsoStatus::Isomorphic) << "seed " << seed;
    EXPECT_TRUE(is_isomorphism(g, h, r.mapping));
  }
}

TEST(Iso, RegularGraphsNeedSearch) {
  const auto s = sporadic28();
  const auto [h, perm] = shuffled(s.graph, 9);
  const auto r = iso_check(s.graph, h);
  ASSERT_EQ(r.status, IsoStatus::Isomorphic);
  EXPECT_TRUE(is_isomorphism(s.graph, h, r.mapping));

  // Flip one edge pair while keeping degrees: a 2-switch.
  auto g2 = s.graph;
  int a = -1, b = -1, c = -1, d = -1;
  for (int x = 0; x < 28 && a < 0; ++x) {
    for (int y : g2.neighbours(x)) {
      for (int z = 0; z < 28 && a < 0; ++z) {
        for (int w : g2.neighbours(z)) {
          if (std::set<int>{x, y, z, w}.size() == 4 && !g2.adjacent(x, z) && !g2.adjacent(y, w)) {
            a = x, b = y, c = z, d = w;
            break;
          }
        }
      }
      if (a >= 0) break;
    }
  }
  ASSERT_GE(a, 0);
  g2.remove_edge(a, b);
  g2.remove_edge(c, d);
  g2.add_edge(a, c);
  g2.add_edge(b, d);
  EXPECT_EQ(iso_check(s.graph, g2).status, IsoStatus::NonIsomorphic);
}

TEST(Iso, TimeoutIsUnknown) {
  LocalRing ring(RingKind::PolynomialsModXSquared, 2);
  const auto g = SymplecticGraph(SymplecticVariant::Y, 2, ring).graph();
  const auto [h, perm] = shuffled(g, 4);
  IsoOptions options;
  options.budget = std::chrono::milliseconds(0);
  const auto r = iso_check(g, h, options);
  EXPECT_EQ(r.status, IsoStatus::Unknown);
  EXPECT_TRUE(r.mapping.empty());
}

TEST(Iso, Bound) {
  IsoOptions options;
  options.limits.max_iso_vertices = 10;
  const auto g = random_graph(11, 0.5, 1);
  EXPECT_THROW(iso_check(g, g, options), BoundError);
}

// The two rings give non-isomorphic Y graphs with matching parameters.
TEST(Iso, SymplecticRingsDiffer) {
  const auto y1 = SymplecticGraph(SymplecticVariant::Y, 2, LocalRing(RingKind::IntegersModPSquared, 2)).graph();
  const auto y2 = SymplecticGraph(SymplecticVariant::Y, 2, LocalRing(RingKind::PolynomialsModXSquared, 2)).graph();
  const auto r = iso_check(y1, y2);
  EXPECT_EQ(r.status, IsoStatus::NonIsomorphic) << r.reason;
}

TEST(IsIsomorphism, RejectsBadMappings) {
  const auto g = petersen();
  std::vector<int> identity(10);
  for (int i = 0; i < 10; ++i) identity[static_cast<std::size_t>(i)] = i;
  EXPECT_TRUE(is_isomorphism(g, g, identity));
  auto swapped = identity;
  std::swap(swapped[0], swapped[5]);
  EXPECT_FALSE(is_isomorphism(g, g, swapped));
  auto repeated = identity;
  repeated[1] = 0;
  EXPECT_FALSE(is_isomorphism(g, g, repeated));
  EXPECT_FALSE(is_isomorphism(g, g, {0, 1, 2}));
}

}  // namespace
}  // namespace ddg

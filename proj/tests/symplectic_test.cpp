#include <gtest/gtest.h>

#include "ddg/error.hpp"
#include "ddg/rng.hpp"
#include "ddg/symplectic.hpp"

namespace ddg {
namespace {

const LocalRing& z4() {
  static const LocalRing ring(RingKind::IntegersModPSquared, 2);
  return ring;
}
const LocalRing& f2x() {
  static const LocalRing ring(RingKind::PolynomialsModXSquared, 2);
  return ring;
}

TEST(SymplecticGraph, Degrees) {
  for (const auto* ring : {&z4(), &f2x()}) {
    SymplecticGraph y(SymplecticVariant::Y, 2, *ring);
    SymplecticGraph x(SymplecticVariant::X, 2, *ring);
    ASSERT_EQ(y.graph().order(), 120);
    for (int v = 0; v < 120; ++v) {
      EXPECT_EQ(y.graph().degree(v), 28);
      EXPECT_EQ(x.graph().degree(v), 92);
    }
    EXPECT_TRUE(y.graph().is_simple());
  }
}

TEST(SymplecticGraph, EdgeRuleIsWellDefined) {
  SymplecticGraph y(SymplecticVariant::Y, 2, z4());
  EXPECT_TRUE(y.well_defined_on_sample(2000));
  SymplecticGraph x(SymplecticVariant::X, 2, f2x());
  EXPECT_TRUE(x.well_defined_on_sample(2000));
  LocalRing z9(RingKind::IntegersModPSquared, 3);
  EXPECT_TRUE(SymplecticGraph(SymplecticVariant::Y, 1, z9).well_defined_on_sample(500));
}

TEST(SymplecticGraph, YIsASubgraphOfX) {
  SymplecticGraph y(SymplecticVariant::Y, 2, z4());
  SymplecticGraph x(SymplecticVariant::X, 2, z4());
  for (int a = 0; a < 120; ++a) {
    for (int b = 0; b < 120; ++b) {
      if (y.graph().adjacent(a, b)) {
        EXPECT_TRUE(x.graph().adjacent(a, b));
      }
    }
  }
}

TEST(SymplecticGraph, FormIsAlternating) {
  SymplecticGraph y(SymplecticVariant::Y, 2, z4());
  const auto& classes = y.classes();
  for (int a = 0; a < classes.size(); ++a) {
    EXPECT_EQ(y.form(classes.representative(a), classes.representative(a)), 0);
    for (int b = 0; b < classes.size(); b += 7) {
      const int ab = y.form(classes.representative(a), classes.representative(b));
      const int ba = y.form(classes.representative(b), classes.representative(a));
      EXPECT_EQ(z4().add(ab, ba), 0);
    }
  }
}

TEST(ParamsBg, PublishedFormulas) {
  const auto y = params_bg(SymplecticVariant::Y, 2, 2);
  EXPECT_EQ(y.params, (DdgParams{120, 28, 12, 6, 8, 15}));
  EXPECT_FALSE(y.identity.pass);
  const auto x = params_bg(SymplecticVariant::X, 2, 2);
  EXPECT_EQ(x.params, (DdgParams{120, 92, 76, 70, 8, 15}));
  EXPECT_FALSE(x.identity.pass);

  // With the class roles exchanged the counting identity holds.
  auto swapped = y.params;
  std::swap(swapped.m, swapped.n);
  EXPECT_TRUE(identity_check(swapped).pass);
  EXPECT_THROW(params_bg(SymplecticVariant::Y, 6, 2), Error);
}

Partition discovered_partition(const Graph& g) {
  const auto d = partitions_discover(g);
  const auto proper = d.proper();
  EXPECT_EQ(proper.size(), 1u);
  return proper.front()->partition;
}

TEST(PcRelation, HoldsOnDiscoveredPartition) {
  SymplecticGraph y(SymplecticVariant::Y, 2, z4());
  SymplecticGraph x(SymplecticVariant::X, 2, z4());
  const auto p = discovered_partition(y.graph());
  EXPECT_EQ(p.class_count(), 15);
  const auto r = pc_relation_check(x, y, p);
  EXPECT_TRUE(r.holds) << r.message;
  EXPECT_FALSE(r.degenerate);
}

TEST(PcRelation, FailsOnRandomPartitionWithWitness) {
  SymplecticGraph y(SymplecticVariant::Y, 2, f2x());
  SymplecticGraph x(SymplecticVariant::X, 2, f2x());
  Rng rng(5);
  auto perm = rng.permutation(120);
  std::vector<int> labels(120);
  for (int v = 0; v < 120; ++v) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v / 8;
  const auto r = pc_relation_check(x, y, Partition(labels));
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.degenerate);
  EXPECT_GE(r.block_a, 0);
  EXPECT_GE(r.block_b, 0);
  EXPECT_FALSE(r.message.empty());
}

TEST(PcRelation, WrongVariantsAreDegenerate) {
  SymplecticGraph x(SymplecticVariant::X, 2, z4());
  const auto r = pc_relation_check(x, x, Partition::blocks(15, 8));
  EXPECT_TRUE(r.degenerate);
  EXPECT_FALSE(r.holds);
  SymplecticGraph other(SymplecticVariant::Y, 2, f2x());
  EXPECT_THROW(pc_relation_check(x, other, Partition::blocks(15, 8)), Error);
}

DdgInstance y_instance(const LocalRing& ring) {
  SymplecticGraph y(SymplecticVariant::Y, 2, ring);
  DdgInstance t;
  t.graph = y.graph();
  t.partition = discovered_partition(t.graph);
  return t;
}

std::vector<ResolvableDesign> ag32_copies() {
  return std::vector<ResolvableDesign>(15, affine_from_ag(2, 3));
}

TEST(SigmaSearch, ZeroBudgetStopsImmediately) {
  SearchBudget budget;
  budget.time = std::chrono::milliseconds(0);
  const auto r = sigma_search(y_instance(f2x()), symdesign_null_polarity(2, 2), ag32_copies(), budget);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.phase, "time budget exhausted");
  EXPECT_EQ(r.attempts, 0);
}

TEST(SigmaSearch, EmptySeedBudget) {
  SearchBudget budget;
  budget.seed_count = 0;
  budget.max_translation_classes = 0;
  const auto r = sigma_search(sporadic28(), symdesign_fano(),
                              std::vector<ResolvableDesign>(7, affine_from_ag(2, 2)), budget);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.phase, "seed budget exhausted");
}

TEST(SigmaSearch, ParameterMismatchThrows) {
  EXPECT_THROW(sigma_search(y_instance(z4()), symdesign_fano(),
                            std::vector<ResolvableDesign>(7, affine_from_ag(2, 2)), {}),
               Error);
}

TEST(SigmaSearch, FindsSporadicGraph) {
  const auto target = sporadic28();
  const auto designs = std::vector<ResolvableDesign>(7, affine_from_ag(2, 2));
  const auto r = sigma_search(target, symdesign_fano(), designs, {});
  ASSERT_TRUE(r.found) << r.phase;
  ASSERT_TRUE(r.labels.has_value());
  const auto built = construct1(*r.labels, designs, r.sigma);
  EXPECT_TRUE(is_isomorphism(built.graph, target.graph, r.mapping));
}

TEST(SigmaSearch, FindsPolynomialRingGraphInStructuredPhase) {
  const auto target = y_instance(f2x());
  const auto designs = ag32_copies();
  const auto r = sigma_search(target, symdesign_null_polarity(2, 2), designs, {});
  ASSERT_TRUE(r.found) << r.phase;
  EXPECT_EQ(r.phase, "translation classes");
  EXPECT_EQ(r.translation_classes, 1024);
  const auto built = construct1(*r.labels, designs, r.sigma);
  EXPECT_TRUE(is_isomorphism(built.graph, target.graph, r.mapping));
}

}  // namespace
}  // namespace ddg

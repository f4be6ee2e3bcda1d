#include <gtest/gtest.h>

#include <set>

#include "ddg/designs.hpp"
#include "ddg/error.hpp"
#include "ddg/symdesigns.hpp"

namespace ddg {
namespace {

void expect_params(const SymmetricDesignMatrix& a, int m, int kappa, int lambda) {
  EXPECT_EQ(a.params(), (SymmetricParams{m, kappa, lambda}));
  EXPECT_TRUE(symdesign_verify(a.rows()).ok);
  EXPECT_EQ(kappa * (kappa - 1), (m - 1) * lambda);
}

TEST(Fano, RowsAndParameters) {
  const auto a = symdesign_fano();
  expect_params(a, 7, 3, 1);
  EXPECT_EQ(a.rows()[0], (std::vector<int>{0, 1, 1, 1, 0, 0, 0}));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) EXPECT_EQ(a.at(i, j), a.at(j, i));
  }
}

TEST(Trivial, AllOnesAndComplementOfIdentity) {
  expect_params(symdesign_trivial(TrivialVariant::AllOnes, 3), 3, 3, 3);
  expect_params(symdesign_trivial(TrivialVariant::AllOnesMinusIdentity, 4), 4, 3, 2);
  expect_params(symdesign_trivial(TrivialVariant::AllOnesMinusIdentity, 3), 3, 2, 1);
  EXPECT_THROW(symdesign_trivial(TrivialVariant::AllOnes, 1), Error);
  EXPECT_THROW(symdesign_trivial(TrivialVariant::AllOnesMinusIdentity, 2), Error);
}

TEST(NullPolarity, SmallCases) {
  const auto a = symdesign_null_polarity(2, 2);
  expect_params(a, 15, 7, 3);
  for (int i = 0; i < 15; ++i) EXPECT_EQ(a.at(i, i), 1);
  ASSERT_TRUE(a.geometry().has_value());
  EXPECT_EQ(a.geometry()->points.size(), 15u);

  expect_params(symdesign_null_polarity(3, 2), 63, 31, 15);
  expect_params(symdesign_null_polarity(2, 3), 40, 13, 4);
}

TEST(DifferenceSets, PlanarAndBiplane) {
  expect_params(symdesign_difference_set(7, {1, 2, 4}), 7, 3, 1);
  expect_params(symdesign_difference_set(11, {1, 3, 4, 5, 9}), 11, 5, 2);
  EXPECT_THROW(symdesign_difference_set(7, {1, 2, 3}), Error);
}

TEST(SymdesignVerify, FailuresCarryWitnesses) {
  const BinaryMatrix identity{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto report = symdesign_verify(identity);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.message.empty());

  BinaryMatrix asym = symdesign_fano().rows();
  asym[0][4] = 1;
  EXPECT_FALSE(symdesign_verify(asym).ok);

  EXPECT_EQ(symdesign_verify({{1, 1}, {1}}).violated, SymmetricViolation::NotSquare);
  EXPECT_EQ(symdesign_verify({{1, 2}, {2, 1}}).violated, SymmetricViolation::NotBinary);
  EXPECT_THROW(SymmetricDesignMatrix{identity}, Error);
}

TEST(Labeling, CanonicalRowZero) {
  const auto labels = label_assign(symdesign_fano(), {});
  EXPECT_EQ(labels.labels()[0], (std::vector<int>{0, 1, 2, 3, 0, 0, 0}));
}

void expect_valid_rows(const LabeledMatrix& labels, const SymmetricDesignMatrix& a) {
  for (int i = 0; i < a.m(); ++i) {
    std::set<int> seen;
    for (int j = 0; j < a.m(); ++j) {
      EXPECT_EQ(labels.at(i, j) != 0, a.at(i, j) == 1);
      if (labels.at(i, j) != 0) seen.insert(labels.at(i, j));
    }
    EXPECT_EQ(static_cast<int>(seen.size()), a.kappa());
    EXPECT_EQ(*seen.begin(), 1);
    EXPECT_EQ(*seen.rbegin(), a.kappa());
  }
}

TEST(Labeling, SeededIsDeterministicAndSeedSensitive) {
  const auto a = symdesign_fano();
  LabelRequest r7{LabelStrategy::Seeded, 7, {}, 0};
  LabelRequest r8{LabelStrategy::Seeded, 8, {}, 0};
  const auto l7 = label_assign(a, r7);
  const auto l8 = label_assign(a, r8);
  expect_valid_rows(l7, a);
  expect_valid_rows(l8, a);
  EXPECT_FALSE(l7 == l8);
  EXPECT_TRUE(l7 == label_assign(a, r7));
}

TEST(Labeling, SeededRowsAreValidAcrossSeeds) {
  const auto a = symdesign_null_polarity(2, 2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    LabelRequest r{LabelStrategy::Seeded, seed, {}, 0};
    expect_valid_rows(label_assign(a, r), a);
  }
}

TEST(Labeling, ExplicitIsValidated) {
  const auto a = symdesign_fano();
  LabelRequest r;
  r.strategy = LabelStrategy::Explicit;
  r.explicit_labels = label_assign(a, {}).labels();
  EXPECT_NO_THROW(label_assign(a, r));

  r.explicit_labels[0][1] = r.explicit_labels[0][2];  // repeated label in row 0
  EXPECT_THROW(label_assign(a, r), Error);

  r.explicit_labels = label_assign(a, {}).labels();
  r.explicit_labels[0][0] = 1;  // label where A is zero
  EXPECT_THROW(label_assign(a, r), Error);
}

TEST(Labeling, SymmetricSearch) {
  const auto a = symdesign_trivial(TrivialVariant::AllOnes, 3);
  LabelRequest r;
  r.strategy = LabelStrategy::Symmetric;
  const auto labels = label_assign(a, r);
  EXPECT_TRUE(labels.entrywise_symmetric());
  expect_valid_rows(labels, a);
}

TEST(Labeling, PolarityLabelingIsValid) {
  const auto a = symdesign_null_polarity(2, 2);
  const auto design = affine_from_ag(2, 3);
  const auto labels = label_polarity(a, design.normals());
  expect_valid_rows(labels, a);
}

}  // namespace
}  // namespace ddg

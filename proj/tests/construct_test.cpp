#include <gtest/gtest.h>

#include "ddg/construct.hpp"
#include "ddg/error.hpp"
#include "ddg/verify.hpp"

namespace ddg {
namespace {

std::vector<ResolvableDesign> copies(const ResolvableDesign& d, int m) {
  return std::vector<ResolvableDesign>(static_cast<std::size_t>(m), d);
}

DdgReport build_and_verify(const SymmetricDesignMatrix& a, const ResolvableDesign& design, const LabelRequest& lr,
                           const SigmaRequest& sr) {
  const auto labels = label_assign(a, lr);
  const auto designs = copies(design, a.m());
  const auto built = construct1(labels, designs, sigma_family_make(labels, designs, sr));
  return ddg_verify(built.graph, built.partition);
}

TEST(Sigma, IdentityFamily) {
  const auto a = symdesign_trivial(TrivialVariant::AllOnesMinusIdentity, 5);
  const auto labels = label_assign(a, {});
  const auto designs = copies(affine_from_ag(3, 2), 5);
  const auto f = sigma_family_make(labels, designs, {});
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(f.defined(i, j), labels.at(i, j) != 0);
      if (f.defined(i, j)) {
        EXPECT_EQ(f.at(i, j), (std::vector<int>{0, 1, 2}));
      }
    }
  }
}

TEST(Sigma, SeededFamiliesAreInverseClosed) {
  const auto a = symdesign_null_polarity(2, 2);
  const auto labels = label_assign(a, {});
  const auto designs = copies(affine_from_ag(2, 3), a.m());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SigmaRequest r{SigmaStrategy::Seeded, seed, {}};
    const auto f = sigma_family_make(labels, designs, r);
    for (int i = 0; i < a.m(); ++i) {
      EXPECT_EQ(f.at(i, i), (std::vector<int>{0, 1}));
      for (int j = 0; j < a.m(); ++j) {
        if (!f.defined(i, j)) continue;
        const auto& p = f.at(i, j);
        const auto& back = f.at(j, i);
        for (int s = 0; s < 2; ++s) EXPECT_EQ(back[static_cast<std::size_t>(p[static_cast<std::size_t>(s)])], s);
      }
    }
  }
}

TEST(Sigma, ExplicitFamilyIsChecked) {
  const auto a = symdesign_trivial(TrivialVariant::AllOnesMinusIdentity, 5);
  const auto labels = label_assign(a, {});
  const auto designs = copies(affine_from_ag(3, 2), 5);
  SigmaRequest r;
  r.strategy = SigmaStrategy::Explicit;
  r.explicit_family = sigma_family_make(labels, designs, {});
  EXPECT_NO_THROW(sigma_family_make(labels, designs, r));

  r.explicit_family.set(1, 1, {1, 0, 2});
  EXPECT_THROW(sigma_family_make(labels, designs, r), Error);

  r.explicit_family = sigma_family_make(labels, designs, {});
  r.explicit_family.set(0, 1, {1, 2, 0});  // sigma(1,0) is still the identity, not the inverse
  EXPECT_THROW(sigma_family_make(labels, designs, r), Error);
}

TEST(Construct1, FanoWithAG22) {
  const auto report = build_and_verify(symdesign_fano(), affine_from_ag(2, 2), {}, {});
  ASSERT_TRUE(report.ok) << report.message;
  EXPECT_EQ(report.params, (DdgParams{28, 6, 2, 1, 7, 4}));
  EXPECT_EQ(report.params, params_theorem1(2, 2, 7, 1));
}

TEST(Construct1, AllOnesWithAG22) {
  const auto report = build_and_verify(symdesign_trivial(TrivialVariant::AllOnes, 3), affine_from_ag(2, 2), {}, {});
  ASSERT_TRUE(report.ok) << report.message;
  EXPECT_EQ(report.params, (DdgParams{12, 6, 2, 3, 3, 4}));
}

TEST(Construct1, NullPolarityWithAG32Seeded) {
  LabelRequest lr{LabelStrategy::Seeded, 42, {}, 0};
  SigmaRequest sr{SigmaStrategy::Seeded, 42, {}};
  const auto report = build_and_verify(symdesign_null_polarity(2, 2), affine_from_ag(2, 3), lr, sr);
  ASSERT_TRUE(report.ok) << report.message;
  EXPECT_EQ(report.params, (DdgParams{120, 28, 12, 6, 15, 8}));
}

// Parameters never depend on the labeling or sigma.
TEST(Construct1, ParametersAreInvariantAcrossSeeds) {
  const auto a = symdesign_fano();
  const auto expected = params_theorem1(2, 2, 7, 1);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    LabelRequest lr{LabelStrategy::Seeded, seed, {}, 0};
    SigmaRequest sr{SigmaStrategy::Seeded, seed * 7 + 1, {}};
    const auto report = build_and_verify(a, affine_from_ag(2, 2), lr, sr);
    ASSERT_TRUE(report.ok) << "seed " << seed << ": " << report.message;
    EXPECT_EQ(report.params, expected);
  }
}

TEST(Construct1, DifferenceSetWithAG22) {
  const auto a = symdesign_difference_set(7, {1, 2, 4});
  LabelRequest lr{LabelStrategy::Seeded, 3, {}, 0};
  SigmaRequest sr{SigmaStrategy::Seeded, 3, {}};
  const auto report = build_and_verify(a, affine_from_ag(2, 2), lr, sr);
  ASSERT_TRUE(report.ok);
  EXPECT_EQ(report.params, (DdgParams{28, 6, 2, 1, 7, 4}));
}

TEST(Construct1, MismatchedInputsThrow) {
  const auto a = symdesign_fano();
  const auto labels = label_assign(a, {});
  auto designs = copies(affine_from_ag(2, 2), 6);
  EXPECT_THROW(sigma_family_make(labels, designs, {}), Error);
  designs = copies(affine_from_ag(2, 2), 7);
  designs[3] = affine_from_ag(3, 2);
  EXPECT_THROW(sigma_family_make(labels, designs, {}), Error);
}

TEST(Construct1, BlockCollapseRecoversA) {
  const auto a = symdesign_null_polarity(2, 2);
  const auto labels = label_assign(a, {});
  const auto designs = copies(affine_from_ag(2, 3), a.m());
  const auto built = construct1(labels, designs, sigma_family_make(labels, designs, {}));
  EXPECT_EQ(block_collapse(built.graph, built.partition), a.rows());
  ASSERT_TRUE(built.closed_form.has_value());
  EXPECT_EQ(built.closed_form->lambda, 3);
}

TEST(Theorem1, ClosedForms) {
  EXPECT_EQ(params_theorem1(2, 2, 7, 1), (DdgParams{28, 6, 2, 1, 7, 4}));
  EXPECT_EQ(params_theorem1(2, 3, 15, 3), (DdgParams{120, 28, 12, 6, 15, 8}));
  EXPECT_EQ(params_theorem1(2, 2, 3, 3), (DdgParams{12, 6, 2, 3, 3, 4}));
  const auto improper = params_theorem1(2, 2, 4, 2);
  EXPECT_EQ(improper, (DdgParams{16, 6, 2, 2, 4, 4}));
  EXPECT_FALSE(improper.proper());
  EXPECT_TRUE(identity_check(improper).pass);
  EXPECT_THROW(params_theorem1(2, 2, 7, 2), Error);
  EXPECT_THROW(params_theorem1(6, 2, 7, 1), Error);
}

TEST(Theorem2, PrintedAndCorrectedVariants) {
  const auto printed = params_theorem2(2, 3, 15, 7, 3, Theorem2Variant::AsPrinted);
  const auto corrected = params_theorem2(2, 3, 15, 7, 3, Theorem2Variant::MiddleTermCorrected);
  EXPECT_EQ(printed.params.lambda2, 38);
  EXPECT_FALSE(printed.identity.pass);
  EXPECT_EQ(corrected.params, (DdgParams{120, 92, 76, 70, 15, 8}));
  EXPECT_TRUE(corrected.identity.pass);
}

TEST(Theorem2, VariantsAgreeWhenKappaEqualsLambda) {
  const auto printed = params_theorem2(2, 2, 3, 3, 3, Theorem2Variant::AsPrinted);
  const auto corrected = params_theorem2(2, 2, 3, 3, 3, Theorem2Variant::MiddleTermCorrected);
  EXPECT_EQ(printed.params, corrected.params);
}

TEST(PartialComplement, NullPolarityGraph) {
  const auto a = symdesign_null_polarity(2, 2);
  const auto labels = label_assign(a, {});
  const auto designs = copies(affine_from_ag(2, 3), a.m());
  const auto built = construct1(labels, designs, sigma_family_make(labels, designs, {}));
  const auto pc = partial_complement(built);
  const auto report = ddg_verify(pc.graph, pc.partition);
  ASSERT_TRUE(report.ok) << report.message;
  EXPECT_EQ(report.params, (DdgParams{120, 92, 76, 70, 15, 8}));
  ASSERT_EQ(pc.theorem2.size(), 2u);
  for (const auto& t : pc.theorem2) {
    if (t.variant == Theorem2Variant::MiddleTermCorrected) {
      EXPECT_EQ(t.params, report.params);
    } else {
      EXPECT_NE(t.params, report.params);
    }
  }
}

TEST(PartialComplement, ZeroDiagonalIsRejected) {
  const auto a = symdesign_fano();
  const auto labels = label_assign(a, {});
  const auto designs = copies(affine_from_ag(2, 2), 7);
  const auto built = construct1(labels, designs, sigma_family_make(labels, designs, {}));
  try {
    partial_complement(built);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("class 1 diagonal block is zero"), std::string::npos) << e.what();
  }
}

TEST(PartialComplement, NoZeroBlocksMeansNoChange) {
  const auto a = symdesign_trivial(TrivialVariant::AllOnes, 3);
  const auto labels = label_assign(a, {});
  const auto designs = copies(affine_from_ag(2, 2), 3);
  const auto built = construct1(labels, designs, sigma_family_make(labels, designs, {}));
  EXPECT_EQ(partial_complement(built).graph, built.graph);
}

TEST(Sporadic28, VerifiesAndCollapsesToFano) {
  const auto s = sporadic28();
  const auto report = ddg_verify(s.graph, s.partition);
  ASSERT_TRUE(report.ok) << report.message;
  EXPECT_EQ(report.params, (DdgParams{28, 6, 2, 1, 7, 4}));
  const auto collapsed = block_collapse(s.graph, s.partition);
  const auto check = symdesign_verify(collapsed);
  ASSERT_TRUE(check.ok);
  EXPECT_EQ(check.params, (SymmetricParams{7, 3, 1}));
  EXPECT_EQ(collapsed, symdesign_fano().rows());
}

}  // namespace
}  // namespace ddg

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ddg/algebra.hpp"
#include "ddg/error.hpp"

namespace ddg {
namespace {

std::vector<std::int64_t> prime_powers_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q <= bound; ++q) {
    if (factor_prime_power(q).k > 0) out.push_back(q);
  }
  return out;
}

TEST(PrimePowers, FactorsAndRejects) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(61));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(factor_prime_power(64).p, 2);
  EXPECT_EQ(factor_prime_power(64).k, 6);
  EXPECT_EQ(factor_prime_power(49).p, 7);
  EXPECT_EQ(factor_prime_power(12).k, 0);
  EXPECT_EQ(factor_prime_power(1).k, 0);
  EXPECT_EQ(ipow(3, 4), 81);
}

TEST(FiniteField, GF2OnePlusOneIsZero) {
  FiniteField f(2, 1);
  EXPECT_EQ(f.order(), 2);
  EXPECT_EQ(f.add(1, 1), 0);
  EXPECT_EQ(f.mul(1, 1), 1);
}

TEST(FiniteField, GF4NonTrivialUnitsMultiplyToOne) {
  FiniteField f(2, 2);
  std::vector<int> nontrivial;
  for (int a = 2; a < 4; ++a) nontrivial.push_back(a);
  EXPECT_EQ(f.mul(nontrivial[0], nontrivial[1]), 1);
  for (int a : nontrivial) EXPECT_NE(f.mul(a, a), 1);
}

TEST(FiniteField, RejectsNonPrimeCharacteristic) {
  EXPECT_THROW(FiniteField(4, 1), Error);
  EXPECT_THROW(FiniteField(6, 1), Error);
  EXPECT_THROW(FiniteField(2, 0), Error);
}

TEST(FiniteField, RespectsOrderBound) {
  Limits tight;
  tight.max_field_order = 16;
  EXPECT_NO_THROW(FiniteField(2, 4, tight));
  EXPECT_THROW(FiniteField(2, 5, tight), BoundError);
}

TEST(FiniteField, AxiomsHoldForEveryOrderUpTo64) {
  for (auto q : prime_powers_up_to(64)) {
    const auto pp = factor_prime_power(q);
    FiniteField f(pp.p, pp.k);
    SCOPED_TRACE("q = " + std::to_string(q));
    EXPECT_EQ(f.order(), q);
    EXPECT_TRUE(f.verify_axioms());
    for (int a = 1; a < f.order(); ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    EXPECT_THROW(static_cast<void>(f.inv(0)), Error);

    // The generator has multiplicative order exactly q - 1.
    int x = 1, order = 0;
    do {
      x = f.mul(x, f.generator());
      ++order;
    } while (x != 1);
    EXPECT_EQ(order, q - 1);
  }
}

TEST(FiniteField, TablesAreDeterministic) {
  FiniteField a(3, 3), b(3, 3);
  EXPECT_EQ(a.modulus(), b.modulus());
  for (int x = 0; x < a.order(); ++x) {
    for (int y = 0; y < a.order(); ++y) ASSERT_EQ(a.mul(x, y), b.mul(x, y));
  }
}

TEST(LocalRing, IntegersMod9) {
  LocalRing k(RingKind::IntegersModPSquared, 3);
  EXPECT_EQ(k.order(), 9);
  EXPECT_EQ(k.units().size(), 6u);
  EXPECT_EQ(k.ideal(), (std::vector<int>{0, 3, 6}));
  EXPECT_EQ(k.mul(4, 7), 1);
}

TEST(LocalRing, PolynomialsOverGF2) {
  LocalRing k(RingKind::PolynomialsModXSquared, 2);
  EXPECT_EQ(k.order(), 4);
  EXPECT_EQ(k.ideal().size(), 2u);
  EXPECT_EQ(k.units().size(), 2u);
  // x * x = 0 with x encoded as 0 + 1 * q.
  EXPECT_EQ(k.mul(2, 2), 0);
}

TEST(LocalRing, IntegersModPSquaredNeedsPrime) {
  EXPECT_THROW(LocalRing(RingKind::IntegersModPSquared, 4), Error);
  EXPECT_NO_THROW(LocalRing(RingKind::PolynomialsModXSquared, 4));
}

// Ideal generated by a set of elements: closure under addition and
// multiplication by ring elements.
std::set<int> ideal_generated(const LocalRing& k, const std::vector<int>& gens) {
  std::set<int> ideal{0};
  std::vector<int> frontier;
  for (int g : gens) {
    for (int r = 0; r < k.order(); ++r) frontier.push_back(k.mul(r, g));
  }
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    if (!ideal.insert(x).second) continue;
    for (int y : std::vector<int>(ideal.begin(), ideal.end())) frontier.push_back(k.add(x, y));
  }
  return ideal;
}

std::vector<LocalRing> small_rings() {
  std::vector<LocalRing> rings;
  for (auto q : prime_powers_up_to(9)) {
    if (is_prime(q)) rings.emplace_back(RingKind::IntegersModPSquared, q);
    rings.emplace_back(RingKind::PolynomialsModXSquared, q);
  }
  return rings;
}

TEST(LocalRing, MaximalIdealIsTheOnlyNonTrivialIdeal) {
  for (const auto& k : small_rings()) {
    SCOPED_TRACE(std::string(to_string(k.kind())) + " q = " + std::to_string(k.residue_order()));
    const auto j = k.ideal();
    const std::set<int> jset(j.begin(), j.end());
    ASSERT_EQ(static_cast<int>(j.size()), k.residue_order());
    std::set<int> whole;
    for (int x = 0; x < k.order(); ++x) whole.insert(x);
    for (int a = 0; a < k.order(); ++a) {
      for (int b = a; b < k.order(); ++b) {
        const auto ideal = ideal_generated(k, {a, b});
        EXPECT_TRUE(ideal == std::set<int>{0} || ideal == jset || ideal == whole);
      }
    }
    for (int a = 0; a < k.order(); ++a) EXPECT_EQ(k.is_unit(a), !jset.contains(a));
  }
}

TEST(LocalRing, QuotientByIdealIsResidueField) {
  for (const auto& k : small_rings()) {
    const auto& f = k.residue_field();
    ASSERT_EQ(f.order(), k.residue_order());
    std::set<int> image;
    for (int a = 0; a < k.order(); ++a) {
      image.insert(k.reduce(a));
      EXPECT_EQ(k.reduce(a) == 0, k.in_ideal(a));
      for (int b = 0; b < k.order(); ++b) {
        ASSERT_EQ(k.reduce(k.add(a, b)), f.add(k.reduce(a), k.reduce(b)));
        ASSERT_EQ(k.reduce(k.mul(a, b)), f.mul(k.reduce(a), k.reduce(b)));
      }
    }
    EXPECT_EQ(static_cast<int>(image.size()), f.order());
  }
}

TEST(ProjectiveClasses, CountsMatchClosedForm) {
  LocalRing z4(RingKind::IntegersModPSquared, 2);
  LocalRing f2x(RingKind::PolynomialsModXSquared, 2);
  EXPECT_EQ(ProjectiveClasses(z4, 2).size(), 120);
  EXPECT_EQ(ProjectiveClasses(z4, 1).size(), 6);
  EXPECT_EQ(ProjectiveClasses(f2x, 2).size(), 120);
  EXPECT_EQ(ProjectiveClasses::expected_count(2, 2), 120);
  EXPECT_EQ(ProjectiveClasses::expected_count(3, 1), 12);
  LocalRing z9(RingKind::IntegersModPSquared, 3);
  EXPECT_EQ(ProjectiveClasses(z9, 1).size(), ProjectiveClasses::expected_count(3, 1));
}

TEST(ProjectiveClasses, LookupIsConstantOnScalingClasses) {
  LocalRing k(RingKind::IntegersModPSquared, 3);
  ProjectiveClasses classes(k, 1);
  std::vector<int> sizes(static_cast<std::size_t>(classes.size()), 0);
  for (int a = 0; a < k.order(); ++a) {
    for (int b = 0; b < k.order(); ++b) {
      const std::vector<int> v{a, b};
      const int id = classes.lookup(v);
      if (k.in_ideal(a) && k.in_ideal(b)) {
        EXPECT_EQ(id, -1);
        continue;
      }
      ASSERT_GE(id, 0);
      ++sizes[static_cast<std::size_t>(id)];
      for (int u : k.units()) {
        const std::vector<int> w{k.mul(u, a), k.mul(u, b)};
        EXPECT_EQ(classes.lookup(w), id);
      }
    }
  }
  for (int s : sizes) EXPECT_EQ(s, static_cast<int>(k.units().size()));
  for (int id = 0; id < classes.size(); ++id) {
    const auto rep = classes.representative(id);
    EXPECT_EQ(classes.lookup(rep), id);
  }
}

TEST(ProjectiveClasses, RespectsBound) {
  Limits tight;
  tight.max_projective_classes = 100;
  LocalRing z4(RingKind::IntegersModPSquared, 2);
  EXPECT_THROW(ProjectiveClasses(z4, 2, tight), BoundError);
}

}  // namespace
}  // namespace ddg

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ddg/limits.hpp"

namespace ddg {

bool is_prime(std::int64_t n);

// (p, k) with q = p^k, or {0, 0} when q is not a prime power.
struct PrimePower {
  std::int64_t p = 0;
  int k = 0;
};
PrimePower factor_prime_power(std::int64_t q);

std::int64_t ipow(std::int64_t base, int exp);

/// GF(p^k). Elements are the integers 0..q-1; element a encodes the
/// polynomial sum_i a_i x^i whose base-p digits are a_0, a_1, ... The
/// reduction polynomial is the lexicographically least monic irreducible of
/// degree k, so identical (p, k) always give identical tables.
class FiniteField {
 public:
  FiniteField(std::int64_t p, int k, const Limits& limits = {});

  std::int64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }

  // Coefficients c_0..c_k of the reduction polynomial (c_k = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)])];
  }
  // Throws Error for a == 0.
  int inv(int a) const;
  int one() const { return 1; }

  // The multiplicative generator used for the log tables.
  int generator() const { return exp_[1]; }

  // Exhaustive check of the field axioms; O(q^3).
  bool verify_axioms() const;

 private:
  int mul_slow(int a, int b) const;

  std::int64_t p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<int> neg_;
  std::vector<int> log_;
  std::vector<int> exp_;  // length 2(q-1) so log sums need no reduction
};

enum class RingKind { IntegersModPSquared, PolynomialsModXSquared };

const char* to_string(RingKind kind);

/// Finite local ring of order q^2 with maximal ideal J of order q:
/// Z/p^2 (elements 0..p^2-1) or GF(q)[x]/<x^2> (element a + b*q means a + bx).
class LocalRing {
 public:
  LocalRing(RingKind kind, std::int64_t q, const Limits& limits = {});

  RingKind kind() const { return kind_; }
  int residue_order() const { return q_; }
  int order() const { return q_ * q_; }
  const FiniteField& residue_field() const { return field_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;

  bool is_unit(int a) const { return !in_ideal(a); }
  bool in_ideal(int a) const;
  // Image in K/J, as a residue_field() element.
  int reduce(int a) const;

  const std::vector<int>& units() const { return units_; }
  std::vector<int> ideal() const;

 private:
  RingKind kind_;
  int q_;
  FiniteField field_;
  std::vector<int> units_;
};

/// Classes of vectors in K^dim having at least one unit coordinate, under
/// scaling by units. Each class is represented by its lexicographically
/// least member.
class ProjectiveClasses {
 public:
  ProjectiveClasses(const LocalRing& ring, int e, const Limits& limits = {});

  // Closed-form class count q^(2e-1) (q^(2e) - 1) / (q - 1).
  static std::int64_t expected_count(std::int64_t q, int e);

  const LocalRing& ring() const { return ring_; }
  int e() const { return e_; }
  int dimension() const { return 2 * e_; }
  int size() const { return static_cast<int>(reps_.size()); }

  std::span<const int> representative(int id) const {
    return {reps_[static_cast<std::size_t>(id)].data(), reps_[static_cast<std::size_t>(id)].size()};
  }
  // Class id of any vector with a unit coordinate, -1 otherwise.
  int lookup(std::span<const int> vec) const;

 private:
  std::int64_t encode(std::span<const int> vec) const;

  LocalRing ring_;
  int e_;
  std::vector<std::vector<int>> reps_;
  std::vector<std::int32_t> class_of_code_;
};

}  // namespace ddg

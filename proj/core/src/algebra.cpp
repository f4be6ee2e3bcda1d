#include "ddg/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ddg/error.hpp"

namespace ddg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower factor_prime_power(std::int64_t q) {
  if (q < 2) return {};
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return {};
  return {p, k};
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

namespace {

using Poly = std::vector<int>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int lead = a.back();
    for (int i = 0; i <= db; ++i) {
      auto& c = a[static_cast<std::size_t>(i + shift)];
      c = ((c - lead * b[static_cast<std::size_t>(i)]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly monic_from_code(std::int64_t code, int degree, int p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<int>(code % p);
    code /= p;
  }
  f[static_cast<std::size_t>(degree)] = 1;
  return f;
}

bool irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    const std::int64_t count = ipow(p, d);
    for (std::int64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int k, const Limits& limits) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("field degree must be at least 1");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > limits.max_field_order) {
      throw BoundError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                       " exceeds bound " + std::to_string(limits.max_field_order));
    }
  }
  q_ = static_cast<int>(q);

  const auto pi = static_cast<int>(p);
  for (std::int64_t code = 0;; ++code) {
    Poly f = monic_from_code(code, k, pi);
    if (irreducible(f, pi)) {
      modulus_ = std::move(f);
      break;
    }
  }

  neg_.resize(static_cast<std::size_t>(q_));
  for (int a = 0; a < q_; ++a) {
    int r = 0;
    int place = 1;
    for (int i = 0, rest = a; i < k_; ++i, rest /= pi, place *= pi) {
      r += ((pi - rest % pi) % pi) * place;
    }
    neg_[static_cast<std::size_t>(a)] = r;
  }

  int generator = 1;
  if (q_ > 2) {
    const auto factors = prime_factors(q_ - 1);
    auto power = [&](int g, std::int64_t e) {
      int r = 1;
      for (std::int64_t i = 0; i < e; ++i) r = mul_slow(r, g);
      return r;
    };
    for (generator = 2; generator < q_; ++generator) {
      bool ok = true;
      for (auto r : factors) {
        if (power(generator, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(q_ - 1) + 1);
  log_.assign(static_cast<std::size_t>(q_), 0);
  int x = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    exp_[static_cast<std::size_t>(i)] = x;
    log_[static_cast<std::size_t>(x)] = i;
    x = mul_slow(x, generator);
  }
  for (std::size_t i = static_cast<std::size_t>(q_ - 1); i < exp_.size(); ++i) {
    exp_[i] = exp_[i - static_cast<std::size_t>(q_ - 1)];
  }

  if (q_ <= 32 && !verify_axioms()) {
    throw std::logic_error("GF(" + std::to_string(q_) + ") failed its axiom check");
  }
}

int FiniteField::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  const auto pi = static_cast<int>(p_);
  int r = 0;
  int place = 1;
  for (int i = 0; i < k_; ++i, a /= pi, b /= pi, place *= pi) {
    r += ((a % pi + b % pi) % pi) * place;
  }
  return r;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error("zero has no inverse");
  const int l = log_[static_cast<std::size_t>(a)];
  return exp_[static_cast<std::size_t>((q_ - 1 - l) % (q_ - 1))];
}

int FiniteField::mul_slow(int a, int b) const {
  const auto pi = static_cast<int>(p_);
  Poly pa, pb;
  for (int i = 0; i < k_; ++i, a /= pi, b /= pi) {
    pa.push_back(a % pi);
    pb.push_back(b % pi);
  }
  Poly prod(static_cast<std::size_t>(2 * k_), 0);
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      auto& c = prod[static_cast<std::size_t>(i + j)];
      c = (c + pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]) % pi;
    }
  }
  Poly r = poly_mod(prod, modulus_, pi);
  int code = 0;
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) code = code * pi + r[static_cast<std::size_t>(i)];
  return code;
}

bool FiniteField::verify_axioms() const {
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || add(a, neg(a)) != 0) return false;
    if (a != 0 && mul(a, inv(a)) != 1) return false;
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      if (mul(a, b) != mul_slow(a, b)) return false;
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return true;
}

const char* to_string(RingKind kind) {
  return kind == RingKind::IntegersModPSquared ? "integers_mod_p_squared" : "polynomials_mod_x_squared";
}

namespace {

FiniteField residue_field_for(RingKind kind, std::int64_t q, const Limits& limits) {
  if (kind == RingKind::IntegersModPSquared) {
    if (!is_prime(q)) throw Error("Z/p^2 needs a prime p, got " + std::to_string(q));
    return FiniteField(q, 1, limits);
  }
  const auto pp = factor_prime_power(q);
  if (pp.k == 0) throw Error("GF(q)[x]/<x^2> needs a prime power q, got " + std::to_string(q));
  return FiniteField(pp.p, pp.k, limits);
}

}  // namespace

LocalRing::LocalRing(RingKind kind, std::int64_t q, const Limits& limits)
    : kind_(kind), q_(static_cast<int>(q)), field_(residue_field_for(kind, q, limits)) {
  for (int a = 0; a < order(); ++a) {
    if (is_unit(a)) units_.push_back(a);
  }
}

int LocalRing::add(int a, int b) const {
  if (kind_ == RingKind::IntegersModPSquared) return (a + b) % order();
  return field_.add(a % q_, b % q_) + q_ * field_.add(a / q_, b / q_);
}

int LocalRing::neg(int a) const {
  if (kind_ == RingKind::IntegersModPSquared) return (order() - a) % order();
  return field_.neg(a % q_) + q_ * field_.neg(a / q_);
}

int LocalRing::mul(int a, int b) const {
  if (kind_ == RingKind::IntegersModPSquared) {
    return static_cast<int>((static_cast<std::int64_t>(a) * b) % order());
  }
  const int a0 = a % q_, a1 = a / q_, b0 = b % q_, b1 = b / q_;
  return field_.mul(a0, b0) + q_ * field_.add(field_.mul(a0, b1), field_.mul(a1, b0));
}

bool LocalRing::in_ideal(int a) const { return a % q_ == 0; }

int LocalRing::reduce(int a) const { return a % q_; }

std::vector<int> LocalRing::ideal() const {
  std::vector<int> out;
  for (int a = 0; a < order(); ++a) {
    if (in_ideal(a)) out.push_back(a);
  }
  return out;
}

std::int64_t ProjectiveClasses::expected_count(std::int64_t q, int e) {
  return ipow(q, 2 * e - 1) * (ipow(q, 2 * e) - 1) / (q - 1);
}

ProjectiveClasses::ProjectiveClasses(const LocalRing& ring, int e, const Limits& limits)
    : ring_(ring), e_(e) {
  if (e < 1) throw Error("projective classes need e >= 1");
  const std::int64_t expected = expected_count(ring.residue_order(), e);
  if (expected > limits.max_projective_classes) {
    throw BoundError("class count " + std::to_string(expected) + " exceeds bound " +
                     std::to_string(limits.max_projective_classes));
  }
  const int dim = dimension();
  const int base = ring.order();
  const std::int64_t total = ipow(base, dim);
  class_of_code_.assign(static_cast<std::size_t>(total), -1);

  std::vector<int> vec(static_cast<std::size_t>(dim));
  std::vector<int> scaled(static_cast<std::size_t>(dim));
  // Codes are big-endian base-|K| numerals, so ascending code order is
  // lexicographic order and the first unseen member of a class is its least.
  for (std::int64_t code = 0; code < total; ++code) {
    if (class_of_code_[static_cast<std::size_t>(code)] >= 0) continue;
    std::int64_t c = code;
    for (int i = dim - 1; i >= 0; --i) {
      vec[static_cast<std::size_t>(i)] = static_cast<int>(c % base);
      c /= base;
    }
    if (std::none_of(vec.begin(), vec.end(), [&](int a) { return ring.is_unit(a); })) continue;
    const int id = static_cast<int>(reps_.size());
    reps_.push_back(vec);
    for (int u : ring.units()) {
      for (int i = 0; i < dim; ++i) scaled[static_cast<std::size_t>(i)] = ring.mul(u, vec[static_cast<std::size_t>(i)]);
      class_of_code_[static_cast<std::size_t>(encode(scaled))] = id;
    }
  }
}

std::int64_t ProjectiveClasses::encode(std::span<const int> vec) const {
  std::int64_t code = 0;
  for (int a : vec) code = code * ring_.order() + a;
  return code;
}

int ProjectiveClasses::lookup(std::span<const int> vec) const {
  if (static_cast<int>(vec.size()) != dimension()) throw Error("vector length mismatch");
  for (int a : vec) {
    if (a < 0 || a >= ring_.order()) throw Error("vector entry outside the ring");
  }
  return class_of_code_[static_cast<std::size_t>(encode(vec))];
}

}  // namespace ddg

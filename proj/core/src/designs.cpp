#include "ddg/designs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ddg/algebra.hpp"
#include "ddg/error.hpp"

namespace ddg {

const char* to_string(AffineAxiom axiom) {
  switch (axiom) {
    case AffineAxiom::None: return "none";
    case AffineAxiom::MalformedBlock: return "malformed block";
    case AffineAxiom::ClassAssignment: return "class assignment";
    case AffineAxiom::ParallelClass: return "parallel class";
    case AffineAxiom::ClassSize: return "class size";
    case AffineAxiom::Intersection: return "block intersection";
    case AffineAxiom::PairCount: return "pair count";
    case AffineAxiom::Arithmetic: return "parameter arithmetic";
  }
  return "?";
}

const char* to_string(HadamardMethod method) {
  return method == HadamardMethod::Sylvester ? "sylvester" : "paley";
}

namespace {

AffineReport fail(AffineAxiom axiom, std::string message, int a = -1, int b = -1) {
  AffineReport r;
  r.violated = axiom;
  r.message = std::move(message);
  r.witness_a = a;
  r.witness_b = b;
  return r;
}

using Bits = std::vector<std::uint64_t>;

int and_count(const Bits& a, const Bits& b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace

AffineReport affine_verify(const DesignCandidate& d) {
  const int v = d.point_count;
  const int nb = static_cast<int>(d.blocks.size());
  if (v < 1) return fail(AffineAxiom::MalformedBlock, "design has no points");

  const std::size_t point_words = (static_cast<std::size_t>(v) + 63) / 64;
  std::vector<Bits> block_bits(static_cast<std::size_t>(nb), Bits(point_words, 0));
  for (int b = 0; b < nb; ++b) {
    const auto& blk = d.blocks[static_cast<std::size_t>(b)];
    if (blk.empty()) return fail(AffineAxiom::MalformedBlock, "block " + std::to_string(b) + " is empty", b);
    auto& bits = block_bits[static_cast<std::size_t>(b)];
    for (int x : blk) {
      if (x < 0 || x >= v) {
        return fail(AffineAxiom::MalformedBlock,
                    "block " + std::to_string(b) + " has point " + std::to_string(x) + " out of range", b, x);
      }
      auto& word = bits[static_cast<std::size_t>(x) >> 6];
      const auto mask = std::uint64_t{1} << (x & 63);
      if (word & mask) {
        return fail(AffineAxiom::MalformedBlock,
                    "block " + std::to_string(b) + " repeats point " + std::to_string(x), b, x);
      }
      word |= mask;
    }
  }

  std::vector<int> class_of(static_cast<std::size_t>(nb), -1);
  for (int c = 0; c < static_cast<int>(d.classes.size()); ++c) {
    for (int b : d.classes[static_cast<std::size_t>(c)]) {
      if (b < 0 || b >= nb) {
        return fail(AffineAxiom::ClassAssignment,
                    "class " + std::to_string(c + 1) + " names unknown block " + std::to_string(b), c + 1, b);
      }
      if (class_of[static_cast<std::size_t>(b)] >= 0) {
        return fail(AffineAxiom::ClassAssignment,
                    "block " + std::to_string(b) + " belongs to several classes", b, c + 1);
      }
      class_of[static_cast<std::size_t>(b)] = c;
    }
  }
  for (int b = 0; b < nb; ++b) {
    if (class_of[static_cast<std::size_t>(b)] < 0) {
      return fail(AffineAxiom::ClassAssignment, "block " + std::to_string(b) + " is in no class", b);
    }
  }
  if (d.classes.empty()) return fail(AffineAxiom::ClassSize, "design has no parallel classes");

  for (int c = 0; c < static_cast<int>(d.classes.size()); ++c) {
    std::vector<int> hits(static_cast<std::size_t>(v), 0);
    for (int b : d.classes[static_cast<std::size_t>(c)]) {
      for (int x : d.blocks[static_cast<std::size_t>(b)]) {
        if (++hits[static_cast<std::size_t>(x)] > 1) {
          return fail(AffineAxiom::ParallelClass,
                      "class " + std::to_string(c + 1) + " covers point " + std::to_string(x) + " twice", c + 1, x);
        }
      }
    }
    for (int x = 0; x < v; ++x) {
      if (hits[static_cast<std::size_t>(x)] == 0) {
        return fail(AffineAxiom::ParallelClass,
                    "class " + std::to_string(c + 1) + " does not cover point " + std::to_string(x), c + 1, x);
      }
    }
  }

  const int q = static_cast<int>(d.classes.front().size());
  for (int c = 0; c < static_cast<int>(d.classes.size()); ++c) {
    const int size = static_cast<int>(d.classes[static_cast<std::size_t>(c)].size());
    if (size != q || q < 2) {
      return fail(AffineAxiom::ClassSize,
                  "class " + std::to_string(c + 1) + " has " + std::to_string(size) + " blocks, class 1 has " +
                      std::to_string(q),
                  c + 1);
    }
  }

  int r = -1;
  for (int a = 0; a < nb; ++a) {
    for (int b = a + 1; b < nb; ++b) {
      if (class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)]) continue;
      const int meet = and_count(block_bits[static_cast<std::size_t>(a)], block_bits[static_cast<std::size_t>(b)]);
      if (r < 0) r = meet;
      if (meet != r || meet == 0) {
        return fail(AffineAxiom::Intersection,
                    "blocks " + std::to_string(a) + " and " + std::to_string(b) + " meet in " +
                        std::to_string(meet) + " points, expected " + std::to_string(r),
                    a, b);
      }
    }
  }
  if (r < 0) return fail(AffineAxiom::ClassSize, "a single parallel class has no intersection number");

  const std::size_t block_words = (static_cast<std::size_t>(nb) + 63) / 64;
  std::vector<Bits> point_bits(static_cast<std::size_t>(v), Bits(block_words, 0));
  for (int b = 0; b < nb; ++b) {
    for (int x : d.blocks[static_cast<std::size_t>(b)]) {
      point_bits[static_cast<std::size_t>(x)][static_cast<std::size_t>(b) >> 6] |= std::uint64_t{1} << (b & 63);
    }
  }
  int pair_count = -1;
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      const int through = and_count(point_bits[static_cast<std::size_t>(x)], point_bits[static_cast<std::size_t>(y)]);
      if (pair_count < 0) pair_count = through;
      if (through != pair_count) {
        return fail(AffineAxiom::PairCount,
                    "points " + std::to_string(x) + " and " + std::to_string(y) + " lie on " +
                        std::to_string(through) + " common blocks, expected " + std::to_string(pair_count),
                    x, y);
      }
    }
  }

  const int kappa = static_cast<int>(d.classes.size());
  for (int b = 0; b < nb; ++b) {
    if (static_cast<int>(d.blocks[static_cast<std::size_t>(b)].size()) != q * r) {
      return fail(AffineAxiom::Arithmetic, "block " + std::to_string(b) + " does not have q*r points", b);
    }
  }
  if (v != q * q * r || kappa * (q - 1) != q * q * r - 1) {
    return fail(AffineAxiom::Arithmetic, "v = q^2 r or kappa = (q^2 r - 1)/(q - 1) fails");
  }

  AffineReport ok;
  ok.ok = true;
  ok.q = q;
  ok.r = r;
  ok.kappa = kappa;
  ok.pair_count = std::max(pair_count, 0);
  return ok;
}

ResolvableDesign ResolvableDesign::from_candidate(const DesignCandidate& candidate, std::string name) {
  const auto report = affine_verify(candidate);
  if (!report.ok) throw Error("not an affine design (" + std::string(to_string(report.violated)) + "): " + report.message);

  ResolvableDesign d;
  d.name_ = std::move(name);
  d.point_count_ = candidate.point_count;
  d.q_ = report.q;
  d.r_ = report.r;
  for (const auto& cls : candidate.classes) {
    std::vector<std::vector<int>> blocks;
    for (int b : cls) {
      auto blk = candidate.blocks[static_cast<std::size_t>(b)];
      std::sort(blk.begin(), blk.end());
      blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> ids;
    for (auto& blk : blocks) {
      ids.push_back(static_cast<int>(d.blocks_.size()));
      d.blocks_.push_back(std::move(blk));
    }
    d.classes_.push_back(std::move(ids));
  }
  d.index();
  return d;
}

void ResolvableDesign::index() {
  const auto nb = blocks_.size();
  class_of_block_.assign(nb, 0);
  slot_of_block_.assign(nb, 0);
  block_at_.assign(classes_.size() * static_cast<std::size_t>(point_count_), -1);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t s = 0; s < classes_[c].size(); ++s) {
      const int b = classes_[c][s];
      class_of_block_[static_cast<std::size_t>(b)] = static_cast<int>(c) + 1;
      slot_of_block_[static_cast<std::size_t>(b)] = static_cast<int>(s);
      for (int x : blocks_[static_cast<std::size_t>(b)]) {
        block_at_[c * static_cast<std::size_t>(point_count_) + static_cast<std::size_t>(x)] = b;
      }
    }
  }
}

const std::vector<int>& ResolvableDesign::parallel_class(int j) const {
  if (j < 1 || j > kappa()) {
    throw Error("parallel class " + std::to_string(j) + " out of range 1.." + std::to_string(kappa()));
  }
  return classes_[static_cast<std::size_t>(j - 1)];
}

int ResolvableDesign::parallel_block_of(int j, int x) const {
  if (j < 1 || j > kappa()) {
    throw Error("parallel class " + std::to_string(j) + " out of range 1.." + std::to_string(kappa()));
  }
  if (x < 0 || x >= point_count_) {
    throw Error("point " + std::to_string(x) + " out of range 0.." + std::to_string(point_count_ - 1));
  }
  return block_at_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(point_count_) + static_cast<std::size_t>(x)];
}

std::optional<int> ResolvableDesign::ag_dimension() const {
  std::int64_t power = 1;
  for (int d = 0; power <= point_count_; ++d, power *= q_) {
    if (power == point_count_) {
      if (d >= 2 && ipow(q_, d - 2) == r_) return d;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

DesignCandidate ResolvableDesign::to_candidate() const {
  return DesignCandidate{point_count_, blocks_, classes_};
}

ResolvableDesign affine_from_ag(std::int64_t q, int d, const Limits& limits) {
  if (d < 2) throw Error("AG(d, q) needs d >= 2, got " + std::to_string(d));
  const auto pp = factor_prime_power(q);
  if (pp.k == 0) throw Error("AG(d, q) needs a prime power q, got " + std::to_string(q));
  std::int64_t v = 1;
  for (int i = 0; i < d; ++i) {
    v *= q;
    if (v > limits.max_affine_points) {
      throw BoundError("AG(" + std::to_string(d) + "," + std::to_string(q) + ") has more than " +
                       std::to_string(limits.max_affine_points) + " points");
    }
  }
  const FiniteField field(pp.p, pp.k, limits);
  const int qi = static_cast<int>(q);
  const int vi = static_cast<int>(v);

  ResolvableDesign out;
  out.name_ = "ag(" + std::to_string(q) + "," + std::to_string(d) + ")";
  out.point_count_ = vi;
  out.q_ = qi;
  out.r_ = static_cast<int>(ipow(q, d - 2));
  out.coordinates_.resize(static_cast<std::size_t>(vi));
  for (int x = 0; x < vi; ++x) {
    auto& c = out.coordinates_[static_cast<std::size_t>(x)];
    c.resize(static_cast<std::size_t>(d));
    for (int i = d - 1, rest = x; i >= 0; --i, rest /= qi) c[static_cast<std::size_t>(i)] = rest % qi;
  }
  for (const auto& n : out.coordinates_) {
    auto lead = std::find_if(n.begin(), n.end(), [](int a) { return a != 0; });
    if (lead != n.end() && *lead == field.one()) out.normals_.push_back(n);
  }

  for (const auto& n : out.normals_) {
    std::vector<std::vector<int>> by_value(static_cast<std::size_t>(qi));
    for (int x = 0; x < vi; ++x) {
      int dot = 0;
      const auto& c = out.coordinates_[static_cast<std::size_t>(x)];
      for (int i = 0; i < d; ++i) dot = field.add(dot, field.mul(n[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]));
      by_value[static_cast<std::size_t>(dot)].push_back(x);
    }
    std::sort(by_value.begin(), by_value.end());
    std::vector<int> ids;
    for (auto& blk : by_value) {
      ids.push_back(static_cast<int>(out.blocks_.size()));
      out.blocks_.push_back(std::move(blk));
    }
    out.classes_.push_back(std::move(ids));
  }
  out.index();
  return out;
}

bool HadamardMatrix::valid() const {
  if (order < 1 || static_cast<int>(entries.size()) != order) return false;
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != order) return false;
    for (int x : row) {
      if (x != 1 && x != -1) return false;
    }
  }
  for (int i = 0; i < order; ++i) {
    for (int j = i; j < order; ++j) {
      long dot = 0;
      for (int c = 0; c < order; ++c) dot += entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      if (dot != (i == j ? order : 0)) return false;
    }
  }
  return true;
}

HadamardMatrix hadamard_matrix(int order, HadamardMethod method) {
  HadamardMatrix h;
  h.order = order;
  if (method == HadamardMethod::Sylvester) {
    if (order < 1 || !std::has_single_bit(static_cast<unsigned>(order))) {
      throw Error("Sylvester construction needs a power-of-two order, got " + std::to_string(order));
    }
    h.entries = {{1}};
    for (int n = 1; n < order; n *= 2) {
      std::vector<std::vector<int>> next(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(2 * n)));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const int x = h.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
          next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + n)] = x;
          next[static_cast<std::size_t>(i + n)][static_cast<std::size_t>(j)] = x;
          next[static_cast<std::size_t>(i + n)][static_cast<std::size_t>(j + n)] = -x;
        }
      }
      h.entries = std::move(next);
    }
  } else {
    const int p = order - 1;
    if (order % 4 != 0 || !is_prime(p)) {
      throw Error("Paley construction needs order p + 1 = 0 mod 4 with p prime, got " + std::to_string(order));
    }
    std::vector<int> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (long x = 1; x < p; ++x) chi[static_cast<std::size_t>(x * x % p)] = 1;
    h.entries.assign(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order), 0));
    auto& e = h.entries;
    for (int j = 1; j < order; ++j) {
      e[0][static_cast<std::size_t>(j)] = 1;
      e[static_cast<std::size_t>(j)][0] = -1;
    }
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        e[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)] = chi[static_cast<std::size_t>(((a - b) % p + p) % p)];
      }
    }
    for (int i = 0; i < order; ++i) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += 1;
  }
  if (!h.valid()) throw std::logic_error("constructed Hadamard matrix failed H H^T = nI");
  return h;
}

ResolvableDesign affine_from_hadamard(const HadamardMatrix& h) {
  if (!h.valid()) throw Error("matrix is not a Hadamard matrix");
  if (h.order < 8) throw Error("Hadamard order " + std::to_string(h.order) + " is degenerate; need order >= 8");

  DesignCandidate c;
  c.point_count = h.order;
  const auto& top = h.entries.front();
  for (int i = 1; i < h.order; ++i) {
    std::vector<int> plus, minus;
    for (int col = 0; col < h.order; ++col) {
      const int sign = h.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * top[static_cast<std::size_t>(col)];
      (sign > 0 ? plus : minus).push_back(col);
    }
    const int id = static_cast<int>(c.blocks.size());
    c.blocks.push_back(std::move(plus));
    c.blocks.push_back(std::move(minus));
    c.classes.push_back({id, id + 1});
  }
  return ResolvableDesign::from_candidate(c, "hadamard(" + std::to_string(h.order) + ")");
}

}  // namespace ddg

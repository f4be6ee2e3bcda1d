#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddg/designs.hpp"
#include "ddg/graph.hpp"
#include "ddg/params.hpp"
#include "ddg/symdesigns.hpp"
#include "ddg/verify.hpp"

namespace ddg {

/// For every ordered pair (i, j) with e(i, j) != 0 a permutation of block
/// slots 0..q-1, taking class e(i, j) of design i to class e(j, i) of
/// design j. sigma(j, i) is the inverse of sigma(i, j); sigma(i, i) is the
/// identity.
class BijectionFamily {
 public:
  BijectionFamily() = default;
  BijectionFamily(int m, int q) : m_(m), q_(q), perms_(static_cast<std::size_t>(m) * m) {}

  int m() const { return m_; }
  int q() const { return q_; }
  bool defined(int i, int j) const { return !perms_[index(i, j)].empty(); }
  const std::vector<int>& at(int i, int j) const { return perms_[index(i, j)]; }
  void set(int i, int j, std::vector<int> perm) { perms_[index(i, j)] = std::move(perm); }

  bool operator==(const BijectionFamily&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * m_ + j; }

  int m_ = 0;
  int q_ = 0;
  std::vector<std::vector<int>> perms_;
};

enum class SigmaStrategy { Identity, Seeded, Explicit };

const char* to_string(SigmaStrategy s);

struct SigmaRequest {
  SigmaStrategy strategy = SigmaStrategy::Identity;
  std::uint64_t seed = 0;
  BijectionFamily explicit_family;  // Explicit only
};

BijectionFamily sigma_family_make(const LabeledMatrix& labels, const std::vector<ResolvableDesign>& designs,
                                  const SigmaRequest& request);

/// Inputs that determine the closed-form parameters.
struct ClosedFormInputs {
  std::int64_t q = 0;
  int d = 0;
  std::int64_t m = 0;
  std::int64_t kappa = 0;
  std::int64_t lambda = 0;
};

enum class ParamsSource { None, Theorem1, BruteForce, Published };

const char* to_string(ParamsSource s);

enum class Theorem2Variant { AsPrinted, MiddleTermCorrected };

const char* to_string(Theorem2Variant v);

struct Theorem2Result {
  Theorem2Variant variant = Theorem2Variant::AsPrinted;
  DdgParams params;
  IdentityReport identity;
};

struct DdgInstance {
  Graph graph;
  Partition partition;
  std::optional<DdgParams> params;
  ParamsSource source = ParamsSource::None;
  std::string provenance;
  std::optional<ClosedFormInputs> closed_form;  // Construction 1 instances with r = q^(d-2)
  std::vector<Theorem2Result> theorem2;         // attached by partial_complement
};

/// Vertices are the design point sets in order (design i occupies
/// [i*v_pts, (i+1)*v_pts)). x in design i and y in design j are adjacent
/// iff e(i, j) != 0, x != y, and y's block in class e(j, i) is not the
/// sigma(i, j)-image of x's block in class e(i, j).
DdgInstance construct1(const LabeledMatrix& labels, const std::vector<ResolvableDesign>& designs,
                       const BijectionFamily& sigma);

/// v = q^d m, k = q^(d-1)(q^d - 1), lambda1 = q^(d-1)(q^d - q^(d-1) - 1),
/// lambda2 = q^(d-2)(q-1)^2 lambda, n = q^d. Requires
/// kappa (kappa - 1) = (m - 1) lambda with kappa = (q^d - 1)/(q - 1).
DdgParams params_theorem1(std::int64_t q, int d, std::int64_t m, std::int64_t lambda);

Theorem2Result params_theorem2(std::int64_t q, int d, std::int64_t m, std::int64_t kappa, std::int64_t lambda,
                               Theorem2Variant variant);

/// Replaces every all-zero off-diagonal block by an all-ones block. Needs
/// non-zero diagonal blocks; throws Error naming the first (1-based) class
/// whose diagonal block is zero.
DdgInstance partial_complement(const DdgInstance& g);

/// The 28-vertex (28,6,2,1;7,4) graph assembled from its published 4x4
/// blocks, partitioned into seven classes of four.
DdgInstance sporadic28();

// Replace each n x n block by 0 (all zero) or 1.
BinaryMatrix block_collapse(const Graph& g, const Partition& partition);

}  // namespace ddg

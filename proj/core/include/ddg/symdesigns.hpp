#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddg/limits.hpp"

namespace ddg {

using BinaryMatrix = std::vector<std::vector<int>>;

/// Points of PG(2e-1, q) with the standard alternating form, kept alongside
/// null-polarity matrices so callers can recover the geometry.
struct PolarityGeometry {
  int e = 0;
  std::int64_t q = 0;
  std::vector<std::vector<int>> points;  // normalized, GF(q) element indices
};

struct SymmetricParams {
  int m = 0;
  int kappa = 0;
  int lambda = 0;
  bool operator==(const SymmetricParams&) const = default;
};

enum class SymmetricViolation { None, NotSquare, NotBinary, NotSymmetric, RowSum, InnerProduct, Degenerate };

const char* to_string(SymmetricViolation v);

struct SymmetricReport {
  bool ok = false;
  SymmetricParams params;
  SymmetricViolation violated = SymmetricViolation::None;
  std::string message;
  int witness_a = -1;
  int witness_b = -1;
};

/// Checks A = A^T, constant row sum kappa and constant inner product
/// lambda >= 1 over distinct rows.
SymmetricReport symdesign_verify(const BinaryMatrix& a);

/// Symmetric 0/1 incidence matrix of a symmetric 2-(m, kappa, lambda) design.
class SymmetricDesignMatrix {
 public:
  // Throws Error if symdesign_verify fails.
  explicit SymmetricDesignMatrix(BinaryMatrix rows, std::string name = "matrix",
                                 std::optional<PolarityGeometry> geometry = std::nullopt);

  const SymmetricParams& params() const { return params_; }
  int m() const { return params_.m; }
  int kappa() const { return params_.kappa; }
  int lambda() const { return params_.lambda; }
  int at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const BinaryMatrix& rows() const { return rows_; }
  const std::string& name() const { return name_; }
  const std::optional<PolarityGeometry>& geometry() const { return geometry_; }

 private:
  BinaryMatrix rows_;
  SymmetricParams params_;
  std::string name_;
  std::optional<PolarityGeometry> geometry_;
};

SymmetricDesignMatrix symdesign_fano();

enum class TrivialVariant { AllOnes, AllOnesMinusIdentity };

// AllOnes gives (m, m, m) for m >= 2; AllOnesMinusIdentity gives
// (m, m-1, m-2) and needs m >= 3 so that lambda >= 1.
SymmetricDesignMatrix symdesign_trivial(TrivialVariant variant, int m);

// A[i][j] = 1 iff the alternating form vanishes on points i and j of
// PG(2e-1, q); parameters ((q^2e-1)/(q-1), (q^(2e-1)-1)/(q-1), (q^(2e-2)-1)/(q-1)).
SymmetricDesignMatrix symdesign_null_polarity(int e, std::int64_t q, const Limits& limits = {});

// A[i][j] = 1 iff (i + j) mod m lies in the difference set.
SymmetricDesignMatrix symdesign_difference_set(int m, const std::vector<int>& set);

/// Entries e(i, j) in 0..kappa with e(i, j) != 0 exactly where A is 1 and
/// each row's non-zero entries a permutation of 1..kappa.
class LabeledMatrix {
 public:
  // Throws Error naming the first violated invariant.
  LabeledMatrix(const SymmetricDesignMatrix& a, std::vector<std::vector<int>> labels);

  int m() const { return static_cast<int>(labels_.size()); }
  int kappa() const { return parent_.kappa; }
  const SymmetricParams& parent() const { return parent_; }
  int at(int i, int j) const { return labels_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& labels() const { return labels_; }
  bool entrywise_symmetric() const;

  bool operator==(const LabeledMatrix& other) const { return labels_ == other.labels_; }

 private:
  SymmetricParams parent_;
  std::vector<std::vector<int>> labels_;
};

enum class LabelStrategy { Canonical, Seeded, Explicit, Symmetric };

const char* to_string(LabelStrategy s);

struct LabelRequest {
  LabelStrategy strategy = LabelStrategy::Canonical;
  std::uint64_t seed = 0;
  std::vector<std::vector<int>> explicit_labels;  // Explicit only
  std::int64_t search_nodes = 1'000'000;           // Symmetric only
};

/// Canonical: labels 1..kappa in increasing column order per row.
/// Seeded: an independent seeded permutation of 1..kappa per row.
/// Explicit: validates the given matrix.
/// Symmetric: backtracking search for e(i,j) = e(j,i); throws Error when
/// the search proves no such labeling exists or runs out of nodes.
LabeledMatrix label_assign(const SymmetricDesignMatrix& a, const LabelRequest& request);

/// Polarity labeling for null-polarity matrices paired with AG(2e-1, q):
/// in row Q the column P gets the class whose normal is the functional
/// x -> B(P, x) on the complement of Q's pivot coordinate. normals are
/// the AG class normals (index = class - 1).
LabeledMatrix label_polarity(const SymmetricDesignMatrix& a, const std::vector<std::vector<int>>& normals);

}  // namespace ddg

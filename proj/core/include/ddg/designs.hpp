#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddg/limits.hpp"

namespace ddg {

/// Raw incidence structure offered for verification: blocks as point lists
/// and a proposed resolution into classes (lists of block ids).
struct DesignCandidate {
  int point_count = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<int>> classes;
};

enum class AffineAxiom {
  None,
  MalformedBlock,       // point id out of range, repeated or empty
  ClassAssignment,      // block in zero or several classes
  ParallelClass,        // class blocks overlap or miss a point
  ClassSize,            // classes differ in block count or have < 2 blocks
  Intersection,         // two non-parallel blocks meet in != r points
  PairCount,            // blocks through two points not constant
  Arithmetic,           // v = q^2 r, |B| = q r, kappa = (q^2 r - 1)/(q - 1)
};

const char* to_string(AffineAxiom axiom);

struct AffineReport {
  bool ok = false;
  int q = 0;
  int r = 0;
  int kappa = 0;
  int pair_count = 0;
  AffineAxiom violated = AffineAxiom::None;
  std::string message;
  // Block pair, point pair, or (class, point) depending on the axiom.
  int witness_a = -1;
  int witness_b = -1;
};

AffineReport affine_verify(const DesignCandidate& candidate);

/// Affine design with its resolution. Classes are numbered 1..kappa in the
/// public API. Within a class, blocks are ordered by their smallest point
/// and that position is the block's slot; block ids run class by class.
class ResolvableDesign {
 public:
  // Throws Error carrying the affine_verify message if the candidate fails.
  static ResolvableDesign from_candidate(const DesignCandidate& candidate, std::string name = "file");

  int point_count() const { return point_count_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int q() const { return q_; }
  int r() const { return r_; }
  int kappa() const { return static_cast<int>(classes_.size()); }
  int block_size() const { return q_ * r_; }
  const std::string& name() const { return name_; }

  const std::vector<int>& block(int id) const { return blocks_[static_cast<std::size_t>(id)]; }
  // Block ids of class j (1-based), in slot order.
  const std::vector<int>& parallel_class(int j) const;
  int class_of_block(int id) const { return class_of_block_[static_cast<std::size_t>(id)]; }
  int slot_of_block(int id) const { return slot_of_block_[static_cast<std::size_t>(id)]; }

  // The block of class j (1-based) containing point x.
  int parallel_block_of(int j, int x) const;
  // Slot (0..q-1) of that block inside class j.
  int slot_of(int j, int x) const {
    return slot_of_block_[static_cast<std::size_t>(parallel_block_of(j, x))];
  }

  // Exponent d with v = q^d and r = q^(d-2), when the design has
  // point-hyperplane parameters.
  std::optional<int> ag_dimension() const;

  // AG designs only: field coordinates of each point and the normalized
  // normal vector of each class (index j-1).
  const std::vector<std::vector<int>>& coordinates() const { return coordinates_; }
  const std::vector<std::vector<int>>& normals() const { return normals_; }

  DesignCandidate to_candidate() const;

 private:
  friend ResolvableDesign affine_from_ag(std::int64_t q, int d, const Limits& limits);

  ResolvableDesign() = default;
  void index();

  std::string name_;
  int point_count_ = 0;
  int q_ = 0;
  int r_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_block_;
  std::vector<int> slot_of_block_;
  std::vector<int> block_at_;  // [class * points + x]
  std::vector<std::vector<int>> coordinates_;
  std::vector<std::vector<int>> normals_;
};

/// Point-hyperplane design of AG(d, q). Points are GF(q)^d in
/// lexicographic order (first coordinate most significant); class j is the
/// j-th normalized normal vector (first non-zero coordinate 1) in
/// lexicographic order.
ResolvableDesign affine_from_ag(std::int64_t q, int d, const Limits& limits = {});

enum class HadamardMethod { Sylvester, Paley };

const char* to_string(HadamardMethod method);

struct HadamardMatrix {
  int order = 0;
  std::vector<std::vector<int>> entries;  // +1 / -1

  // H H^T == order * I, entries all +-1.
  bool valid() const;
};

HadamardMatrix hadamard_matrix(int order, HadamardMethod method);

/// Hadamard 3-design: columns are points; each row after the first (once
/// normalized) splits the points into its +1 and -1 supports, one parallel
/// class per row. q = 2, r = order/4, kappa = order - 1.
ResolvableDesign affine_from_hadamard(const HadamardMatrix& h);

}  // namespace ddg

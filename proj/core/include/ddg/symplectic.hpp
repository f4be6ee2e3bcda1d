#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddg/algebra.hpp"
#include "ddg/construct.hpp"
#include "ddg/graph.hpp"
#include "ddg/params.hpp"
#include "ddg/verify.hpp"

namespace ddg {

enum class SymplecticVariant { X, Y };

const char* to_string(SymplecticVariant v);

/// Graph on the unit-scaling classes of K^(2e). With
/// B(a, b) = sum_i a_i b_(i+e) - a_(i+e) b_i, two classes are adjacent in
/// X when B is non-zero and in Y when B lies in J \ {0}.
class SymplecticGraph {
 public:
  SymplecticGraph(SymplecticVariant variant, int e, const LocalRing& ring, const Limits& limits = {});

  SymplecticVariant variant() const { return variant_; }
  int e() const { return classes_.e(); }
  const LocalRing& ring() const { return classes_.ring(); }
  const ProjectiveClasses& classes() const { return classes_; }
  const Graph& graph() const { return graph_; }

  // B(a, b) on arbitrary representatives.
  int form(std::span<const int> a, std::span<const int> b) const;
  bool edge_rule(int value) const;

  // Re-evaluates the edge rule on up to `pairs` deterministic vertex pairs
  // under every unit scaling of both representatives.
  bool well_defined_on_sample(int pairs) const;

 private:
  SymplecticVariant variant_;
  ProjectiveClasses classes_;
  Graph graph_;
};

struct BgParams {
  DdgParams params;  // evaluated exactly as published, m = q^(2e-1)(q-1), n = q^(2e)-1
  IdentityReport identity;
};

BgParams params_bg(SymplecticVariant variant, std::int64_t q, int e);

struct PcRelationReport {
  bool holds = false;
  bool degenerate = false;
  std::string message;
  int block_a = -1;  // first differing block (classes, 0-based)
  int block_b = -1;
};

/// True iff x equals y with every all-zero off-diagonal block (relative to
/// the partition) replaced by all ones and every other block unchanged.
PcRelationReport pc_relation(const Graph& x, const Graph& y, const Partition& partition);

/// pc_relation with the symplectic premises: first argument the X graph,
/// second the Y graph over the same ring and e, Y a spanning subgraph of X.
PcRelationReport pc_relation_check(const SymplecticGraph& x, const SymplecticGraph& y, const Partition& partition);

struct SearchBudget {
  int seed_count = 64;                  // seeded (labeling, sigma) attempts
  std::chrono::milliseconds time{std::chrono::minutes(30)};
  std::uint64_t base_seed = 0;
  int max_translation_classes = 4096;   // structured attempts, q = 2 only
  std::chrono::milliseconds per_attempt{std::chrono::minutes(2)};  // iso_check cap per candidate
};

struct SigmaSearchResult {
  bool found = false;
  std::optional<LabeledMatrix> labels;
  BijectionFamily sigma;
  std::vector<int> mapping;  // construct1 vertex -> target vertex
  int attempts = 0;
  int structured_attempts = 0;
  int translation_classes = 0;  // cosets available to the structured phase (0 when not applicable)
  int fingerprint_rejects = 0;
  int unknown_iso = 0;  // attempts whose iso_check ran out of time
  std::string phase;    // where the witness came from, or why the search stopped
  std::chrono::milliseconds elapsed{0};
};

/// Looks for a labeling and sigma family whose Construction 1 graph is
/// isomorphic to target.
///
/// Structured phase (q = 2 AG designs): translating the points of design i
/// by t flips sigma(i, j) exactly when <normal of e(i, j), t> = 1, so sigma
/// families only matter modulo these flips. The phase fixes one labeling
/// (the polarity labeling when A carries polarity geometry and the designs
/// share normals, the canonical one otherwise) and tries one sigma family
/// per coset of the flip space, zero coset first, up to
/// max_translation_classes.
///
/// Seeded phase: (labeling, sigma) pairs seeded base_seed, base_seed + 1, ...
/// for seed_count attempts.
///
/// Candidates whose fingerprint differs from the target's are rejected
/// without iso_check. Throws Error when the closed-form parameters for A and
/// the designs differ from target's.
SigmaSearchResult sigma_search(const DdgInstance& target, const SymmetricDesignMatrix& a,
                               const std::vector<ResolvableDesign>& designs, const SearchBudget& budget);

}  // namespace ddg

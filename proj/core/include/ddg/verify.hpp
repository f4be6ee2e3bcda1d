#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddg/graph.hpp"
#include "ddg/limits.hpp"
#include "ddg/params.hpp"

namespace ddg {

// ---------------------------------------------------------------------------
// Brute-force DDG verification

enum class DdgFailure { None, NotSimple, NotRegular, Lambda1, Lambda2 };

const char* to_string(DdgFailure f);

struct DdgReport {
  bool ok = false;
  DdgParams params;  // filled when ok
  DdgFailure failure = DdgFailure::None;
  std::string message;
  int witness_x = -1;
  int witness_y = -1;
  int count = -1;     // observed degree / common-neighbour count at the witness
  int expected = -1;  // value it should have matched
};

// Throws Error when the partition does not cover the vertices with classes
// of one common size.
DdgReport ddg_verify(const Graph& g, const Partition& partition);
DdgReport ddg_verify(const Graph& g, const Partition& partition, const PairCounts& counts);

// ---------------------------------------------------------------------------
// Canonical partition discovery

struct DiscoveredPartition {
  Partition partition;
  DdgParams params;
};

struct SrgParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
};

struct Discovery {
  std::vector<int> count_values;  // distinct |N(x) ∩ N(y)| over x != y, ascending
  std::vector<DiscoveredPartition> partitions;
  std::optional<SrgParams> srg;   // set when counts depend only on adjacency

  std::vector<const DiscoveredPartition*> proper() const;
};

// Throws BoundError above limits.max_discover_vertices, Error when g is
// not regular.
Discovery partitions_discover(const Graph& g, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Counting identity

struct IdentityReport {
  std::int64_t lhs = 0;  // lambda1 (n - 1) + lambda2 n (m - 1)
  std::int64_t rhs = 0;  // k (k - 1)
  bool v_is_mn = false;
  bool pass = false;

  std::string str() const;
};

IdentityReport identity_check(const DdgParams& p);

// ---------------------------------------------------------------------------
// Colour refinement and isomorphism

/// Equitable refinement with canonical colour names: each round colours
/// vertices by (colour, sorted neighbour colours) and renames by the sorted
/// order of those signatures, so equal digests on two graphs mean
/// corresponding colour ids.
struct Colouring {
  std::vector<int> colour;
  int colour_count = 0;
  std::uint64_t digest = 0;  // hash of the full refinement trace
};

Colouring refine_colours(const Graph& g, std::vector<int> initial);
Colouring refine_colours(const Graph& g);

enum class IsoStatus { Isomorphic, NonIsomorphic, Unknown };

const char* to_string(IsoStatus s);

struct IsoOptions {
  std::chrono::milliseconds budget{std::chrono::minutes(10)};
  Limits limits;
};

struct IsoResult {
  IsoStatus status = IsoStatus::Unknown;
  std::vector<int> mapping;  // vertex x of G maps to mapping[x] in H
  std::string reason;        // distinguishing invariant, or why unknown
  std::int64_t search_nodes = 0;
};

/// Invariants first (order, edges, degrees, common-neighbour histograms,
/// refinement digest), then individualization-refinement backtracking.
/// Any mapping returned has been checked on every vertex pair. A timeout
/// gives Unknown, never NonIsomorphic.
IsoResult iso_check(const Graph& g, const Graph& h, const IsoOptions& options = {});

// True iff mapping is a bijection preserving adjacency and non-adjacency.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& mapping);

}  // namespace ddg

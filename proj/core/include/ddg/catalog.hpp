#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddg/descriptor.hpp"
#include "ddg/graph.hpp"
#include "ddg/limits.hpp"
#include "ddg/params.hpp"

namespace ddg {

/// Isomorphism invariant: order, degree (-1 when irregular), the sorted
/// histogram of (adjacent, common-neighbour count) over unordered pairs, and
/// the colour-refinement digest.
struct Fingerprint {
  int v = 0;
  int k = -1;
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> pair_histogram;  // ((adjacent, count), pairs)
  std::uint64_t refinement_digest = 0;

  std::string str() const;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Graph& g);

struct CatalogEntry {
  int id = 0;                              // NNNN in the file names
  std::string descriptor;                  // canonical text of the first descriptor
  std::vector<int> sources;                // stream positions merged into this entry
  std::optional<DdgParams> params;         // brute-force verified
  Fingerprint fingerprint;
  std::string graph_file;                  // NNNN.g6
  std::string report_file;                 // NNNN.report
  std::vector<int> possibly_isomorphic_to; // entry ids whose iso_check timed out
};

struct CatalogFailure {
  int source = 0;  // stream position
  std::string message;
};

struct CatalogIndex {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogFailure> failures;
  int merged = 0;  // descriptors discarded as isomorphic duplicates
};

struct CatalogOptions {
  Limits limits;
  std::chrono::milliseconds iso_budget{std::chrono::minutes(2)};
  std::filesystem::path base_dir;  // for relative file sources
  int threads = 0;                 // 0: hardware concurrency
};

/// Builds every descriptor (concurrently), verifies each graph by brute
/// force against its partition, fingerprints, and deduplicates: equal
/// fingerprints trigger iso_check, and only a verified isomorphism merges.
/// Writes NNNN.g6, NNNN.report and a JSON `index` into out_dir, each file
/// through a temporary and a rename. Per-descriptor failures are recorded.
CatalogIndex run_catalog(const std::vector<std::string>& descriptors, const std::filesystem::path& out_dir,
                         const CatalogOptions& options = {});

// Writes through "<path>.tmp" and renames over path.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace ddg

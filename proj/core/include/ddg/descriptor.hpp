#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddg/algebra.hpp"
#include "ddg/construct.hpp"
#include "ddg/designs.hpp"
#include "ddg/limits.hpp"
#include "ddg/symdesigns.hpp"
#include "ddg/symplectic.hpp"

namespace ddg {

enum class DescriptorKind { Construction1, PartialComplement, Symplectic, Sporadic28 };

const char* to_string(DescriptorKind kind);

struct DesignSource {
  enum class Kind { Ag, Hadamard, File };
  Kind kind = Kind::Ag;
  std::int64_t q = 2;  // ag
  int d = 2;           // ag
  int order = 8;       // hadamard
  HadamardMethod method = HadamardMethod::Sylvester;
  std::string path;    // file

  bool operator==(const DesignSource&) const = default;
};

struct SymmetricSource {
  enum class Kind { Fano, AllOnes, JMinusI, NullPolarity, DifferenceSet, File };
  Kind kind = Kind::Fano;
  int m = 0;            // all_ones, j_minus_i, difference_set
  int e = 2;            // null_polarity
  std::int64_t q = 2;   // null_polarity
  std::vector<int> set; // difference_set
  std::string path;     // file

  bool operator==(const SymmetricSource&) const = default;
};

// Polarity is only meaningful with a null_polarity matrix and AG designs.
enum class DescriptorLabeling { Canonical, Seeded, Explicit, Symmetric, Polarity };

struct ConstructionDescriptor {
  DescriptorKind kind = DescriptorKind::Construction1;

  // construction1 and partial_complement
  SymmetricSource symmetric;
  bool shared_design = true;          // one source reused for every class
  std::vector<DesignSource> designs;  // size 1 when shared, m otherwise
  DescriptorLabeling labeling = DescriptorLabeling::Canonical;
  std::uint64_t labeling_seed = 0;
  std::vector<std::vector<int>> labels;  // explicit labeling only
  SigmaStrategy sigma = SigmaStrategy::Identity;
  std::uint64_t sigma_seed = 0;

  // symplectic
  RingKind ring = RingKind::IntegersModPSquared;
  std::int64_t q = 2;
  int e = 2;
  SymplecticVariant graph = SymplecticVariant::Y;

  bool operator==(const ConstructionDescriptor&) const = default;
};

/// JSON object. Unknown or duplicate keys and type errors throw Error with a
/// JSON-pointer path to the offending field. Omitted seeds default to 0.
ConstructionDescriptor descriptor_parse(std::string_view text);

/// Canonical form: keys sorted, two-space indent, every default written
/// out, trailing newline. descriptor_emit(descriptor_parse(t)) == t for
/// canonical t.
std::string descriptor_emit(const ConstructionDescriptor& d);

struct BuildOptions {
  Limits limits;
  std::filesystem::path base_dir;  // relative file sources resolve here
};

/// Builds the graph. Symplectic instances carry the first discovered proper
/// partition (or the single-class partition when there is none) and its
/// brute-force parameters.
DdgInstance descriptor_build(const ConstructionDescriptor& d, const BuildOptions& options = {});

// File formats used by "file" sources.
// Design: {"points": N, "blocks": [[...], ...], "classes": [[block ids], ...]}.
DesignCandidate read_design_file(const std::filesystem::path& path);
// Symmetric matrix: one row per line of 0/1 characters; spaces ignored.
BinaryMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace ddg

#pragma once

#include <cstdint>

namespace ddg {

// Desk-scale guardrails. Every bounded operation takes a Limits so callers
// (and the CLI's --bound flag) can lift them.
struct Limits {
  std::int64_t max_field_order = 1 << 16;
  std::int64_t max_projective_classes = 100000;
  std::int64_t max_affine_points = 4096;
  std::int64_t max_symmetric_points = 4096;
  std::int64_t max_discover_vertices = 2000;
  std::int64_t max_iso_vertices = 500;
};

}  // namespace ddg

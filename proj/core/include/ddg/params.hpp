#pragma once

#include <cstdint>
#include <string>

namespace ddg {

/// (v, k, lambda1, lambda2; m, n) of a divisible design graph.
struct DdgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;

  // m > 1, n > 1 and lambda1 != lambda2; otherwise the graph is strongly regular.
  bool proper() const { return m > 1 && n > 1 && lambda1 != lambda2; }

  std::string str() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda1) + "," +
           std::to_string(lambda2) + ";" + std::to_string(m) + "," + std::to_string(n) + ")";
  }

  bool operator==(const DdgParams&) const = default;
};

}  // namespace ddg

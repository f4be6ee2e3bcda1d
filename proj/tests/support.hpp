#pragma once

#include <utility>
#include <vector>

#include "ddg/graph.hpp"
#include "ddg/rng.hpp"

namespace ddg::testing {

inline Graph random_graph(int n, double density, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  const auto threshold = static_cast<std::uint64_t>(density * 1000000);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (rng.below(1000000) < threshold) g.add_edge(x, y);
    }
  }
  return g;
}

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [x, y] : edges) g.add_edge(x, y);
  return g;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int x = 0; x < n; ++x) g.add_edge(x, (x + 1) % n);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) g.add_edge(x, y);
  }
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int x = 0; x + 1 < n; ++x) g.add_edge(x, x + 1);
  return g;
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline std::pair<Graph, std::vector<int>> shuffled(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  auto perm = rng.permutation(g.order());
  return {g.permuted(perm), perm};
}

}  // namespace ddg::testing

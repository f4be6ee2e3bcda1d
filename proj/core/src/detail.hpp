#pragma once

#include <vector>

#include "ddg/verify.hpp"

namespace ddg::detail {

using AdjacencyLists = std::vector<std::vector<int>>;

AdjacencyLists adjacency_lists(const Graph& g);

Colouring refine(const AdjacencyLists& adj, std::vector<int> initial);

}  // namespace ddg::detail

#pragma once

#include <string>
#include <string_view>

#include "ddg/graph.hpp"

namespace ddg {

/// graph6 line (no header, no newline): N(n) followed by the upper triangle
/// in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
/// into 6-bit groups, each offset by 63. N(n) is one byte for n <= 62,
/// '~' plus 3 bytes for n <= 258047, "~~" plus 6 bytes otherwise.
std::string graph6_encode(const Graph& g);

// Throws Error on a malformed line. One trailing '\n' (or "\r\n") is accepted.
Graph graph6_decode(std::string_view line);

}  // namespace ddg

#include "ddg/graph6.hpp"

#include <cstdint>

#include "ddg/error.hpp"

namespace ddg {

namespace {

void put_size(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

int sixbits(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw Error("graph6: byte " + std::to_string(pos) + " is outside '?'..'~'");
  return v;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  std::string out;
  const int n = g.order();
  put_size(out, n);
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw Error("graph6: empty line");
  if (line.front() == '>') throw Error("graph6: headers are not supported");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (line[0] != '~') {
    n = sixbits(line[0], 0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) throw Error("graph6: truncated size field");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | sixbits(line[pos], pos);
  } else {
    if (line.size() < 4) throw Error("graph6: truncated size field");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sixbits(line[pos], pos);
  }
  if (n > (1 << 20)) throw Error("graph6: order " + std::to_string(n) + " is too large to load");

  const std::int64_t edge_bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((edge_bits + 5) / 6);
  if (line.size() != expected) {
    throw Error("graph6: expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) + ", got " +
                std::to_string(line.size()));
  }
  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const auto byte = pos + static_cast<std::size_t>(k / 6);
      if ((sixbits(line[byte], byte) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (edge_bits % 6 != 0) {
    const int pad = static_cast<int>(6 - edge_bits % 6);
    if (sixbits(line.back(), line.size() - 1) & ((1 << pad) - 1)) throw Error("graph6: non-zero padding bits");
  }
  return g;
}

}  // namespace ddg

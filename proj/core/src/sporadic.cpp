#include <array>

#include "ddg/construct.hpp"

namespace ddg {

namespace {

using Block = std::array<std::array<int, 4>, 4>;

constexpr Block kA{{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}}};
constexpr Block kB{{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}}};
constexpr Block kC{{{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}}};
constexpr Block kD{{{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}};
constexpr Block kE{{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}};
constexpr Block kF{{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}};

enum Tag { O, A, At, B, Bt, C, Ct, D, E, Et, F, Ft };

// Block arrangement of the 28 x 28 adjacency matrix.
constexpr std::array<std::array<Tag, 7>, 7> kLayout{{
    {O, A, B, C, O, O, O},
    {At, D, O, O, E, O, O},
    {Bt, O, D, O, O, E, O},
    {Ct, O, O, D, O, O, E},
    {O, Et, O, O, O, A, C},
    {O, O, Et, O, At, O, F},
    {O, O, O, Et, Ct, Ft, O},
}};

int entry(Tag tag, int r, int c) {
  const auto pick = [&](const Block& b, bool transpose) {
    return transpose ? b[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]
                     : b[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  };
  switch (tag) {
    case O: return 0;
    case A: return pick(kA, false);
    case At: return pick(kA, true);
    case B: return pick(kB, false);
    case Bt: return pick(kB, true);
    case C: return pick(kC, false);
    case Ct: return pick(kC, true);
    case D: return pick(kD, false);
    case E: return pick(kE, false);
    case Et: return pick(kE, true);
    case F: return pick(kF, false);
    case Ft: return pick(kF, true);
  }
  return 0;
}

}  // namespace

DdgInstance sporadic28() {
  DdgInstance out;
  out.graph = Graph(28);
  for (int bi = 0; bi < 7; ++bi) {
    for (int bj = 0; bj < 7; ++bj) {
      const Tag tag = kLayout[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)];
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          const int x = 4 * bi + r, y = 4 * bj + c;
          if (x < y && entry(tag, r, c)) out.graph.add_edge(x, y);
        }
      }
    }
  }
  out.partition = Partition::blocks(7, 4);
  out.params = DdgParams{28, 6, 2, 1, 7, 4};
  out.source = ParamsSource::Published;
  out.provenance = "sporadic28";
  return out;
}

}  // namespace ddg

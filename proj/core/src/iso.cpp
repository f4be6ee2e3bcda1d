#include <algorithm>
#include <chrono>
#include <optional>

#include "ddg/error.hpp"
#include "ddg/verify.hpp"
#include "detail.hpp"

namespace ddg {

const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Isomorphic: return "isomorphic";
    case IsoStatus::NonIsomorphic: return "non-isomorphic";
    case IsoStatus::Unknown: return "unknown";
  }
  return "?";
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& mapping) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(mapping.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int y : mapping) {
    if (y < 0 || y >= n || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = 1;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y) != h.adjacent(mapping[static_cast<std::size_t>(x)], mapping[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timeout {};

std::vector<std::int64_t> pair_histogram(const Graph& g) {
  const PairCounts counts(g);
  const int n = g.order();
  // Slot 2c for non-adjacent pairs with c common neighbours, 2c+1 for adjacent.
  std::vector<std::int64_t> hist(2 * static_cast<std::size_t>(n) + 2, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      ++hist[2 * static_cast<std::size_t>(counts(x, y)) + (g.adjacent(x, y) ? 1 : 0)];
    }
  }
  return hist;
}

std::vector<int> cell_sizes(const Colouring& c) {
  std::vector<int> sizes(static_cast<std::size_t>(c.colour_count), 0);
  for (int x : c.colour) ++sizes[static_cast<std::size_t>(x)];
  return sizes;
}

bool same_shape(const Colouring& a, const Colouring& b) {
  return a.digest == b.digest && a.colour_count == b.colour_count && cell_sizes(a) == cell_sizes(b);
}

// One node on a fixed search path. The path always individualizes the
// first vertex of the smallest non-singleton cell.
struct Level {
  Colouring colouring;
  int target = -1;
  int u = -1;
  std::vector<int> members;            // target cell, vertex order
  std::vector<Colouring> children;     // refinement after individualizing each member
  std::vector<std::uint64_t> digests;  // sorted child digests
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

/// Individualization-refinement search. G's side follows one fixed path;
/// H's side branches over every member of the matching cell. Aut(H)
/// generators, found first along H's own path, prune H-side candidates that
/// lie in the orbit of an already refuted one under the automorphisms
/// fixing the current prefix.
class Search {
 public:
  Search(const Graph& g, const Graph& h, Clock::time_point deadline)
      : g_(g), h_(h), adj_g_(detail::adjacency_lists(g)), adj_h_(detail::adjacency_lists(h)), deadline_(deadline) {}

  std::optional<std::vector<int>> run(const Colouring& cg, const Colouring& ch) {
    path_h_ = make_path(adj_h_, ch);
    find_automorphisms();
    path_g_ = make_path(adj_g_, cg);
    std::vector<int> prefix;
    return descend(g_, path_g_, 0, ch, prefix);
  }
  std::int64_t nodes() const { return nodes_; }
  std::size_t generators() const { return generators_.size(); }

 private:
  void tick() {
    ++nodes_;
    if (Clock::now() > deadline_) throw Timeout{};
  }

  Level make_level(const detail::AdjacencyLists& adj, const Colouring& c) {
    Level l;
    l.colouring = c;
    const int n = static_cast<int>(adj.size());
    if (c.colour_count == n) return l;
    const auto sizes = cell_sizes(c);
    for (int k = 0; k < c.colour_count; ++k) {
      if (sizes[static_cast<std::size_t>(k)] > 1 &&
          (l.target < 0 || sizes[static_cast<std::size_t>(k)] < sizes[static_cast<std::size_t>(l.target)])) {
        l.target = k;
      }
    }
    expand(adj, c, l.target, l.members, l.children, l.digests);
    l.u = l.members.front();
    return l;
  }

  std::vector<Level> make_path(const detail::AdjacencyLists& adj, const Colouring& root) {
    std::vector<Level> path;
    path.push_back(make_level(adj, root));
    while (path.back().target >= 0) {
      tick();
      const Colouring next = path.back().children.front();
      path.push_back(make_level(adj, next));
    }
    return path;
  }

  void expand(const detail::AdjacencyLists& adj, const Colouring& c, int target, std::vector<int>& members,
              std::vector<Colouring>& children, std::vector<std::uint64_t>& digests) {
    const int n = static_cast<int>(adj.size());
    for (int x = 0; x < n; ++x) {
      if (c.colour[static_cast<std::size_t>(x)] != target) continue;
      if (Clock::now() > deadline_) throw Timeout{};
      auto init = c.colour;
      init[static_cast<std::size_t>(x)] = c.colour_count;
      members.push_back(x);
      children.push_back(detail::refine(adj, std::move(init)));
      digests.push_back(children.back().digest);
    }
    std::sort(digests.begin(), digests.end());
  }

  // Orbits of the generators that fix every prefix vertex.
  UnionFind orbits(const std::vector<int>& prefix) const {
    UnionFind uf(h_.order());
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int x) { return gamma[static_cast<std::size_t>(x)] == x; });
      if (!fixes) continue;
      for (int x = 0; x < h_.order(); ++x) uf.unite(x, gamma[static_cast<std::size_t>(x)]);
    }
    return uf;
  }

  // Maps the leaf of `left` (a path through `left_graph`) to H, starting at
  // `depth` with H's colouring ch reached by individualizing `prefix`.
  std::optional<std::vector<int>> descend(const Graph& left_graph, const std::vector<Level>& left, std::size_t depth,
                                          const Colouring& ch, std::vector<int>& prefix) {
    tick();
    const int n = h_.order();
    const Level& level = left[depth];
    if (level.target < 0) {
      std::vector<int> h_of_colour(static_cast<std::size_t>(n));
      for (int y = 0; y < n; ++y) h_of_colour[static_cast<std::size_t>(ch.colour[static_cast<std::size_t>(y)])] = y;
      std::vector<int> mapping(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        mapping[static_cast<std::size_t>(x)] =
            h_of_colour[static_cast<std::size_t>(level.colouring.colour[static_cast<std::size_t>(x)])];
      }
      if (is_isomorphism(left_graph, h_, mapping)) return mapping;
      return std::nullopt;
    }

    std::vector<int> members;
    std::vector<Colouring> children;
    std::vector<std::uint64_t> digests;
    expand(adj_h_, ch, level.target, members, children, digests);
    // Lookahead: an isomorphism maps the target cell onto its image, so the
    // children's digests must agree as multisets.
    if (digests != level.digests) return std::nullopt;

    std::vector<std::size_t> order(members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    // Trying u's own index first makes G vs G return the identity.
    std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return members[i] == level.u; });

    const Colouring& next_left = level.children.front();
    std::vector<int> refuted;
    std::size_t known_generators = generators_.size() + 1;
    std::optional<UnionFind> uf;
    for (std::size_t i : order) {
      const int w = members[i];
      if (!same_shape(next_left, children[i])) continue;
      if (known_generators != generators_.size()) {
        uf.emplace(orbits(prefix));
        known_generators = generators_.size();
      }
      if (std::any_of(refuted.begin(), refuted.end(), [&](int r) { return uf->find(r) == uf->find(w); })) continue;
      prefix.push_back(w);
      auto found = descend(left_graph, left, depth + 1, children[i], prefix);
      prefix.pop_back();
      if (found) return found;
      refuted.push_back(w);
    }
    return std::nullopt;
  }

  // Generators of Aut(H), processing H's path from the deepest level up. At
  // level d every generator found so far fixes the path prefix, so b_d's
  // orbit under them is known; each cell member outside it is tested once.
  void find_automorphisms() {
    for (std::size_t d = path_h_.size() - 1; d-- > 0;) {
      const Level& level = path_h_[d];
      std::vector<int> prefix;
      for (std::size_t i = 0; i < d; ++i) prefix.push_back(path_h_[i].u);
      std::vector<int> refuted;
      for (std::size_t i = 1; i < level.members.size(); ++i) {
        const int w = level.members[i];
        UnionFind uf = orbits(prefix);
        if (uf.find(w) == uf.find(level.u)) continue;
        if (std::any_of(refuted.begin(), refuted.end(), [&](int r) { return uf.find(r) == uf.find(w); })) continue;
        std::optional<std::vector<int>> gamma;
        if (same_shape(level.children.front(), level.children[i])) {
          prefix.push_back(w);
          gamma = descend(h_, path_h_, d + 1, level.children[i], prefix);
          prefix.pop_back();
        }
        if (gamma) {
          generators_.push_back(std::move(*gamma));
        } else {
          refuted.push_back(w);
        }
      }
    }
  }

  const Graph& g_;
  const Graph& h_;
  detail::AdjacencyLists adj_g_;
  detail::AdjacencyLists adj_h_;
  Clock::time_point deadline_;
  std::vector<Level> path_g_;
  std::vector<Level> path_h_;
  std::vector<std::vector<int>> generators_;  // automorphisms of H
  std::int64_t nodes_ = 0;
};

IsoResult differ(std::string invariant) {
  IsoResult r;
  r.status = IsoStatus::NonIsomorphic;
  r.reason = std::move(invariant);
  return r;
}

}  // namespace

IsoResult iso_check(const Graph& g, const Graph& h, const IsoOptions& options) {
  const auto deadline = Clock::now() + options.budget;
  const int n = g.order();
  if (std::max(n, h.order()) > options.limits.max_iso_vertices) {
    throw BoundError("isomorphism bound is " + std::to_string(options.limits.max_iso_vertices) + " vertices");
  }
  if (n != h.order()) return differ("vertex count");
  if (g.edge_count() != h.edge_count()) return differ("edge count");
  std::vector<int> dg, dh;
  for (int x = 0; x < n; ++x) {
    dg.push_back(g.degree(x));
    dh.push_back(h.degree(x));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return differ("degree sequence");
  if (pair_histogram(g) != pair_histogram(h)) return differ("common-neighbour histogram");
  const auto cg = refine_colours(g);
  const auto ch = refine_colours(h);
  if (!same_shape(cg, ch)) return differ("colour refinement");

  IsoResult result;
  Search search(g, h, deadline);
  try {
    if (auto mapping = search.run(cg, ch)) {
      result.status = IsoStatus::Isomorphic;
      result.mapping = std::move(*mapping);
    } else {
      // Every branch consistent with the invariants was explored.
      result.status = IsoStatus::NonIsomorphic;
      result.reason = "exhaustive search";
    }
  } catch (const Timeout&) {
    result.status = IsoStatus::Unknown;
    result.reason = "budget exhausted";
  }
  result.search_nodes = search.nodes();
  return result;
}

}  // namespace ddg

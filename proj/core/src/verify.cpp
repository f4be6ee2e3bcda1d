#include "ddg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ddg/error.hpp"
#include "detail.hpp"

namespace ddg {

const char* to_string(DdgFailure f) {
  switch (f) {
    case DdgFailure::None: return "none";
    case DdgFailure::NotSimple: return "not simple";
    case DdgFailure::NotRegular: return "not regular";
    case DdgFailure::Lambda1: return "lambda1";
    case DdgFailure::Lambda2: return "lambda2";
  }
  return "?";
}

namespace {

DdgReport ddg_fail(DdgFailure f, std::string message, int x = -1, int y = -1, int count = -1, int expected = -1) {
  DdgReport r;
  r.failure = f;
  r.message = std::move(message);
  r.witness_x = x;
  r.witness_y = y;
  r.count = count;
  r.expected = expected;
  return r;
}

}  // namespace

DdgReport ddg_verify(const Graph& g, const Partition& partition) {
  if (partition.vertex_count() != g.order()) {
    throw Error("partition covers " + std::to_string(partition.vertex_count()) + " vertices, graph has " +
                std::to_string(g.order()));
  }
  if (partition.uniform_size() == 0) throw Error("partition classes differ in size");
  if (!g.is_simple()) return ddg_fail(DdgFailure::NotSimple, "adjacency is not symmetric with empty diagonal");
  return ddg_verify(g, partition, PairCounts(g));
}

DdgReport ddg_verify(const Graph& g, const Partition& partition, const PairCounts& counts) {
  const int v = g.order();
  if (partition.vertex_count() != v || counts.order() != v) throw Error("partition or pair counts do not match the graph");
  const int n = partition.uniform_size();
  if (n == 0) throw Error("partition classes differ in size");
  if (v == 0) return ddg_fail(DdgFailure::NotRegular, "empty graph");

  const int k = counts(0, 0);
  for (int x = 1; x < v; ++x) {
    if (counts(x, x) != k) {
      return ddg_fail(DdgFailure::NotRegular,
                      "vertex " + std::to_string(x) + " has degree " + std::to_string(counts(x, x)) + ", vertex 0 has " +
                          std::to_string(k),
                      x, 0, counts(x, x), k);
    }
  }
  int lambda1 = -1, lambda2 = -1;
  int w1x = -1, w1y = -1, w2x = -1, w2y = -1;
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      const int c = counts(x, y);
      if (partition.class_of(x) == partition.class_of(y)) {
        if (lambda1 < 0) {
          lambda1 = c;
          w1x = x;
          w1y = y;
        } else if (c != lambda1) {
          return ddg_fail(DdgFailure::Lambda1,
                          "same-class vertices " + std::to_string(x) + "," + std::to_string(y) + " have " +
                              std::to_string(c) + " common neighbours; " + std::to_string(w1x) + "," +
                              std::to_string(w1y) + " have " + std::to_string(lambda1),
                          x, y, c, lambda1);
        }
      } else {
        if (lambda2 < 0) {
          lambda2 = c;
          w2x = x;
          w2y = y;
        } else if (c != lambda2) {
          return ddg_fail(DdgFailure::Lambda2,
                          "cross-class vertices " + std::to_string(x) + "," + std::to_string(y) + " have " +
                              std::to_string(c) + " common neighbours; " + std::to_string(w2x) + "," +
                              std::to_string(w2y) + " have " + std::to_string(lambda2),
                          x, y, c, lambda2);
        }
      }
    }
  }
  DdgReport r;
  r.ok = true;
  r.params.v = v;
  r.params.k = k;
  r.params.m = partition.class_count();
  r.params.n = n;
  // A vacuous lambda (singleton classes, or a single class) takes the other
  // value so that the improper case reads lambda1 = lambda2.
  r.params.lambda1 = lambda1 >= 0 ? lambda1 : std::max(lambda2, 0);
  r.params.lambda2 = lambda2 >= 0 ? lambda2 : std::max(lambda1, 0);
  return r;
}

std::vector<const DiscoveredPartition*> Discovery::proper() const {
  std::vector<const DiscoveredPartition*> out;
  for (const auto& p : partitions) {
    if (p.params.proper()) out.push_back(&p);
  }
  return out;
}

Discovery partitions_discover(const Graph& g, const Limits& limits) {
  const int v = g.order();
  if (v > limits.max_discover_vertices) {
    throw BoundError("graph has " + std::to_string(v) + " vertices, discovery bound is " +
                     std::to_string(limits.max_discover_vertices));
  }
  if (!g.is_simple()) throw Error("graph is not simple");
  const PairCounts counts(g);
  for (int x = 1; x < v; ++x) {
    if (counts(x, x) != counts(0, 0)) throw Error("graph is not regular (vertex " + std::to_string(x) + ")");
  }

  Discovery out;
  std::set<int> values;
  std::map<int, int> adjacent_values, nonadjacent_values;
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      values.insert(counts(x, y));
      ++(g.adjacent(x, y) ? adjacent_values : nonadjacent_values)[counts(x, y)];
    }
  }
  out.count_values.assign(values.begin(), values.end());
  if (v >= 2 && adjacent_values.size() <= 1 && nonadjacent_values.size() <= 1) {
    SrgParams s;
    s.v = v;
    s.k = counts(0, 0);
    s.lambda = adjacent_values.empty() ? 0 : adjacent_values.begin()->first;
    s.mu = nonadjacent_values.empty() ? 0 : nonadjacent_values.begin()->first;
    out.srg = s;
  }

  if (values.size() == 1) {
    // Every pair sees the same count: improper, one class.
    Partition single(std::vector<int>(static_cast<std::size_t>(v), 0));
    const auto report = ddg_verify(g, single, counts);
    out.partitions.push_back({std::move(single), report.params});
    return out;
  }

  for (int lambda1 : out.count_values) {
    // Components of the lambda1-relation; transitivity is checked below,
    // not assumed.
    std::vector<int> label(static_cast<std::size_t>(v), -1);
    int classes = 0;
    for (int s = 0; s < v; ++s) {
      if (label[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<int> stack{s};
      label[static_cast<std::size_t>(s)] = classes;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < v; ++y) {
          if (y != x && label[static_cast<std::size_t>(y)] < 0 && counts(x, y) == lambda1) {
            label[static_cast<std::size_t>(y)] = classes;
            stack.push_back(y);
          }
        }
      }
      ++classes;
    }
    Partition candidate(std::move(label));
    if (candidate.uniform_size() == 0) continue;
    bool equivalence = true;
    for (int c = 0; c < candidate.class_count() && equivalence; ++c) {
      const auto& mem = candidate.members(c);
      for (std::size_t a = 0; a < mem.size() && equivalence; ++a) {
        for (std::size_t b = a + 1; b < mem.size(); ++b) {
          if (counts(mem[a], mem[b]) != lambda1) {
            equivalence = false;
            break;
          }
        }
      }
    }
    if (!equivalence) continue;
    const auto report = ddg_verify(g, candidate, counts);
    if (report.ok) out.partitions.push_back({std::move(candidate), report.params});
  }
  return out;
}

std::string IdentityReport::str() const {
  return std::to_string(lhs) + (lhs == rhs ? " = " : " != ") + std::to_string(rhs) + (v_is_mn ? "" : ", v != mn");
}

IdentityReport identity_check(const DdgParams& p) {
  IdentityReport r;
  r.lhs = p.lambda1 * (p.n - 1) + p.lambda2 * p.n * (p.m - 1);
  r.rhs = p.k * (p.k - 1);
  r.v_is_mn = p.v == p.m * p.n;
  r.pass = r.v_is_mn && r.lhs == r.rhs;
  return r;
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void mix(std::uint64_t& h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

}  // namespace

Colouring refine_colours(const Graph& g) {
  return refine_colours(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0));
}

Colouring refine_colours(const Graph& g, std::vector<int> initial) {
  if (static_cast<int>(initial.size()) != g.order()) throw Error("initial colouring size mismatch");
  return detail::refine(detail::adjacency_lists(g), std::move(initial));
}

namespace detail {

AdjacencyLists adjacency_lists(const Graph& g) {
  AdjacencyLists adj(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) adj[static_cast<std::size_t>(x)] = g.neighbours(x);
  return adj;
}

Colouring refine(const AdjacencyLists& adj, std::vector<int> initial) {
  const int v = static_cast<int>(adj.size());
  Colouring out;
  out.colour = std::move(initial);
  out.digest = kFnvOffset;
  // Normalize the initial colours to 0..c-1 preserving their order.
  {
    std::vector<int> distinct = out.colour;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& c : out.colour) c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
    out.colour_count = static_cast<int>(distinct.size());
  }

  std::vector<std::vector<int>> sig(static_cast<std::size_t>(v));
  std::vector<int> order(static_cast<std::size_t>(v));
  while (true) {
    for (int x = 0; x < v; ++x) {
      auto& s = sig[static_cast<std::size_t>(x)];
      s.clear();
      s.push_back(out.colour[static_cast<std::size_t>(x)]);
      for (int y : adj[static_cast<std::size_t>(x)]) s.push_back(out.colour[static_cast<std::size_t>(y)]);
      std::sort(s.begin() + 1, s.end());
    }
    for (int x = 0; x < v; ++x) order[static_cast<std::size_t>(x)] = x;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
    });
    std::vector<int> next(static_cast<std::size_t>(v));
    int count = 0;
    for (int i = 0; i < v; ++i) {
      const int x = order[static_cast<std::size_t>(i)];
      if (i > 0 && sig[static_cast<std::size_t>(x)] != sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])]) ++count;
      next[static_cast<std::size_t>(x)] = count;
    }
    if (v > 0) ++count;
    // Trace: each new colour's signature and its multiplicity.
    for (int i = 0; i < v; ++i) {
      const int x = order[static_cast<std::size_t>(i)];
      if (i == 0 || sig[static_cast<std::size_t>(x)] != sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])]) {
        mix(out.digest, 0xC0FFEEu);
        for (int c : sig[static_cast<std::size_t>(x)]) mix(out.digest, static_cast<std::uint64_t>(c));
      }
      mix(out.digest, 1);
    }
    out.colour = std::move(next);
    if (count == out.colour_count) break;
    out.colour_count = count;
  }
  mix(out.digest, static_cast<std::uint64_t>(out.colour_count));
  return out;
}

}  // namespace detail

}  // namespace ddg

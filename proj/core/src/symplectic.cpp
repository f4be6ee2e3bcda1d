#include "ddg/symplectic.hpp"

#include <algorithm>

#include "ddg/error.hpp"

namespace ddg {

const char* to_string(SymplecticVariant v) { return v == SymplecticVariant::X ? "X" : "Y"; }

SymplecticGraph::SymplecticGraph(SymplecticVariant variant, int e, const LocalRing& ring, const Limits& limits)
    : variant_(variant), classes_(ring, e, limits) {
  const int n = classes_.size();
  graph_ = Graph(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge_rule(form(classes_.representative(a), classes_.representative(b)))) graph_.add_edge(a, b);
    }
  }
}

int SymplecticGraph::form(std::span<const int> a, std::span<const int> b) const {
  const auto& k = ring();
  const auto half = static_cast<std::size_t>(e());
  int s = 0;
  for (std::size_t i = 0; i < half; ++i) {
    s = k.add(s, k.sub(k.mul(a[i], b[i + half]), k.mul(a[i + half], b[i])));
  }
  return s;
}

bool SymplecticGraph::edge_rule(int value) const {
  if (value == 0) return false;
  return variant_ == SymplecticVariant::X || ring().in_ideal(value);
}

bool SymplecticGraph::well_defined_on_sample(int pairs) const {
  const int n = classes_.size();
  const auto& k = ring();
  const auto dim = static_cast<std::size_t>(classes_.dimension());
  std::vector<int> sa(dim), sb(dim);
  const long long total = static_cast<long long>(n) * n;
  const long long stride = std::max<long long>(1, total / std::max(pairs, 1));
  for (long long code = 0, done = 0; code < total && done < pairs; code += stride, ++done) {
    const int a = static_cast<int>(code / n), b = static_cast<int>(code % n);
    if (a == b) continue;
    const auto ra = classes_.representative(a), rb = classes_.representative(b);
    const bool expected = graph_.adjacent(a, b);
    for (int u : k.units()) {
      for (int w : k.units()) {
        for (std::size_t i = 0; i < dim; ++i) {
          sa[i] = k.mul(u, ra[i]);
          sb[i] = k.mul(w, rb[i]);
        }
        if (classes_.lookup(sa) != a || classes_.lookup(sb) != b) return false;
        if (edge_rule(form(sa, sb)) != expected) return false;
      }
    }
  }
  return true;
}

BgParams params_bg(SymplecticVariant variant, std::int64_t q, int e) {
  if (factor_prime_power(q).k == 0) throw Error("q = " + std::to_string(q) + " is not a prime power");
  if (e < 2) throw Error("e must be at least 2");
  const auto pw = [q](int exp) { return ipow(q, exp); };
  BgParams r;
  auto& p = r.params;
  p.v = pw(2 * e - 1) * (pw(2 * e) - 1) / (q - 1);
  if (variant == SymplecticVariant::X) {
    p.k = pw(4 * e - 2) + pw(4 * e - 3) - pw(2 * e - 2);
    p.lambda1 = pw(4 * e - 2) + pw(4 * e - 3) - pw(4 * e - 4) - pw(2 * e - 2);
    p.lambda2 = pw(4 * e - 2) + pw(4 * e - 3) - pw(4 * e - 4) - pw(4 * e - 5) - pw(2 * e - 2) + pw(2 * e - 3);
  } else {
    p.k = pw(4 * e - 3) - pw(2 * e - 2);
    p.lambda1 = pw(4 * e - 3) - pw(4 * e - 4) - pw(2 * e - 2);
    p.lambda2 = pw(4 * e - 4) - pw(4 * e - 5) - pw(2 * e - 2) + pw(2 * e - 3);
  }
  p.m = pw(2 * e - 1) * (q - 1);
  p.n = pw(2 * e) - 1;
  r.identity = identity_check(p);
  return r;
}

PcRelationReport pc_relation(const Graph& x, const Graph& y, const Partition& partition) {
  if (x.order() != y.order() || partition.vertex_count() != x.order()) {
    throw Error("graphs and partition must share one vertex set");
  }
  PcRelationReport r;
  const int m = partition.class_count();
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      bool y_zero = true;
      for (int u : partition.members(a)) {
        for (int w : partition.members(b)) {
          if (y.adjacent(u, w)) y_zero = false;
        }
      }
      const bool fill = a != b && y_zero;
      for (int u : partition.members(a)) {
        for (int w : partition.members(b)) {
          if (u == w) continue;
          const bool want = fill || y.adjacent(u, w);
          if (x.adjacent(u, w) != want) {
            r.block_a = a;
            r.block_b = b;
            r.message = "block (" + std::to_string(a) + "," + std::to_string(b) + ") differs at vertices " +
                        std::to_string(u) + "," + std::to_string(w) +
                        (fill ? " (zero block not filled)" : " (non-zero block changed)");
            return r;
          }
        }
      }
    }
  }
  r.holds = true;
  return r;
}

PcRelationReport pc_relation_check(const SymplecticGraph& x, const SymplecticGraph& y, const Partition& partition) {
  if (x.e() != y.e() || x.ring().kind() != y.ring().kind() || x.ring().residue_order() != y.ring().residue_order()) {
    throw Error("X and Y must share ring and e");
  }
  if (partition.vertex_count() != x.graph().order()) throw Error("partition does not match the graphs");
  PcRelationReport r;
  if (x.variant() != SymplecticVariant::X || y.variant() != SymplecticVariant::Y) {
    r.degenerate = true;
    r.message = std::string("expected (X, Y), got (") + to_string(x.variant()) + ", " + to_string(y.variant()) + ")";
    return r;
  }
  const int n = x.graph().order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (y.graph().adjacent(a, b) && !x.graph().adjacent(a, b)) {
        r.degenerate = true;
        r.message = "Y edge " + std::to_string(a) + "," + std::to_string(b) + " is missing from X";
        return r;
      }
    }
  }
  return pc_relation(x.graph(), y.graph(), partition);
}

}  // namespace ddg

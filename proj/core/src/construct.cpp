#include "ddg/construct.hpp"

#include <numeric>
#include <stdexcept>

#include "ddg/algebra.hpp"
#include "ddg/error.hpp"
#include "ddg/rng.hpp"

namespace ddg {

const char* to_string(SigmaStrategy s) {
  switch (s) {
    case SigmaStrategy::Identity: return "identity";
    case SigmaStrategy::Seeded: return "seeded";
    case SigmaStrategy::Explicit: return "explicit";
  }
  return "?";
}

const char* to_string(ParamsSource s) {
  switch (s) {
    case ParamsSource::None: return "none";
    case ParamsSource::Theorem1: return "closed_form";
    case ParamsSource::BruteForce: return "brute_force";
    case ParamsSource::Published: return "published";
  }
  return "?";
}

const char* to_string(Theorem2Variant v) {
  return v == Theorem2Variant::AsPrinted ? "printed" : "corrected";
}

namespace {

void check_designs(const LabeledMatrix& labels, const std::vector<ResolvableDesign>& designs) {
  if (static_cast<int>(designs.size()) != labels.m()) {
    throw Error("need one design per row of L: " + std::to_string(labels.m()) + " rows, " +
                std::to_string(designs.size()) + " designs");
  }
  const auto& first = designs.front();
  for (std::size_t i = 1; i < designs.size(); ++i) {
    const auto& d = designs[i];
    if (d.q() != first.q() || d.r() != first.r() || d.kappa() != first.kappa() ||
        d.point_count() != first.point_count()) {
      throw Error("design " + std::to_string(i) + " (" + d.name() + ") does not share (q, r, kappa) with design 0 (" +
                  first.name() + ")");
    }
  }
  if (first.kappa() != labels.kappa()) {
    throw Error("designs have " + std::to_string(first.kappa()) + " parallel classes but L uses labels 1.." +
                std::to_string(labels.kappa()));
  }
}

bool is_permutation_of(const std::vector<int>& p, int q) {
  if (static_cast<int>(p.size()) != q) return false;
  std::vector<char> seen(static_cast<std::size_t>(q), 0);
  for (int x : p) {
    if (x < 0 || x >= q || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

std::vector<int> identity_perm(int q) {
  std::vector<int> id(static_cast<std::size_t>(q));
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

BijectionFamily sigma_family_make(const LabeledMatrix& labels, const std::vector<ResolvableDesign>& designs,
                                  const SigmaRequest& request) {
  check_designs(labels, designs);
  const int m = labels.m();
  const int q = designs.front().q();
  if (request.strategy == SigmaStrategy::Explicit) {
    const auto& f = request.explicit_family;
    if (f.m() != m || f.q() != q) throw Error("explicit sigma family has the wrong shape");
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const std::string where = "sigma(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if ((labels.at(i, j) != 0) != f.defined(i, j)) {
          throw Error(where + " must be defined exactly where e(i,j) != 0");
        }
        if (!f.defined(i, j)) continue;
        if (!is_permutation_of(f.at(i, j), q)) throw Error(where + " is not a permutation of 0.." + std::to_string(q - 1));
        if (i == j && f.at(i, j) != identity_perm(q)) throw Error(where + " must be the identity");
        if (i != j && f.at(j, i) != inverse(f.at(i, j))) {
          throw Error(where + " is not the inverse of sigma(" + std::to_string(j) + "," + std::to_string(i) + ")");
        }
      }
    }
    return f;
  }

  BijectionFamily family(m, q);
  Rng rng(request.seed);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (labels.at(i, j) == 0) continue;
      if (i == j || request.strategy == SigmaStrategy::Identity) {
        family.set(i, j, identity_perm(q));
        family.set(j, i, identity_perm(q));
      } else {
        auto perm = rng.permutation(q);
        family.set(j, i, inverse(perm));
        family.set(i, j, std::move(perm));
      }
    }
  }
  return family;
}

DdgInstance construct1(const LabeledMatrix& labels, const std::vector<ResolvableDesign>& designs,
                       const BijectionFamily& sigma) {
  check_designs(labels, designs);
  const int m = labels.m();
  const int pts = designs.front().point_count();
  if (sigma.m() != m || sigma.q() != designs.front().q()) throw Error("sigma family does not match L and the designs");

  const auto adjacent = [&](int i, int x, int j, int y) {
    const int ci = labels.at(i, j);
    if (ci == 0 || (i == j && x == y)) return false;
    const int cj = labels.at(j, i);
    const int image = sigma.at(i, j)[static_cast<std::size_t>(designs[static_cast<std::size_t>(i)].slot_of(ci, x))];
    return designs[static_cast<std::size_t>(j)].slot_of(cj, y) != image;
  };

  DdgInstance out;
  out.graph = Graph(m * pts);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (labels.at(i, j) == 0) continue;
      if (!sigma.defined(i, j) || !sigma.defined(j, i)) throw Error("sigma family is missing a defined pair");
      for (int x = 0; x < pts; ++x) {
        for (int y = (i == j ? x + 1 : 0); y < pts; ++y) {
          const bool forward = adjacent(i, x, j, y);
          if (forward != adjacent(j, y, i, x)) {
            throw std::logic_error("construction produced an asymmetric adjacency at vertices " +
                                   std::to_string(i * pts + x) + ", " + std::to_string(j * pts + y));
          }
          if (forward) out.graph.add_edge(i * pts + x, j * pts + y);
        }
      }
    }
  }
  out.partition = Partition::blocks(m, pts);
  out.provenance = "construction1";

  if (const auto d = designs.front().ag_dimension()) {
    const auto& p = labels.parent();
    out.closed_form = ClosedFormInputs{designs.front().q(), *d, p.m, p.kappa, p.lambda};
    out.params = params_theorem1(designs.front().q(), *d, p.m, p.lambda);
    out.source = ParamsSource::Theorem1;
  } else {
    const auto report = ddg_verify(out.graph, out.partition);
    if (report.ok) {
      out.params = report.params;
      out.source = ParamsSource::BruteForce;
    }
  }
  return out;
}

namespace {

std::int64_t kappa_of(std::int64_t q, int d) { return (ipow(q, d) - 1) / (q - 1); }

void check_closed_form_inputs(std::int64_t q, int d, std::int64_t m, std::int64_t kappa, std::int64_t lambda) {
  if (factor_prime_power(q).k == 0) throw Error("q = " + std::to_string(q) + " is not a prime power");
  if (d < 2) throw Error("d must be at least 2");
  if (kappa != kappa_of(q, d)) {
    throw Error("kappa = " + std::to_string(kappa) + " differs from (q^d - 1)/(q - 1) = " + std::to_string(kappa_of(q, d)));
  }
  if (m < kappa || lambda < 1 || lambda > kappa || kappa * (kappa - 1) != (m - 1) * lambda) {
    throw Error("(m, kappa, lambda) = (" + std::to_string(m) + "," + std::to_string(kappa) + "," +
                std::to_string(lambda) + ") violates kappa(kappa - 1) = (m - 1) lambda");
  }
}

}  // namespace

DdgParams params_theorem1(std::int64_t q, int d, std::int64_t m, std::int64_t lambda) {
  check_closed_form_inputs(q, d, m, kappa_of(q, d), lambda);
  const std::int64_t qd = ipow(q, d), qd1 = ipow(q, d - 1), qd2 = ipow(q, d - 2);
  DdgParams p;
  p.v = qd * m;
  p.k = qd1 * (qd - 1);
  p.lambda1 = qd1 * (qd - qd1 - 1);
  p.lambda2 = qd2 * (q - 1) * (q - 1) * lambda;
  p.m = m;
  p.n = qd;
  return p;
}

Theorem2Result params_theorem2(std::int64_t q, int d, std::int64_t m, std::int64_t kappa, std::int64_t lambda,
                               Theorem2Variant variant) {
  check_closed_form_inputs(q, d, m, kappa, lambda);
  const std::int64_t qd = ipow(q, d), qd1 = ipow(q, d - 1), qd2 = ipow(q, d - 2);
  // A cross pair whose blocks toward class h are zero on exactly one side
  // shares q^d - q^(d-1) neighbours there; AsPrinted keeps q^d - 2q^(d-1).
  const std::int64_t middle = variant == Theorem2Variant::AsPrinted ? qd - 2 * qd1 : qd - qd1;
  Theorem2Result r;
  r.variant = variant;
  r.params.v = qd * m;
  r.params.k = qd1 * (qd - 1) + qd * (m - kappa);
  r.params.lambda1 = qd1 * (qd - qd1 - 1) + qd * (m - kappa);
  r.params.lambda2 = qd2 * (q - 1) * (q - 1) * lambda + 2 * middle * (kappa - lambda) + qd * (m - 2 * kappa + lambda);
  r.params.m = m;
  r.params.n = qd;
  r.identity = identity_check(r.params);
  return r;
}

namespace {

bool block_is_zero(const Graph& g, const Partition& p, int a, int b) {
  for (int x : p.members(a)) {
    for (int y : p.members(b)) {
      if (g.adjacent(x, y)) return false;
    }
  }
  return true;
}

}  // namespace

BinaryMatrix block_collapse(const Graph& g, const Partition& partition) {
  const int m = partition.class_count();
  BinaryMatrix out(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = block_is_zero(g, partition, a, b) ? 0 : 1;
    }
  }
  return out;
}

DdgInstance partial_complement(const DdgInstance& g) {
  const auto& p = g.partition;
  if (p.vertex_count() != g.graph.order() || p.uniform_size() == 0) {
    throw Error("partial complement needs a partition into classes of equal size");
  }
  const auto collapsed = block_collapse(g.graph, p);
  const int m = p.class_count();
  for (int a = 0; a < m; ++a) {
    if (collapsed[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] == 0) {
      throw Error("class " + std::to_string(a + 1) + " diagonal block is zero");
    }
  }
  DdgInstance out;
  out.graph = g.graph;
  out.partition = p;
  out.provenance = "partial_complement(" + g.provenance + ")";
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (collapsed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0) continue;
      for (int x : p.members(a)) {
        for (int y : p.members(b)) out.graph.add_edge(x, y);
      }
    }
  }
  const auto report = ddg_verify(out.graph, out.partition);
  if (report.ok) {
    out.params = report.params;
    out.source = ParamsSource::BruteForce;
  }
  if (g.closed_form) {
    const auto& c = *g.closed_form;
    for (auto variant : {Theorem2Variant::AsPrinted, Theorem2Variant::MiddleTermCorrected}) {
      out.theorem2.push_back(params_theorem2(c.q, c.d, c.m, c.kappa, c.lambda, variant));
    }
  }
  return out;
}

}  // namespace ddg

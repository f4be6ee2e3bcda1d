#include "ddg/symdesigns.hpp"

#include <algorithm>
#include <functional>

#include "ddg/algebra.hpp"
#include "ddg/error.hpp"
#include "ddg/rng.hpp"

namespace ddg {

const char* to_string(SymmetricViolation v) {
  switch (v) {
    case SymmetricViolation::None: return "none";
    case SymmetricViolation::NotSquare: return "not square";
    case SymmetricViolation::NotBinary: return "not 0/1";
    case SymmetricViolation::NotSymmetric: return "not symmetric";
    case SymmetricViolation::RowSum: return "row sum";
    case SymmetricViolation::InnerProduct: return "inner product";
    case SymmetricViolation::Degenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(LabelStrategy s) {
  switch (s) {
    case LabelStrategy::Canonical: return "canonical";
    case LabelStrategy::Seeded: return "seeded";
    case LabelStrategy::Explicit: return "explicit";
    case LabelStrategy::Symmetric: return "symmetric";
  }
  return "?";
}

namespace {

SymmetricReport violation(SymmetricViolation v, std::string message, int a = -1, int b = -1) {
  SymmetricReport r;
  r.violated = v;
  r.message = std::move(message);
  r.witness_a = a;
  r.witness_b = b;
  return r;
}

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

SymmetricReport symdesign_verify(const BinaryMatrix& a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return violation(SymmetricViolation::NotSquare, "empty matrix");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != m) {
      return violation(SymmetricViolation::NotSquare, "row " + std::to_string(i) + " has wrong length", i);
    }
    for (int j = 0; j < m; ++j) {
      const int x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (x != 0 && x != 1) return violation(SymmetricViolation::NotBinary, "entry " + pair_str(i, j) + " is not 0/1", i, j);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        return violation(SymmetricViolation::NotSymmetric, "entries " + pair_str(i, j) + " and " + pair_str(j, i) + " differ", i, j);
      }
    }
  }
  std::vector<int> sums(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int x : a[static_cast<std::size_t>(i)]) sums[static_cast<std::size_t>(i)] += x;
    if (sums[static_cast<std::size_t>(i)] != sums[0]) {
      return violation(SymmetricViolation::RowSum,
                       "row " + std::to_string(i) + " sums to " + std::to_string(sums[static_cast<std::size_t>(i)]) +
                           ", row 0 sums to " + std::to_string(sums[0]),
                       i, 0);
    }
  }
  if (m < 2) return violation(SymmetricViolation::Degenerate, "a 1x1 matrix has no pairwise inner product");
  int lambda = -1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      int dot = 0;
      for (int c = 0; c < m; ++c) dot += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * a[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      if (lambda < 0) lambda = dot;
      if (dot != lambda) {
        return violation(SymmetricViolation::InnerProduct,
                         "rows " + pair_str(i, j) + " have inner product " + std::to_string(dot) + ", expected " +
                             std::to_string(lambda),
                         i, j);
      }
    }
  }
  if (lambda < 1) {
    return violation(SymmetricViolation::Degenerate, "inner product 0: rows share no columns, not a 2-design", 0, 1);
  }
  SymmetricReport r;
  r.ok = true;
  r.params = {m, sums[0], lambda};
  return r;
}

SymmetricDesignMatrix::SymmetricDesignMatrix(BinaryMatrix rows, std::string name,
                                             std::optional<PolarityGeometry> geometry)
    : rows_(std::move(rows)), name_(std::move(name)), geometry_(std::move(geometry)) {
  const auto report = symdesign_verify(rows_);
  if (!report.ok) {
    throw Error("not a symmetric design matrix (" + std::string(to_string(report.violated)) + "): " + report.message);
  }
  params_ = report.params;
}

SymmetricDesignMatrix symdesign_fano() {
  return SymmetricDesignMatrix({{0, 1, 1, 1, 0, 0, 0},
                                {1, 1, 0, 0, 1, 0, 0},
                                {1, 0, 1, 0, 0, 1, 0},
                                {1, 0, 0, 1, 0, 0, 1},
                                {0, 1, 0, 0, 0, 1, 1},
                                {0, 0, 1, 0, 1, 0, 1},
                                {0, 0, 0, 1, 1, 1, 0}},
                               "fano");
}

SymmetricDesignMatrix symdesign_trivial(TrivialVariant variant, int m) {
  if (variant == TrivialVariant::AllOnes) {
    if (m < 2) throw Error("all-ones design needs m >= 2, got " + std::to_string(m));
    return SymmetricDesignMatrix(BinaryMatrix(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 1)),
                                 "all_ones(" + std::to_string(m) + ")");
  }
  if (m < 3) throw Error("J - I design needs m >= 3 (m = 2 has lambda = 0), got " + std::to_string(m));
  BinaryMatrix rows(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 1));
  for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  return SymmetricDesignMatrix(std::move(rows), "j_minus_i(" + std::to_string(m) + ")");
}

SymmetricDesignMatrix symdesign_null_polarity(int e, std::int64_t q, const Limits& limits) {
  if (e < 1) throw Error("null polarity needs e >= 1");
  const auto pp = factor_prime_power(q);
  if (pp.k == 0) throw Error("null polarity needs a prime power q, got " + std::to_string(q));
  const int dim = 2 * e;
  const std::int64_t points = (ipow(q, dim) - 1) / (q - 1);
  if (points > limits.max_symmetric_points) {
    throw BoundError("PG(" + std::to_string(dim - 1) + "," + std::to_string(q) + ") has " + std::to_string(points) +
                     " points, bound is " + std::to_string(limits.max_symmetric_points));
  }
  const FiniteField f(pp.p, pp.k, limits);
  PolarityGeometry geo{e, q, {}};
  const std::int64_t total = ipow(q, dim);
  for (std::int64_t code = 1; code < total; ++code) {
    std::vector<int> v(static_cast<std::size_t>(dim));
    std::int64_t c = code;
    for (int i = dim - 1; i >= 0; --i, c /= q) v[static_cast<std::size_t>(i)] = static_cast<int>(c % q);
    const auto lead = std::find_if(v.begin(), v.end(), [](int a) { return a != 0; });
    if (*lead == f.one()) geo.points.push_back(std::move(v));
  }
  const auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int s = 0;
    for (int i = 0; i < e; ++i) {
      const auto ie = static_cast<std::size_t>(i + e);
      const auto ii = static_cast<std::size_t>(i);
      s = f.add(s, f.sub(f.mul(x[ii], y[ie]), f.mul(x[ie], y[ii])));
    }
    return s;
  };
  const auto n = geo.points.size();
  BinaryMatrix rows(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = form(geo.points[i], geo.points[j]) == 0 ? 1 : 0;
  }
  return SymmetricDesignMatrix(std::move(rows), "null_polarity(" + std::to_string(e) + "," + std::to_string(q) + ")",
                               std::move(geo));
}

SymmetricDesignMatrix symdesign_difference_set(int m, const std::vector<int>& set) {
  if (m < 2) throw Error("difference set modulus must be at least 2");
  std::vector<int> d;
  for (int x : set) d.push_back(((x % m) + m) % m);
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw Error("difference set has repeated residues");
  std::vector<int> cover(static_cast<std::size_t>(m), 0);
  for (int a : d) {
    for (int b : d) {
      if (a != b) ++cover[static_cast<std::size_t>(((a - b) % m + m) % m)];
    }
  }
  for (int r = 1; r < m; ++r) {
    if (cover[static_cast<std::size_t>(r)] != cover[1]) {
      throw Error("not a difference set: residue " + std::to_string(r) + " arises " +
                  std::to_string(cover[static_cast<std::size_t>(r)]) + " times, residue 1 arises " +
                  std::to_string(cover[1]) + " times");
    }
  }
  BinaryMatrix rows(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::binary_search(d.begin(), d.end(), (i + j) % m) ? 1 : 0;
    }
  }
  std::string name = "difference_set(" + std::to_string(m) + ",{";
  for (std::size_t i = 0; i < d.size(); ++i) name += (i ? "," : "") + std::to_string(d[i]);
  name += "})";
  return SymmetricDesignMatrix(std::move(rows), std::move(name));
}

LabeledMatrix::LabeledMatrix(const SymmetricDesignMatrix& a, std::vector<std::vector<int>> labels)
    : parent_(a.params()), labels_(std::move(labels)) {
  const int m = a.m();
  const int kappa = a.kappa();
  if (static_cast<int>(labels_.size()) != m) throw Error("labeled matrix: expected " + std::to_string(m) + " rows");
  for (int i = 0; i < m; ++i) {
    const auto& row = labels_[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != m) throw Error("labeled matrix: row " + std::to_string(i) + " has wrong length");
    std::vector<int> seen(static_cast<std::size_t>(kappa) + 1, 0);
    for (int j = 0; j < m; ++j) {
      const int label = row[static_cast<std::size_t>(j)];
      if (label < 0 || label > kappa) {
        throw Error("labeled matrix: entry " + pair_str(i, j) + " = " + std::to_string(label) + " outside 0.." +
                    std::to_string(kappa));
      }
      if ((label == 0) != (a.at(i, j) == 0)) {
        throw Error("labeled matrix: zero pattern differs from A at " + pair_str(i, j));
      }
      if (label != 0 && seen[static_cast<std::size_t>(label)]++) {
        throw Error("labeled matrix: row " + std::to_string(i) + " repeats label " + std::to_string(label));
      }
    }
    // Support symmetry is inherited from A = A^T; row bijectivity follows
    // from kappa distinct labels on kappa non-zero entries.
  }
}

bool LabeledMatrix::entrywise_symmetric() const {
  for (int i = 0; i < m(); ++i) {
    for (int j = i + 1; j < m(); ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<int>> symmetric_search(const SymmetricDesignMatrix& a, std::int64_t budget) {
  const int m = a.m();
  const int kappa = a.kappa();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (a.at(i, j)) edges.emplace_back(i, j);
    }
  }
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  std::vector<std::vector<char>> used(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(kappa) + 1, 0));
  std::int64_t nodes = 0;
  bool out_of_budget = false;
  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == edges.size()) return true;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    const auto [i, j] = edges[idx];
    auto& ui = used[static_cast<std::size_t>(i)];
    auto& uj = used[static_cast<std::size_t>(j)];
    for (int c = 1; c <= kappa; ++c) {
      if (ui[static_cast<std::size_t>(c)] || uj[static_cast<std::size_t>(c)]) continue;
      ui[static_cast<std::size_t>(c)] = uj[static_cast<std::size_t>(c)] = 1;
      labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = labels[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
      if (place(idx + 1)) return true;
      ui[static_cast<std::size_t>(c)] = uj[static_cast<std::size_t>(c)] = 0;
      labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = labels[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 0;
      if (out_of_budget) return false;
    }
    return false;
  };
  if (place(0)) return labels;
  if (out_of_budget) throw Error("symmetric labeling search exhausted its node budget");
  throw Error("no entrywise-symmetric labeling exists for " + a.name());
}

}  // namespace

LabeledMatrix label_assign(const SymmetricDesignMatrix& a, const LabelRequest& request) {
  const int m = a.m();
  switch (request.strategy) {
    case LabelStrategy::Canonical:
    case LabelStrategy::Seeded: {
      Rng rng(request.seed);
      std::vector<std::vector<int>> labels(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
      for (int i = 0; i < m; ++i) {
        std::vector<int> order(static_cast<std::size_t>(a.kappa()));
        for (int c = 0; c < a.kappa(); ++c) order[static_cast<std::size_t>(c)] = c + 1;
        if (request.strategy == LabelStrategy::Seeded) rng.shuffle(order);
        std::size_t next = 0;
        for (int j = 0; j < m; ++j) {
          if (a.at(i, j)) labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = order[next++];
        }
      }
      return LabeledMatrix(a, std::move(labels));
    }
    case LabelStrategy::Explicit:
      return LabeledMatrix(a, request.explicit_labels);
    case LabelStrategy::Symmetric:
      return LabeledMatrix(a, symmetric_search(a, request.search_nodes));
  }
  throw Error("unknown labeling strategy");
}

LabeledMatrix label_polarity(const SymmetricDesignMatrix& a, const std::vector<std::vector<int>>& normals) {
  if (!a.geometry()) throw Error("polarity labeling needs a null-polarity matrix");
  const auto& geo = *a.geometry();
  const auto pp = factor_prime_power(geo.q);
  const FiniteField f(pp.p, pp.k);
  const int dim = 2 * geo.e;
  if (static_cast<int>(normals.size()) != a.kappa()) {
    throw Error("polarity labeling: design has " + std::to_string(normals.size()) + " classes, need " +
                std::to_string(a.kappa()));
  }
  for (const auto& n : normals) {
    if (static_cast<int>(n.size()) != dim - 1) throw Error("polarity labeling needs AG(2e-1, q) normals");
  }
  const int m = a.m();
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int row = 0; row < m; ++row) {
    const auto& pivot_pt = geo.points[static_cast<std::size_t>(row)];
    const int pivot = static_cast<int>(std::find_if(pivot_pt.begin(), pivot_pt.end(), [](int x) { return x != 0; }) - pivot_pt.begin());
    for (int col = 0; col < m; ++col) {
      if (!a.at(row, col)) continue;
      const auto& p = geo.points[static_cast<std::size_t>(col)];
      std::vector<int> normal;
      for (int c = 0; c < dim; ++c) {
        if (c == pivot) continue;
        // B(P, e_c) for B(x, y) = sum_i x_i y_{i+e} - x_{i+e} y_i
        normal.push_back(c >= geo.e ? p[static_cast<std::size_t>(c - geo.e)] : f.neg(p[static_cast<std::size_t>(c + geo.e)]));
      }
      const auto lead = std::find_if(normal.begin(), normal.end(), [](int x) { return x != 0; });
      if (lead == normal.end()) throw std::logic_error("polarity functional vanished");
      const int scale = f.inv(*lead);
      for (int& x : normal) x = f.mul(scale, x);
      const auto it = std::find(normals.begin(), normals.end(), normal);
      labels[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = static_cast<int>(it - normals.begin()) + 1;
    }
  }
  return LabeledMatrix(a, std::move(labels));
}

}  // namespace ddg

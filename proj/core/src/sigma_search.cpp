#include <algorithm>

#include "ddg/catalog.hpp"
#include "ddg/error.hpp"
#include "ddg/symplectic.hpp"

namespace ddg {

namespace {

using Clock = std::chrono::steady_clock;

struct Edge {
  int i, j;  // i < j, e(i, j) != 0
};

// Coset representatives of sigma families modulo translation flips, as
// flip-bit positions: the free (non-pivot) edges after eliminating the
// translation generators over GF(2).
std::vector<std::size_t> free_edges(const LabeledMatrix& labels, const std::vector<ResolvableDesign>& designs,
                                    const std::vector<Edge>& edges) {
  const std::size_t width = edges.size();
  std::vector<std::vector<char>> rows;
  for (int i = 0; i < labels.m(); ++i) {
    const auto& normals = designs[static_cast<std::size_t>(i)].normals();
    const std::size_t dim = normals.front().size();
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<char> row(width, 0);
      for (std::size_t e = 0; e < width; ++e) {
        const auto& [a, b] = edges[e];
        if (a != i && b != i) continue;
        const int other = a == i ? b : a;
        row[e] = static_cast<char>(normals[static_cast<std::size_t>(labels.at(i, other) - 1)][k] & 1);
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<char> pivot(width, 0);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][col]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t c = 0; c < width; ++c) rows[r][c] ^= rows[rank][c];
      }
    }
    pivot[col] = 1;
    ++rank;
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < width; ++c) {
    if (!pivot[c]) out.push_back(c);
  }
  return out;
}

BijectionFamily flip_family(const LabeledMatrix& labels, const std::vector<Edge>& edges,
                            const std::vector<std::size_t>& free, std::uint64_t coset) {
  BijectionFamily f(labels.m(), 2);
  for (int i = 0; i < labels.m(); ++i) {
    if (labels.at(i, i) != 0) f.set(i, i, {0, 1});
  }
  for (const auto& e : edges) {
    f.set(e.i, e.j, {0, 1});
    f.set(e.j, e.i, {0, 1});
  }
  for (std::size_t b = 0; b < free.size() && b < 64; ++b) {
    if ((coset >> b) & 1) {
      const auto& e = edges[free[b]];
      f.set(e.i, e.j, {1, 0});
      f.set(e.j, e.i, {1, 0});
    }
  }
  return f;
}

}  // namespace

SigmaSearchResult sigma_search(const DdgInstance& target, const SymmetricDesignMatrix& a,
                               const std::vector<ResolvableDesign>& designs, const SearchBudget& budget) {
  const auto start = Clock::now();
  const auto deadline = start + budget.time;
  if (designs.empty()) throw Error("sigma search needs designs");
  const auto d = designs.front().ag_dimension();
  if (!d) throw Error("sigma search needs designs with r = q^(d-2)");
  const auto closed = params_theorem1(designs.front().q(), *d, a.m(), a.lambda());

  DdgParams target_params;
  if (target.params) {
    target_params = *target.params;
  } else {
    const auto report = ddg_verify(target.graph, target.partition);
    if (!report.ok) throw Error("sigma search target is not a DDG on its partition: " + report.message);
    target_params = report.params;
  }
  if (closed != target_params) {
    throw Error("closed-form parameters " + closed.str() + " differ from target " + target_params.str() +
                "; the search would be vacuous");
  }

  SigmaSearchResult result;
  const auto target_fp = fingerprint(target.graph);
  const auto finish = [&] {
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
  };
  // Returns true when the search should stop (witness found or out of time).
  const auto attempt = [&](const LabeledMatrix& labels, const BijectionFamily& sigma, const char* phase) {
    ++result.attempts;
    const auto built = construct1(labels, designs, sigma);
    if (!(fingerprint(built.graph) == target_fp)) {
      ++result.fingerprint_rejects;
      return false;
    }
    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    IsoOptions options;
    options.budget = std::min(remaining, budget.per_attempt);
    options.limits.max_iso_vertices =
        std::max(options.limits.max_iso_vertices, static_cast<std::int64_t>(target.graph.order()));
    if (options.budget.count() <= 0) return true;
    const auto iso = iso_check(built.graph, target.graph, options);
    if (iso.status == IsoStatus::Unknown) ++result.unknown_iso;
    if (iso.status != IsoStatus::Isomorphic) return false;
    result.found = true;
    result.labels = labels;
    result.sigma = sigma;
    result.mapping = iso.mapping;
    result.phase = phase;
    return true;
  };
  const auto out_of_time = [&] { return Clock::now() >= deadline; };

  const bool ag = std::all_of(designs.begin(), designs.end(),
                              [](const ResolvableDesign& x) { return !x.normals().empty(); });
  if (ag && designs.front().q() == 2 && budget.max_translation_classes > 0) {
    const bool shared = std::all_of(designs.begin(), designs.end(),
                                    [&](const ResolvableDesign& x) { return x.normals() == designs.front().normals(); });
    const auto labels = a.geometry() && shared ? label_polarity(a, designs.front().normals())
                                               : label_assign(a, LabelRequest{});
    std::vector<Edge> edges;
    for (int i = 0; i < labels.m(); ++i) {
      for (int j = i + 1; j < labels.m(); ++j) {
        if (labels.at(i, j) != 0) edges.push_back({i, j});
      }
    }
    const auto free = free_edges(labels, designs, edges);
    const std::uint64_t cosets = free.size() >= 62 ? UINT64_MAX : std::uint64_t{1} << free.size();
    result.translation_classes = static_cast<int>(std::min<std::uint64_t>(cosets, INT32_MAX));
    const auto limit = std::min<std::uint64_t>(cosets, static_cast<std::uint64_t>(budget.max_translation_classes));
    for (std::uint64_t c = 0; c < limit; ++c) {
      if (out_of_time()) {
        result.phase = "time budget exhausted";
        return finish();
      }
      ++result.structured_attempts;
      if (attempt(labels, flip_family(labels, edges, free, c), "translation classes")) {
        if (!result.found) result.phase = "time budget exhausted";
        return finish();
      }
    }
  }

  for (int k = 0; k < budget.seed_count; ++k) {
    if (out_of_time()) {
      result.phase = "time budget exhausted";
      return finish();
    }
    LabelRequest seeded;
    seeded.strategy = LabelStrategy::Seeded;
    seeded.seed = budget.base_seed + static_cast<std::uint64_t>(k);
    const auto labels = label_assign(a, seeded);
    SigmaRequest sigma;
    sigma.strategy = SigmaStrategy::Seeded;
    sigma.seed = seeded.seed;
    if (attempt(labels, sigma_family_make(labels, designs, sigma), "seeded stream")) {
      if (!result.found) result.phase = "time budget exhausted";
      return finish();
    }
  }
  result.phase = "seed budget exhausted";
  return finish();
}

}  // namespace ddg

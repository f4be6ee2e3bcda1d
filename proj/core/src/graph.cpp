#include "ddg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "ddg/error.hpp"

namespace ddg {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw Error("graph order must be non-negative");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int x, int y) {
  if (x == y) throw Error("loops are not allowed (vertex " + std::to_string(x) + ")");
  mutable_row(x)[y >> 6] |= std::uint64_t{1} << (y & 63);
  mutable_row(y)[x >> 6] |= std::uint64_t{1} << (x & 63);
}

void Graph::remove_edge(int x, int y) {
  mutable_row(x)[y >> 6] &= ~(std::uint64_t{1} << (y & 63));
  mutable_row(y)[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
}

int Graph::degree(int x) const {
  int d = 0;
  for (auto w : row(x)) d += std::popcount(w);
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (int x = 0; x < n_; ++x) total += degree(x);
  return total / 2;
}

std::vector<int> Graph::neighbours(int x) const {
  std::vector<int> out;
  auto r = row(x);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[static_cast<std::size_t>(w)];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

int Graph::common_neighbours(int x, int y) const {
  auto a = row(x);
  auto b = row(y);
  int c = 0;
  for (int w = 0; w < words_; ++w) {
    c += std::popcount(a[static_cast<std::size_t>(w)] & b[static_cast<std::size_t>(w)]);
  }
  return c;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
  Graph out(n_);
  for (int x = 0; x < n_; ++x) {
    for (int y : neighbours(x)) {
      if (x < y) out.add_edge(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
    }
  }
  return out;
}

bool Graph::is_simple() const {
  for (int x = 0; x < n_; ++x) {
    if (adjacent(x, x)) return false;
    for (int y : neighbours(x)) {
      if (!adjacent(y, x)) return false;
    }
  }
  return true;
}

Partition::Partition(std::vector<int> class_of) : class_of_(std::move(class_of)) {
  int m = 0;
  for (int c : class_of_) {
    if (c < 0) throw Error("partition class ids must be non-negative");
    m = std::max(m, c + 1);
  }
  members_.assign(static_cast<std::size_t>(m), {});
  for (int x = 0; x < static_cast<int>(class_of_.size()); ++x) {
    members_[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(x)])].push_back(x);
  }
  for (int c = 0; c < m; ++c) {
    if (members_[static_cast<std::size_t>(c)].empty()) {
      throw Error("partition class " + std::to_string(c) + " is empty");
    }
  }
}

Partition Partition::blocks(int m, int n) {
  std::vector<int> labels(static_cast<std::size_t>(m) * n);
  for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = static_cast<int>(x) / n;
  return Partition(std::move(labels));
}

int Partition::uniform_size() const {
  if (members_.empty()) return 0;
  const auto n = members_.front().size();
  for (const auto& c : members_) {
    if (c.size() != n) return 0;
  }
  return static_cast<int>(n);
}

PairCounts::PairCounts(const Graph& g) : n_(g.order()) {
  counts_.assign(static_cast<std::size_t>(n_) * n_, 0);
  parallel_for(n_, [&](int x) {
    auto* out = counts_.data() + static_cast<std::size_t>(x) * n_;
    for (int y = 0; y < n_; ++y) out[y] = g.common_neighbours(x, y);
  });
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const int threads = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 64);
  if (threads == 1 || count < 64) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
}

}  // namespace ddg

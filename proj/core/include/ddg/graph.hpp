#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ddg {

/// Simple undirected graph on vertices 0..n-1 stored as one bit-row per
/// vertex. Rows are padded to whole 64-bit words so common-neighbour counts
/// reduce to AND + popcount over `words()` words.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int words() const { return words_; }

  bool adjacent(int x, int y) const {
    return (row(x)[static_cast<std::size_t>(y) >> 6] >> (y & 63)) & 1u;
  }
  void add_edge(int x, int y);
  void remove_edge(int x, int y);
  void set_edge(int x, int y, bool on) { on ? add_edge(x, y) : remove_edge(x, y); }

  std::span<const std::uint64_t> row(int x) const {
    return {bits_.data() + static_cast<std::size_t>(x) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(int x) const;
  std::int64_t edge_count() const;
  std::vector<int> neighbours(int x) const;
  int common_neighbours(int x, int y) const;

  // Relabel: vertex x of this graph becomes perm[x] of the result.
  Graph permuted(std::span<const int> perm) const;

  // Symmetric with empty diagonal.
  bool is_simple() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::uint64_t* mutable_row(int x) {
    return bits_.data() + static_cast<std::size_t>(x) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Assignment of vertices to classes 0..m-1.
class Partition {
 public:
  Partition() = default;
  // Throws Error unless class ids are 0..m-1 with every class non-empty.
  explicit Partition(std::vector<int> class_of);

  // Consecutive runs: vertices [i*n, (i+1)*n) form class i.
  static Partition blocks(int m, int n);

  int vertex_count() const { return static_cast<int>(class_of_.size()); }
  int class_count() const { return static_cast<int>(members_.size()); }
  int class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& members(int c) const { return members_[static_cast<std::size_t>(c)]; }
  const std::vector<int>& labels() const { return class_of_; }

  // Common class size, or 0 when the classes differ in size.
  int uniform_size() const;

  bool operator==(const Partition& other) const { return class_of_ == other.class_of_; }

 private:
  std::vector<int> class_of_;
  std::vector<std::vector<int>> members_;
};

/// Dense v x v table of |N(x) ∩ N(y)|; the diagonal holds degrees.
class PairCounts {
 public:
  explicit PairCounts(const Graph& g);

  int order() const { return n_; }
  int operator()(int x, int y) const {
    return counts_[static_cast<std::size_t>(x) * n_ + y];
  }

 private:
  int n_;
  std::vector<std::int32_t> counts_;
};

// Runs body(i) for i in [0, count) across hardware threads. Bodies must only
// write to disjoint state.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace ddg

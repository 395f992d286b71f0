#ifndef TRADENET_APSP_HPP
#define TRADENET_APSP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tradenet/model.hpp"

namespace tradenet {

/// Exact all-pairs distances: zero diagonal, symmetric, triangle
/// inequality. Unreachable pairs are a distinct sentinel, never a large
/// number.
class CostMatrix {
 public:
  explicit CostMatrix(int node_count)
      : n_(node_count), dist_(static_cast<std::size_t>(node_count) * node_count) {}

  int node_count() const { return n_; }

  std::optional<std::int64_t> at(int u, int v) const { return dist_[index(u, v)]; }
  void set(int u, int v, std::optional<std::int64_t> d) { dist_[index(u, v)] = d; }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  std::vector<std::optional<std::int64_t>> dist_;
};

/// Floyd's algorithm with deterministic k,i,j ascending order. Exact
/// integer arithmetic; safe against overflow for node counts up to 1e3 and
/// weights up to 1e6. Throws std::invalid_argument on a negative weight.
CostMatrix floyd_all_pairs(const CostView& view);

/// Exhaustive minimum over simple paths (depth-first with cost pruning).
/// Independent of floyd_all_pairs; intended for small graphs in tests.
std::optional<std::int64_t> oracle_shortest(const CostView& view, int src, int dst);

/// Row/column-sliced distances, order-preserving. Rows and columns keep
/// their node ids for labeling.
struct DistanceTable {
  std::vector<int> row_nodes;
  std::vector<int> col_nodes;
  std::vector<std::vector<std::optional<std::int64_t>>> dist;

  std::optional<std::int64_t> at(std::size_t r, std::size_t c) const { return dist[r][c]; }
  std::optional<std::size_t> col_of(int node) const;
};

/// Throws std::out_of_range on an invalid node id.
DistanceTable select_distances(const CostMatrix& matrix, std::span<const int> rows,
                               std::span<const int> cols);

}  // namespace tradenet

#endif

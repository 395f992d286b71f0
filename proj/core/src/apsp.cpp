#include "tradenet/apsp.hpp"

#include <stdexcept>

namespace tradenet {

CostMatrix floyd_all_pairs(const CostView& view) {
  const int n = view.node_count();
  CostMatrix dist(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      auto w = view.weight(u, v);
      if (w && *w < 0) throw std::invalid_argument("floyd: negative weight");
      dist.set(u, v, u == v ? std::optional<std::int64_t>(0) : w);
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      auto ik = dist.at(i, k);
      if (!ik) continue;
      for (int j = 0; j < n; ++j) {
        auto kj = dist.at(k, j);
        if (!kj) continue;
        std::int64_t through = *ik + *kj;
        auto ij = dist.at(i, j);
        if (!ij || through < *ij) dist.set(i, j, through);
      }
    }
  }
  return dist;
}

namespace {

void oracle_dfs(const CostView& view, int at, int dst, std::int64_t cost,
                std::vector<bool>& visited, std::optional<std::int64_t>& best) {
  if (best && cost >= *best) return;  // exact: extensions only add non-negative weight
  if (at == dst) {
    best = cost;
    return;
  }
  visited[at] = true;
  for (int next = 0; next < view.node_count(); ++next) {
    if (visited[next]) continue;
    auto w = view.weight(at, next);
    if (!w || next == at) continue;
    oracle_dfs(view, next, dst, cost + *w, visited, best);
  }
  visited[at] = false;
}

}  // namespace

std::optional<std::int64_t> oracle_shortest(const CostView& view, int src, int dst) {
  if (src == dst) return 0;
  std::vector<bool> visited(view.node_count(), false);
  std::optional<std::int64_t> best;
  oracle_dfs(view, src, dst, 0, visited, best);
  return best;
}

std::optional<std::size_t> DistanceTable::col_of(int node) const {
  for (std::size_t c = 0; c < col_nodes.size(); ++c) {
    if (col_nodes[c] == node) return c;
  }
  return std::nullopt;
}

DistanceTable select_distances(const CostMatrix& matrix, std::span<const int> rows,
                               std::span<const int> cols) {
  auto check = [&](int v) {
    if (v < 0 || v >= matrix.node_count()) {
      throw std::out_of_range("select_distances: node id " + std::to_string(v) + " out of range");
    }
  };
  for (int r : rows) check(r);
  for (int c : cols) check(c);

  DistanceTable table;
  table.row_nodes.assign(rows.begin(), rows.end());
  table.col_nodes.assign(cols.begin(), cols.end());
  table.dist.reserve(rows.size());
  for (int r : rows) {
    std::vector<std::optional<std::int64_t>> row;
    row.reserve(cols.size());
    for (int c : cols) row.push_back(matrix.at(r, c));
    table.dist.push_back(std::move(row));
  }
  return table;
}

}  // namespace tradenet

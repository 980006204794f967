#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "sptree/graph.hpp"
#include "sptree/random.hpp"

namespace sptree::testing {

/// Six-primitive worked example: the model ln(x) + x + sin(x * exp(x)) with
/// vertex order *, +, ln, sin, *, exp and the variable in the last column.
struct WorkedExample {
  SuperpositionMatrix matrix;
  AritySpec arities;
  SuperpositionTree tree;
};

inline WorkedExample worked_example() {
  SuperpositionMatrix matrix = SuperpositionMatrix::from_rows({
      {0.2, 0.7, 0.5, 0.4, 0.5, 0.3, 0.2},
      {0.3, 0.2, 1.0, 0.8, 0.6, 0.3, 0.7},
      {0.3, 0.2, 0.0, 0.0, 0.1, 0.5, 0.5},
      {0.1, 0.4, 0.0, 0.5, 0.9, 0.2, 0.5},
      {0.3, 0.0, 0.3, 0.5, 0.0, 0.8, 0.6},
      {0.3, 0.3, 0.4, 0.1, 0.5, 0.4, 0.4},
  });
  AritySpec arities({1, 3, 1, 1, 2, 1});
  SuperpositionTree tree(std::vector<TreeEdge>{
      {0, 1}, {1, 2}, {1, 3}, {1, 6}, {2, 6}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  return WorkedExample{std::move(matrix), std::move(arities), std::move(tree)};
}

/// Random connected graph: a random tree plus a few extra edges, costs
/// uniform in [lo, hi).
inline WeightedGraph random_connected_graph(int n, RandomSource& rng, double lo = 0.0,
                                            double hi = 1.0) {
  WeightedGraph g(n);
  for (int v = 1; v < n; ++v) {
    g.add_edge(rng.uniform_int(0, v - 1), v, rng.uniform(lo, hi));
  }
  const int extra = rng.uniform_int(0, n / 2 + 1);
  for (int i = 0; i < extra; ++i) {
    const int u = rng.uniform_int(0, n - 1);
    const int v = rng.uniform_int(0, n - 1);
    if (u != v) g.add_edge(u, v, rng.uniform(lo, hi));
  }
  return g;
}

inline std::vector<int> random_distinct_vertices(int n, int count, RandomSource& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
  std::vector<int> out;
  for (int i = 0; i < count && !pool.empty(); ++i) {
    const int pick = rng.uniform_int(0, static_cast<int>(pool.size()) - 1);
    out.push_back(pool[static_cast<std::size_t>(pick)]);
    pool[static_cast<std::size_t>(pick)] = pool.back();
    pool.pop_back();
  }
  return out;
}

inline double shortest_path_cost(const WeightedGraph& g, int source, int target) {
  const int n = g.n_vertices();
  std::vector<double> dist(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  dist[static_cast<std::size_t>(source)] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    for (const WeightedEdge& e : g.edges()) {
      int other = -1;
      if (e.u == v) other = e.v;
      if (e.v == v) other = e.u;
      if (other < 0) continue;
      const double nd = d + e.cost;
      if (nd < dist[static_cast<std::size_t>(other)]) {
        dist[static_cast<std::size_t>(other)] = nd;
        heap.emplace(nd, other);
      }
    }
  }
  return dist[static_cast<std::size_t>(target)];
}

}  // namespace sptree::testing

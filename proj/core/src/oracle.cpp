#include "sptree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <vector>

#include "sptree/errors.hpp"

namespace sptree::oracle {

ForestSolution exact_forest(const WeightedGraph& graph, const CutFunction& f) {
  const int n = graph.n_vertices();
  const auto& edges = graph.edges();
  const int m = static_cast<int>(edges.size());
  if (m > kMaxForestEdges) throw SizeBoundError("too many edges for exhaustive forest search");
  if (n > kMaxForestVertices) throw SizeBoundError("too many vertices for exhaustive forest search");
  if (f.n_vertices() != n) throw std::invalid_argument("cut function size mismatch");

  // Cache every active cut and the edges crossing it.
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  std::vector<std::uint32_t> cross_masks;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (!f(s)) continue;
    std::uint32_t crossing = 0;
    for (int i = 0; i < m; ++i) {
      const bool in_u = (s >> edges[static_cast<std::size_t>(i)].u) & 1u;
      const bool in_v = (s >> edges[static_cast<std::size_t>(i)].v) & 1u;
      if (in_u != in_v) crossing |= 1u << i;
    }
    cross_masks.push_back(crossing);
  }

  double best_cost = std::numeric_limits<double>::infinity();
  std::uint32_t best_subset = 0;
  bool found = false;
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    double cost = 0.0;
    for (std::uint32_t bits = subset; bits != 0; bits &= bits - 1) {
      cost += edges[static_cast<std::size_t>(std::countr_zero(bits))].cost;
    }
    if (found && cost >= best_cost) continue;
    bool feasible = true;
    for (std::uint32_t crossing : cross_masks) {
      if ((subset & crossing) == 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      best_cost = cost;
      best_subset = subset;
      found = true;
    }
  }
  if (!found) throw InfeasibleError("no edge subset satisfies the cut constraints");

  ForestSolution out;
  out.total_cost = best_cost;
  for (std::uint32_t bits = best_subset; bits != 0; bits &= bits - 1) {
    out.edges.push_back(edges[static_cast<std::size_t>(std::countr_zero(bits))]);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

namespace {

bool induced_connected(int n, const std::vector<WeightedEdge>& edges, std::uint32_t vertices) {
  int start = std::countr_zero(vertices);
  std::uint32_t seen = 1u << start;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const WeightedEdge& e : edges) {
      if (!((vertices >> e.u) & 1u) || !((vertices >> e.v) & 1u)) continue;
      int other = -1;
      if (e.u == v) other = e.v;
      if (e.v == v) other = e.u;
      if (other >= 0 && !((seen >> other) & 1u)) {
        seen |= 1u << other;
        queue.push_back(other);
      }
    }
  }
  (void)n;
  return std::popcount(seen) == std::popcount(vertices);
}

double induced_mst(const std::vector<WeightedEdge>& edges, std::uint32_t vertices, int n,
                   std::vector<WeightedEdge>* tree) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  std::vector<const WeightedEdge*> sorted;
  for (const WeightedEdge& e : edges) {
    if (((vertices >> e.u) & 1u) && ((vertices >> e.v) & 1u)) sorted.push_back(&e);
  }
  std::sort(sorted.begin(), sorted.end(), [](const WeightedEdge* a, const WeightedEdge* b) {
    if (a->cost != b->cost) return a->cost < b->cost;
    return a->u != b->u ? a->u < b->u : a->v < b->v;
  });
  double cost = 0.0;
  for (const WeightedEdge* e : sorted) {
    const int ru = find(e->u);
    const int rv = find(e->v);
    if (ru == rv) continue;
    parent[static_cast<std::size_t>(ru)] = rv;
    cost += e->cost;
    if (tree != nullptr) tree->push_back(*e);
  }
  return cost;
}

}  // namespace

PcstSolution exact_pcst(const PcstInstance& instance) {
  instance.validate();
  const int n = instance.graph.n_vertices();
  if (n > kMaxPcstVertices) throw SizeBoundError("too many vertices for exhaustive PCST");
  const auto& edges = instance.graph.edges();
  const double total_prize =
      std::accumulate(instance.prizes.begin(), instance.prizes.end(), 0.0);

  double best_objective = std::numeric_limits<double>::infinity();
  std::uint32_t best_vertices = 0;
  for (std::uint32_t vertices = 0; vertices < (1u << n); ++vertices) {
    if (!((vertices >> instance.root) & 1u)) continue;
    if (std::popcount(vertices) > 1 && !induced_connected(n, edges, vertices)) continue;
    double included_prize = 0.0;
    for (int v = 0; v < n; ++v) {
      if ((vertices >> v) & 1u) included_prize += instance.prizes[static_cast<std::size_t>(v)];
    }
    const double objective =
        induced_mst(edges, vertices, n, nullptr) + (total_prize - included_prize);
    if (objective < best_objective) {
      best_objective = objective;
      best_vertices = vertices;
    }
  }

  PcstSolution out;
  induced_mst(edges, best_vertices, n, &out.edges);
  std::sort(out.edges.begin(), out.edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const WeightedEdge& e : out.edges) out.total_cost += e.cost;
  for (int v = 0; v < n; ++v) {
    if ((best_vertices >> v) & 1u) out.tree_vertices.push_back(v);
  }
  out.objective = best_objective;
  return out;
}

namespace {

struct SuperpositionSearch {
  const SuperpositionMatrix& matrix;
  const AritySpec& arity;
  int n;
  std::vector<char> used;
  std::vector<int> expansion;  // placed internal vertices awaiting child assignment
  std::vector<TreeEdge> edges;
  double weight = 0.0;
  double best_weight = -1.0;
  std::vector<TreeEdge> best_edges;

  SuperpositionSearch(const SuperpositionMatrix& m, const AritySpec& a)
      : matrix(m), arity(a), n(m.rows()), used(static_cast<std::size_t>(m.rows()), 0) {}

  void expand(std::size_t index) {
    if (index == expansion.size()) {
      if (weight > best_weight) {
        best_weight = weight;
        best_edges = edges;
      }
      return;
    }
    const int v = expansion[index];
    std::vector<int> free_columns;
    for (int c = 0; c < n; ++c) {
      if (!used[static_cast<std::size_t>(c)]) free_columns.push_back(c);
    }
    std::vector<int> combo;
    choose_children(index, v, arity[v], free_columns, 0, combo);
  }

  // Children of one vertex are a set of distinct unused internals plus some
  // number of variable copies; enumerating internals in ascending order
  // makes every tree appear exactly once.
  void choose_children(std::size_t index, int v, int slots, const std::vector<int>& free_columns,
                       std::size_t from, std::vector<int>& combo) {
    if (slots == 0) {
      apply_and_recurse(index, v, combo);
      return;
    }
    // Fill the remaining slots with variable edges.
    for (int i = 0; i < slots; ++i) {
      edges.push_back(TreeEdge{v, n});
      weight += matrix.at(v, n);
    }
    apply_and_recurse(index, v, combo);
    for (int i = 0; i < slots; ++i) {
      edges.pop_back();
      weight -= matrix.at(v, n);
    }
    // Or take one more internal child.
    for (std::size_t i = from; i < free_columns.size(); ++i) {
      const int c = free_columns[i];
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = 1;
      edges.push_back(TreeEdge{v, c});
      weight += matrix.at(v, c);
      combo.push_back(c);
      choose_children(index, v, slots - 1, free_columns, i + 1, combo);
      combo.pop_back();
      weight -= matrix.at(v, c);
      edges.pop_back();
      used[static_cast<std::size_t>(c)] = 0;
    }
  }

  void apply_and_recurse(std::size_t index, int v, const std::vector<int>& combo) {
    (void)v;
    for (int c : combo) expansion.push_back(c);
    expand(index + 1);
    for (std::size_t i = 0; i < combo.size(); ++i) expansion.pop_back();
  }
};

}  // namespace

SuperpositionTree exact_superposition(const SuperpositionMatrix& matrix, const AritySpec& arity) {
  if (matrix.rows() != arity.size()) {
    throw std::invalid_argument("matrix and arity list disagree on vertex count");
  }
  if (arity.total_arity() > kMaxArityMass) {
    throw SizeBoundError("total arity too large for exhaustive tree search");
  }
  SuperpositionSearch search(matrix, arity);
  search.used[0] = 1;
  search.expansion.push_back(0);
  search.expand(0);
  return SuperpositionTree(std::move(search.best_edges));
}

}  // namespace sptree::oracle

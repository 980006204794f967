#pragma once

#include <vector>

#include "sptree/graph.hpp"

namespace sptree {

/// Rooted prize-collecting Steiner tree instance. Costs and prizes are
/// non-negative; the root prize is never collected (its cluster starts
/// inactive), so its value is irrelevant.
struct PcstInstance {
  WeightedGraph graph;
  int root = 0;
  std::vector<double> prizes;

  /// Builds an instance from a graph carrying root and prize fields.
  static PcstInstance from_graph(const WeightedGraph& graph);

  void validate() const;
};

struct PcstSolution {
  std::vector<WeightedEdge> edges;  ///< tree edges, sorted
  std::vector<int> tree_vertices;   ///< sorted, always contains the root
  double total_cost = 0.0;          ///< sum of tree edge costs
  double objective = 0.0;           ///< total_cost plus prizes of excluded vertices
  double dual_bound = 0.0;          ///< accumulated dual objective
};

/// State snapshot taken at the end of one growth iteration.
struct PcstStep {
  bool merged = false;      ///< false: a cluster was deactivated instead
  WeightedEdge edge;        ///< set when merged
  int deactivated_rep = -1; ///< representative of the deactivated cluster
  double epsilon = 0.0;
  std::vector<double> dual;       ///< d(v) after the raise
  std::vector<int> component;     ///< representative per vertex after the event
  std::vector<double> cluster_w;  ///< w(C), indexed by representative
  std::vector<char> active;       ///< lambda(C), indexed by representative
};

struct PcstTrace {
  std::vector<PcstStep> steps;
};

/// Primal-dual (2 - 2/(n-1))-approximation for rooted PCST. Growth raises
/// w(C) and member duals on active clusters by
/// eps = min(eps1, eps2) with eps1(e) = (c_e - d(i) - d(j)) / (λ(C_p) + λ(C_q))
/// over inter-cluster edges and eps2(C) = Σ prizes(C) - w(C) over active
/// clusters; an eps2 winner deactivates and marks its cluster, otherwise the
/// minimizing edge merges its clusters (ties merge). Pruning removes marked
/// clusters that hang off the tree by at most one edge, latest deactivation
/// first, until a fixpoint; the component of the root is returned.
PcstSolution pcst_solve(const PcstInstance& instance, PcstTrace* trace = nullptr);

struct KmstResult {
  PcstSolution solution;
  /// Lagrangian value: edge cost + lambda * (excluded - (n - k)).
  double kmst_objective = 0.0;
  int k = 0;
  double lambda = 0.0;
};

/// k-MST relaxation: uniform prizes of `lambda` make the cardinality
/// constraint a penalty term, the Lagrangian view of covering at least k
/// vertices.
KmstResult kmst_via_pcst(const WeightedGraph& graph, int root, int k, double lambda,
                         PcstTrace* trace = nullptr);

}  // namespace sptree

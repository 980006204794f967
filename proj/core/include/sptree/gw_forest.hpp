#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sptree/graph.hpp"

namespace sptree {

/// 0/1 function over vertex subsets, given as bitmasks. A valid cut function
/// satisfies f(V) = 0, symmetry f(S) = f(V\S), and disjunctivity: disjoint A
/// and B with f(A) = f(B) = 0 imply f(A ∪ B) = 0.
class CutFunction {
 public:
  CutFunction(int n_vertices, std::function<bool(std::uint64_t)> fn);

  int n_vertices() const { return n_; }
  std::uint64_t full_mask() const;
  bool operator()(std::uint64_t subset) const { return fn_(subset); }

  /// Verifies the three axioms: exhaustively up to 12 vertices, on a fixed
  /// deterministic sample of 1000 subsets beyond that. Throws
  /// std::invalid_argument on a violation.
  void check_axioms() const;

 private:
  int n_ = 0;
  std::function<bool(std::uint64_t)> fn_;
};

/// Steiner cut function: f(S) = 1 iff S contains some but not all terminals.
CutFunction steiner_cut_function(int n_vertices, const std::vector<int>& terminals);

struct ForestSolution {
  std::vector<WeightedEdge> edges;
  double total_cost = 0.0;
  /// Accumulated dual objective Z_DRLP, a lower bound on the LP optimum.
  /// Exact solvers leave it at 0.
  double dual_bound = 0.0;
};

/// State snapshot taken at the end of one merge iteration.
struct GwMergeStep {
  WeightedEdge edge;
  double epsilon = 0.0;
  std::vector<double> dual;    ///< d(v) after the raise
  std::vector<int> component;  ///< component representative per vertex after the merge
};

struct GwTrace {
  std::vector<GwMergeStep> steps;
};

/// Primal-dual (2 - 2/|A|)-approximation for constrained forest problems,
/// A = {v : f({v}) = 1}. Stage one grows duals uniformly on active clusters
/// and merges along the edge minimizing
/// eps(e) = (c_e - d(i) - d(j)) / (f(C_p) + f(C_q)); stage two removes every
/// edge whose removal leaves all components inactive, heaviest first, until
/// a fixpoint. Ties in the argmin go to the lexicographically smallest edge.
ForestSolution gw_solve(const WeightedGraph& graph, const CutFunction& f,
                        GwTrace* trace = nullptr);

}  // namespace sptree

#pragma once

#include "sptree/graph.hpp"
#include "sptree/gw_forest.hpp"
#include "sptree/pcst.hpp"

namespace sptree::oracle {

/// Enumeration bounds keeping each oracle call under roughly one second.
inline constexpr int kMaxForestEdges = 20;
inline constexpr int kMaxForestVertices = 16;
inline constexpr int kMaxPcstVertices = 9;
inline constexpr int kMaxArityMass = 12;

/// Minimum-cost edge subset crossing every subset S with f(S) = 1, found by
/// enumerating all 2^|E| edge sets and all 2^|V| cut constraints. Throws
/// SizeBoundError above the bounds, InfeasibleError when no subset works.
ForestSolution exact_forest(const WeightedGraph& graph, const CutFunction& f);

/// Optimal rooted prize-collecting Steiner tree by enumerating every vertex
/// subset containing the root whose induced subgraph is connected and taking
/// its minimum spanning tree (valid since costs are non-negative). The
/// root-only candidate is included.
PcstSolution exact_pcst(const PcstInstance& instance);

/// Maximum-total-weight arity-complete rooted tree over the matrix, by
/// depth-first enumeration of all complete trees. Weight maximization on
/// probabilities mirrors minimizing 1 - w costs.
SuperpositionTree exact_superposition(const SuperpositionMatrix& matrix, const AritySpec& arity);

}  // namespace sptree::oracle

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "sptree/graph.hpp"

namespace sptree {

enum class Traversal { Dfs, Bfs };

/// What runs after the prize-collecting pass in the hybrid reconstruction.
enum class KmstFollowup { None, Dfs, Bfs, Prims };

/// The seven reconstruction algorithms compared by the benchmark.
enum class Algorithm { Dfs, Bfs, Prims, Kmst, KmstDfs, KmstBfs, KmstPrims };

inline constexpr std::array<Algorithm, 7> kAllAlgorithms = {
    Algorithm::Dfs,     Algorithm::Bfs,     Algorithm::Prims,    Algorithm::Kmst,
    Algorithm::KmstDfs, Algorithm::KmstBfs, Algorithm::KmstPrims};

std::string_view algorithm_name(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

struct ReconstructionResult {
  SuperpositionTree tree;
  /// False when arity slots could not be filled or a vertex ended up with
  /// more children than its arity allows; such a tree never counts as a
  /// match.
  bool complete = true;
};

/// Greedy traversal from the root. The frontier vertex (stack for DFS,
/// queue for BFS) takes its arity-many highest-weight children among columns
/// not yet used as internal vertices; the variable column stays available
/// and may be taken repeatedly. Ties go to the lowest column index.
/// Internal children join the frontier with their own arity budgets, the
/// best-weighted child first.
ReconstructionResult greedy_traverse(const SuperpositionMatrix& matrix, const AritySpec& arity,
                                     Traversal order);

/// Arity-constrained maximum-weight spanning reconstruction. A global pool
/// holds candidate edges from every in-tree vertex with remaining arity
/// budget to every unused internal column plus the variable column; the
/// heaviest candidate is accepted, the parent budget drops, a newly reached
/// internal vertex contributes its own candidates and loses all other
/// incoming edges. Variable edges never exhaust their column. Terminates
/// when all budgets reach zero.
ReconstructionResult prims_reconstruct(const SuperpositionMatrix& matrix, const AritySpec& arity);

/// Prize-collecting hybrid. The square internal block M' (variable column
/// dropped) becomes an undirected instance with costs 1 - (M' + M'^T)/2 and
/// uniform prizes 0.5 rooted at vertex 0. With no follow-up the resulting
/// tree is oriented outward from the root and remaining arity slots take
/// variable edges; otherwise the prior update M' := (M'_pcst + M')/2 feeds
/// the designated traversal or spanning pass on the updated matrix.
ReconstructionResult kmst_reconstruct(const SuperpositionMatrix& matrix, const AritySpec& arity,
                                      KmstFollowup followup);

ReconstructionResult run_algorithm(Algorithm algorithm, const SuperpositionMatrix& matrix,
                                   const AritySpec& arity);

}  // namespace sptree

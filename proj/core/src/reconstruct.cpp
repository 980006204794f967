#include "sptree/reconstruct.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>

#include "sptree/pcst.hpp"

namespace sptree {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Dfs: return "dfs";
    case Algorithm::Bfs: return "bfs";
    case Algorithm::Prims: return "prims";
    case Algorithm::Kmst: return "kmst";
    case Algorithm::KmstDfs: return "kmst-dfs";
    case Algorithm::KmstBfs: return "kmst-bfs";
    case Algorithm::KmstPrims: return "kmst-prims";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

namespace {

void require_shapes(const SuperpositionMatrix& matrix, const AritySpec& arity) {
  if (matrix.rows() != arity.size()) {
    throw std::invalid_argument("matrix and arity list disagree on vertex count");
  }
}

}  // namespace

ReconstructionResult greedy_traverse(const SuperpositionMatrix& matrix, const AritySpec& arity,
                                     Traversal order) {
  require_shapes(matrix, arity);
  const int n = matrix.rows();
  const int variable = matrix.variable_column();

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[0] = 1;
  std::deque<int> frontier{0};
  ReconstructionResult result;

  while (!frontier.empty()) {
    int v;
    if (order == Traversal::Dfs) {
      v = frontier.back();
      frontier.pop_back();
    } else {
      v = frontier.front();
      frontier.pop_front();
    }

    std::vector<int> internal_children;
    for (int slot = 0; slot < arity[v]; ++slot) {
      int best_col = -1;
      double best_w = 0.0;
      for (int c = 0; c < n; ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        const double w = matrix.at(v, c);
        if (best_col < 0 || w > best_w) {
          best_col = c;
          best_w = w;
        }
      }
      // The variable column is always available; it only wins strictly.
      if (best_col < 0 || matrix.at(v, variable) > best_w) {
        best_col = variable;
        best_w = matrix.at(v, variable);
      }
      result.tree.add_edge(v, best_col);
      if (best_col != variable) {
        used[static_cast<std::size_t>(best_col)] = 1;
        internal_children.push_back(best_col);
      }
    }

    if (order == Traversal::Dfs) {
      // Reverse push so the highest-weight child pops first.
      for (auto it = internal_children.rbegin(); it != internal_children.rend(); ++it) {
        frontier.push_back(*it);
      }
    } else {
      for (int c : internal_children) frontier.push_back(c);
    }
  }
  return result;
}

ReconstructionResult prims_reconstruct(const SuperpositionMatrix& matrix, const AritySpec& arity) {
  require_shapes(matrix, arity);
  const int n = matrix.rows();
  const int variable = matrix.variable_column();

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::vector<int> budget(static_cast<std::size_t>(n), 0);
  used[0] = 1;
  in_tree[0] = 1;
  budget[0] = arity[0];
  int open_slots = arity[0];

  ReconstructionResult result;
  while (open_slots > 0) {
    int best_from = -1;
    int best_to = -1;
    double best_w = 0.0;
    for (int v = 0; v < n; ++v) {
      if (!in_tree[static_cast<std::size_t>(v)] || budget[static_cast<std::size_t>(v)] == 0) {
        continue;
      }
      for (int c = 0; c <= variable; ++c) {
        if (c != variable && used[static_cast<std::size_t>(c)]) continue;
        const double w = matrix.at(v, c);
        const bool better = best_from < 0 || w > best_w ||
                            (w == best_w && (c < best_to || (c == best_to && v < best_from)));
        if (better) {
          best_from = v;
          best_to = c;
          best_w = w;
        }
      }
    }
    if (best_from < 0) {
      result.complete = false;  // unreachable: the variable column never closes
      break;
    }

    result.tree.add_edge(best_from, best_to);
    budget[static_cast<std::size_t>(best_from)]--;
    open_slots--;
    if (best_to != variable) {
      used[static_cast<std::size_t>(best_to)] = 1;
      in_tree[static_cast<std::size_t>(best_to)] = 1;
      budget[static_cast<std::size_t>(best_to)] = arity[best_to];
      open_slots += arity[best_to];
    }
  }
  return result;
}

ReconstructionResult kmst_reconstruct(const SuperpositionMatrix& matrix, const AritySpec& arity,
                                      KmstFollowup followup) {
  require_shapes(matrix, arity);
  const int n = matrix.rows();

  WeightedGraph relaxed(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      relaxed.add_edge(i, j, 1.0 - 0.5 * (matrix.at(i, j) + matrix.at(j, i)));
    }
  }
  PcstInstance instance{relaxed, 0, std::vector<double>(static_cast<std::size_t>(n), 0.5)};
  const PcstSolution pcst = pcst_solve(instance);

  if (followup == KmstFollowup::None) {
    // Orient outward from the root, then fill leftover slots with the
    // variable, the only leaf type.
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
    for (const WeightedEdge& e : pcst.edges) {
      adjacent[static_cast<std::size_t>(e.u)].push_back(e.v);
      adjacent[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> children(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    ReconstructionResult result;
    std::deque<int> queue{0};
    visited[0] = 1;
    std::vector<int> bfs_order{0};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adjacent[static_cast<std::size_t>(v)]) {
        if (visited[static_cast<std::size_t>(w)]) continue;
        visited[static_cast<std::size_t>(w)] = 1;
        result.tree.add_edge(v, w);
        children[static_cast<std::size_t>(v)]++;
        bfs_order.push_back(w);
        queue.push_back(w);
      }
    }
    for (int v : bfs_order) {
      const int spare = arity[v] - children[static_cast<std::size_t>(v)];
      if (spare < 0) {
        result.complete = false;  // the relaxed tree gave v too many children
        continue;
      }
      for (int i = 0; i < spare; ++i) result.tree.add_edge(v, matrix.variable_column());
    }
    return result;
  }

  // Prior update on the square block only; the variable column was not part
  // of the relaxed instance and stays untouched.
  SuperpositionMatrix boosted = matrix;
  std::vector<std::vector<char>> picked(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const WeightedEdge& e : pcst.edges) {
    picked[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    picked[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double indicator = picked[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      boosted.set(i, j, 0.5 * (indicator + matrix.at(i, j)));
    }
  }

  switch (followup) {
    case KmstFollowup::Dfs: return greedy_traverse(boosted, arity, Traversal::Dfs);
    case KmstFollowup::Bfs: return greedy_traverse(boosted, arity, Traversal::Bfs);
    case KmstFollowup::Prims: return prims_reconstruct(boosted, arity);
    case KmstFollowup::None: break;
  }
  throw std::invalid_argument("unknown follow-up");
}

ReconstructionResult run_algorithm(Algorithm algorithm, const SuperpositionMatrix& matrix,
                                   const AritySpec& arity) {
  switch (algorithm) {
    case Algorithm::Dfs: return greedy_traverse(matrix, arity, Traversal::Dfs);
    case Algorithm::Bfs: return greedy_traverse(matrix, arity, Traversal::Bfs);
    case Algorithm::Prims: return prims_reconstruct(matrix, arity);
    case Algorithm::Kmst: return kmst_reconstruct(matrix, arity, KmstFollowup::None);
    case Algorithm::KmstDfs: return kmst_reconstruct(matrix, arity, KmstFollowup::Dfs);
    case Algorithm::KmstBfs: return kmst_reconstruct(matrix, arity, KmstFollowup::Bfs);
    case Algorithm::KmstPrims: return kmst_reconstruct(matrix, arity, KmstFollowup::Prims);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace sptree

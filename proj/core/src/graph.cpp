#include "sptree/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>

namespace sptree {

AritySpec::AritySpec(std::vector<int> arities) : arities_(std::move(arities)) {
  if (arities_.empty()) throw std::invalid_argument("arity list must not be empty");
  if (arities_.front() != 1) throw std::invalid_argument("root arity must be 1");
  for (int a : arities_) {
    if (a < 1) throw std::invalid_argument("internal vertex arity must be >= 1");
  }
}

AritySpec AritySpec::from_primitives(const std::vector<PrimitiveSpec>& primitives) {
  std::vector<int> arities;
  arities.reserve(primitives.size());
  for (const auto& p : primitives) arities.push_back(p.arity);
  return AritySpec(std::move(arities));
}

int AritySpec::total_arity() const {
  int total = 0;
  for (int a : arities_) total += a;
  return total;
}

SuperpositionMatrix::SuperpositionMatrix(int n_internal) : n_(n_internal) {
  if (n_ < 1) throw std::invalid_argument("matrix needs at least one internal vertex");
  entries_.assign(static_cast<std::size_t>(n_) * (n_ + 1), 0.0);
}

SuperpositionMatrix SuperpositionMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SuperpositionMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.cols()) {
      throw std::invalid_argument("matrix row " + std::to_string(r) + " must have n+1 entries");
    }
    for (int c = 0; c < m.cols(); ++c) {
      m.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

void SuperpositionMatrix::check_index(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col > n_) {
    throw std::out_of_range("matrix index (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside " + std::to_string(n_) + " x " + std::to_string(n_ + 1));
  }
}

double SuperpositionMatrix::at(int row, int col) const {
  check_index(row, col);
  return entries_[static_cast<std::size_t>(row) * (n_ + 1) + col];
}

void SuperpositionMatrix::set(int row, int col, double value) {
  check_index(row, col);
  entries_[static_cast<std::size_t>(row) * (n_ + 1) + col] = value;
}

double SuperpositionMatrix::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

double SuperpositionMatrix::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

SuperpositionMatrix normalize(const SuperpositionMatrix& m) {
  const double lo = m.min_entry();
  const double hi = m.max_entry();
  SuperpositionMatrix out(m.rows());
  if (hi == lo) return out;  // constant matrix: all zeros
  const double span = hi - lo;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      out.set(r, c, (m.at(r, c) - lo) / span);
    }
  }
  return out;
}

SuperpositionTree::SuperpositionTree(std::vector<TreeEdge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

void SuperpositionTree::add_edge(int parent, int child) {
  TreeEdge e{parent, child};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

bool tree_equal(const SuperpositionTree& a, const SuperpositionTree& b) {
  return a.edges() == b.edges();
}

bool check_feasible(const SuperpositionTree& tree, const AritySpec& arity, int k) {
  const int n = arity.size();
  const int variable = n;

  for (const TreeEdge& e : tree.edges()) {
    if (e.parent < 0 || e.parent >= n || e.child < 0 || e.child > variable) {
      throw std::out_of_range("tree edge (" + std::to_string(e.parent) + ", " +
                              std::to_string(e.child) + ") outside vertex universe of size " +
                              std::to_string(n));
    }
  }

  std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
  std::vector<int> out_degree(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[0] = 1;  // the root is always part of the tree
  int variable_edges = 0;

  for (const TreeEdge& e : tree.edges()) {
    out_degree[static_cast<std::size_t>(e.parent)]++;
    used[static_cast<std::size_t>(e.parent)] = 1;
    if (e.child == variable) {
      variable_edges++;
    } else {
      in_degree[static_cast<std::size_t>(e.child)]++;
      used[static_cast<std::size_t>(e.child)] = 1;
    }
  }

  if (in_degree[0] > 0) return false;
  for (int v = 1; v < n; ++v) {
    if (in_degree[static_cast<std::size_t>(v)] > 1) return false;
  }

  // Every edge must hang off a vertex reachable from the root.
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  for (const TreeEdge& e : tree.edges()) {
    if (e.child != variable) children[static_cast<std::size_t>(e.parent)].push_back(e.child);
  }
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int c : children[static_cast<std::size_t>(v)]) {
      if (!reached[static_cast<std::size_t>(c)]) {
        reached[static_cast<std::size_t>(c)] = 1;
        queue.push_back(c);
      }
    }
  }
  for (const TreeEdge& e : tree.edges()) {
    if (!reached[static_cast<std::size_t>(e.parent)]) return false;
  }

  for (int v = 0; v < n; ++v) {
    if (used[static_cast<std::size_t>(v)] &&
        out_degree[static_cast<std::size_t>(v)] != arity[v]) {
      return false;
    }
  }

  int covered = variable_edges;
  for (int v = 0; v < n; ++v) covered += used[static_cast<std::size_t>(v)] ? 1 : 0;
  return covered >= k;
}

bool check_feasible(const SuperpositionTree& tree, const AritySpec& arity) {
  return check_feasible(tree, arity, arity.total_arity() + 1);
}

WeightedGraph::WeightedGraph(int n_vertices) : n_(n_vertices) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void WeightedGraph::add_edge(int u, int v, double cost) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::out_of_range("edge endpoint outside graph of size " + std::to_string(n_));
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (cost < 0.0) throw std::invalid_argument("edge costs must be non-negative");
  if (u > v) std::swap(u, v);
  edges_.push_back(WeightedEdge{u, v, cost});
}

void WeightedGraph::set_root(int root) {
  if (root < 0 || root >= n_) throw std::out_of_range("root outside graph");
  root_ = root;
}

void WeightedGraph::set_prizes(std::vector<double> prizes) {
  if (static_cast<int>(prizes.size()) != n_) {
    throw std::invalid_argument("prize vector must have one entry per vertex");
  }
  for (double p : prizes) {
    if (p < 0.0) throw std::invalid_argument("prizes must be non-negative");
  }
  prizes_ = std::move(prizes);
}

}  // namespace sptree

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace sptree {

/// A primitive function symbol and its arity. The arity doubles as the
/// vertex color: in a complete superposition tree the vertex holding this
/// primitive has exactly `arity` outgoing edges.
struct PrimitiveSpec {
  std::string name;
  int arity = 0;
};

/// Root-first arity list for the internal vertices of a superposition.
/// The root is index 0 and always has arity 1.
class AritySpec {
 public:
  explicit AritySpec(std::vector<int> arities);

  /// Arity list of the internal primitives, in row order.
  static AritySpec from_primitives(const std::vector<PrimitiveSpec>& primitives);

  int size() const { return static_cast<int>(arities_.size()); }
  int operator[](int vertex) const { return arities_.at(static_cast<std::size_t>(vertex)); }
  const std::vector<int>& values() const { return arities_; }

  /// Sum of all arities: the number of argument slots in a complete tree.
  int total_arity() const;

 private:
  std::vector<int> arities_;
};

/// n x (n+1) matrix of edge probabilities or weights. Rows are internal
/// vertices, row 0 is the root, and the last column is the replicable input
/// variable. Entries land in [0, 1] after normalize(); raw noisy entries may
/// lie outside that range.
class SuperpositionMatrix {
 public:
  explicit SuperpositionMatrix(int n_internal);

  static SuperpositionMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const { return n_; }
  int cols() const { return n_ + 1; }
  int variable_column() const { return n_; }

  double at(int row, int col) const;
  void set(int row, int col, double value);

  double min_entry() const;
  double max_entry() const;

  bool operator==(const SuperpositionMatrix&) const = default;

 private:
  void check_index(int row, int col) const;

  int n_ = 0;
  std::vector<double> entries_;  // row-major, n * (n + 1)
};

/// Affine rescale of every entry onto [0, 1] using the global minimum and
/// maximum. Order of entries is preserved. A constant matrix maps to all
/// zeros (degenerate case).
SuperpositionMatrix normalize(const SuperpositionMatrix& m);

struct TreeEdge {
  int parent = 0;
  int child = 0;
  auto operator<=>(const TreeEdge&) const = default;
};

/// Rooted directed tree stored as a multiset of (parent row, child column)
/// edges. Edges into the variable column may repeat, both across parents and
/// within one parent's argument slots, which is why a 0/1 adjacency matrix
/// cannot represent this type faithfully.
class SuperpositionTree {
 public:
  SuperpositionTree() = default;
  explicit SuperpositionTree(std::vector<TreeEdge> edges);

  void add_edge(int parent, int child);

  /// Edges in sorted order; duplicates kept.
  const std::vector<TreeEdge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  bool operator==(const SuperpositionTree&) const = default;

 private:
  std::vector<TreeEdge> edges_;
};

/// Multiset equality of the edge lists: a variable edge repeated in one tree
/// but not the other makes them unequal.
bool tree_equal(const SuperpositionTree& a, const SuperpositionTree& b);

/// Checks a candidate tree against the rooted-superposition constraints:
/// every edge reachable from the root, in-degree at most one per internal
/// vertex and zero for the root, out-degree of every used internal vertex
/// equal to its arity, and at least k covered vertices. Each edge into the
/// variable column covers one leaf. Throws std::out_of_range when an edge
/// index falls outside the vertex universe.
bool check_feasible(const SuperpositionTree& tree, const AritySpec& arity, int k);

/// Same with the default coverage bound total_arity() + 1: every argument
/// slot filled, the strict reading that applies with non-negative weights.
bool check_feasible(const SuperpositionTree& tree, const AritySpec& arity);

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double cost = 0.0;
};

/// Undirected graph with non-negative edge costs, an optional root and
/// optional per-vertex prizes. Edges are stored with u < v.
class WeightedGraph {
 public:
  explicit WeightedGraph(int n_vertices);

  void add_edge(int u, int v, double cost);

  int n_vertices() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  void set_root(int root);
  std::optional<int> root() const { return root_; }

  void set_prizes(std::vector<double> prizes);
  bool has_prizes() const { return !prizes_.empty(); }
  const std::vector<double>& prizes() const { return prizes_; }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::optional<int> root_;
  std::vector<double> prizes_;
};

}  // namespace sptree

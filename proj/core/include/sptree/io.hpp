#pragma once

#include <filesystem>
#include <iosfwd>

#include "sptree/graph.hpp"

namespace sptree {

/// Matrix text format: line 1 holds n, line 2 the n root-first arities, then
/// n lines of n+1 weights.
struct MatrixFile {
  SuperpositionMatrix matrix;
  AritySpec arities;
};

MatrixFile parse_matrix(std::istream& in);
MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const SuperpositionMatrix& matrix, const AritySpec& arities);

/// Tree text format: one `parent child` pair per line; duplicate lines keep
/// their multiplicity.
SuperpositionTree parse_tree(std::istream& in);
SuperpositionTree read_tree_file(const std::filesystem::path& path);
void write_tree(std::ostream& out, const SuperpositionTree& tree);

/// Graph text format: line 1 holds `n m`, then m lines `u v cost`, then
/// optional lines `root r` and `prizes p0 ... p_{n-1}`.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph read_graph_file(const std::filesystem::path& path);

}  // namespace sptree

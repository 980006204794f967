#include "sptree/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "sptree/errors.hpp"

namespace sptree {

namespace {

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

MatrixFile parse_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) throw ParseError("matrix file: expected positive vertex count");
  std::vector<int> arities(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (!(in >> arities[static_cast<std::size_t>(v)])) {
      throw ParseError("matrix file: expected " + std::to_string(n) + " arities");
    }
  }
  SuperpositionMatrix matrix(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c <= n; ++c) {
      double w = 0.0;
      if (!(in >> w)) {
        throw ParseError("matrix file: expected " + std::to_string(n) + " rows of " +
                         std::to_string(n + 1) + " weights");
      }
      matrix.set(r, c, w);
    }
  }
  try {
    return MatrixFile{std::move(matrix), AritySpec(std::move(arities))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const SuperpositionMatrix& matrix, const AritySpec& arities) {
  out << matrix.rows() << "\n";
  for (int v = 0; v < arities.size(); ++v) out << (v ? " " : "") << arities[v];
  out << "\n";
  char buffer[48];
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", matrix.at(r, c));
      out << (c ? " " : "") << buffer;
    }
    out << "\n";
  }
}

SuperpositionTree parse_tree(std::istream& in) {
  SuperpositionTree tree;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    std::istringstream row(line);
    int parent = 0, child = 0;
    if (!(row >> parent)) continue;  // blank line
    if (!(row >> child)) {
      throw ParseError("tree file line " + std::to_string(line_no) + ": expected `parent child`");
    }
    tree.add_edge(parent, child);
  }
  return tree;
}

SuperpositionTree read_tree_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_tree(in);
}

void write_tree(std::ostream& out, const SuperpositionTree& tree) {
  for (const TreeEdge& e : tree.edges()) out << e.parent << " " << e.child << "\n";
}

WeightedGraph parse_graph(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw ParseError("graph file: expected `n m` header");
  WeightedGraph graph(n);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    double cost = 0.0;
    if (!(in >> u >> v >> cost)) throw ParseError("graph file: expected `u v cost` edge lines");
    try {
      graph.add_edge(u, v, cost);
    } catch (const std::exception& e) {
      throw ParseError(std::string("graph file: ") + e.what());
    }
  }
  std::string keyword;
  while (in >> keyword) {
    if (keyword == "root") {
      int root = 0;
      if (!(in >> root)) throw ParseError("graph file: expected vertex after `root`");
      try {
        graph.set_root(root);
      } catch (const std::exception& e) {
        throw ParseError(std::string("graph file: ") + e.what());
      }
    } else if (keyword == "prizes") {
      std::vector<double> prizes(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        if (!(in >> prizes[static_cast<std::size_t>(v)])) {
          throw ParseError("graph file: expected " + std::to_string(n) + " prizes");
        }
      }
      try {
        graph.set_prizes(std::move(prizes));
      } catch (const std::exception& e) {
        throw ParseError(std::string("graph file: ") + e.what());
      }
    } else {
      throw ParseError("graph file: unknown section `" + keyword + "`");
    }
  }
  return graph;
}

WeightedGraph read_graph_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_graph(in);
}

}  // namespace sptree

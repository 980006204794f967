#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sptree/errors.hpp"
#include "sptree/graph.hpp"
#include "sptree/io.hpp"
#include "sptree/random.hpp"
#include "support.hpp"

using namespace sptree;
using sptree::testing::worked_example;

TEST_CASE("arity spec validates the root and lower bounds") {
  CHECK_THROWS_AS(AritySpec({}), std::invalid_argument);
  CHECK_THROWS_AS(AritySpec({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(AritySpec({1, 0}), std::invalid_argument);
  AritySpec arity({1, 3, 1, 1, 2, 1});
  CHECK(arity.total_arity() == 9);
  AritySpec from_prims = AritySpec::from_primitives(
      {{"*", 1}, {"+", 3}, {"ln", 1}, {"sin", 1}, {"x", 2}, {"exp", 1}});
  CHECK(from_prims.values() == arity.values());
}

TEST_CASE("feasibility accepts the worked example at full coverage") {
  const auto ex = worked_example();
  CHECK(check_feasible(ex.tree, ex.arities, 10));
  CHECK(check_feasible(ex.tree, ex.arities));  // default k = total arity + 1

  SUBCASE("every single-edge deletion breaks an arity") {
    for (std::size_t skip = 0; skip < ex.tree.edges().size(); ++skip) {
      SuperpositionTree pruned;
      for (std::size_t i = 0; i < ex.tree.edges().size(); ++i) {
        if (i == skip) continue;
        pruned.add_edge(ex.tree.edges()[i].parent, ex.tree.edges()[i].child);
      }
      CHECK_FALSE(check_feasible(pruned, ex.arities));
    }
  }
}

TEST_CASE("feasibility rejects the empty tree: the root arity is unmet") {
  AritySpec arity({1, 1});
  CHECK_FALSE(check_feasible(SuperpositionTree{}, arity, 1));
}

TEST_CASE("feasibility rejects two edges into the same internal vertex") {
  AritySpec arity({1, 2, 1, 1});
  SuperpositionTree tree(std::vector<TreeEdge>{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  // vertex 3 has parents 1 and 2
  CHECK_FALSE(check_feasible(tree, arity, 1));
}

TEST_CASE("feasibility rejects edges hanging off an unreachable vertex") {
  AritySpec arity({1, 1, 1});
  SuperpositionTree tree(std::vector<TreeEdge>{{0, 3}, {1, 2}, {2, 3}});
  CHECK_FALSE(check_feasible(tree, arity, 1));
}

TEST_CASE("feasibility rejects an incoming edge at the root") {
  AritySpec arity({1, 2});
  SuperpositionTree tree(std::vector<TreeEdge>{{0, 1}, {1, 0}, {1, 2}});
  CHECK_FALSE(check_feasible(tree, arity, 1));
}

TEST_CASE("feasibility throws on out-of-range vertex indices") {
  AritySpec arity({1, 1});
  SuperpositionTree tree(std::vector<TreeEdge>{{0, 7}});
  CHECK_THROWS_AS(check_feasible(tree, arity, 1), std::out_of_range);
}

TEST_CASE("normalize is the identity when entries already span [0, 1]") {
  SuperpositionMatrix m = SuperpositionMatrix::from_rows({{0.0, 0.2, 0.7}, {1.0, 0.5, 0.3}});
  CHECK(normalize(m) == m);
}

TEST_CASE("normalize forces the affine map onto [0, 1]") {
  SuperpositionMatrix m =
      SuperpositionMatrix::from_rows({{-0.3, 0.5, 1.3}, {0.5, 0.5, 0.5}});
  const SuperpositionMatrix out = normalize(m);
  CHECK(out.at(0, 0) == doctest::Approx(0.0));
  CHECK(out.at(0, 1) == doctest::Approx(0.5));
  CHECK(out.at(0, 2) == doctest::Approx(1.0));
  CHECK(out.at(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("normalize maps a constant matrix to zeros") {
  SuperpositionMatrix m =
      SuperpositionMatrix::from_rows({{0.4, 0.4, 0.4}, {0.4, 0.4, 0.4}});
  const SuperpositionMatrix out = normalize(m);
  CHECK(out.min_entry() == 0.0);
  CHECK(out.max_entry() == 0.0);
}

TEST_CASE("normalize is idempotent and order preserving on random matrices") {
  RandomSource rng(11);
  for (int it = 0; it < 50; ++it) {
    const int n = rng.uniform_int(1, 6);
    SuperpositionMatrix m(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c <= n; ++c) m.set(r, c, rng.uniform(-2.0, 3.0));
    }
    const SuperpositionMatrix once = normalize(m);
    const SuperpositionMatrix twice = normalize(once);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c <= n; ++c) {
        CHECK(std::abs(once.at(r, c) - twice.at(r, c)) <= 1e-12);
        CHECK(once.at(r, c) >= 0.0);
        CHECK(once.at(r, c) <= 1.0);
      }
    }
    // strict pairwise orderings survive the rescale
    for (int probe = 0; probe < 20; ++probe) {
      const int r1 = rng.uniform_int(0, n - 1), c1 = rng.uniform_int(0, n);
      const int r2 = rng.uniform_int(0, n - 1), c2 = rng.uniform_int(0, n);
      if (m.at(r1, c1) < m.at(r2, c2)) CHECK(once.at(r1, c1) < once.at(r2, c2));
    }
  }
}

TEST_CASE("tree equality is multiset equality") {
  SuperpositionTree a(std::vector<TreeEdge>{{0, 1}, {1, 2}, {1, 2}});
  SuperpositionTree b(std::vector<TreeEdge>{{1, 2}, {0, 1}, {1, 2}});
  CHECK(tree_equal(a, b));

  SUBCASE("a duplicated variable edge on one side breaks equality") {
    SuperpositionTree c(std::vector<TreeEdge>{{0, 1}, {1, 2}});
    CHECK_FALSE(tree_equal(a, c));
  }
  SUBCASE("a strict subset is not equal") {
    SuperpositionTree d(std::vector<TreeEdge>{{0, 1}});
    CHECK_FALSE(tree_equal(a, d));
  }
}

TEST_CASE("graph construction validates costs, loops and ranges") {
  WeightedGraph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5, 1.0), std::out_of_range);
  g.add_edge(2, 0, 0.25);
  CHECK(g.edges().front().u == 0);  // stored with u < v
  CHECK(g.edges().front().v == 2);
  CHECK_THROWS_AS(g.set_prizes({1.0}), std::invalid_argument);
}

TEST_CASE("matrix files round-trip through the text format") {
  const auto ex = worked_example();
  std::ostringstream out;
  write_matrix(out, ex.matrix, ex.arities);
  std::istringstream in(out.str());
  const MatrixFile parsed = parse_matrix(in);
  CHECK(parsed.matrix == ex.matrix);
  CHECK(parsed.arities.values() == ex.arities.values());
}

TEST_CASE("tree files round-trip and keep duplicate edges") {
  SuperpositionTree tree(std::vector<TreeEdge>{{0, 1}, {1, 3}, {1, 3}});
  std::ostringstream out;
  write_tree(out, tree);
  std::istringstream in(out.str());
  CHECK(tree_equal(parse_tree(in), tree));
}

TEST_CASE("malformed inputs raise parse errors") {
  std::istringstream bad_header("0\n");
  CHECK_THROWS_AS(parse_matrix(bad_header), ParseError);
  std::istringstream truncated("2\n1 1\n0 0 0\n");
  CHECK_THROWS_AS(parse_matrix(truncated), ParseError);
  std::istringstream bad_tree("3\n");
  CHECK_THROWS_AS(parse_tree(bad_tree), ParseError);
  std::istringstream bad_graph("2 1\n0 0 1.0\n");
  CHECK_THROWS_AS(parse_graph(bad_graph), ParseError);
}

TEST_CASE("graph files parse roots and prizes") {
  std::istringstream in("3 2\n0 1 0.5\n1 2 0.25\nroot 0\nprizes 0 0.5 1.0\n");
  const WeightedGraph g = parse_graph(in);
  CHECK(g.n_vertices() == 3);
  CHECK(g.edges().size() == 2);
  REQUIRE(g.root().has_value());
  CHECK(*g.root() == 0);
  REQUIRE(g.has_prizes());
  CHECK(g.prizes()[2] == 1.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sptree/errors.hpp"
#include "sptree/experiment.hpp"
#include "sptree/oracle.hpp"
#include "sptree/reconstruct.hpp"
#include "support.hpp"

using namespace sptree;
using sptree::testing::random_connected_graph;
using sptree::testing::random_distinct_vertices;
using sptree::testing::shortest_path_cost;

TEST_CASE("an all-zero cut function needs no edges") {
  WeightedGraph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  const CutFunction f(3, [](std::uint64_t) { return false; });
  const ForestSolution sol = oracle::exact_forest(g, f);
  CHECK(sol.edges.empty());
  CHECK(sol.total_cost == 0.0);
}

TEST_CASE("terminals everywhere force the whole tree graph") {
  WeightedGraph g(4);
  g.add_edge(0, 1, 0.3);
  g.add_edge(1, 2, 0.4);
  g.add_edge(1, 3, 0.5);
  const CutFunction f = steiner_cut_function(4, {0, 1, 2, 3});
  const ForestSolution sol = oracle::exact_forest(g, f);
  CHECK(sol.edges.size() == 3);
  CHECK(sol.total_cost == doctest::Approx(1.2));
}

TEST_CASE("two terminals reduce to the shortest path") {
  RandomSource rng(67);
  for (int it = 0; it < 50; ++it) {
    const int n = rng.uniform_int(4, 8);
    const WeightedGraph g = random_connected_graph(n, rng, 0.05, 1.0);
    const auto terminals = random_distinct_vertices(n, 2, rng);
    const CutFunction f = steiner_cut_function(n, terminals);
    const ForestSolution sol = oracle::exact_forest(g, f);
    CHECK(sol.total_cost ==
          doctest::Approx(shortest_path_cost(g, terminals[0], terminals[1])));

    // post-hoc: the returned edge set crosses every active cut
    for (std::uint64_t s = 1; s < f.full_mask(); ++s) {
      if (!f(s)) continue;
      bool crossed = false;
      for (const WeightedEdge& e : sol.edges) {
        if (((s >> e.u) & 1) != ((s >> e.v) & 1)) crossed = true;
      }
      CHECK(crossed);
    }
  }
}

TEST_CASE("exhaustive prize collection handles the degenerate corners") {
  SUBCASE("zero prizes keep the root alone") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 0.5);
    g.add_edge(1, 2, 0.5);
    const PcstSolution sol = oracle::exact_pcst(PcstInstance{g, 0, {0.0, 0.0, 0.0}});
    CHECK(sol.edges.empty());
    CHECK(sol.objective == doctest::Approx(0.0));
  }
  SUBCASE("free edges span everything") {
    WeightedGraph g(4);
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) g.add_edge(u, v, 0.0);
    }
    const PcstSolution sol = oracle::exact_pcst(PcstInstance{g, 0, {0.3, 0.3, 0.3, 0.3}});
    CHECK(sol.tree_vertices.size() == 4);
    CHECK(sol.objective == doctest::Approx(0.0));
  }
}

TEST_CASE("the enumerated optimum reproduces the worked example") {
  const auto ex = sptree::testing::worked_example();
  CHECK(tree_equal(oracle::exact_superposition(ex.matrix, ex.arities), ex.tree));
}

TEST_CASE("a binary ground-truth matrix has a unique heaviest tree") {
  ExperimentConfig config;
  config.n_internal_min = 3;
  config.n_internal_max = 5;
  RandomSource rng(71);
  for (int it = 0; it < 40; ++it) {
    const GeneratedInstance inst = generate_instance(config, rng);
    if (inst.arities.total_arity() > oracle::kMaxArityMass) continue;
    const SuperpositionTree best = oracle::exact_superposition(inst.matrix, inst.arities);
    CHECK(tree_equal(best, inst.tree));
    CHECK(check_feasible(best, inst.arities, 1));
  }
}

TEST_CASE("the spanning heuristic never outweighs the enumerated optimum") {
  RandomSource rng(73);
  for (int it = 0; it < 40; ++it) {
    const int n = 5;
    std::vector<int> arities{1};
    for (int v = 1; v < n; ++v) arities.push_back(rng.uniform_int(1, 2));
    const AritySpec spec(arities);
    if (spec.total_arity() > oracle::kMaxArityMass) continue;
    SuperpositionMatrix m(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c <= n; ++c) m.set(r, c, rng.uniform(0.0, 1.0));
    }
    const ReconstructionResult spanning = prims_reconstruct(m, spec);
    const SuperpositionTree enumerated = oracle::exact_superposition(m, spec);
    double heuristic = 0.0;
    for (const TreeEdge& e : spanning.tree.edges()) heuristic += m.at(e.parent, e.child);
    double best = 0.0;
    for (const TreeEdge& e : enumerated.edges()) best += m.at(e.parent, e.child);
    CHECK(heuristic <= best + 1e-9);
  }
}

TEST_CASE("oracles reject instances above their enumeration bounds") {
  WeightedGraph big(12);
  for (int u = 0; u < 12; ++u) {
    for (int v = u + 1; v < 12; ++v) {
      if (big.edges().size() < 30) big.add_edge(u, v, 1.0);
    }
  }
  CHECK_THROWS_AS(oracle::exact_forest(big, steiner_cut_function(12, {0, 1})), SizeBoundError);

  WeightedGraph wide(10);
  for (int v = 1; v < 10; ++v) wide.add_edge(0, v, 1.0);
  CHECK_THROWS_AS(
      oracle::exact_pcst(PcstInstance{wide, 0, std::vector<double>(10, 0.5)}),
      SizeBoundError);

  const SuperpositionMatrix m(6);
  CHECK_THROWS_AS(oracle::exact_superposition(m, AritySpec({1, 3, 3, 3, 3, 3})),
                  SizeBoundError);
}

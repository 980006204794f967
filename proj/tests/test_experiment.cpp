#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "sptree/experiment.hpp"
#include "support.hpp"

using namespace sptree;

TEST_CASE("two internal vertices leave a single possible tree") {
  ExperimentConfig config;
  config.n_internal_min = 2;
  config.n_internal_max = 2;
  config.arity_binomial_trials = 0;  // every arity is exactly 1
  RandomSource rng(1);
  const GeneratedInstance inst = generate_instance(config, rng);
  const SuperpositionTree expected(std::vector<TreeEdge>{{0, 1}, {1, 2}});
  CHECK(tree_equal(inst.tree, expected));
  CHECK(inst.matrix.at(0, 1) == 1.0);
  CHECK(inst.matrix.at(1, 2) == 1.0);
}

TEST_CASE("generated instances are always feasible and place every vertex") {
  ExperimentConfig config;
  RandomSource rng(2);
  for (int it = 0; it < 200; ++it) {
    const GeneratedInstance inst = generate_instance(config, rng);
    CHECK(check_feasible(inst.tree, inst.arities, inst.arities.total_arity() + 1));
    std::set<int> internals;
    for (const TreeEdge& e : inst.tree.edges()) {
      internals.insert(e.parent);
      if (e.child < inst.arities.size()) internals.insert(e.child);
    }
    CHECK(static_cast<int>(internals.size()) == inst.arities.size());
  }
}

TEST_CASE("sampled arities match the shifted binomial moments") {
  RandomSource rng(3);
  const int draws = 10000;
  const int m = 2;
  const double p = 0.3;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) sum += sample_arity(rng, m, p);
  const double mean = sum / draws;
  const double expected = 1.0 + m * p;
  const double sigma = std::sqrt(m * p * (1.0 - p) / draws);
  CHECK(std::abs(mean - expected) <= 3.0 * sigma);
}

TEST_CASE("zero noise leaves a binary matrix untouched") {
  ExperimentConfig config;
  RandomSource rng(4);
  const GeneratedInstance inst = generate_instance(config, rng);
  CHECK(add_noise(inst.matrix, 0.0, rng) == inst.matrix);
}

TEST_CASE("at the half threshold every true entry still dominates") {
  ExperimentConfig config;
  RandomSource rng(5);
  int violations = 0;
  for (int it = 0; it < 1000; ++it) {
    const GeneratedInstance inst = generate_instance(config, rng);
    const SuperpositionMatrix noisy = add_noise(inst.matrix, 0.5, rng);
    double min_true = 2.0, max_false = -2.0;
    for (int r = 0; r < inst.matrix.rows(); ++r) {
      for (int c = 0; c < inst.matrix.cols(); ++c) {
        if (inst.matrix.at(r, c) == 1.0) {
          min_true = std::min(min_true, noisy.at(r, c));
        } else {
          max_false = std::max(max_false, noisy.at(r, c));
        }
        CHECK(noisy.at(r, c) >= 0.0);
        CHECK(noisy.at(r, c) <= 1.0);
      }
    }
    if (min_true <= max_false) violations++;
  }
  CHECK(violations == 0);
}

TEST_CASE("zero noise gives every algorithm a perfect score") {
  ExperimentConfig config;
  config.k_trials = 50;
  config.noise_levels = {0.0};
  const QualityReport report = run_experiment(config);
  for (Algorithm a : kAllAlgorithms) CHECK(report.rate(a, 0.0) == 1.0);
}

TEST_CASE("reports are identical across runs with the same seed") {
  ExperimentConfig config;
  config.k_trials = 40;
  config.noise_levels = {0.5, 0.56};
  config.seed = 99;
  const QualityReport a = run_experiment(config);
  const QualityReport b = run_experiment(config);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_plot_csv(a) == to_plot_csv(b));
}

TEST_CASE("csv output carries the documented header and four-digit rates") {
  ExperimentConfig config;
  config.k_trials = 5;
  config.noise_levels = {0.0};
  config.seed = 7;
  const std::string csv = to_csv(run_experiment(config));
  CHECK(csv.rfind("algorithm,alpha,rate,k_trials,seed\n", 0) == 0);
  CHECK(csv.find("dfs,0,1.0000,5,7\n") != std::string::npos);
  CHECK(csv.find("kmst-prims,0,1.0000,5,7\n") != std::string::npos);

  const std::string pivot = to_plot_csv(run_experiment(config));
  CHECK(pivot.rfind("alpha,dfs,bfs,prims,kmst,kmst-dfs,kmst-bfs,kmst-prims\n", 0) == 0);
}

TEST_CASE("invalid configurations are rejected") {
  ExperimentConfig config;
  config.k_trials = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.k_trials = 1;
  config.noise_levels = {-0.1};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.noise_levels = {0.1};
  config.n_internal_min = 9;
  config.n_internal_max = 4;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

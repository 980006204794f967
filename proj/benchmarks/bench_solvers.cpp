#include <benchmark/benchmark.h>

#include "sptree/experiment.hpp"
#include "sptree/gw_forest.hpp"
#include "sptree/oracle.hpp"
#include "sptree/pcst.hpp"
#include "sptree/random.hpp"
#include "sptree/reconstruct.hpp"

using namespace sptree;

namespace {

WeightedGraph random_connected(int n, RandomSource& rng) {
  WeightedGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(rng.uniform_int(0, v - 1), v, rng.uniform(0.02, 1.0));
  for (int i = 0; i < n / 2; ++i) {
    const int u = rng.uniform_int(0, n - 1);
    const int v = rng.uniform_int(0, n - 1);
    if (u != v) g.add_edge(u, v, rng.uniform(0.02, 1.0));
  }
  return g;
}

void BM_GwSolveSteiner(benchmark::State& state) {
  RandomSource rng(1);
  const int n = static_cast<int>(state.range(0));
  const WeightedGraph g = random_connected(n, rng);
  const CutFunction f = steiner_cut_function(n, {0, n - 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw_solve(g, f));
  }
}
BENCHMARK(BM_GwSolveSteiner)->Arg(8)->Arg(16)->Arg(32);

void BM_PcstSolve(benchmark::State& state) {
  RandomSource rng(2);
  const int n = static_cast<int>(state.range(0));
  const WeightedGraph g = random_connected(n, rng);
  std::vector<double> prizes;
  for (int v = 0; v < n; ++v) prizes.push_back(rng.uniform(0.0, 1.0));
  const PcstInstance inst{g, 0, prizes};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcst_solve(inst));
  }
}
BENCHMARK(BM_PcstSolve)->Arg(8)->Arg(32)->Arg(64);

void BM_PrimsReconstruct(benchmark::State& state) {
  ExperimentConfig config;
  config.n_internal_min = static_cast<int>(state.range(0));
  config.n_internal_max = static_cast<int>(state.range(0));
  RandomSource rng(3);
  const GeneratedInstance inst = generate_instance(config, rng);
  const SuperpositionMatrix noisy = add_noise(inst.matrix, 0.5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prims_reconstruct(noisy, inst.arities));
  }
}
BENCHMARK(BM_PrimsReconstruct)->Arg(4)->Arg(8)->Arg(16);

void BM_HybridReconstruct(benchmark::State& state) {
  ExperimentConfig config;
  RandomSource rng(4);
  const GeneratedInstance inst = generate_instance(config, rng);
  const SuperpositionMatrix noisy = add_noise(inst.matrix, 0.5, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmst_reconstruct(noisy, inst.arities, KmstFollowup::Prims));
  }
}
BENCHMARK(BM_HybridReconstruct);

void BM_ExactForestOracle(benchmark::State& state) {
  RandomSource rng(5);
  const int n = 7;
  const WeightedGraph g = random_connected(n, rng);
  const CutFunction f = steiner_cut_function(n, {0, 3, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::exact_forest(g, f));
  }
}
BENCHMARK(BM_ExactForestOracle);

void BM_ExperimentTrial(benchmark::State& state) {
  ExperimentConfig config;
  config.k_trials = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(config));
  }
}
BENCHMARK(BM_ExperimentTrial);

}  // namespace

BENCHMARK_MAIN();

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sptree/graph.hpp"
#include "sptree/random.hpp"
#include "sptree/reconstruct.hpp"

namespace sptree {

/// Configuration of the noise-robustness experiment.
struct ExperimentConfig {
  int k_trials = 1000;
  std::vector<double> noise_levels{0.50, 0.52, 0.54, 0.56, 0.58};
  int n_internal_min = 4;
  int n_internal_max = 8;
  /// Non-root arities are 1 + Binomial(trials, p): many small arities.
  int arity_binomial_trials = 2;
  double arity_binomial_p = 0.3;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GeneratedInstance {
  SuperpositionMatrix matrix;  ///< binary ground truth: 1 on tree edges
  AritySpec arities;
  SuperpositionTree tree;
};

/// Draws 1 + Binomial(trials, p) by summing Bernoulli draws, keeping the
/// stream portable.
int sample_arity(RandomSource& rng, int trials, double p);

/// Samples one ground-truth instance: n internal vertices, root arity 1,
/// Binomial arities elsewhere, and a random arity-complete rooted tree that
/// places every internal vertex. Each vertex's argument slots are filled
/// either with distinct unused internal vertices or entirely with variable
/// edges, so repeated variable use stays recoverable from arity budgets.
/// Draws that cannot place every internal vertex are retried a bounded
/// number of times before a config error.
GeneratedInstance generate_instance(const ExperimentConfig& config, RandomSource& rng);

/// Adds i.i.d. uniform noise from [-alpha, alpha] to every entry, then
/// rescales onto [0, 1].
SuperpositionMatrix add_noise(const SuperpositionMatrix& matrix, double alpha, RandomSource& rng);

struct QualityCell {
  Algorithm algorithm;
  double alpha = 0.0;
  double rate = 0.0;  ///< exact matches / k_trials
  int matches = 0;
};

struct QualityReport {
  std::vector<QualityCell> cells;  ///< algorithm-major, noise levels ascending in config order
  int k_trials = 0;
  std::uint64_t seed = 0;

  double rate(Algorithm algorithm, double alpha) const;
};

/// Runs the full sweep: per trial one generated instance, fresh noise per
/// level, all seven algorithms, exact multiset match against the ground
/// truth. Deterministic given the seed; each trial draws from its own
/// (seed, trial) substream.
QualityReport run_experiment(const ExperimentConfig& config);

/// CSV with header algorithm,alpha,rate,k_trials,seed and one row per
/// (algorithm, noise level); rates carry four digits.
std::string to_csv(const QualityReport& report);

/// The same data pivoted: one row per noise level, one column per algorithm.
std::string to_plot_csv(const QualityReport& report);

}  // namespace sptree

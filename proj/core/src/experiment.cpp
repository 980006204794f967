#include "sptree/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <stdexcept>

namespace sptree {

namespace {

constexpr int kGenerationRetries = 64;

}  // namespace

void ExperimentConfig::validate() const {
  if (k_trials < 1) throw std::invalid_argument("need at least one trial");
  if (noise_levels.empty()) throw std::invalid_argument("need at least one noise level");
  for (double a : noise_levels) {
    if (a < 0.0) throw std::invalid_argument("noise level must be non-negative");
  }
  if (n_internal_min < 2 || n_internal_max < n_internal_min) {
    throw std::invalid_argument("invalid internal vertex range");
  }
  if (arity_binomial_trials < 0 || arity_binomial_p < 0.0 || arity_binomial_p > 1.0) {
    throw std::invalid_argument("invalid arity distribution parameters");
  }
}

int sample_arity(RandomSource& rng, int trials, double p) {
  int bonus = 0;
  for (int i = 0; i < trials; ++i) bonus += rng.bernoulli(p) ? 1 : 0;
  return 1 + bonus;
}

GeneratedInstance generate_instance(const ExperimentConfig& config, RandomSource& rng) {
  config.validate();
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    const int n = rng.uniform_int(config.n_internal_min, config.n_internal_max);
    std::vector<int> arities(static_cast<std::size_t>(n), 1);
    for (int v = 1; v < n; ++v) {
      arities[static_cast<std::size_t>(v)] =
          sample_arity(rng, config.arity_binomial_trials, config.arity_binomial_p);
    }

    // Every internal vertex must be placed, so the slot count cannot fall
    // short of the n-1 non-root vertices.
    int mass = 0;
    for (int a : arities) mass += a;
    if (mass < n - 1) continue;

    std::vector<int> unused;
    for (int v = 1; v < n; ++v) unused.push_back(v);
    SuperpositionTree tree;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      const int slots = arities[static_cast<std::size_t>(v)];
      if (slots <= static_cast<int>(unused.size())) {
        for (int s = 0; s < slots; ++s) {
          const int pick = rng.uniform_int(0, static_cast<int>(unused.size()) - 1);
          const int child = unused[static_cast<std::size_t>(pick)];
          unused[static_cast<std::size_t>(pick)] = unused.back();
          unused.pop_back();
          tree.add_edge(v, child);
          queue.push_back(child);
        }
      } else {
        for (int s = 0; s < slots; ++s) tree.add_edge(v, n);
      }
    }
    if (!unused.empty()) continue;  // frontier drained before placing everyone

    SuperpositionMatrix matrix(n);
    for (const TreeEdge& e : tree.edges()) matrix.set(e.parent, e.child, 1.0);
    return GeneratedInstance{std::move(matrix), AritySpec(std::move(arities)), std::move(tree)};
  }
  throw std::invalid_argument("instance generation failed; arity distribution too heavy for n");
}

SuperpositionMatrix add_noise(const SuperpositionMatrix& matrix, double alpha, RandomSource& rng) {
  if (alpha < 0.0) throw std::invalid_argument("noise level must be non-negative");
  SuperpositionMatrix noisy(matrix.rows());
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      const double u = (alpha == 0.0) ? 0.0 : rng.uniform(-alpha, alpha);
      noisy.set(r, c, matrix.at(r, c) + u);
    }
  }
  return normalize(noisy);
}

double QualityReport::rate(Algorithm algorithm, double alpha) const {
  for (const QualityCell& cell : cells) {
    if (cell.algorithm == algorithm && cell.alpha == alpha) return cell.rate;
  }
  throw std::out_of_range("no cell for that algorithm and noise level");
}

QualityReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t n_alpha = config.noise_levels.size();
  std::vector<std::vector<int>> matches(kAllAlgorithms.size(), std::vector<int>(n_alpha, 0));

  for (int trial = 0; trial < config.k_trials; ++trial) {
    RandomSource rng =
        RandomSource::for_trial(config.seed, static_cast<std::uint64_t>(trial));
    const GeneratedInstance instance = generate_instance(config, rng);
    for (std::size_t ai = 0; ai < n_alpha; ++ai) {
      const SuperpositionMatrix noisy =
          add_noise(instance.matrix, config.noise_levels[ai], rng);
      for (std::size_t alg = 0; alg < kAllAlgorithms.size(); ++alg) {
        const ReconstructionResult result =
            run_algorithm(kAllAlgorithms[alg], noisy, instance.arities);
        if (result.complete && tree_equal(result.tree, instance.tree)) {
          matches[alg][ai]++;
        }
      }
    }
  }

  QualityReport report;
  report.k_trials = config.k_trials;
  report.seed = config.seed;
  for (std::size_t alg = 0; alg < kAllAlgorithms.size(); ++alg) {
    for (std::size_t ai = 0; ai < n_alpha; ++ai) {
      QualityCell cell;
      cell.algorithm = kAllAlgorithms[alg];
      cell.alpha = config.noise_levels[ai];
      cell.matches = matches[alg][ai];
      cell.rate = static_cast<double>(cell.matches) / config.k_trials;
      report.cells.push_back(cell);
    }
  }
  return report;
}

namespace {

std::string format_double(const char* fmt, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, value);
  return buffer;
}

}  // namespace

std::string to_csv(const QualityReport& report) {
  std::string out = "algorithm,alpha,rate,k_trials,seed\n";
  for (const QualityCell& cell : report.cells) {
    out += std::string(algorithm_name(cell.algorithm)) + ",";
    out += format_double("%g", cell.alpha) + ",";
    out += format_double("%.4f", cell.rate) + ",";
    out += std::to_string(report.k_trials) + ",";
    out += std::to_string(report.seed) + "\n";
  }
  return out;
}

std::string to_plot_csv(const QualityReport& report) {
  std::string out = "alpha";
  for (Algorithm a : kAllAlgorithms) {
    out += ",";
    out += algorithm_name(a);
  }
  out += "\n";
  // Collect distinct noise levels in first-seen order.
  std::vector<double> alphas;
  for (const QualityCell& cell : report.cells) {
    if (std::find(alphas.begin(), alphas.end(), cell.alpha) == alphas.end()) {
      alphas.push_back(cell.alpha);
    }
  }
  for (double alpha : alphas) {
    out += format_double("%g", alpha);
    for (Algorithm a : kAllAlgorithms) {
      out += "," + format_double("%.4f", report.rate(a, alpha));
    }
    out += "\n";
  }
  return out;
}

}  // namespace sptree

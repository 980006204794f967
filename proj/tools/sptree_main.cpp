#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sptree/errors.hpp"
#include "sptree/experiment.hpp"
#include "sptree/gw_forest.hpp"
#include "sptree/io.hpp"
#include "sptree/oracle.hpp"
#include "sptree/pcst.hpp"
#include "sptree/reconstruct.hpp"

namespace {

// Exit codes: 0 ok, 2 usage, 3 parse/input, 4 size bound, 5 internal invariant.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitSizeBound = 4;
constexpr int kExitInvariant = 5;

struct Options {
  std::string command;

  std::string matrix_path;
  std::vector<int> arities;
  std::string algo = "prims";

  std::string graph_path;
  std::vector<int> terminals;
  std::optional<int> root;
  std::optional<double> uniform_prize;
  std::optional<int> k;

  std::string mode;

  std::uint64_t seed = 0;
  int trials = 1000;
  std::vector<double> alphas{0.50, 0.52, 0.54, 0.56, 0.58};
  std::string out_path;
  bool plot_data = false;
};

sptree::MatrixFile load_matrix(const Options& opt) {
  sptree::MatrixFile file = sptree::read_matrix_file(opt.matrix_path);
  if (!opt.arities.empty()) {
    file.arities = sptree::AritySpec(opt.arities);
    if (file.arities.size() != file.matrix.rows()) {
      throw sptree::ParseError("inline arity list does not match the matrix row count");
    }
  }
  return file;
}

sptree::WeightedGraph load_graph(const Options& opt) {
  sptree::WeightedGraph graph = sptree::read_graph_file(opt.graph_path);
  if (opt.root) graph.set_root(*opt.root);
  if (opt.uniform_prize) {
    graph.set_prizes(std::vector<double>(static_cast<std::size_t>(graph.n_vertices()),
                                         *opt.uniform_prize));
  }
  return graph;
}

void print_edges(const std::vector<sptree::WeightedEdge>& edges) {
  for (const auto& e : edges) std::cout << e.u << " " << e.v << "\n";
}

int run_reconstruct(const Options& opt) {
  const auto file = load_matrix(opt);
  const auto algorithm = sptree::algorithm_from_name(opt.algo);
  if (!algorithm) throw CLI::ValidationError("--algo", "unknown algorithm " + opt.algo);
  const auto result =
      sptree::run_algorithm(*algorithm, sptree::normalize(file.matrix), file.arities);
  sptree::write_tree(std::cout, result.tree);
  if (!result.complete) std::cerr << "warning: reconstruction incomplete\n";
  return kExitOk;
}

int run_gw(const Options& opt) {
  const auto graph = load_graph(opt);
  const auto cut = sptree::steiner_cut_function(graph.n_vertices(), opt.terminals);
  const auto solution = sptree::gw_solve(graph, cut);
  print_edges(solution.edges);
  std::printf("cost %.17g\n", solution.total_cost);
  std::printf("dual %.17g\n", solution.dual_bound);
  return kExitOk;
}

int run_pcst(const Options& opt) {
  const auto graph = load_graph(opt);
  const auto instance = sptree::PcstInstance::from_graph(graph);
  if (opt.k) {
    if (!opt.uniform_prize) {
      throw CLI::ValidationError("--k", "the k-MST objective needs --uniform-prize");
    }
    const auto result =
        sptree::kmst_via_pcst(graph, instance.root, *opt.k, *opt.uniform_prize);
    print_edges(result.solution.edges);
    std::printf("objective %.17g\n", result.solution.objective);
    std::printf("kmst-objective %.17g\n", result.kmst_objective);
  } else {
    const auto solution = sptree::pcst_solve(instance);
    print_edges(solution.edges);
    std::printf("objective %.17g\n", solution.objective);
  }
  return kExitOk;
}

int run_oracle(const Options& opt) {
  if (opt.mode == "forest") {
    const auto graph = load_graph(opt);
    const auto cut = sptree::steiner_cut_function(graph.n_vertices(), opt.terminals);
    const auto solution = sptree::oracle::exact_forest(graph, cut);
    print_edges(solution.edges);
    std::printf("cost %.17g\n", solution.total_cost);
  } else if (opt.mode == "pcst") {
    const auto graph = load_graph(opt);
    const auto solution = sptree::oracle::exact_pcst(sptree::PcstInstance::from_graph(graph));
    print_edges(solution.edges);
    std::printf("objective %.17g\n", solution.objective);
  } else if (opt.mode == "superposition") {
    const auto file = load_matrix(opt);
    const auto tree =
        sptree::oracle::exact_superposition(sptree::normalize(file.matrix), file.arities);
    sptree::write_tree(std::cout, tree);
  } else {
    throw CLI::ValidationError("--mode", "expected forest, pcst or superposition");
  }
  return kExitOk;
}

int run_bench(const Options& opt) {
  sptree::ExperimentConfig config;
  config.seed = opt.seed;
  config.k_trials = opt.trials;
  config.noise_levels = opt.alphas;
  const auto report = sptree::run_experiment(config);
  const std::string csv = opt.plot_data ? sptree::to_plot_csv(report) : sptree::to_csv(report);
  if (opt.out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw sptree::ParseError("cannot open output file " + opt.out_path);
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superposition tree reconstruction toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_matrix_opts = [&opt](CLI::App* cmd, bool required) {
    cmd->add_option("--matrix", opt.matrix_path, "matrix file (n, arities, weights)")
        ->required(required);
    cmd->add_option("--arities", opt.arities,
                    "inline root-first arity list overriding the file")
        ->delimiter(',');
  };
  auto add_graph_opts = [&opt](CLI::App* cmd) {
    cmd->add_option("--graph", opt.graph_path, "graph file (n m, edges, root, prizes)");
    cmd->add_option("--root", opt.root, "root vertex override");
    cmd->add_option("--uniform-prize", opt.uniform_prize, "set every vertex prize to this value");
  };

  auto* reconstruct = app.add_subcommand("reconstruct", "reconstruct a tree from a matrix");
  add_matrix_opts(reconstruct, true);
  reconstruct->add_option("--algo", opt.algo,
                          "dfs|bfs|prims|kmst|kmst-dfs|kmst-bfs|kmst-prims");

  auto* gw = app.add_subcommand("gw", "constrained forest approximation (Steiner cuts)");
  add_graph_opts(gw);
  gw->add_option("--terminals", opt.terminals, "terminal vertices")->delimiter(',')->required();

  auto* pcst = app.add_subcommand("pcst", "prize-collecting Steiner tree approximation");
  add_graph_opts(pcst);
  pcst->add_option("--k", opt.k, "report the k-MST objective for this k");

  auto* oracle = app.add_subcommand("oracle", "exact solvers on small instances");
  oracle->add_option("--mode", opt.mode, "forest|pcst|superposition")->required();
  add_matrix_opts(oracle, false);
  add_graph_opts(oracle);
  oracle->add_option("--terminals", opt.terminals, "terminal vertices (forest mode)")
      ->delimiter(',');

  auto* bench = app.add_subcommand("bench", "noise-robustness sweep, CSV output");
  bench->add_option("--seed", opt.seed, "random seed");
  bench->add_option("--trials", opt.trials, "trials per noise level");
  bench->add_option("--alphas", opt.alphas, "noise half-widths")->delimiter(',');
  bench->add_option("--out", opt.out_path, "write CSV here instead of stdout");
  bench->add_flag("--plot-data", opt.plot_data, "pivot the CSV: one row per noise level");

  try {
    app.parse(argc, argv);
    if (reconstruct->parsed()) return run_reconstruct(opt);
    if (gw->parsed()) return run_gw(opt);
    if (pcst->parsed()) return run_pcst(opt);
    if (oracle->parsed()) return run_oracle(opt);
    if (bench->parsed()) return run_bench(opt);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const sptree::SizeBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeBound;
  } catch (const sptree::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    // Parse errors, missing files, infeasible or malformed inputs.
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "augopt/datagen.hpp"
#include "augopt/harness.hpp"

#ifdef AUGOPT_HAVE_ACCEPTANCE
#include "acceptance.hpp"
#endif

namespace h = augopt::harness;

namespace {

int gen_data(std::uint64_t seed, std::size_t n_per_cluster, double spread,
             const std::string& config, const std::string& out_path) {
  augopt::GenSpec spec = augopt::default_gen_spec(seed);
  if (!config.empty()) spec = h::load_config(config).gen;
  spec.seed = seed;
  if (n_per_cluster > 0) spec.n_per_cluster = n_per_cluster;
  if (spread >= 0.0) spec.spread = spread;
  const augopt::Dataset data = augopt::gen_clusters(spec);
  if (out_path.empty() || out_path == "-") {
    augopt::write_dataset_csv(data, std::cout);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw augopt::Error("cannot open " + out_path + " for writing");
  augopt::write_dataset_csv(data, out);
  std::cerr << "wrote " << data.size() << " points to " << out_path << "\n";
  return 0;
}

int run(const std::string& config_path) {
  const h::ExperimentConfig cfg = h::load_config(config_path);
  const auto rows = h::run_experiment(cfg);
  const auto dir = h::resolve_output_dir(cfg);
  const h::Manifest m = h::write_results(rows, cfg, dir);
  std::cout << h::to_string(cfg.experiment) << ": " << m.passed << "/" << m.rows
            << " rows pass -> " << m.csv_path.string() << "\n";
  for (const auto& r : rows) {
    if (!r.error.empty()) std::cerr << "  seed " << r.seed << " sweep " << r.sweep_value << ": " << r.error << "\n";
  }
  return m.all_pass ? 0 : 1;
}

int verify(const std::vector<int>& only, const std::string& scratch) {
#ifdef AUGOPT_HAVE_ACCEPTANCE
  augopt::acceptance::Options opts;
  opts.only.insert(only.begin(), only.end());
  opts.scratch_dir = scratch;
  const auto results = augopt::acceptance::run_all(opts);
  bool all = true;
  for (const auto& r : results) {
    std::cout << augopt::acceptance::format_line(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
#else
  (void)only;
  (void)scratch;
  std::cerr << "verify: built without the acceptance suite (AUGOPT_BUILD_TESTS=OFF)\n";
  return 2;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"augopt: augmentation and convergence experiments"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen-data", "Write a synthetic cluster dataset as CSV");
  std::uint64_t seed = 1;
  std::size_t n_per_cluster = 0;
  double spread = -1.0;
  std::string gen_config, out_path;
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--n-per-cluster", n_per_cluster, "Points per cluster (default 100)");
  gen->add_option("--spread", spread, "Per-coordinate standard deviation (default 1)");
  gen->add_option("--config", gen_config, "Take centroids and sizes from a config file");
  gen->add_option("--out", out_path, "Output path ('-' for stdout)");

  auto* run_cmd = app.add_subcommand("run", "Run an experiment config");
  std::string config_path;
  run_cmd->add_option("--config", config_path, "Experiment YAML")->required()->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  std::vector<int> only;
  std::string scratch;
  verify_cmd->add_option("--only", only, "Criterion ids to run");
  verify_cmd->add_option("--scratch", scratch, "Directory for determinism outputs");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return gen_data(seed, n_per_cluster, spread, gen_config, out_path);
    if (*run_cmd) return run(config_path);
    if (*verify_cmd) return verify(only, scratch);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

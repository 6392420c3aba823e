#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "augopt/harness.hpp"

namespace augopt::harness {
namespace {

namespace fs = std::filesystem;

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("augopt_harness_test_" + name);
  fs::remove_all(p);
  return p;
}

TEST(Config, ParsesMinimalYaml) {
  const ExperimentConfig cfg = parse_config("experiment: noise_sweep\nseeds: [3]\nsweep: [0, 6]\n");
  EXPECT_EQ(cfg.experiment, ExperimentKind::kNoiseSweep);
  EXPECT_EQ(cfg.seeds, (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(sweep_values(cfg), (std::vector<double>{0.0, 6.0}));
  EXPECT_EQ(cfg.gen.centroids.size(), 4u);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("experiment: nope\n"), Error);
  EXPECT_THROW(parse_config("experiment: noise_sweep\nseeds: []\n"), Error);
  EXPECT_THROW(parse_config("experiment: noise_sweep\nbogus_key: 1\n"), Error);
  EXPECT_THROW(parse_config("experiment: noise_sweep\noptimizer:\n  eta: -1\n"), Error);
  EXPECT_THROW(parse_config("experiment: rate_check\nobjective:\n  colour: red\n"), Error);
  EXPECT_THROW(parse_config("seeds: [1]\n"), Error);
}

TEST(Config, ShippedConfigsLoad) {
  for (const auto& e : fs::directory_iterator(AUGOPT_CONFIG_DIR)) {
    if (e.path().extension() != ".yaml") continue;
    EXPECT_NO_THROW(load_config(e.path())) << e.path();
  }
}

TEST(Csv, EmptyRowsGiveHeaderOnly) {
  const std::string csv = results_csv({}, ExperimentKind::kNoiseSweep);
  EXPECT_EQ(line_count(csv), 1u);
  EXPECT_EQ(csv.rfind("experiment,seed,sweep_value,", 0), 0u);

  const fs::path dir = scratch("empty");
  const Manifest m = write_results({}, default_config(ExperimentKind::kNoiseSweep), dir);
  EXPECT_EQ(m.rows, 0u);
  EXPECT_EQ(slurp(m.csv_path), csv);
  EXPECT_NE(slurp(m.json_path).find("\"rows\": 0"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Csv, SentinelAndLineCount) {
  std::vector<ResultRow> rows;
  const std::size_t k = metric_columns(ExperimentKind::kNoiseSweep).size();
  for (int i = 0; i < 6; ++i) {
    ResultRow r;
    r.experiment = to_string(ExperimentKind::kNoiseSweep);
    r.seed = 1;
    r.sweep_value = 2.0 * i;
    r.metrics.assign(k, std::nullopt);
    r.metrics[0] = 0.5;
    rows.push_back(r);
  }
  const std::string csv = results_csv(rows, ExperimentKind::kNoiseSweep);
  EXPECT_EQ(line_count(csv), 7u);
  EXPECT_NE(csv.find(",NA"), std::string::npos);
  EXPECT_EQ(csv.find('\r'), std::string::npos);

  rows[0].metrics.pop_back();
  EXPECT_THROW(results_csv(rows, ExperimentKind::kNoiseSweep), Error);
}

TEST(Run, NoiseSweepRowCount) {
  ExperimentConfig cfg = default_config(ExperimentKind::kNoiseSweep);
  cfg.seeds = {1};
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 6u);
  const auto cols = metric_columns(ExperimentKind::kNoiseSweep);
  const auto eb = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), "epochs_baseline") - cols.begin());
  const auto ea = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), "epochs_augmented") - cols.begin());
  ASSERT_LT(eb, cols.size());
  ASSERT_LT(ea, cols.size());
  for (const auto& r : rows) {
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.metrics[eb].has_value());
    EXPECT_TRUE(r.metrics[ea].has_value());
  }
}

TEST(Run, RateCheckAllPass) {
  const auto rows = run_experiment(default_config(ExperimentKind::kRateCheck));
  EXPECT_EQ(rows.size(), kRateGridCells);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.sweep_value;
}

TEST(Run, DuplicateLeavesOptimaUnchanged) {
  ExperimentConfig cfg = load_config(fs::path(AUGOPT_CONFIG_DIR) / "unchanged_optima_duplicate.yaml");
  cfg.seeds = {1};
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 1u);
  const auto cols = metric_columns(ExperimentKind::kUnchangedOptima);
  const auto di = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), "final_distance") - cols.begin());
  ASSERT_LT(di, cols.size());
  ASSERT_TRUE(rows[0].metrics[di].has_value());
  EXPECT_LE(*rows[0].metrics[di], 1e-10);
  EXPECT_TRUE(rows[0].pass);
}

TEST(Output, ByteIdenticalRerunsAndEnvOverride) {
  ExperimentConfig cfg = default_config(ExperimentKind::kHessianCheck);
  const fs::path a = scratch("a"), b = scratch("b");
  const Manifest ma = write_results(run_experiment(cfg), cfg, a);
  const Manifest mb = write_results(run_experiment(cfg), cfg, b);
  EXPECT_EQ(slurp(ma.csv_path), slurp(mb.csv_path));
  EXPECT_EQ(slurp(ma.json_path), slurp(mb.json_path));
  EXPECT_TRUE(ma.all_pass);

  ::setenv(kOutputDirEnv, a.c_str(), 1);
  EXPECT_EQ(resolve_output_dir(cfg), a);
  ::unsetenv(kOutputDirEnv);
  fs::remove_all(a);
  fs::remove_all(b);
}

}  // namespace
}  // namespace augopt::harness

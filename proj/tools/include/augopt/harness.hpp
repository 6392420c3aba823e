#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "augopt/analysis.hpp"
#include "augopt/datagen.hpp"
#include "augopt/objective.hpp"
#include "augopt/soft_min.hpp"
#include "augopt/transforms.hpp"
#include "augopt/vec.hpp"

namespace augopt::harness {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kOutputDirEnv = "AUGOPT_OUTPUT_DIR";

enum class ExperimentKind { kNoiseSweep, kRateCheck, kUnchangedOptima, kGraduatedCompare, kHessianCheck };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

struct TransformSection {
  std::string kind = "gaussian_noise";  // gaussian_noise | rotation | duplicate | alpha_pair
  double variance = 0.0;
  double angle = 0.0;
  double alpha1 = 0.1;
  double alpha2 = 0.5;
};

struct ObjectiveSection {
  std::string loss = "soft_min";  // soft_min | sum_norms | quadratic | perturbed_quadratic
  double beta = 0.005;
  Divergence divergence = Divergence::kSquaredEuclidean;
  std::string candidates = "nearest_to_centroids";  // nearest_to_centroids | data
  double gamma = 1.0;
  double alpha = 1.0;  // total coupling per point: alpha_ij = alpha / N
  // perturbed quadratic family and its transform component
  Vec center{20.0, 20.0};
  double curvature = 1.0;
  double amplitude = 1.0;
  double frequency = 0.6;
  double kappa = 4.0;
  Vec box_lo{0.0, 0.0};
  Vec box_hi{40.0, 40.0};
};

struct OptimizerSection {
  double eta = 0.05;
  std::size_t max_iters = 200000;
  double stop_epsilon = 1e-15;  // step-length rule for reference solves
  std::size_t phases = 8;
  double shrink = 2.0;
  std::size_t samples = 64;
  std::optional<double> delta1;
  std::size_t t_cap = 10000;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kNoiseSweep;
  GenSpec gen = default_gen_spec(1);  // seed replaced per run
  TransformSection transform;
  ObjectiveSection objective;
  OptimizerSection optimizer;
  double epsilon = 1e-4;
  double tolerance = 1e-3;   // unchanged_optima bound, relative to coordinate scale
  std::vector<double> sweep;  // meaning depends on the experiment
  std::vector<std::uint64_t> seeds{1};
  std::string output_dir = "results";
};

/// Defaults for each experiment kind; a config file overrides them key by key.
ExperimentConfig default_config(ExperimentKind kind);
void validate(const ExperimentConfig& cfg);

/// YAML document with top-level keys experiment, seeds, epsilon, tolerance,
/// sweep, output_dir and the maps gen, transform, objective, optimizer.
/// Unknown keys are rejected.
ExperimentConfig parse_config(const std::string& yaml_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully resolved config as JSON text (stable key order).
std::string config_json(const ExperimentConfig& cfg, int indent = 2);

/// Sweep values actually used: cfg.sweep, or the kind's default grid.
std::vector<double> sweep_values(const ExperimentConfig& cfg);

struct ResultRow {
  std::string experiment;
  std::uint64_t seed = 0;
  double sweep_value = 0.0;
  std::vector<std::optional<double>> metrics;  // aligned with metric_columns(kind)
  bool pass = false;
  std::string error;  // empty on success
};

std::vector<std::string> metric_columns(ExperimentKind kind);

/// Runs every (sweep value, seed) cell. A failing cell yields a row with
/// pass = false and the error text; other cells still run. Rows are sorted
/// by sweep value, then seed.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

struct Manifest {
  std::filesystem::path csv_path;
  std::filesystem::path json_path;
  std::size_t rows = 0;
  std::size_t passed = 0;
  bool all_pass = true;
};

/// results.csv and manifest.json under `dir` (created if missing).
/// Identical inputs give byte-identical files.
Manifest write_results(const std::vector<ResultRow>& rows, const ExperimentConfig& cfg,
                       const std::filesystem::path& dir);
std::string results_csv(const std::vector<ResultRow>& rows, ExperimentKind kind);

/// cfg.output_dir unless the environment variable AUGOPT_OUTPUT_DIR is set.
std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg);

// Cell-level entry points, also used by the acceptance suite.

/// Data point nearest each ground-truth centroid.
std::vector<Vec> nearest_data_candidates(const Dataset& data);

struct NoiseSweepCell {
  std::optional<std::size_t> epochs_baseline;
  std::optional<std::size_t> epochs_augmented;
  double optimum_shift = 0.0;  // |q*_baseline - q*_augmented|
  std::size_t supervision_violations = 0;
};
NoiseSweepCell run_noise_sweep_cell(const ExperimentConfig& cfg, std::uint64_t seed,
                                    double variance);

struct RateCell {
  double mu = 0.0;
  double kappa = 0.0;
  double lipschitz = 0.0;
  double eta = 0.0;
  double bound_baseline = 0.0;
  double bound_augmented = 0.0;
  RateReport baseline;
  RateReport augmented;
  std::size_t epochs_baseline = 0;
  std::size_t epochs_augmented = 0;
};
/// Cell index 0..26 of the (mu, kappa, eta) grid on a 4-dimensional quadratic.
RateCell run_rate_cell(const ExperimentConfig& cfg, std::uint64_t seed, std::size_t cell);
inline constexpr std::size_t kRateGridCells = 27;

struct UnchangedCell {
  double distance = 0.0;  // largest coordinate difference between the paired argmins
  double scale = 1.0;
  double tolerance = 0.0;  // absolute: cfg.tolerance * scale
  std::size_t supervision_violations = 0;
  bool pass = false;
};
UnchangedCell run_unchanged_cell(const ExperimentConfig& cfg, std::uint64_t seed, double variance);

struct GraduatedArm {
  std::optional<std::uint64_t> grad_evals_to_eps;
  std::optional<std::size_t> steps_to_eps;
  std::uint64_t grad_evals_total = 0;
  std::size_t steps_total = 0;
  double final_distance = 0.0;
  double slope = 0.0;            // fit of ln|w_{m+1} - w*| against cumulative inner steps
  double predicted_slope = 0.0;  // ln(1 - eta (mu+kappa)) ln(1.5) / (2 ln 6)
  double mu_kappa = 0.0;
  bool displacement_monotone = false;
  std::vector<double> displacements;  // |w_{m+1} - w_m| per phase
};

struct GraduatedCell {
  Vec w_star;
  double delta_final = 0.0;  // delta_{M+1}
  GraduatedArm baseline;
  GraduatedArm augmented;
};
/// Perturbed quadratic baseline vs. the same objective averaged with a
/// kappa-quadratic sharing its minimizer; `phases` overrides cfg.optimizer.phases.
GraduatedCell run_graduated_cell(const ExperimentConfig& cfg, std::uint64_t seed,
                                 std::size_t phases);

/// Global minimizer of the perturbed quadratic over the box: grid scan followed
/// by projected descent from the best grid point.
Vec perturbed_family_optimum(const ObjectiveSection& obj);

struct HessianCell {
  std::size_t n = 0;
  double max_rel_error = 0.0;
  double lambda_min_base = 0.0;
  double lambda_min_aug = 0.0;
  bool ordered = false;
};
/// Random sum-of-norms instance with n points: analytic vs. finite-difference
/// Hessian, and the alpha-pair spectral ordering with n transformed copies.
HessianCell run_hessian_cell(const ExperimentConfig& cfg, std::uint64_t seed, std::size_t n);

}  // namespace augopt::harness

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "augopt/decision_set.hpp"
#include "augopt/objective.hpp"
#include "augopt/optimizers.hpp"
#include "augopt/sum_norms.hpp"

namespace augopt {

/// Linear-rate fit of a trace against a known optimum.
struct RateReport {
  double fitted_rate = 0.0;     // exp(slope) of log |w_t - w*|^2 vs t
  double r_squared = 1.0;
  double bound = 1.0;           // theoretical per-step factor, e.g. 1 - eta (mu + kappa)
  double max_step_ratio = 0.0;  // worst per-step squared-distance ratio above 1e6 eps scale
  std::size_t fit_points = 0;
  bool degenerate_tail = false;  // fewer than two points above the floating-point floor
  bool satisfied = false;        // fitted_rate and max_step_ratio both <= bound + 1e-6
};

/// Distances of each iterate to w_star (uses stored iterates, else dist_to_ref).
std::vector<double> distances_to(const OptTrace& trace, ConstVecView w_star);

/// Least-squares fit over the prefix of iterates whose distance stays above
/// 100 * machine epsilon * max(1, |w*|, |w_0|). Throws Error("degenerate trace")
/// when the first iterate is already at w_star, or when the trace has fewer
/// than three iterates.
RateReport estimate_contraction(const OptTrace& trace, ConstVecView w_star, double bound);
RateReport estimate_contraction(std::span<const double> distances, double scale, double bound);

/// First t with distance <= epsilon, or nullopt.
std::optional<std::size_t> epochs_to_converge(std::span<const double> distances, double epsilon);
std::optional<std::size_t> epochs_to_converge(const OptTrace& trace, ConstVecView w_star,
                                              double epsilon);

/// Cumulative gradient evaluations at the first iterate within epsilon.
std::optional<std::uint64_t> evals_to_converge(const OptTrace& trace, ConstVecView w_star,
                                               double epsilon);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

LinearFit least_squares_line(std::span<const double> x, std::span<const double> y);

struct UnchangedOptimaConfig {
  GDConfig solver;             // should carry a tight stop rule
  std::uint64_t start_seed = 0;  // start drawn uniformly from K
  std::optional<Vec> start;      // overrides the seeded draw
  double bound = 1e-3;
};

struct OptimaComparison {
  Vec argmin_f;
  Vec argmin_fplus;
  double distance = 0.0;
  bool pass = false;
};

/// Solves both problems from the same seeded start and compares the argmins.
/// Throws when either run exhausts max_iters without meeting its stop rule.
OptimaComparison verify_unchanged_optima(const ObjectiveHandle& f, const ObjectiveHandle& fplus,
                                         const DecisionSet& k, const UnchangedOptimaConfig& cfg);

struct SpectralGain {
  double lambda_min_base = 0.0;
  double lambda_min_aug = 0.0;
  bool ordered = false;
};

SpectralGain spectral_gain(const SumNormsParams& base, const SumNormsParams& augmented);

}  // namespace augopt

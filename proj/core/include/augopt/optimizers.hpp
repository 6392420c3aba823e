#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "augopt/decision_set.hpp"
#include "augopt/objective.hpp"
#include "augopt/smoothing.hpp"
#include "augopt/vec.hpp"

namespace augopt {

enum class StopKind {
  kGradientNorm,  // stop before the update once |g_t| <= epsilon
  kStepLength,    // stop after the update once |w_{t+1} - w_t| <= epsilon
};

struct StopRule {
  StopKind kind = StopKind::kStepLength;
  double epsilon = 0.0;
};

struct GDConfig {
  double eta = 0.1;
  std::size_t max_iters = 100;
  std::optional<DecisionSet> projection;
  std::optional<StopRule> stop;
};

void validate(const GDConfig& cfg);

/// Per-iterate record. `iterates` is either empty (not stored) or aligned with
/// `values`; `dist_to_ref` is filled when a reference optimum is supplied.
/// grad_evals[t] is the cumulative number of gradient evaluations spent to
/// reach iterate t (Monte-Carlo samples counted individually).
struct OptTrace {
  std::vector<Vec> iterates;
  std::vector<double> values;
  std::vector<double> dist_to_ref;
  std::vector<std::size_t> phase_boundaries;
  std::vector<std::uint64_t> grad_evals;

  std::size_t size() const { return values.size(); }
  std::uint64_t grad_eval_count() const { return grad_evals.empty() ? 0 : grad_evals.back(); }
};

/// What the descent loop queries. `value` is optional and only used for the
/// trace; `evals_per_call` feeds the gradient-evaluation counter.
struct GradientOracle {
  std::function<Vec(ConstVecView)> grad;
  std::function<double(ConstVecView)> value;
  std::uint64_t evals_per_call = 1;

  static GradientOracle exact(const ObjectiveHandle& f);
  static GradientOracle smoothed(const ObjectiveHandle& f, const SmoothingParams& p);
};

struct TraceOptions {
  std::optional<Vec> reference;
  bool store_iterates = true;
};

struct GDResult {
  Vec w_final;
  OptTrace trace;
  bool stopped_early = false;
};

/// Projected gradient descent w_{t+1} = P(w_t - eta * g_t), P the identity
/// when no projection set is configured. Runs at most max_iters updates.
/// Throws with the iteration index on a non-finite gradient.
GDResult grad_descent(const GradientOracle& oracle, Vec w1, const GDConfig& cfg,
                      const TraceOptions& opts = {});
GDResult grad_descent(const ObjectiveHandle& f, Vec w1, const GDConfig& cfg,
                      const TraceOptions& opts = {});

/// Inner iteration count for one graduated phase:
///   ceil( 2 ln(delta_m / (4 diam_m)) / ln(1 - eta * mu_kappa) ), clamped to [1, t_cap].
/// Throws unless 0 < eta * mu_kappa < 1, delta_m, diam_m > 0 and delta_m <= 4 diam_m.
std::size_t inner_iterations(double delta_m, double diam_m, double eta, double mu_kappa,
                             std::size_t t_cap);

struct GraduatedConfig {
  std::size_t phases = 8;         // M
  std::optional<double> delta1;   // default diam(K) / 2
  double shrink = 2.0;            // delta_{m+1} = delta_m / shrink
  double eta = 0.1;
  double mu_kappa = 1.0;          // strong-convexity estimate used in the schedule
  std::size_t samples = 64;       // Monte-Carlo draws per smoothed gradient
  std::uint64_t seed = 0;
  std::size_t t_cap = 10000;
};

void validate(const GraduatedConfig& cfg);

struct PhaseRecord {
  double delta = 0.0;
  double diam = 0.0;
  std::size_t inner_iters = 0;
  Vec start;  // w_m
  Vec end;    // w_{m+1}
};

struct GraduatedResult {
  Vec w_final;
  OptTrace trace;
  std::vector<PhaseRecord> phases;
};

/// Graduated descent over a bounded convex set K. w_1 is drawn uniformly from
/// K with cfg.seed. Phase m restricts to K ∩ B(w_m, 1.5 delta_m), runs
/// inner_iterations(...) projected steps on the delta_m-smoothed gradient and
/// shrinks delta. diam(K_m) is taken as min(diam K, 3 delta_m).
GraduatedResult graduated_descent(const ObjectiveHandle& f, const DecisionSet& k,
                                  const GraduatedConfig& cfg, const TraceOptions& opts = {});

/// Smallest eigenvalue of the symmetrized central-difference Jacobian of a
/// gradient map at w: an empirical strong-convexity constant.
double estimate_strong_convexity(const std::function<Vec(ConstVecView)>& grad, ConstVecView w,
                                 double h);

}  // namespace augopt

#include "augopt/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "augopt/random.hpp"
#include "augopt/sym_matrix.hpp"

namespace augopt {

namespace {

void record(OptTrace& trace, const GradientOracle& oracle, const TraceOptions& opts,
            ConstVecView w, std::uint64_t evals) {
  if (opts.store_iterates) trace.iterates.emplace_back(w.begin(), w.end());
  trace.values.push_back(oracle.value ? oracle.value(w)
                                      : std::numeric_limits<double>::quiet_NaN());
  if (opts.reference) trace.dist_to_ref.push_back(distance(w, *opts.reference));
  trace.grad_evals.push_back(evals);
}

// Appends `part` (whose first entry repeats the last entry of `trace`) to `trace`.
void splice(OptTrace& trace, OptTrace&& part, std::uint64_t eval_offset) {
  auto skip = [](auto& dst, auto& src) {
    if (!src.empty()) dst.insert(dst.end(), std::make_move_iterator(src.begin() + 1),
                                 std::make_move_iterator(src.end()));
  };
  skip(trace.iterates, part.iterates);
  skip(trace.values, part.values);
  skip(trace.dist_to_ref, part.dist_to_ref);
  for (std::size_t i = 1; i < part.grad_evals.size(); ++i) {
    trace.grad_evals.push_back(part.grad_evals[i] + eval_offset);
  }
}

}  // namespace

void validate(const GDConfig& cfg) {
  if (!(cfg.eta > 0.0) || !std::isfinite(cfg.eta)) throw Error("GDConfig: eta must be > 0");
  if (cfg.max_iters < 1) throw Error("GDConfig: max_iters must be >= 1");
  if (cfg.stop && !(cfg.stop->epsilon >= 0.0)) throw Error("GDConfig: stop epsilon must be >= 0");
}

GradientOracle GradientOracle::exact(const ObjectiveHandle& f) {
  return {[f](ConstVecView w) { return f.grad(w); }, [f](ConstVecView w) { return f.value(w); },
          1};
}

GradientOracle GradientOracle::smoothed(const ObjectiveHandle& f, const SmoothingParams& p) {
  validate(p);
  return {[f, p](ConstVecView w) { return grad_op(f, w, p); },
          [f](ConstVecView w) { return f.value(w); }, grad_op_cost(p)};
}

GDResult grad_descent(const GradientOracle& oracle, Vec w1, const GDConfig& cfg,
                      const TraceOptions& opts) {
  validate(cfg);
  if (!oracle.grad) throw Error("grad_descent: oracle has no gradient");
  if (!all_finite(w1)) throw Error("grad_descent: non-finite start point");
  if (cfg.projection && !cfg.projection->contains(w1)) {
    throw Error("grad_descent: start point outside the projection set");
  }

  GDResult result;
  Vec w = std::move(w1);
  std::uint64_t evals = 0;
  record(result.trace, oracle, opts, w, evals);

  for (std::size_t t = 0; t < cfg.max_iters; ++t) {
    const Vec g = oracle.grad(w);
    evals += oracle.evals_per_call;
    if (g.size() != w.size() || !all_finite(g)) {
      throw Error("grad_descent: non-finite gradient at iteration " + std::to_string(t + 1));
    }
    if (cfg.stop && cfg.stop->kind == StopKind::kGradientNorm && norm(g) <= cfg.stop->epsilon) {
      // The query is still charged to the evaluation budget.
      result.trace.grad_evals.back() = evals;
      result.stopped_early = true;
      break;
    }
    Vec next = w;
    axpy(-cfg.eta, g, next);
    if (cfg.projection) next = cfg.projection->project(next);
    const double step = distance(next, w);
    w = std::move(next);
    record(result.trace, oracle, opts, w, evals);
    if (cfg.stop && cfg.stop->kind == StopKind::kStepLength && step <= cfg.stop->epsilon) {
      result.stopped_early = true;
      break;
    }
  }
  result.w_final = std::move(w);
  return result;
}

GDResult grad_descent(const ObjectiveHandle& f, Vec w1, const GDConfig& cfg,
                      const TraceOptions& opts) {
  if (w1.size() != f.param_dim()) throw Error("grad_descent: start point dimension mismatch");
  return grad_descent(GradientOracle::exact(f), std::move(w1), cfg, opts);
}

std::size_t inner_iterations(double delta_m, double diam_m, double eta, double mu_kappa,
                             std::size_t t_cap) {
  const double x = eta * mu_kappa;
  if (!(x > 0.0) || !(x < 1.0)) {
    throw Error("inner_iterations: need 0 < eta * mu_kappa < 1 (got " + std::to_string(x) + ")");
  }
  if (!(delta_m > 0.0) || !(diam_m > 0.0)) {
    throw Error("inner_iterations: delta and diameter must be > 0");
  }
  if (delta_m > 4.0 * diam_m) throw Error("inner_iterations: delta exceeds 4 * diameter");
  if (t_cap < 1) throw Error("inner_iterations: t_cap must be >= 1");
  const double t = 2.0 * std::log(delta_m / (4.0 * diam_m)) / std::log1p(-x);
  const double clamped = std::clamp(std::ceil(t), 1.0, static_cast<double>(t_cap));
  return static_cast<std::size_t>(clamped);
}

void validate(const GraduatedConfig& cfg) {
  if (cfg.phases < 1) throw Error("GraduatedConfig: phases must be >= 1");
  if (!(cfg.shrink > 1.0)) throw Error("GraduatedConfig: shrink must be > 1");
  if (!(cfg.eta > 0.0)) throw Error("GraduatedConfig: eta must be > 0");
  if (!(cfg.mu_kappa > 0.0)) throw Error("GraduatedConfig: mu_kappa must be > 0");
  if (!(cfg.eta * cfg.mu_kappa < 1.0)) throw Error("GraduatedConfig: need eta * mu_kappa < 1");
  if (cfg.samples < 1) throw Error("GraduatedConfig: samples must be >= 1");
  if (cfg.t_cap < 1) throw Error("GraduatedConfig: t_cap must be >= 1");
  if (cfg.delta1 && !(*cfg.delta1 > 0.0)) throw Error("GraduatedConfig: delta1 must be > 0");
}

GraduatedResult graduated_descent(const ObjectiveHandle& f, const DecisionSet& k,
                                  const GraduatedConfig& cfg, const TraceOptions& opts) {
  validate(cfg);
  if (k.dim() != f.param_dim()) throw Error("graduated_descent: set/objective dimension mismatch");

  GraduatedResult result;
  const double diam_k = k.diameter();
  Vec w = k.sample_uniform(mix64(cfg.seed ^ 0x5eedULL));
  double delta = cfg.delta1.value_or(diam_k / 2.0);

  const GradientOracle exact = GradientOracle::exact(f);
  record(result.trace, exact, opts, w, 0);

  for (std::size_t m = 0; m < cfg.phases; ++m) {
    PhaseRecord phase;
    phase.delta = delta;
    phase.diam = std::min(diam_k, 3.0 * delta);
    phase.start = w;
    try {
      phase.inner_iters = inner_iterations(delta, phase.diam, cfg.eta, cfg.mu_kappa, cfg.t_cap);
      GDConfig inner;
      inner.eta = cfg.eta;
      inner.max_iters = phase.inner_iters;
      inner.projection = k.intersect_ball(w, 1.5 * delta);
      const SmoothingParams smoothing{delta, cfg.samples, cfg.seed};
      GDResult run = grad_descent(GradientOracle::smoothed(f, smoothing), w, inner, opts);
      result.trace.phase_boundaries.push_back(result.trace.size() - 1);
      splice(result.trace, std::move(run.trace), result.trace.grad_eval_count());
      w = std::move(run.w_final);
    } catch (const Error& e) {
      throw Error("graduated_descent: phase " + std::to_string(m + 1) + ": " + e.what());
    }
    phase.end = w;
    result.phases.push_back(std::move(phase));
    delta /= cfg.shrink;
  }
  result.w_final = std::move(w);
  return result;
}

double estimate_strong_convexity(const std::function<Vec(ConstVecView)>& grad, ConstVecView w,
                                 double h) {
  const std::size_t d = w.size();
  std::vector<Vec> columns(d);
  Vec x(w.begin(), w.end());
  for (std::size_t j = 0; j < d; ++j) {
    const double orig = x[j];
    x[j] = orig + h;
    const Vec gp = grad(x);
    x[j] = orig - h;
    const Vec gm = grad(x);
    x[j] = orig;
    columns[j] = scaled(sub(gp, gm), 1.0 / (2.0 * h));
  }
  SymMatrix jac(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) jac.set(i, j, 0.5 * (columns[j][i] + columns[i][j]));
  }
  return min_eigenvalue(jac);
}

}  // namespace augopt

#include "augopt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace augopt {

std::vector<double> distances_to(const OptTrace& trace, ConstVecView w_star) {
  std::vector<double> out;
  if (!trace.iterates.empty()) {
    out.reserve(trace.iterates.size());
    for (const auto& w : trace.iterates) out.push_back(distance(w, w_star));
  } else {
    out = trace.dist_to_ref;
  }
  return out;
}

LinearFit least_squares_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw Error("least_squares_line: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw Error("least_squares_line: constant abscissa");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

RateReport estimate_contraction(std::span<const double> distances, double scale, double bound) {
  if (distances.size() < 3) throw Error("degenerate trace: fewer than three iterates");
  const double floor = 1e2 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
  if (!(distances[0] > floor)) throw Error("degenerate trace: starts at the reference optimum");

  std::size_t prefix = 0;
  while (prefix < distances.size() && distances[prefix] > floor) ++prefix;

  RateReport report;
  report.bound = bound;
  report.fit_points = prefix;
  // Ratios near the fit floor are dominated by rounding in the iterates.
  const double ratio_floor = 1e6 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
  for (std::size_t t = 0; t + 1 < distances.size() && distances[t + 1] > ratio_floor; ++t) {
    const double ratio = (distances[t + 1] * distances[t + 1]) / (distances[t] * distances[t]);
    report.max_step_ratio = std::max(report.max_step_ratio, ratio);
  }
  if (prefix < 2) {
    report.degenerate_tail = true;
    report.fitted_rate = 0.0;
    report.r_squared = 1.0;
  } else {
    std::vector<double> t(prefix), logd(prefix);
    for (std::size_t i = 0; i < prefix; ++i) {
      t[i] = static_cast<double>(i);
      logd[i] = std::log(distances[i] * distances[i]);
    }
    const LinearFit fit = least_squares_line(t, logd);
    report.fitted_rate = std::exp(fit.slope);
    report.r_squared = fit.r_squared;
  }
  report.satisfied =
      report.fitted_rate <= bound + 1e-6 && report.max_step_ratio <= bound + 1e-6;
  return report;
}

RateReport estimate_contraction(const OptTrace& trace, ConstVecView w_star, double bound) {
  double scale = norm(w_star);
  if (!trace.iterates.empty()) scale = std::max(scale, norm(trace.iterates.front()));
  const std::vector<double> d = distances_to(trace, w_star);
  return estimate_contraction(d, scale, bound);
}

std::optional<std::size_t> epochs_to_converge(std::span<const double> distances, double epsilon) {
  if (!(epsilon > 0.0)) throw Error("epochs_to_converge: epsilon must be > 0");
  for (std::size_t t = 0; t < distances.size(); ++t) {
    if (distances[t] <= epsilon) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> epochs_to_converge(const OptTrace& trace, ConstVecView w_star,
                                              double epsilon) {
  const std::vector<double> d = distances_to(trace, w_star);
  return epochs_to_converge(d, epsilon);
}

std::optional<std::uint64_t> evals_to_converge(const OptTrace& trace, ConstVecView w_star,
                                               double epsilon) {
  const auto t = epochs_to_converge(trace, w_star, epsilon);
  if (!t) return std::nullopt;
  return trace.grad_evals.at(*t);
}

OptimaComparison verify_unchanged_optima(const ObjectiveHandle& f, const ObjectiveHandle& fplus,
                                         const DecisionSet& k, const UnchangedOptimaConfig& cfg) {
  if (f.param_dim() != fplus.param_dim()) {
    throw Error("verify_unchanged_optima: parameter dimension mismatch");
  }
  if (!cfg.solver.stop) throw Error("verify_unchanged_optima: solver needs a stop rule");
  GDConfig solver = cfg.solver;
  if (!solver.projection) solver.projection = k;
  const Vec start = cfg.start ? *cfg.start : k.sample_uniform(cfg.start_seed);
  if (!k.contains(start)) throw Error("verify_unchanged_optima: start point outside K");
  TraceOptions opts;
  opts.store_iterates = false;

  auto solve = [&](const ObjectiveHandle& obj, const char* which) {
    GDResult r = grad_descent(obj, start, solver, opts);
    if (!r.stopped_early) {
      throw Error(std::string("verify_unchanged_optima: ") + which +
                  " did not converge within the iteration budget");
    }
    return r.w_final;
  };

  OptimaComparison out;
  out.argmin_f = solve(f, "F");
  out.argmin_fplus = solve(fplus, "F+");
  out.distance = distance(out.argmin_f, out.argmin_fplus);
  out.pass = out.distance <= cfg.bound;
  return out;
}

SpectralGain spectral_gain(const SumNormsParams& base, const SumNormsParams& augmented) {
  SpectralGain g;
  g.lambda_min_base = min_eigenvalue(hessian_sum_norms(base));
  g.lambda_min_aug = min_eigenvalue(hessian_sum_norms(augmented));
  g.ordered = g.lambda_min_aug >= g.lambda_min_base - 1e-10;
  return g;
}

}  // namespace augopt

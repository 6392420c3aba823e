#include <algorithm>
#include <cmath>
#include <random>

#include "augopt/analysis.hpp"
#include "augopt/harness.hpp"
#include "augopt/optimizers.hpp"
#include "augopt/random.hpp"
#include "augopt/sum_norms.hpp"

namespace augopt::harness {

namespace {

std::optional<double> as_metric(std::optional<std::size_t> v) {
  if (!v) return std::nullopt;
  return static_cast<double>(*v);
}

std::optional<double> as_metric(std::optional<std::uint64_t> v, int) {
  if (!v) return std::nullopt;
  return static_cast<double>(*v);
}

double flag(bool b) { return b ? 1.0 : 0.0; }

Dataset make_data(const ExperimentConfig& cfg, std::uint64_t seed) {
  GenSpec spec = cfg.gen;
  spec.seed = seed;
  return gen_clusters(spec);
}

// The sweep value is the noise variance or the rotation angle.
TransformSpec make_transform(const ExperimentConfig& cfg, std::uint64_t seed, double sweep) {
  TransformSpec spec;
  spec.seed = mix64(seed ^ 0x6e6f697365ULL);
  const auto& t = cfg.transform;
  if (t.kind == "gaussian_noise") {
    spec.kind = GaussianNoise{sweep};
  } else if (t.kind == "rotation") {
    spec.kind = Rotation{sweep, std::nullopt};
  } else if (t.kind == "duplicate") {
    spec.kind = Duplicate{};
  } else {
    spec.kind = AlphaPair{t.alpha1, t.alpha2};
  }
  validate(spec);
  return spec;
}

std::vector<Vec> soft_min_candidates(const ExperimentConfig& cfg, const Dataset& data) {
  if (cfg.objective.candidates == "data") return data.X;
  return nearest_data_candidates(data);
}

Vec soft_min_start(std::size_t k) {
  if (k == 1) return {1.0};
  Vec q(k, 0.3 / static_cast<double>(k - 1));
  q[0] = 0.7;
  return q;
}

GDResult reference_solve(const ObjectiveHandle& f, Vec start, const ExperimentConfig& cfg,
                         std::optional<DecisionSet> projection, const char* what) {
  GDConfig gd;
  gd.eta = cfg.optimizer.eta;
  gd.max_iters = cfg.optimizer.max_iters;
  gd.projection = std::move(projection);
  gd.stop = StopRule{StopKind::kStepLength, cfg.optimizer.stop_epsilon};
  GDResult r = grad_descent(f, std::move(start), gd);
  if (!r.stopped_early) {
    throw Error(std::string(what) + ": reference solve did not converge in " +
                std::to_string(gd.max_iters) + " iterations");
  }
  return r;
}

// Orthogonal matrix from Gram-Schmidt on a seeded Gaussian matrix (rows).
std::vector<Vec> random_rotation(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vec> q;
  while (q.size() < d) {
    Vec v(d);
    for (double& x : v) x = normal(rng);
    for (const auto& u : q) axpy(-dot(u, v), u, v);
    const double n = norm(v);
    if (n < 1e-8) continue;
    q.push_back(scaled(v, 1.0 / n));
  }
  return q;
}

double max_abs_coordinate(const std::vector<Vec>& pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, max_abs(p));
  return m;
}

Vec flatten(const std::vector<Vec>& pts) {
  Vec w;
  for (const auto& p : pts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

GDResult solve_sum_norms(const SumNormsParams& p, const ExperimentConfig& cfg, const char* what) {
  const SymMatrix h = hessian_sum_norms(p);
  // Gershgorin bound on the largest eigenvalue of I + A - B is 1 + 2 max A_ii.
  double max_a = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) max_a = std::max(max_a, h(i, i) - 1.0);
  const double lipschitz = (1.0 + 2.0 * max_a) / static_cast<double>(p.X.size());
  GDConfig gd;
  gd.eta = 1.0 / lipschitz;
  gd.max_iters = cfg.optimizer.max_iters;
  gd.stop = StopRule{StopKind::kStepLength, cfg.optimizer.stop_epsilon};
  GDResult r = grad_descent(sum_norms_objective(p), flatten(p.X), gd, {std::nullopt, false});
  if (!r.stopped_early) throw Error(std::string(what) + ": solve did not converge");
  return r;
}

GraduatedArm run_arm(const ObjectiveHandle& f, const DecisionSet& k, const GraduatedConfig& gc,
                     const Vec& w_star, double epsilon) {
  TraceOptions opts;
  opts.reference = w_star;
  opts.store_iterates = false;
  const GraduatedResult r = graduated_descent(f, k, gc, opts);

  GraduatedArm arm;
  arm.mu_kappa = gc.mu_kappa;
  arm.grad_evals_to_eps = evals_to_converge(r.trace, w_star, epsilon);
  arm.steps_to_eps = epochs_to_converge(r.trace.dist_to_ref, epsilon);
  arm.grad_evals_total = r.trace.grad_eval_count();
  arm.steps_total = r.trace.size() - 1;
  arm.final_distance = distance(r.w_final, w_star);

  std::vector<double> t, logd;
  double cum = 0.0;
  for (const auto& ph : r.phases) {
    cum += static_cast<double>(ph.inner_iters);
    arm.displacements.push_back(distance(ph.end, ph.start));
    const double d = distance(ph.end, w_star);
    if (d > 0.0) {
      t.push_back(cum);
      logd.push_back(std::log(d));
    }
  }
  arm.slope = t.size() >= 2 ? least_squares_line(t, logd).slope : 0.0;
  arm.predicted_slope =
      std::log1p(-gc.eta * gc.mu_kappa) * std::log(1.5) / (2.0 * std::log(6.0));
  arm.displacement_monotone = true;
  for (std::size_t m = 1; m < arm.displacements.size(); ++m) {
    if (arm.displacements[m] > arm.displacements[m - 1]) arm.displacement_monotone = false;
  }
  return arm;
}

}  // namespace

std::vector<Vec> nearest_data_candidates(const Dataset& data) {
  validate(data);
  std::vector<Vec> out;
  for (const auto& c : data.centroids) {
    std::size_t best = 0;
    double best_d = divergence(data.metric, data.X[0], c);
    for (std::size_t i = 1; i < data.size(); ++i) {
      const double d = divergence(data.metric, data.X[i], c);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    out.push_back(data.X[best]);
  }
  return out;
}

NoiseSweepCell run_noise_sweep_cell(const ExperimentConfig& cfg, std::uint64_t seed,
                                    double variance) {
  const Dataset data = make_data(cfg, seed);
  const TransformSpec spec = make_transform(cfg, seed, variance);
  const ComparisonPair pair = build_comparison_pair(data, spec);
  const std::vector<Vec> candidates = soft_min_candidates(cfg, data);

  NoiseSweepCell cell;
  std::vector<Vec> transformed(pair.augmented.X.begin() + static_cast<std::ptrdiff_t>(data.size()),
                               pair.augmented.X.end());
  cell.supervision_violations = check_positive_supervision(data, transformed).violating_indices.size();

  const DecisionSet simplex = DecisionSet::simplex(candidates.size());
  auto arm = [&](const Dataset& d, const char* what) {
    SoftMinParams p{d.X, candidates, cfg.objective.beta, cfg.objective.divergence};
    GDResult r = reference_solve(soft_min_objective(p), soft_min_start(candidates.size()), cfg,
                                 simplex, what);
    return std::make_pair(epochs_to_converge(r.trace, r.w_final, cfg.epsilon), r.w_final);
  };
  const auto [eb, qb] = arm(pair.baseline, "baseline");
  const auto [ea, qa] = arm(pair.augmented, "augmented");
  cell.epochs_baseline = eb;
  cell.epochs_augmented = ea;
  cell.optimum_shift = distance(qb, qa);
  return cell;
}

RateCell run_rate_cell(const ExperimentConfig& cfg, std::uint64_t seed, std::size_t index) {
  if (index >= kRateGridCells) throw Error("rate_check: cell index out of range");
  static constexpr double kMu[] = {0.1, 0.5, 1.0};
  static constexpr double kKappa[] = {0.0, 0.5, 2.0};
  static constexpr double kEtaFraction[] = {1.0, 0.5, 0.25};
  constexpr std::size_t d = 4;

  RateCell cell;
  cell.mu = kMu[index / 9];
  cell.kappa = kKappa[(index / 3) % 3];
  const double lf = cell.mu + 1.0;  // largest eigenvalue of F
  cell.lipschitz = lf + cell.kappa;
  cell.eta = kEtaFraction[index % 3] / cell.lipschitz;
  cell.bound_baseline = 1.0 - cell.eta * cell.mu;
  cell.bound_augmented = 1.0 - cell.eta * (cell.mu + cell.kappa);

  std::mt19937_64 rng(mix64(seed * 1000003ULL + index));
  const auto q = random_rotation(d, rng);
  Vec lambda(d);
  for (std::size_t i = 0; i < d; ++i) {
    lambda[i] = cell.mu + (lf - cell.mu) * static_cast<double>(i) / static_cast<double>(d - 1);
  }
  SymMatrix h(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += q[k][i] * lambda[k] * q[k][j];
      h.set(i, j, s);
    }
  }
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  Vec c(d), w1(d);
  for (auto& x : c) x = u(rng);
  for (std::size_t i = 0; i < d; ++i) w1[i] = c[i] + 2.0 * u(rng);

  const ObjectiveHandle f = quadratic_objective(h, c);
  const ObjectiveHandle fg = quadratic_objective(SymMatrix::identity(d).scaled(cell.kappa), c);
  const ObjectiveHandle fplus = augment(f, fg, AugmentMode::kUnnormalizedSum);

  GDConfig gd;
  gd.eta = cell.eta;
  gd.max_iters = cfg.optimizer.max_iters;
  const GDResult rb = grad_descent(f, w1, gd);
  const GDResult ra = grad_descent(fplus, w1, gd);
  cell.baseline = estimate_contraction(rb.trace, c, cell.bound_baseline);
  cell.augmented = estimate_contraction(ra.trace, c, cell.bound_augmented);
  const auto eb = epochs_to_converge(rb.trace, c, cfg.epsilon);
  const auto ea = epochs_to_converge(ra.trace, c, cfg.epsilon);
  if (!eb || !ea) throw Error("rate_check: run did not reach epsilon within max_iters");
  cell.epochs_baseline = *eb;
  cell.epochs_augmented = *ea;
  return cell;
}

UnchangedCell run_unchanged_cell(const ExperimentConfig& cfg, std::uint64_t seed,
                                 double variance) {
  const Dataset data = make_data(cfg, seed);
  const TransformSpec spec = make_transform(cfg, seed, variance);
  const std::vector<Vec> transformed = apply_transform(spec, data);

  UnchangedCell cell;
  cell.supervision_violations = check_positive_supervision(data, transformed).violating_indices.size();

  if (cfg.objective.loss == "soft_min") {
    const std::vector<Vec> candidates = soft_min_candidates(cfg, data);
    const auto& o = cfg.objective;
    const ObjectiveHandle f = soft_min_objective({data.X, candidates, o.beta, o.divergence});
    const ObjectiveHandle fg = soft_min_objective({transformed, candidates, o.beta, o.divergence});
    UnchangedOptimaConfig uc;
    uc.solver.eta = cfg.optimizer.eta;
    uc.solver.max_iters = cfg.optimizer.max_iters;
    uc.solver.stop = StopRule{StopKind::kStepLength, cfg.optimizer.stop_epsilon};
    uc.bound = cfg.tolerance;
    // The loss is not L-smooth near the simplex boundary, so the uniform draw
    // is pulled halfway to the barycentre.
    const DecisionSet simplex = DecisionSet::simplex(candidates.size());
    Vec start = simplex.sample_uniform(mix64(seed ^ 0x57a27ULL));
    for (double& v : start) v = 0.5 * v + 0.5 / static_cast<double>(start.size());
    uc.start = project_simplex(start);
    const OptimaComparison cmp = verify_unchanged_optima(f, augment(f, fg), simplex, uc);
    cell.distance = max_abs(sub(cmp.argmin_f, cmp.argmin_fplus));
    cell.scale = 1.0;
  } else if (cfg.objective.loss == "sum_norms") {
    const std::size_t n = data.size();
    // objective.alpha is the total coupling per point: alpha_ij = alpha / N, so
    // duplicating every point leaves the minimizer unchanged.
    const double a = cfg.objective.alpha;
    SumNormsParams base{data.X, cfg.objective.gamma,
                        uniform_pair_weights(n, a / static_cast<double>(n))};
    SumNormsParams aug;
    aug.X = data.X;
    aug.X.insert(aug.X.end(), transformed.begin(), transformed.end());
    aug.gamma = cfg.objective.gamma;
    if (const auto* ap = std::get_if<AlphaPair>(&spec.kind)) {
      aug.alpha = alpha_pair_weights(n, n, *ap);
      base.alpha = uniform_pair_weights(n, ap->alpha1);
    } else {
      aug.alpha = uniform_pair_weights(2 * n, a / static_cast<double>(2 * n));
    }
    const GDResult rb = solve_sum_norms(base, cfg, "baseline");
    const GDResult ra = solve_sum_norms(aug, cfg, "augmented");
    const std::size_t len = rb.w_final.size();
    const Vec head(ra.w_final.begin(), ra.w_final.begin() + static_cast<std::ptrdiff_t>(len));
    cell.distance = max_abs(sub(rb.w_final, head));
    cell.scale = std::max(1.0, max_abs_coordinate(data.X));
  } else {
    throw Error("unchanged_optima: loss must be soft_min or sum_norms");
  }
  cell.tolerance = cfg.tolerance * cell.scale;
  cell.pass = cell.supervision_violations == 0 && cell.distance <= cell.tolerance;
  return cell;
}

Vec perturbed_family_optimum(const ObjectiveSection& obj) {
  const PerturbedQuadratic pq{obj.center, obj.curvature, obj.amplitude, obj.frequency};
  const ObjectiveHandle f = perturbed_quadratic_objective(pq);
  const std::size_t d = obj.center.size();
  if (d == 0 || obj.box_lo.size() != d || obj.box_hi.size() != d) {
    throw Error("perturbed_family_optimum: dimension mismatch");
  }
  // Grid fine enough that each local basin (width ~ 2 pi / frequency) gets many points.
  const double period = obj.frequency > 0.0 ? 2.0 * std::numbers::pi / obj.frequency : 1.0;
  const double step = std::min(period / 40.0, 0.25);
  std::vector<std::size_t> count(d);
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    count[k] = static_cast<std::size_t>(std::ceil((obj.box_hi[k] - obj.box_lo[k]) / step)) + 1;
    total *= count[k];
  }
  if (total > 20'000'000) throw Error("perturbed_family_optimum: grid too large");
  Vec best, w(d);
  double best_v = std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (std::size_t k = 0; k < d; ++k) {
      w[k] = std::min(obj.box_lo[k] + step * static_cast<double>(r % count[k]), obj.box_hi[k]);
      r /= count[k];
    }
    const double v = f.value(w);
    if (v < best_v) {
      best_v = v;
      best = w;
    }
  }
  GDConfig polish;
  polish.eta = 1.0 / (obj.curvature + obj.amplitude * obj.frequency * obj.frequency);
  polish.max_iters = 100000;
  polish.projection = DecisionSet::box(obj.box_lo, obj.box_hi);
  polish.stop = StopRule{StopKind::kStepLength, 1e-15};
  return grad_descent(f, best, polish, {std::nullopt, false}).w_final;
}

GraduatedCell run_graduated_cell(const ExperimentConfig& cfg, std::uint64_t seed,
                                 std::size_t phases) {
  const auto& o = cfg.objective;
  GraduatedCell cell;
  cell.w_star = perturbed_family_optimum(o);
  const ObjectiveHandle f =
      perturbed_quadratic_objective({o.center, o.curvature, o.amplitude, o.frequency});
  const std::size_t d = o.center.size();
  const ObjectiveHandle fg = quadratic_objective(SymMatrix::identity(d).scaled(o.kappa), cell.w_star);
  const ObjectiveHandle fplus = augment(f, fg);
  const DecisionSet k = DecisionSet::box(o.box_lo, o.box_hi);

  GraduatedConfig gc;
  gc.phases = phases;
  gc.delta1 = cfg.optimizer.delta1;
  gc.shrink = cfg.optimizer.shrink;
  gc.eta = cfg.optimizer.eta;
  gc.samples = cfg.optimizer.samples;
  gc.seed = seed;
  gc.t_cap = cfg.optimizer.t_cap;
  const double mu = o.curvature - o.amplitude * o.frequency * o.frequency;
  if (!(mu > 0.0)) throw Error("graduated_compare: need amplitude * frequency^2 < curvature");
  const double delta1 = gc.delta1.value_or(k.diameter() / 2.0);
  cell.delta_final = delta1 / std::pow(gc.shrink, static_cast<double>(phases));

  gc.mu_kappa = mu;
  cell.baseline = run_arm(f, k, gc, cell.w_star, cfg.epsilon);
  gc.mu_kappa = 0.5 * (mu + o.kappa);
  cell.augmented = run_arm(fplus, k, gc, cell.w_star, cfg.epsilon);
  return cell;
}

HessianCell run_hessian_cell(const ExperimentConfig& cfg, std::uint64_t seed, std::size_t n) {
  if (n < 1) throw Error("hessian_check: need n >= 1");
  std::mt19937_64 rng(mix64(seed * 7919ULL + n));
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  constexpr std::size_t d = 2;

  SumNormsParams p;
  for (std::size_t i = 0; i < n; ++i) p.X.push_back({10.0 * u01(rng), 10.0 * u01(rng)});
  p.gamma = 0.5 + 1.5 * u01(rng);
  p.alpha = SymMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) p.alpha.set(i, j, u01(rng));
  }

  HessianCell cell;
  cell.n = n;
  const SymMatrix full = hessian_sum_norms(p).kron_identity(d);
  Vec w(n * d);
  for (auto& x : w) x = 10.0 * u01(rng);
  const double h = 1e-3;
  double max_h = 0.0, max_err = 0.0;
  auto value = [&](const Vec& v) { return eval_sum_norms(p, v); };
  for (std::size_t a = 0; a < n * d; ++a) {
    for (std::size_t b = a; b < n * d; ++b) {
      Vec pp = w, pm = w, mp = w, mm = w;
      pp[a] += h; pp[b] += h;
      pm[a] += h; pm[b] -= h;
      mp[a] -= h; mp[b] += h;
      mm[a] -= h; mm[b] -= h;
      const double fd = (value(pp) - value(pm) - value(mp) + value(mm)) / (4.0 * h * h);
      max_err = std::max(max_err, std::abs(fd - full(a, b)));
      max_h = std::max(max_h, std::abs(full(a, b)));
    }
  }
  cell.max_rel_error = max_err / std::max(max_h, 1.0);

  AlphaPair ap{cfg.transform.alpha1, cfg.transform.alpha2};
  if (cfg.transform.kind != "alpha_pair") ap = AlphaPair{0.1, 0.5};
  SumNormsParams base{p.X, p.gamma, uniform_pair_weights(n, ap.alpha1)};
  SumNormsParams aug;
  aug.X = p.X;
  aug.X.insert(aug.X.end(), p.X.begin(), p.X.end());
  aug.gamma = p.gamma;
  aug.alpha = alpha_pair_weights(n, n, ap);
  const SpectralGain g = spectral_gain(base, aug);
  cell.lambda_min_base = g.lambda_min_base;
  cell.lambda_min_aug = g.lambda_min_aug;
  cell.ordered = g.ordered;
  return cell;
}

std::vector<std::string> metric_columns(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kNoiseSweep:
      return {"epochs_baseline", "epochs_augmented", "optimum_shift", "supervision_violations"};
    case ExperimentKind::kRateCheck:
      return {"mu", "kappa", "lipschitz", "eta", "bound_baseline", "bound_augmented",
              "fitted_rate_baseline", "fitted_rate_augmented", "max_ratio_baseline",
              "max_ratio_augmented", "epochs_baseline", "epochs_augmented"};
    case ExperimentKind::kUnchangedOptima:
      return {"final_distance", "tolerance", "supervision_violations"};
    case ExperimentKind::kGraduatedCompare:
      return {"delta_final", "final_distance_baseline", "final_distance_augmented",
              "epochs_baseline", "epochs_augmented", "grad_evals_baseline",
              "grad_evals_augmented", "slope_baseline", "slope_augmented",
              "predicted_slope_baseline", "predicted_slope_augmented", "monotone_baseline",
              "monotone_augmented"};
    case ExperimentKind::kHessianCheck:
      return {"n", "max_rel_error", "lambda_min_baseline", "lambda_min_augmented"};
  }
  return {};
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t n_metrics = metric_columns(cfg.experiment).size();
  std::vector<ResultRow> rows;
  for (double sweep : sweep_values(cfg)) {
    for (std::uint64_t seed : cfg.seeds) {
      ResultRow row;
      row.experiment = to_string(cfg.experiment);
      row.seed = seed;
      row.sweep_value = sweep;
      try {
        switch (cfg.experiment) {
          case ExperimentKind::kNoiseSweep: {
            const NoiseSweepCell c = run_noise_sweep_cell(cfg, seed, sweep);
            row.metrics = {as_metric(c.epochs_baseline), as_metric(c.epochs_augmented),
                           c.optimum_shift, static_cast<double>(c.supervision_violations)};
            row.pass = c.epochs_baseline && c.epochs_augmented &&
                       (sweep != 0.0 || *c.epochs_baseline == *c.epochs_augmented);
            break;
          }
          case ExperimentKind::kRateCheck: {
            if (sweep < 0.0 || sweep != std::floor(sweep)) throw Error("rate_check: bad cell index");
            const RateCell c = run_rate_cell(cfg, seed, static_cast<std::size_t>(sweep));
            row.metrics = {c.mu, c.kappa, c.lipschitz, c.eta, c.bound_baseline,
                           c.bound_augmented, c.baseline.fitted_rate, c.augmented.fitted_rate,
                           c.baseline.max_step_ratio, c.augmented.max_step_ratio,
                           static_cast<double>(c.epochs_baseline),
                           static_cast<double>(c.epochs_augmented)};
            row.pass = c.baseline.satisfied && c.augmented.satisfied;
            break;
          }
          case ExperimentKind::kUnchangedOptima: {
            const UnchangedCell c = run_unchanged_cell(cfg, seed, sweep);
            row.metrics = {c.distance, c.tolerance, static_cast<double>(c.supervision_violations)};
            row.pass = c.pass;
            break;
          }
          case ExperimentKind::kGraduatedCompare: {
            if (sweep < 1.0 || sweep != std::floor(sweep)) throw Error("graduated_compare: bad phase count");
            const GraduatedCell c = run_graduated_cell(cfg, seed, static_cast<std::size_t>(sweep));
            const auto& b = c.baseline;
            const auto& a = c.augmented;
            row.metrics = {c.delta_final, b.final_distance, a.final_distance,
                           as_metric(b.steps_to_eps), as_metric(a.steps_to_eps),
                           as_metric(b.grad_evals_to_eps, 0), as_metric(a.grad_evals_to_eps, 0),
                           b.slope, a.slope, b.predicted_slope, a.predicted_slope,
                           flag(b.displacement_monotone), flag(a.displacement_monotone)};
            row.pass = b.final_distance <= c.delta_final && a.final_distance <= c.delta_final;
            break;
          }
          case ExperimentKind::kHessianCheck: {
            if (sweep < 1.0 || sweep != std::floor(sweep)) throw Error("hessian_check: bad n");
            const HessianCell c = run_hessian_cell(cfg, seed, static_cast<std::size_t>(sweep));
            row.metrics = {static_cast<double>(c.n), c.max_rel_error, c.lambda_min_base,
                           c.lambda_min_aug};
            row.pass = c.max_rel_error <= 1e-5 && c.ordered;
            break;
          }
        }
      } catch (const std::exception& e) {
        row.metrics.assign(n_metrics, std::nullopt);
        row.pass = false;
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
    return a.seed < b.seed;
  });
  return rows;
}

}  // namespace augopt::harness

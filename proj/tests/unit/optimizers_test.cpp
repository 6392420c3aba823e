#include <gtest/gtest.h>

#include <cmath>

#include "augopt/optimizers.hpp"

namespace augopt {
namespace {

SymMatrix diag(std::initializer_list<double> d) {
  SymMatrix m(d.size());
  std::size_t i = 0;
  for (double x : d) m.set(i, i, x), ++i;
  return m;
}

TEST(GradDescent, StartAtOptimumStaysPut) {
  const auto f = quadratic_objective(diag({1.0, 3.0}), {2.0, -1.0});
  GDConfig cfg;
  cfg.eta = 0.2;
  cfg.max_iters = 10;
  const GDResult r = grad_descent(f, {2.0, -1.0}, cfg);
  ASSERT_EQ(r.trace.iterates.size(), 11u);
  for (const auto& w : r.trace.iterates) EXPECT_EQ(w, (Vec{2.0, -1.0}));
}

TEST(GradDescent, ScalarNewtonStep) {
  const auto f = quadratic_objective(diag({1.0}), {3.0});
  GDConfig cfg;
  cfg.eta = 1.0;
  cfg.max_iters = 1;
  for (double w1 : {-10.0, 0.0, 7.5}) {
    EXPECT_DOUBLE_EQ(grad_descent(f, {w1}, cfg).w_final[0], 3.0);
  }
}

TEST(GradDescent, PerStepContraction) {
  const auto f = quadratic_objective(diag({1.0, 2.0}), {0.0, 0.0});
  GDConfig cfg;
  cfg.eta = 0.5;
  cfg.max_iters = 30;
  const GDResult r = grad_descent(f, {4.0, -3.0}, cfg);
  for (std::size_t t = 0; t + 1 < r.trace.iterates.size(); ++t) {
    const double before = norm_sq(r.trace.iterates[t]);
    if (before == 0.0) break;
    EXPECT_LE(norm_sq(r.trace.iterates[t + 1]), 0.5 * before * (1.0 + 1e-10));
  }
}

TEST(GradDescent, ProjectionAndStopRules) {
  const auto f = quadratic_objective(diag({1.0, 1.0}), {5.0, 5.0});
  GDConfig cfg;
  cfg.eta = 0.3;
  cfg.max_iters = 1000;
  cfg.projection = DecisionSet::ball({0.0, 0.0}, 1.0);
  cfg.stop = StopRule{StopKind::kStepLength, 1e-12};
  const GDResult r = grad_descent(f, {0.0, 0.0}, cfg);
  EXPECT_TRUE(r.stopped_early);
  EXPECT_NEAR(r.w_final[0], std::sqrt(0.5), 1e-10);
  for (const auto& w : r.trace.iterates) EXPECT_TRUE(cfg.projection->contains(w));

  cfg.projection.reset();
  cfg.stop = StopRule{StopKind::kGradientNorm, 1e-6};
  const GDResult g = grad_descent(f, {0.0, 0.0}, cfg);
  EXPECT_TRUE(g.stopped_early);
  EXPECT_LE(norm(f.grad(g.w_final)), 1e-6);
  EXPECT_EQ(g.trace.grad_evals.size(), g.trace.size());
}

TEST(GradDescent, NonFiniteGradientThrows) {
  const ObjectiveHandle f([](ConstVecView) { return 0.0; },
                          [](ConstVecView w) { return Vec{w[0] > 1.0 ? std::nan("") : -1.0}; }, nullptr, 1, 1);
  GDConfig cfg;
  cfg.eta = 1.0;
  cfg.max_iters = 10;
  try {
    grad_descent(f, {0.5}, cfg);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("iteration"), std::string::npos);
  }
}

TEST(GradDescent, Validation) {
  GDConfig cfg;
  cfg.eta = 0.0;
  EXPECT_THROW(validate(cfg), Error);
  cfg.eta = 0.1;
  cfg.max_iters = 0;
  EXPECT_THROW(validate(cfg), Error);
}

TEST(InnerIterations, Examples) {
  EXPECT_EQ(inner_iterations(1.0, 3.0, 0.5, 1.0, 10000), 8u);
  EXPECT_EQ(std::ceil(2.0 * std::log(1.0 / 12.0) / std::log(0.5)), 8.0);
  EXPECT_EQ(inner_iterations(4.0, 1.0, 0.5, 1.0, 10000), 1u);
  EXPECT_EQ(inner_iterations(1e-9, 3.0, 0.001, 1.0, 50), 50u);
  EXPECT_THROW(inner_iterations(1.0, 3.0, 1.0, 1.0, 10000), Error);
  EXPECT_THROW(inner_iterations(1.0, 3.0, 0.5, 3.0, 10000), Error);
  EXPECT_THROW(inner_iterations(5.0, 1.0, 0.5, 1.0, 10000), Error);
}

TEST(Graduated, StronglyConvexQuadraticReachesFinalRadius) {
  const Vec w_star{12.0, 27.0};
  const auto f = quadratic_objective(SymMatrix::identity(2), w_star);
  const auto k = DecisionSet::box({0.0, 0.0}, {40.0, 40.0});
  GraduatedConfig cfg;
  cfg.phases = 8;
  cfg.eta = 0.3;
  cfg.mu_kappa = 1.0;
  cfg.samples = 16;
  cfg.seed = 5;
  TraceOptions opts;
  opts.reference = w_star;
  const GraduatedResult r = graduated_descent(f, k, cfg, opts);
  const double delta1 = k.diameter() / 2.0;
  EXPECT_LE(distance(r.w_final, w_star), delta1 / std::pow(2.0, 8));
  ASSERT_EQ(r.phases.size(), 8u);
  for (std::size_t m = 0; m < r.phases.size(); ++m) {
    EXPECT_DOUBLE_EQ(r.phases[m].delta, delta1 / std::pow(2.0, static_cast<double>(m)));
    EXPECT_LE(distance(r.phases[m].end, w_star), r.phases[m].delta / 2.0 + 1e-12);
  }
  for (std::size_t t = 0; t < r.trace.iterates.size(); ++t) EXPECT_TRUE(k.contains(r.trace.iterates[t]));
  EXPECT_EQ(r.trace.dist_to_ref.size(), r.trace.size());
  EXPECT_GT(r.trace.grad_eval_count(), 0u);
}

TEST(Graduated, IteratesStayInPhaseRegion) {
  const auto f = perturbed_quadratic_objective({{20.0, 20.0}, 1.0, 1.0, 0.6});
  const auto k = DecisionSet::box({0.0, 0.0}, {40.0, 40.0});
  GraduatedConfig cfg;
  cfg.phases = 6;
  cfg.eta = 0.3;
  cfg.mu_kappa = 0.64;
  cfg.samples = 8;
  cfg.seed = 2;
  const GraduatedResult r = graduated_descent(f, k, cfg);
  const auto& b = r.trace.phase_boundaries;
  ASSERT_EQ(b.size(), r.phases.size());
  for (std::size_t m = 0; m < r.phases.size(); ++m) {
    const std::size_t end = m + 1 < b.size() ? b[m + 1] : r.trace.iterates.size() - 1;
    for (std::size_t t = b[m]; t <= end; ++t) {
      EXPECT_LE(distance(r.trace.iterates[t], r.phases[m].start), 1.5 * r.phases[m].delta + 1e-9);
    }
  }
}

TEST(StrongConvexity, QuadraticEstimate) {
  const auto f = quadratic_objective(diag({0.7, 2.0, 5.0}), {1.0, 1.0, 1.0});
  EXPECT_NEAR(estimate_strong_convexity([&](ConstVecView w) { return f.grad(w); }, Vec{0.0, 3.0, -1.0}, 1e-4),
              0.7, 1e-8);
}

}  // namespace
}  // namespace augopt

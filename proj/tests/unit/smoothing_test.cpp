#include <gtest/gtest.h>

#include <cmath>

#include "augopt/objective.hpp"
#include "augopt/random.hpp"
#include "augopt/smoothing.hpp"

namespace augopt {
namespace {

ObjectiveHandle square_norm(std::size_t d) {
  return ObjectiveHandle([](ConstVecView w) { return norm_sq(w); },
                         [](ConstVecView w) { return scaled(w, 2.0); }, nullptr, 1, d);
}

ObjectiveHandle linear(Vec a) {
  return ObjectiveHandle([a](ConstVecView w) { return dot(a, w); }, [a](ConstVecView) { return a; },
                         nullptr, 1, a.size());
}

TEST(BallDraw, OneDimensionIsInterval) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Vec v = ball_draw(1, 5, s);
    EXPECT_LE(std::abs(v[0]), 1.0);
  }
}

TEST(BallDraw, Moments) {
  const std::size_t n = 100000;
  Vec mean(2, 0.0);
  double r2 = 0.0;
  for (std::uint64_t s = 0; s < n; ++s) {
    axpy(1.0 / n, ball_draw(2, 1, s), mean);
    r2 += norm_sq(ball_draw(3, 2, s)) / n;
  }
  const double se = std::sqrt(0.25 / n);
  for (double m : mean) EXPECT_LE(std::abs(m), 3.0 * se);
  EXPECT_NEAR(r2, 0.6, 0.006);
}

TEST(BallDraw, CounterStreamIsOrderFree) {
  const Vec a = ball_draw(4, 77, 12);
  ball_draw(4, 77, 3);
  EXPECT_EQ(ball_draw(4, 77, 12), a);
  EXPECT_NE(ball_draw(4, 78, 12), a);
}

TEST(SmoothedValue, Examples) {
  const ObjectiveHandle c([](ConstVecView) { return 3.5; }, [](ConstVecView w) { return Vec(w.size(), 0.0); },
                          nullptr, 1, 2);
  const ValueEstimate e = smoothed_value(c, Vec{1.0, 2.0}, {0.7, 100, 3});
  EXPECT_EQ(e.mean, 3.5);
  EXPECT_EQ(e.std_error, 0.0);

  const ValueEstimate q = smoothed_value(square_norm(2), Vec{0.0, 0.0}, {1.0, 10000, 4});
  EXPECT_NEAR(q.mean, 0.5, 4.0 * q.std_error);

  const ValueEstimate lin = smoothed_value(linear({1.0, -2.0}), Vec{3.0, 1.0}, {0.5, 10000, 8});
  EXPECT_NEAR(lin.mean, 1.0, 4.0 * lin.std_error);
}

TEST(GradOp, Examples) {
  const auto f = square_norm(2);
  const Vec w{1.0, 1.0};
  EXPECT_EQ(grad_op(f, w, {0.0, 64, 1}), (Vec{2.0, 2.0}));
  EXPECT_EQ(grad_op(linear({1.0, -2.0}), w, {0.9, 17, 2}), (Vec{1.0, -2.0}));

  const GradEstimate g = grad_op_estimate(f, w, {0.5, 10000, 3});
  for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(g.mean[k], 2.0, 4.0 * g.std_error[k]);
  EXPECT_EQ(grad_op_cost({0.5, 10000, 3}), 10000u);
  EXPECT_EQ(grad_op_cost({0.0, 10000, 3}), 1u);
}

TEST(GradOp, CommonRandomNumbers) {
  const auto f = square_norm(3);
  const SmoothingParams p{0.3, 32, 99};
  const Vec a = grad_op(f, Vec{1.0, 2.0, 3.0}, p);
  EXPECT_EQ(a, grad_op(f, Vec{1.0, 2.0, 3.0}, p));
  // Same draws at a shifted point: the quadratic's estimate shifts exactly by 2 * shift.
  const Vec b = grad_op(f, Vec{2.0, 2.0, 3.0}, p);
  EXPECT_NEAR(b[0] - a[0], 2.0, 1e-12);
  EXPECT_NEAR(b[1] - a[1], 0.0, 1e-12);
}

TEST(GradOp, NonFiniteSampleNamesDraw) {
  const ObjectiveHandle f([](ConstVecView w) { return w[0] > 0.0 ? std::nan("") : 0.0; },
                          [](ConstVecView w) { return Vec{w[0] > 0.0 ? std::nan("") : 0.0}; }, nullptr, 1, 1);
  try {
    smoothed_value(f, Vec{0.0}, {1.0, 64, 0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("draw"), std::string::npos);
  }
}

TEST(Smoothing, Validation) {
  EXPECT_THROW(validate(SmoothingParams{-1.0, 10, 0}), Error);
  EXPECT_THROW(validate(SmoothingParams{1.0, 0, 0}), Error);
}

}  // namespace
}  // namespace augopt

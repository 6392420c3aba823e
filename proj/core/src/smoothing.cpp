#include "augopt/smoothing.hpp"

#include <cmath>
#include <string>

#include "augopt/random.hpp"

namespace augopt {

namespace {

// Welford running mean/variance. A constant stream keeps the mean exact.
class RunningMoments {
 public:
  explicit RunningMoments(std::size_t d) : mean_(d, 0.0), m2_(d, 0.0) {}

  void add(ConstVecView x) {
    ++count_;
    const double inv = 1.0 / static_cast<double>(count_);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double delta = x[i] - mean_[i];
      mean_[i] += delta * inv;
      m2_[i] += delta * (x[i] - mean_[i]);
    }
  }

  const Vec& mean() const { return mean_; }

  Vec std_error() const {
    Vec se(mean_.size(), 0.0);
    if (count_ < 2) return se;
    const double n = static_cast<double>(count_);
    for (std::size_t i = 0; i < se.size(); ++i) se[i] = std::sqrt(m2_[i] / (n - 1.0) / n);
    return se;
  }

 private:
  std::size_t count_ = 0;
  Vec mean_;
  Vec m2_;
};

Vec perturbed(ConstVecView w, double delta, ConstVecView u) {
  Vec x(w.begin(), w.end());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += delta * u[i];
  return x;
}

}  // namespace

void validate(const SmoothingParams& p) {
  if (!(p.delta >= 0.0) || !std::isfinite(p.delta)) throw Error("smoothing: delta must be >= 0");
  if (p.samples < 1) throw Error("smoothing: samples must be >= 1");
}

Vec ball_draw(std::size_t d, std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  return sample_unit_ball(d, rng);
}

std::size_t grad_op_cost(const SmoothingParams& p) { return p.delta == 0.0 ? 1 : p.samples; }

ValueEstimate smoothed_value(const ObjectiveHandle& f, ConstVecView w, const SmoothingParams& p) {
  validate(p);
  if (p.delta == 0.0) {
    const double v = f.value(w);
    if (!std::isfinite(v)) throw Error("smoothed_value: non-finite value at the centre point");
    return {v, 0.0};
  }
  RunningMoments moments(1);
  for (std::size_t s = 0; s < p.samples; ++s) {
    const Vec u = ball_draw(w.size(), p.seed, s);
    const double v = f.value(perturbed(w, p.delta, u));
    if (!std::isfinite(v)) {
      throw Error("smoothed_value: non-finite value at draw " + std::to_string(s));
    }
    moments.add(ConstVecView(&v, 1));
  }
  return {moments.mean()[0], moments.std_error()[0]};
}

GradEstimate grad_op_estimate(const ObjectiveHandle& f, ConstVecView w, const SmoothingParams& p) {
  validate(p);
  if (p.delta == 0.0) {
    Vec g = f.grad(w);
    if (!all_finite(g)) throw Error("grad_op: non-finite gradient at the centre point");
    return {std::move(g), Vec(w.size(), 0.0)};
  }
  RunningMoments moments(w.size());
  for (std::size_t s = 0; s < p.samples; ++s) {
    const Vec u = ball_draw(w.size(), p.seed, s);
    const Vec g = f.grad(perturbed(w, p.delta, u));
    if (!all_finite(g)) throw Error("grad_op: non-finite gradient at draw " + std::to_string(s));
    moments.add(g);
  }
  return {moments.mean(), moments.std_error()};
}

Vec grad_op(const ObjectiveHandle& f, ConstVecView w, const SmoothingParams& p) {
  return grad_op_estimate(f, w, p).mean;
}

}  // namespace augopt

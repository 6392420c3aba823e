#pragma once

#include <cstdint>

#include "augopt/objective.hpp"
#include "augopt/vec.hpp"

namespace augopt {

/// Ball smoothing f_delta(w) = E_{u ~ unit ball} f(w + delta u), estimated
/// from `samples` draws.
///
/// Draw s is generated from the counter stream (seed, s) alone, so the draw
/// set does not depend on w, on call order, or on which objective is being
/// smoothed. Two calls with the same seed therefore use common random
/// numbers, and with a fixed seed the estimator is the exact gradient of the
/// sample-average surrogate (1/S) sum_s f(w + delta u_s).
struct SmoothingParams {
  double delta = 0.0;
  std::size_t samples = 64;
  std::uint64_t seed = 0;
};

void validate(const SmoothingParams& p);

/// Draw `index` of the unit-ball stream keyed by `seed`.
Vec ball_draw(std::size_t d, std::uint64_t seed, std::uint64_t index);

struct ValueEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct GradEstimate {
  Vec mean;
  Vec std_error;  // per coordinate
};

/// delta == 0 evaluates f(w) once, exactly, with zero standard error.
/// Throws if any sample value is non-finite, naming the draw index.
ValueEstimate smoothed_value(const ObjectiveHandle& f, ConstVecView w, const SmoothingParams& p);

/// Monte-Carlo smoothed gradient (1/S) sum_s grad f(w + delta u_s) with
/// per-coordinate standard errors. delta == 0 returns grad f(w) exactly.
GradEstimate grad_op_estimate(const ObjectiveHandle& f, ConstVecView w, const SmoothingParams& p);

Vec grad_op(const ObjectiveHandle& f, ConstVecView w, const SmoothingParams& p);

/// Number of gradient evaluations one grad_op call performs.
std::size_t grad_op_cost(const SmoothingParams& p);

}  // namespace augopt

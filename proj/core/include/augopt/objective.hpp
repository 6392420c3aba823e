#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "augopt/sym_matrix.hpp"
#include "augopt/vec.hpp"

namespace augopt {

/// Evaluable objective bundle: a per-point average F(W) = (1/N) sum_i f_i(W)
/// with its gradient and, when available, Hessian. Copies share the
/// underlying callables; a handle is immutable once built.
class ObjectiveHandle {
 public:
  using ValueFn = std::function<double(ConstVecView)>;
  using GradFn = std::function<Vec(ConstVecView)>;
  using HessianFn = std::function<std::optional<SymMatrix>(ConstVecView)>;

  ObjectiveHandle(ValueFn value, GradFn grad, HessianFn hessian, std::size_t n_points,
                  std::size_t param_dim);

  double value(ConstVecView w) const;
  Vec grad(ConstVecView w) const;
  std::optional<SymMatrix> hessian(ConstVecView w) const;

  std::size_t n_points() const { return n_points_; }
  std::size_t param_dim() const { return param_dim_; }

 private:
  void check_dim(ConstVecView w) const;

  ValueFn value_;
  GradFn grad_;
  HessianFn hessian_;
  std::size_t n_points_;
  std::size_t param_dim_;
};

enum class AugmentMode {
  /// (N F + N' Fg) / (N + N'): the average over original and transformed points.
  kWeightedAverage,
  /// F + Fg: strong-convexity constants add exactly.
  kUnnormalizedSum,
};

/// Objective over original plus transformed points. Value, gradient and
/// Hessian combine with the same weights; n_points becomes N + N'.
ObjectiveHandle augment(const ObjectiveHandle& f, const ObjectiveHandle& fg,
                        AugmentMode mode = AugmentMode::kWeightedAverage);

/// f(w) = 0.5 (w - c)^T H (w - c).
ObjectiveHandle quadratic_objective(SymMatrix h, Vec center, std::size_t n_points = 1);

/// Separable sinusoidal perturbation of an isotropic quadratic:
///   f(w) = 0.5 * curvature * |w - c|^2 + amplitude * sum_k sin(frequency * w_k).
/// Hessian eigenvalues lie in curvature -/+ amplitude * frequency^2.
struct PerturbedQuadratic {
  Vec center;
  double curvature = 1.0;
  double amplitude = 0.0;
  double frequency = 1.0;
};

ObjectiveHandle perturbed_quadratic_objective(PerturbedQuadratic p, std::size_t n_points = 1);

/// Central finite-difference gradient, used by estimators and checks.
Vec finite_difference_gradient(const std::function<double(ConstVecView)>& f, ConstVecView w,
                               double h);

}  // namespace augopt

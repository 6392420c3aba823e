#pragma once

#include <vector>

#include "augopt/objective.hpp"
#include "augopt/vec.hpp"

namespace augopt {

enum class Divergence {
  kSquaredEuclidean,
  /// Generalized KL: sum_k x_k log(x_k / c_k) - x_k + c_k. Needs positive coordinates.
  kKullbackLeibler,
};

double divergence(Divergence kind, ConstVecView x, ConstVecView c);

/// Soft-min (mixture log-likelihood) clustering loss over a candidate set:
///
///   F(q) = (1/n) sum_i log sum_j q_j exp(-beta d(x_i, c_j))
///
/// q is a probability vector over the candidates. An empty candidate list
/// means the candidates are the data points themselves.
struct SoftMinParams {
  std::vector<Vec> X;
  std::vector<Vec> candidates;
  double beta = 1.0;
  Divergence divergence = Divergence::kSquaredEuclidean;
};

/// Precomputed -beta * d(x_i, c_j) table. value()/gradient() accept any
/// nonnegative q with positive mass (the natural extension off the simplex);
/// the free functions below enforce the simplex.
class SoftMinLoss {
 public:
  explicit SoftMinLoss(const SoftMinParams& p);

  std::size_t n_points() const { return n_; }
  std::size_t n_candidates() const { return k_; }

  /// F(q), the log-likelihood form (to be maximized).
  double value(ConstVecView q) const;
  /// dF/dq.
  Vec gradient(ConstVecView q) const;

  double point_value(std::size_t i, ConstVecView q) const;
  Vec point_gradient(std::size_t i, ConstVecView q) const;

 private:
  // log sum_j q_j exp(s_ij), shifted by the max over candidates with q_j > 0.
  double log_inner(std::size_t i, ConstVecView q, double* shift) const;
  void check_q(ConstVecView q) const;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<double> scores_;  // n x k, row-major, -beta * d_ij
};

/// Throws unless q is on the simplex (entries >= 0, sum 1 +/- 1e-9).
double eval_soft_min(const SoftMinParams& p, ConstVecView q);
Vec grad_soft_min(const SoftMinParams& p, ConstVecView q);

/// Minimization handle for -F (n_points = |X|, param_dim = #candidates).
ObjectiveHandle soft_min_objective(const SoftMinParams& p);

}  // namespace augopt

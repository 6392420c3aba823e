#pragma once

#include <vector>

#include "augopt/objective.hpp"
#include "augopt/sym_matrix.hpp"
#include "augopt/vec.hpp"

namespace augopt {

/// Convex-clustering loss with one centroid w_i per data point x_i:
///
///   Phi(W) = 0.5 * ( sum_i |w_i - x_i|^2 + gamma * sum_{i<j} alpha_ij |w_i - w_j|^2 )
///
/// W is the concatenation (w_1, ..., w_n), each block of the data dimension d.
/// The pair sum runs over unordered pairs; the diagonal of alpha is ignored.
struct SumNormsParams {
  std::vector<Vec> X;
  double gamma = 0.0;
  SymMatrix alpha;
};

/// Throws Error on empty data, ragged points, gamma < 0, wrong alpha size or
/// negative weights.
void validate(const SumNormsParams& p);

/// n x n matrix with every off-diagonal entry equal to `value`.
SymMatrix uniform_pair_weights(std::size_t n, double value);

double eval_sum_norms(const SumNormsParams& p, ConstVecView w);

/// Block i: (w_i - x_i) + gamma * sum_{j != i} alpha_ij (w_i - w_j).
Vec grad_sum_norms(const SumNormsParams& p, ConstVecView w);

/// Per-coordinate block Hessian I + A - B, with A_ii = gamma * sum_j alpha_ij
/// and B_ij = gamma * alpha_ij. The full Hessian in W is this matrix
/// Kronecker I_d; it does not depend on W.
SymMatrix hessian_sum_norms(const SumNormsParams& p);

/// Additive split Phi = sum_i f_i with each unordered pair's coupling shared
/// equally between its two endpoints.
double sum_norms_point_value(const SumNormsParams& p, std::size_t i, ConstVecView w);
Vec sum_norms_point_grad(const SumNormsParams& p, std::size_t i, ConstVecView w);

/// Per-point average Phi / n as an objective handle (n_points = n).
ObjectiveHandle sum_norms_objective(SumNormsParams p);

}  // namespace augopt

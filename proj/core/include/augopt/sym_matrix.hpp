#pragma once

#include <cstddef>
#include <vector>

#include "augopt/vec.hpp"

namespace augopt {

/// Dense symmetric matrix. Writes go through set(), which mirrors the entry,
/// so symmetry holds exactly by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  static SymMatrix identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
  }

  std::size_t dim() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  void add_to(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] += v;
    if (i != j) a_[j * n_ + i] += v;
  }

  Vec multiply(ConstVecView x) const;
  double quadratic_form(ConstVecView x) const;

  /// Kronecker product with I_d: block (i, j) becomes (*this)(i, j) * I_d.
  SymMatrix kron_identity(std::size_t d) const;

  SymMatrix scaled(double s) const;

  bool all_finite() const;

  /// Row-major storage, n*n entries.
  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Smallest eigenvalue of a symmetric matrix.
///
/// Cyclic Jacobi rotations for d <= 64; for larger d the matrix is reduced to
/// tridiagonal form by Householder reflections and the lowest eigenvalue is
/// isolated by Sturm-sequence bisection. Both paths reach ~1e-12 relative
/// accuracy on well-scaled input. Throws on non-finite entries or d > 2000.
double min_eigenvalue(const SymMatrix& h);

/// All eigenvalues (ascending) by cyclic Jacobi. Intended for small d.
std::vector<double> jacobi_eigenvalues(const SymMatrix& h);

}  // namespace augopt

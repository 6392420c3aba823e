#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "augopt/sym_matrix.hpp"

namespace augopt {
namespace {

SymMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, normal(rng));
  }
  return m;
}

double eigen_min(const SymMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().minCoeff();
}

TEST(MinEigenvalue, Examples) {
  EXPECT_NEAR(min_eigenvalue(SymMatrix::identity(2)), 1.0, 1e-14);
  SymMatrix m(2);
  m.set(0, 0, 2.0);
  m.set(1, 1, 2.0);
  m.set(0, 1, -1.0);
  EXPECT_NEAR(min_eigenvalue(m), 1.0, 1e-14);
  const auto all = jacobi_eigenvalues(m);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_NEAR(all[0], 1.0, 1e-14);
  EXPECT_NEAR(all[1], 3.0, 1e-14);
}

TEST(MinEigenvalue, MatchesEigenJacobiPath) {
  EXPECT_NEAR(min_eigenvalue(random_symmetric(8, 7)), eigen_min(random_symmetric(8, 7)), 1e-8);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const SymMatrix m = random_symmetric(2 + s * 5, s);
    EXPECT_NEAR(min_eigenvalue(m), eigen_min(m), 1e-9);
  }
}

TEST(MinEigenvalue, MatchesEigenBisectionPath) {
  for (std::size_t n : {65u, 120u}) {
    const SymMatrix m = random_symmetric(n, n);
    EXPECT_NEAR(min_eigenvalue(m), eigen_min(m), 1e-9);
  }
}

TEST(MinEigenvalue, RejectsNonFinite) {
  SymMatrix m = SymMatrix::identity(3);
  m.set(0, 2, std::nan(""));
  EXPECT_THROW(min_eigenvalue(m), Error);
}

TEST(SymMatrix, KronIdentity) {
  SymMatrix m(2);
  m.set(0, 0, 2.0);
  m.set(0, 1, -1.0);
  m.set(1, 1, 3.0);
  const SymMatrix k = m.kron_identity(2);
  ASSERT_EQ(k.dim(), 4u);
  EXPECT_EQ(k(0, 0), 2.0);
  EXPECT_EQ(k(1, 1), 2.0);
  EXPECT_EQ(k(0, 2), -1.0);
  EXPECT_EQ(k(1, 3), -1.0);
  EXPECT_EQ(k(0, 3), 0.0);
  EXPECT_EQ(k(3, 3), 3.0);
}

}  // namespace
}  // namespace augopt

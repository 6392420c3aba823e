#include "augopt/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace augopt {

namespace {

constexpr std::size_t kJacobiMaxDim = 64;
constexpr std::size_t kMaxDim = 2000;

void check_input(const SymMatrix& h) {
  if (h.dim() == 0) throw Error("min_eigenvalue: empty matrix");
  if (h.dim() > kMaxDim) throw Error("min_eigenvalue: dimension exceeds 2000");
  if (!h.all_finite()) throw Error("min_eigenvalue: non-finite matrix entry");
}

// Number of eigenvalues of the tridiagonal (diag, off) strictly less than x.
std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                        double x) {
  std::size_t count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    q = diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

// Householder reduction of a full symmetric matrix to tridiagonal form.
// On return diag holds the diagonal, off[i] couples rows i and i+1.
void tridiagonalize(std::vector<double> a, std::size_t n, std::vector<double>& diag,
                    std::vector<double>& off) {
  diag.assign(n, 0.0);
  off.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> v(n), p(n), w(n);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += at(i, k) * at(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) {
      off[k] = 0.0;
      continue;
    }
    if (at(k + 1, k) > 0) alpha = -alpha;
    off[k] = alpha;

    // v = x - alpha e1 over rows k+1..n-1
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = at(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;

    // A <- H A H with H = I - 2 v v^T / (v^T v), applied to the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      p[i] = 2.0 * s / vnorm2;
    }
    double kappa = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) kappa += v[i] * p[i];
    kappa /= vnorm2;
    for (std::size_t i = k + 1; i < n; ++i) w[i] = p[i] - kappa * v[i];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) -= v[i] * w[j] + w[i] * v[j];
      }
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      at(i, k) = 0.0;
      at(k, i) = 0.0;
    }
    at(k + 1, k) = alpha;
    at(k, k + 1) = alpha;
  }
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  if (n >= 2) off[n - 2] = at(n - 1, n - 2);
}

double tridiagonal_min_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off) {
  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(diag, off, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1e-300)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Vec SymMatrix::multiply(ConstVecView x) const {
  if (x.size() != n_) throw Error("SymMatrix::multiply: dimension mismatch");
  Vec y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

double SymMatrix::quadratic_form(ConstVecView x) const { return dot(x, multiply(x)); }

SymMatrix SymMatrix::kron_identity(std::size_t d) const {
  SymMatrix out(n_ * d);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const double v = (*this)(i, j);
      if (v == 0.0) continue;
      for (std::size_t c = 0; c < d; ++c) out.set(i * d + c, j * d + c, v);
    }
  }
  return out;
}

SymMatrix SymMatrix::scaled(double s) const {
  SymMatrix out = *this;
  for (double& v : out.a_) v *= s;
  return out;
}

bool SymMatrix::all_finite() const { return augopt::all_finite(a_); }

std::vector<double> jacobi_eigenvalues(const SymMatrix& h) {
  check_input(h);
  const std::size_t n = h.dim();
  std::vector<double> a = h.data();
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double total = 0.0;
  for (double v : a) total += v * v;
  const double threshold = 1e-30 * std::max(total, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue(const SymMatrix& h) {
  check_input(h);
  if (h.dim() <= kJacobiMaxDim) return jacobi_eigenvalues(h).front();
  std::vector<double> diag, off;
  tridiagonalize(h.data(), h.dim(), diag, off);
  return tridiagonal_min_eigenvalue(diag, off);
}

}  // namespace augopt

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace augopt {

/// Raised for contract violations (bad dimensions, invalid configs, infeasible sets).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense real vector. Length is fixed by the context that creates it.
using Vec = std::vector<double>;
using ConstVecView = std::span<const double>;

/// Neumaier-compensated accumulator. Per-point averages go through this so the
/// result does not depend on summation order beyond ~1 ulp per term.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline void require_same_size(ConstVecView a, ConstVecView b, const char* what) {
  if (a.size() != b.size()) {
    throw Error(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                " vs " + std::to_string(b.size()) + ")");
  }
}

inline bool all_finite(ConstVecView v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

inline double dot(ConstVecView a, ConstVecView b) {
  require_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(ConstVecView a) { return dot(a, a); }
inline double norm(ConstVecView a) { return std::sqrt(norm_sq(a)); }

inline double distance_sq(ConstVecView a, ConstVecView b) {
  require_same_size(a, b, "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(ConstVecView a, ConstVecView b) { return std::sqrt(distance_sq(a, b)); }

inline Vec add(ConstVecView a, ConstVecView b) {
  require_same_size(a, b, "add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(ConstVecView a, ConstVecView b) {
  require_same_size(a, b, "sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scaled(ConstVecView a, double s) {
  Vec r(a.begin(), a.end());
  for (double& x : r) x *= s;
  return r;
}

/// y += alpha * x
inline void axpy(double alpha, ConstVecView x, std::span<double> y) {
  if (x.size() != y.size()) throw Error("axpy: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double max_abs(ConstVecView a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace augopt

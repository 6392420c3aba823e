#include "augopt/sum_norms.hpp"

#include <memory>
#include <string>

namespace augopt {

namespace {

std::size_t point_dim(const SumNormsParams& p) { return p.X.front().size(); }

void check_w(const SumNormsParams& p, ConstVecView w) {
  const std::size_t expected = p.X.size() * point_dim(p);
  if (w.size() != expected) {
    throw Error("sum-of-norms: expected W of length " + std::to_string(expected) + ", got " +
                std::to_string(w.size()));
  }
}

ConstVecView block(ConstVecView w, std::size_t i, std::size_t d) { return w.subspan(i * d, d); }

}  // namespace

void validate(const SumNormsParams& p) {
  if (p.X.empty()) throw Error("sum-of-norms: no data points");
  const std::size_t d = p.X.front().size();
  if (d == 0) throw Error("sum-of-norms: zero-dimensional points");
  for (const auto& x : p.X) {
    if (x.size() != d) throw Error("sum-of-norms: ragged data points");
    if (!all_finite(x)) throw Error("sum-of-norms: non-finite data");
  }
  if (!(p.gamma >= 0.0)) throw Error("sum-of-norms: gamma must be >= 0");
  if (p.alpha.dim() != p.X.size()) throw Error("sum-of-norms: alpha must be n x n");
  for (std::size_t i = 0; i < p.X.size(); ++i) {
    for (std::size_t j = i + 1; j < p.X.size(); ++j) {
      if (!(p.alpha(i, j) >= 0.0)) throw Error("sum-of-norms: negative pair weight");
    }
  }
}

SymMatrix uniform_pair_weights(std::size_t n, double value) {
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, value);
  }
  return a;
}

double eval_sum_norms(const SumNormsParams& p, ConstVecView w) {
  validate(p);
  check_w(p, w);
  const std::size_t n = p.X.size();
  const std::size_t d = point_dim(p);
  CompensatedSum fit;
  for (std::size_t i = 0; i < n; ++i) fit.add(distance_sq(block(w, i, d), p.X[i]));
  CompensatedSum coupling;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = p.alpha(i, j);
      if (a != 0.0) coupling.add(a * distance_sq(block(w, i, d), block(w, j, d)));
    }
  }
  return 0.5 * (fit.value() + p.gamma * coupling.value());
}

Vec grad_sum_norms(const SumNormsParams& p, ConstVecView w) {
  validate(p);
  check_w(p, w);
  const std::size_t n = p.X.size();
  const std::size_t d = point_dim(p);
  Vec g(w.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      const double wic = w[i * d + c];
      CompensatedSum s;
      s.add(wic - p.X[i][c]);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double a = p.alpha(i, j);
        if (a != 0.0) s.add(p.gamma * a * (wic - w[j * d + c]));
      }
      g[i * d + c] = s.value();
    }
  }
  return g;
}

SymMatrix hessian_sum_norms(const SumNormsParams& p) {
  validate(p);
  const std::size_t n = p.X.size();
  SymMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row += p.alpha(i, j);
    }
    h.set(i, i, 1.0 + p.gamma * row);
    for (std::size_t j = i + 1; j < n; ++j) h.set(i, j, -p.gamma * p.alpha(i, j));
  }
  return h;
}

double sum_norms_point_value(const SumNormsParams& p, std::size_t i, ConstVecView w) {
  validate(p);
  check_w(p, w);
  const std::size_t d = point_dim(p);
  if (i >= p.X.size()) throw Error("sum-of-norms: point index out of range");
  double coupling = 0.0;
  for (std::size_t j = 0; j < p.X.size(); ++j) {
    if (j != i) coupling += p.alpha(i, j) * distance_sq(block(w, i, d), block(w, j, d));
  }
  return 0.5 * distance_sq(block(w, i, d), p.X[i]) + 0.25 * p.gamma * coupling;
}

Vec sum_norms_point_grad(const SumNormsParams& p, std::size_t i, ConstVecView w) {
  validate(p);
  check_w(p, w);
  const std::size_t d = point_dim(p);
  if (i >= p.X.size()) throw Error("sum-of-norms: point index out of range");
  Vec g(w.size(), 0.0);
  for (std::size_t c = 0; c < d; ++c) g[i * d + c] = w[i * d + c] - p.X[i][c];
  for (std::size_t j = 0; j < p.X.size(); ++j) {
    if (j == i) continue;
    const double k = 0.5 * p.gamma * p.alpha(i, j);
    for (std::size_t c = 0; c < d; ++c) {
      const double diff = w[i * d + c] - w[j * d + c];
      g[i * d + c] += k * diff;
      g[j * d + c] -= k * diff;
    }
  }
  return g;
}

ObjectiveHandle sum_norms_objective(SumNormsParams p) {
  validate(p);
  const std::size_t n = p.X.size();
  const std::size_t d = point_dim(p);
  auto shared = std::make_shared<const SumNormsParams>(std::move(p));
  const double inv_n = 1.0 / static_cast<double>(n);
  const SymMatrix full_hessian = hessian_sum_norms(*shared).kron_identity(d).scaled(inv_n);
  auto value = [shared, inv_n](ConstVecView w) { return inv_n * eval_sum_norms(*shared, w); };
  auto grad = [shared, inv_n](ConstVecView w) { return scaled(grad_sum_norms(*shared, w), inv_n); };
  auto hessian = [full_hessian](ConstVecView) -> std::optional<SymMatrix> { return full_hessian; };
  return ObjectiveHandle(value, grad, hessian, n, n * d);
}

}  // namespace augopt

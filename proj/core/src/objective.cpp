#include "augopt/objective.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace augopt {

ObjectiveHandle::ObjectiveHandle(ValueFn value, GradFn grad, HessianFn hessian,
                                 std::size_t n_points, std::size_t param_dim)
    : value_(std::move(value)),
      grad_(std::move(grad)),
      hessian_(std::move(hessian)),
      n_points_(n_points),
      param_dim_(param_dim) {
  if (!value_ || !grad_) throw Error("ObjectiveHandle: value and grad are required");
  if (param_dim_ == 0) throw Error("ObjectiveHandle: param_dim must be >= 1");
}

void ObjectiveHandle::check_dim(ConstVecView w) const {
  if (w.size() != param_dim_) {
    throw Error("objective: expected parameter of length " + std::to_string(param_dim_) +
                ", got " + std::to_string(w.size()));
  }
}

double ObjectiveHandle::value(ConstVecView w) const {
  check_dim(w);
  return value_(w);
}

Vec ObjectiveHandle::grad(ConstVecView w) const {
  check_dim(w);
  return grad_(w);
}

std::optional<SymMatrix> ObjectiveHandle::hessian(ConstVecView w) const {
  check_dim(w);
  if (!hessian_) return std::nullopt;
  return hessian_(w);
}

ObjectiveHandle augment(const ObjectiveHandle& f, const ObjectiveHandle& fg, AugmentMode mode) {
  if (f.param_dim() != fg.param_dim()) {
    throw Error("augment: parameter dimension mismatch (" + std::to_string(f.param_dim()) +
                " vs " + std::to_string(fg.param_dim()) + ")");
  }
  double wf = 1.0;
  double wg = 1.0;
  if (mode == AugmentMode::kWeightedAverage) {
    const double total = static_cast<double>(f.n_points() + fg.n_points());
    if (total == 0.0) throw Error("augment: both objectives have zero points");
    wf = static_cast<double>(f.n_points()) / total;
    wg = static_cast<double>(fg.n_points()) / total;
  }
  auto value = [f, fg, wf, wg](ConstVecView w) {
    double v = wf * f.value(w);
    if (wg != 0.0) v += wg * fg.value(w);
    return v;
  };
  auto grad = [f, fg, wf, wg](ConstVecView w) {
    Vec g = scaled(f.grad(w), wf);
    if (wg != 0.0) axpy(wg, fg.grad(w), g);
    return g;
  };
  auto hessian = [f, fg, wf, wg](ConstVecView w) -> std::optional<SymMatrix> {
    auto hf = f.hessian(w);
    if (!hf) return std::nullopt;
    SymMatrix out = hf->scaled(wf);
    if (wg == 0.0) return out;
    auto hg = fg.hessian(w);
    if (!hg) return std::nullopt;
    for (std::size_t i = 0; i < out.dim(); ++i) {
      for (std::size_t j = i; j < out.dim(); ++j) out.add_to(i, j, wg * (*hg)(i, j));
    }
    return out;
  };
  return ObjectiveHandle(value, grad, hessian, f.n_points() + fg.n_points(), f.param_dim());
}

ObjectiveHandle quadratic_objective(SymMatrix h, Vec center, std::size_t n_points) {
  if (h.dim() != center.size()) throw Error("quadratic_objective: dimension mismatch");
  const std::size_t d = center.size();
  auto shared = std::make_shared<const std::pair<SymMatrix, Vec>>(std::move(h), std::move(center));
  auto value = [shared](ConstVecView w) {
    const Vec r = sub(w, shared->second);
    return 0.5 * shared->first.quadratic_form(r);
  };
  auto grad = [shared](ConstVecView w) { return shared->first.multiply(sub(w, shared->second)); };
  auto hessian = [shared](ConstVecView) -> std::optional<SymMatrix> { return shared->first; };
  return ObjectiveHandle(value, grad, hessian, n_points, d);
}

ObjectiveHandle perturbed_quadratic_objective(PerturbedQuadratic p, std::size_t n_points) {
  if (p.center.empty()) throw Error("perturbed_quadratic_objective: empty center");
  const std::size_t d = p.center.size();
  auto value = [p](ConstVecView w) {
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double r = w[k] - p.center[k];
      s += 0.5 * p.curvature * r * r + p.amplitude * std::sin(p.frequency * w[k]);
    }
    return s;
  };
  auto grad = [p](ConstVecView w) {
    Vec g(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      g[k] = p.curvature * (w[k] - p.center[k]) +
             p.amplitude * p.frequency * std::cos(p.frequency * w[k]);
    }
    return g;
  };
  auto hessian = [p](ConstVecView w) -> std::optional<SymMatrix> {
    SymMatrix h(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      h.set(k, k,
            p.curvature - p.amplitude * p.frequency * p.frequency * std::sin(p.frequency * w[k]));
    }
    return h;
  };
  return ObjectiveHandle(value, grad, hessian, n_points, d);
}

Vec finite_difference_gradient(const std::function<double(ConstVecView)>& f, ConstVecView w,
                               double h) {
  Vec g(w.size());
  Vec x(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double orig = x[i];
    x[i] = orig + h;
    const double fp = f(x);
    x[i] = orig - h;
    const double fm = f(x);
    x[i] = orig;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace augopt

#include "augopt/soft_min.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace augopt {

namespace {

constexpr double kSimplexTol = 1e-9;

void require_simplex(ConstVecView q) {
  double s = 0.0;
  for (double x : q) {
    if (!(x >= 0.0)) throw Error("soft-min: q has a negative or non-finite entry");
    s += x;
  }
  if (std::abs(s - 1.0) > kSimplexTol) {
    throw Error("soft-min: q must sum to 1 (got " + std::to_string(s) + ")");
  }
}

}  // namespace

double divergence(Divergence kind, ConstVecView x, ConstVecView c) {
  require_same_size(x, c, "divergence");
  switch (kind) {
    case Divergence::kSquaredEuclidean:
      return distance_sq(x, c);
    case Divergence::kKullbackLeibler: {
      double s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] > 0.0) || !(c[k] > 0.0)) {
          throw Error("KL divergence requires strictly positive coordinates");
        }
        s += x[k] * std::log(x[k] / c[k]) - x[k] + c[k];
      }
      return s;
    }
  }
  throw Error("divergence: unknown kind");
}

SoftMinLoss::SoftMinLoss(const SoftMinParams& p) {
  if (p.X.empty()) throw Error("soft-min: no data points");
  if (!(p.beta >= 0.0) || !std::isfinite(p.beta)) throw Error("soft-min: beta must be >= 0");
  const auto& cands = p.candidates.empty() ? p.X : p.candidates;
  n_ = p.X.size();
  k_ = cands.size();
  scores_.resize(n_ * k_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      scores_[i * k_ + j] = -p.beta * divergence(p.divergence, p.X[i], cands[j]);
    }
  }
}

void SoftMinLoss::check_q(ConstVecView q) const {
  if (q.size() != k_) {
    throw Error("soft-min: expected q of length " + std::to_string(k_) + ", got " +
                std::to_string(q.size()));
  }
}

double SoftMinLoss::log_inner(std::size_t i, ConstVecView q, double* shift) const {
  const double* s = &scores_[i * k_];
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < k_; ++j) {
    if (q[j] > 0.0) m = std::max(m, s[j]);
  }
  if (!std::isfinite(m)) throw Error("soft-min: q has no positive mass");
  CompensatedSum acc;
  for (std::size_t j = 0; j < k_; ++j) {
    if (q[j] != 0.0) acc.add(q[j] * std::exp(s[j] - m));
  }
  *shift = m;
  return m + std::log(acc.value());
}

double SoftMinLoss::point_value(std::size_t i, ConstVecView q) const {
  check_q(q);
  double m = 0.0;
  return log_inner(i, q, &m);
}

Vec SoftMinLoss::point_gradient(std::size_t i, ConstVecView q) const {
  check_q(q);
  double m = 0.0;
  const double log_z = log_inner(i, q, &m);
  Vec g(k_);
  const double* s = &scores_[i * k_];
  for (std::size_t j = 0; j < k_; ++j) g[j] = std::exp(s[j] - log_z);
  return g;
}

double SoftMinLoss::value(ConstVecView q) const {
  check_q(q);
  CompensatedSum acc;
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i) acc.add(log_inner(i, q, &m));
  return acc.value() / static_cast<double>(n_);
}

Vec SoftMinLoss::gradient(ConstVecView q) const {
  check_q(q);
  std::vector<CompensatedSum> acc(k_);
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    const double log_z = log_inner(i, q, &m);
    const double* s = &scores_[i * k_];
    for (std::size_t j = 0; j < k_; ++j) acc[j].add(std::exp(s[j] - log_z));
  }
  Vec g(k_);
  for (std::size_t j = 0; j < k_; ++j) g[j] = acc[j].value() / static_cast<double>(n_);
  return g;
}

double eval_soft_min(const SoftMinParams& p, ConstVecView q) {
  SoftMinLoss loss(p);
  if (q.size() != loss.n_candidates()) throw Error("soft-min: q length mismatch");
  require_simplex(q);
  return loss.value(q);
}

Vec grad_soft_min(const SoftMinParams& p, ConstVecView q) {
  SoftMinLoss loss(p);
  if (q.size() != loss.n_candidates()) throw Error("soft-min: q length mismatch");
  require_simplex(q);
  return loss.gradient(q);
}

ObjectiveHandle soft_min_objective(const SoftMinParams& p) {
  auto loss = std::make_shared<const SoftMinLoss>(p);
  auto value = [loss](ConstVecView q) { return -loss->value(q); };
  auto grad = [loss](ConstVecView q) { return scaled(loss->gradient(q), -1.0); };
  return ObjectiveHandle(value, grad, nullptr, loss->n_points(), loss->n_candidates());
}

}  // namespace augopt

#include "augopt/transforms.hpp"

#include <cmath>
#include <random>

namespace augopt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Vec data_mean(const Dataset& data) {
  Vec mean(data.dim(), 0.0);
  for (const auto& x : data.X) axpy(1.0, x, mean);
  for (double& v : mean) v /= static_cast<double>(data.size());
  return mean;
}

}  // namespace

void validate(const TransformSpec& spec) {
  std::visit(Overloaded{
                 [](const GaussianNoise& g) {
                   if (!(g.variance >= 0.0) || !std::isfinite(g.variance)) {
                     throw Error("GaussianNoise: variance must be >= 0");
                   }
                 },
                 [](const Rotation& r) {
                   if (!std::isfinite(r.angle)) throw Error("Rotation: non-finite angle");
                 },
                 [](const Duplicate&) {},
                 [](const AlphaPair& a) {
                   if (!(a.alpha1 >= 0.0) || !(a.alpha2 > a.alpha1)) {
                     throw Error("AlphaPair: requires alpha2 > alpha1 >= 0");
                   }
                 },
             },
             spec.kind);
}

std::vector<Vec> apply_transform(const TransformSpec& spec, const Dataset& data) {
  validate(spec);
  if (data.X.empty()) throw Error("apply_transform: empty dataset");
  return std::visit(
      Overloaded{
          [&](const GaussianNoise& g) {
            std::mt19937_64 rng(spec.seed);
            std::normal_distribution<double> normal(0.0, 1.0);
            const double sigma = std::sqrt(g.variance);
            std::vector<Vec> out = data.X;
            for (auto& x : out) {
              for (double& v : x) v += sigma * normal(rng);
            }
            return out;
          },
          [&](const Rotation& r) {
            if (data.dim() < 2) throw Error("Rotation: needs at least two coordinates");
            const Vec center = r.center.value_or(data_mean(data));
            if (center.size() != data.dim()) throw Error("Rotation: center dimension mismatch");
            const double c = std::cos(r.angle);
            const double s = std::sin(r.angle);
            std::vector<Vec> out = data.X;
            for (auto& x : out) {
              const double dx = x[0] - center[0];
              const double dy = x[1] - center[1];
              // Written as an increment so angle 0 is an exact identity.
              x[0] += (c - 1.0) * dx - s * dy;
              x[1] += s * dx + (c - 1.0) * dy;
            }
            return out;
          },
          [&](const Duplicate&) { return data.X; },
          [&](const AlphaPair&) { return data.X; },
      },
      spec.kind);
}

SymMatrix alpha_pair_weights(std::size_t n_original, std::size_t n_transformed,
                             const AlphaPair& spec) {
  if (!(spec.alpha1 >= 0.0) || !(spec.alpha2 >= spec.alpha1) || !std::isfinite(spec.alpha2)) {
    throw Error("alpha_pair_weights: requires alpha2 >= alpha1 >= 0");
  }
  const std::size_t n = n_original + n_transformed;
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool both_original = i < n_original && j < n_original;
      a.set(i, j, both_original ? spec.alpha1 : spec.alpha2);
    }
  }
  return a;
}

SymMatrix alpha_pair_weights(const Dataset& data, const AlphaPair& spec) {
  return alpha_pair_weights(data.size(), data.size(), spec);
}

SupervisionReport check_positive_supervision(const Dataset& data,
                                             const std::vector<Vec>& transformed) {
  if (data.centroids.empty()) throw Error("check_positive_supervision: empty centroid list");
  if (transformed.size() != data.X.size()) {
    throw Error("check_positive_supervision: transformed set size differs from data");
  }
  SupervisionReport report;
  for (std::size_t i = 0; i < transformed.size(); ++i) {
    if (nearest_centroid(data.centroids, data.metric, transformed[i]) != data.labels[i]) {
      report.violating_indices.push_back(i);
    }
  }
  report.valid = report.violating_indices.empty();
  return report;
}

}  // namespace augopt

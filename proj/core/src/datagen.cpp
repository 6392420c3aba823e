#include "augopt/datagen.hpp"

#include <cmath>
#include <random>

namespace augopt {

GenSpec default_gen_spec(std::uint64_t seed) {
  GenSpec spec;
  spec.centroids = {{10.0, 20.0}, {30.0, 20.0}, {20.0, 10.0}, {20.0, 30.0}};
  spec.n_per_cluster = 100;
  spec.spread = 1.0;
  spec.seed = seed;
  return spec;
}

void validate(const GenSpec& spec) {
  if (spec.centroids.empty()) throw Error("GenSpec: need at least one centroid");
  if (spec.n_per_cluster < 1) throw Error("GenSpec: n_per_cluster must be >= 1");
  if (!(spec.spread >= 0.0) || !std::isfinite(spec.spread)) {
    throw Error("GenSpec: spread must be >= 0");
  }
  const std::size_t d = spec.centroids.front().size();
  if (d == 0) throw Error("GenSpec: zero-dimensional centroids");
  for (const auto& c : spec.centroids) {
    if (c.size() != d) throw Error("GenSpec: centroid dimension mismatch");
    if (!all_finite(c)) throw Error("GenSpec: non-finite centroid");
  }
}

Dataset gen_clusters(const GenSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Dataset data;
  data.centroids = spec.centroids;
  data.X.reserve(spec.centroids.size() * spec.n_per_cluster);
  for (std::size_t k = 0; k < spec.centroids.size(); ++k) {
    for (std::size_t i = 0; i < spec.n_per_cluster; ++i) {
      Vec x = spec.centroids[k];
      for (double& v : x) v += spec.spread * normal(rng);
      data.X.push_back(std::move(x));
      data.labels.push_back(k);
    }
  }
  return data;
}

ComparisonPair build_comparison_pair(const Dataset& data, const TransformSpec& spec) {
  validate(data);
  const std::vector<Vec> transformed = apply_transform(spec, data);

  ComparisonPair pair;
  pair.baseline.centroids = data.centroids;
  pair.baseline.metric = data.metric;
  pair.baseline.X = data.X;
  pair.baseline.X.insert(pair.baseline.X.end(), data.X.begin(), data.X.end());
  pair.baseline.labels = data.labels;
  pair.baseline.labels.insert(pair.baseline.labels.end(), data.labels.begin(), data.labels.end());

  pair.augmented.centroids = data.centroids;
  pair.augmented.metric = data.metric;
  pair.augmented.X = data.X;
  pair.augmented.X.insert(pair.augmented.X.end(), transformed.begin(), transformed.end());
  pair.augmented.labels = pair.baseline.labels;
  return pair;
}

}  // namespace augopt

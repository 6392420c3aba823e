#pragma once

#include <cstdint>
#include <vector>

#include "augopt/dataset.hpp"
#include "augopt/transforms.hpp"

namespace augopt {

/// Isotropic Gaussian clusters around fixed centroids.
struct GenSpec {
  std::vector<Vec> centroids;
  std::size_t n_per_cluster = 100;
  double spread = 1.0;  // per-coordinate standard deviation
  std::uint64_t seed = 0;
};

/// Four clusters at (10,20), (30,20), (20,10), (20,30), 100 points each.
GenSpec default_gen_spec(std::uint64_t seed = 1);

void validate(const GenSpec& spec);

/// n_per_cluster points per centroid, labelled with their generating centroid.
/// Points are grouped by cluster in centroid order.
Dataset gen_clusters(const GenSpec& spec);

struct ComparisonPair {
  Dataset baseline;   // every original point twice
  Dataset augmented;  // originals followed by one transformed copy of each
};

/// Equal-size arms for a fair epoch comparison. Transformed points keep the
/// label of the point they came from.
ComparisonPair build_comparison_pair(const Dataset& data, const TransformSpec& spec);

}  // namespace augopt

#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <vector>

#include "augopt/soft_min.hpp"
#include "augopt/vec.hpp"

namespace augopt {

/// Points with ground-truth cluster labels and centroids.
struct Dataset {
  std::vector<Vec> X;
  std::vector<std::size_t> labels;
  std::vector<Vec> centroids;
  Divergence metric = Divergence::kSquaredEuclidean;

  std::size_t size() const { return X.size(); }
  std::size_t dim() const { return X.empty() ? 0 : X.front().size(); }
};

/// Shape checks: one label per point, labels index into centroids, consistent dimensions.
void validate(const Dataset& data);

/// Index of the closest centroid under the dataset's metric (lowest index on ties).
std::size_t nearest_centroid(const std::vector<Vec>& centroids, Divergence metric, ConstVecView x);

/// True when every label equals the nearest centroid of its point.
bool labels_match_nearest(const Dataset& data);

/// CSV with header `x0,x1,...,label`, one row per point, shortest round-trip
/// decimal formatting, LF line endings.
void write_dataset_csv(const Dataset& data, std::ostream& out);

/// Inverse of write_dataset_csv. Centroids are not stored in the file and
/// are left empty.
Dataset read_dataset_csv(std::istream& in);

}  // namespace augopt

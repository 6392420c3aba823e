#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "augopt/dataset.hpp"
#include "augopt/sym_matrix.hpp"

namespace augopt {

/// i.i.d. zero-mean Gaussian noise per coordinate.
struct GaussianNoise {
  double variance = 0.0;
};

/// Rotation by `angle` radians in the plane of the first two coordinates,
/// about `center` (default: the data mean).
struct Rotation {
  double angle = 0.0;
  std::optional<Vec> center;
};

struct Duplicate {};

/// Copies of the data whose couplings to any transformed point use alpha2,
/// while original-original pairs keep alpha1.
struct AlphaPair {
  double alpha1 = 0.0;
  double alpha2 = 1.0;
};

struct TransformSpec {
  std::variant<GaussianNoise, Rotation, Duplicate, AlphaPair> kind = Duplicate{};
  std::uint64_t seed = 0;
};

/// Throws on variance < 0 or a pair without alpha2 > alpha1 >= 0.
void validate(const TransformSpec& spec);

/// One transformed point per original point, deterministic in (spec, seed).
std::vector<Vec> apply_transform(const TransformSpec& spec, const Dataset& data);

/// Pair weights over the index set original (0..n_original-1) followed by
/// transformed points. Symmetric, diagonal zero. Accepts alpha2 == alpha1
/// (a uniform map), which a TransformSpec does not.
SymMatrix alpha_pair_weights(std::size_t n_original, std::size_t n_transformed,
                             const AlphaPair& spec);
SymMatrix alpha_pair_weights(const Dataset& data, const AlphaPair& spec);

struct SupervisionReport {
  bool valid = true;
  std::vector<std::size_t> violating_indices;
};

/// A transform is positive on point i when transformed[i] has the same nearest
/// ground-truth centroid as the label of X[i].
SupervisionReport check_positive_supervision(const Dataset& data,
                                             const std::vector<Vec>& transformed);

}  // namespace augopt

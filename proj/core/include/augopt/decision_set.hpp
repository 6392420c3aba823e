#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "augopt/vec.hpp"

namespace augopt {

/// Absolute tolerance for set membership at coordinate scale O(10).
inline constexpr double kMembershipTol = 1e-9;

struct Ball {
  Vec center;
  double radius = 1.0;
};

struct Box {
  Vec lo;
  Vec hi;
};

/// Probability simplex {q >= 0, sum q = 1} in R^dim.
struct Simplex {
  std::size_t dim = 0;
};

class DecisionSet;

/// Intersection of convex pieces (balls and boxes). Projection uses Dykstra's
/// alternating scheme.
struct Intersection {
  std::vector<DecisionSet> parts;
};

/// Convex feasible region with Euclidean projection. Immutable after
/// construction; the factories validate parameters and, for intersections,
/// non-emptiness.
class DecisionSet {
 public:
  using Variant = std::variant<Ball, Box, Simplex, Intersection>;

  static DecisionSet ball(Vec center, double radius);
  static DecisionSet box(Vec lo, Vec hi);
  static DecisionSet simplex(std::size_t dim);
  /// Throws Error if the balls have an empty common region.
  static DecisionSet ball_intersection(std::vector<Ball> balls);
  /// this ∩ B(center, radius). Throws if empty.
  DecisionSet intersect_ball(Vec center, double radius) const;

  const Variant& shape() const { return shape_; }
  std::size_t dim() const;

  Vec project(ConstVecView w) const;
  bool contains(ConstVecView w, double tol = kMembershipTol) const;
  /// Exact for ball/box/simplex; an upper bound (smallest part) for intersections.
  double diameter() const;

  /// Uniform sample. Rejection sampling inside the tightest part for intersections.
  Vec sample_uniform(std::uint64_t seed) const;

 private:
  explicit DecisionSet(Variant v) : shape_(std::move(v)) {}
  Variant shape_;
};

/// Euclidean projection onto the probability simplex (sort-and-threshold).
Vec project_simplex(ConstVecView q);

}  // namespace augopt

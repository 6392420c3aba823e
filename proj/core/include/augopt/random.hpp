#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "augopt/vec.hpp"

namespace augopt {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based bit generator: the stream for (key, index) is a pure function
/// of those two numbers, so draw s of a Monte-Carlo loop can be regenerated in
/// any order. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t key, std::uint64_t index)
      : base_(mix64(mix64(key) ^ (index * 0xd1b54a32d192ed03ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix64(base_ + 0x632be59bd9b4e019ULL * (++counter_)); }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

/// Uniform draw from the closed unit ball in R^d: Gaussian direction times
/// radius U^(1/d).
template <class Rng>
Vec sample_unit_ball(std::size_t d, Rng& rng) {
  if (d == 0) throw Error("sample_unit_ball: dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vec v(d);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& x : v) {
      x = normal(rng);
      n2 += x * x;
    }
  } while (n2 == 0.0);
  const double radius = std::pow(unif(rng), 1.0 / static_cast<double>(d));
  const double s = radius / std::sqrt(n2);
  for (double& x : v) x *= s;
  return v;
}

}  // namespace augopt

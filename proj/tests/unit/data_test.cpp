#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "augopt/datagen.hpp"
#include "augopt/random.hpp"
#include "augopt/transforms.hpp"

namespace augopt {
namespace {

TEST(GenClusters, DefaultLayout) {
  const Dataset d = gen_clusters(default_gen_spec(1));
  EXPECT_EQ(d.size(), 400u);
  EXPECT_EQ(d.dim(), 2u);
  ASSERT_EQ(d.centroids.size(), 4u);
  EXPECT_EQ(d.centroids[0], (Vec{10.0, 20.0}));
  EXPECT_EQ(d.centroids[3], (Vec{20.0, 30.0}));
  EXPECT_EQ(d.labels.front(), 0u);
  EXPECT_EQ(d.labels.back(), 3u);
  EXPECT_TRUE(labels_match_nearest(d));
}

TEST(GenClusters, ZeroSpreadAndDeterminism) {
  GenSpec spec = default_gen_spec(4);
  spec.spread = 0.0;
  const Dataset d = gen_clusters(spec);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d.X[i], d.centroids[d.labels[i]]);
  EXPECT_EQ(gen_clusters(default_gen_spec(9)).X, gen_clusters(default_gen_spec(9)).X);
  EXPECT_NE(gen_clusters(default_gen_spec(9)).X, gen_clusters(default_gen_spec(10)).X);
}

TEST(GenClusters, ClusterMeansWithinClt) {
  GenSpec spec = default_gen_spec(2);
  spec.n_per_cluster = 10000;
  spec.spread = 1.5;
  const Dataset d = gen_clusters(spec);
  for (std::size_t c = 0; c < 4; ++c) {
    Vec mean(2, 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d.labels[i] == c) axpy(1e-4, d.X[i], mean);
    }
    for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(mean[k], d.centroids[c][k], 4 * 1.5 / 100);
  }
}

TEST(GenClusters, RejectsBadSpec) {
  GenSpec spec = default_gen_spec(1);
  spec.spread = -1.0;
  EXPECT_THROW(gen_clusters(spec), Error);
  spec = default_gen_spec(1);
  spec.centroids.clear();
  EXPECT_THROW(gen_clusters(spec), Error);
}

TEST(DatasetCsv, RoundTrip) {
  const Dataset d = gen_clusters(default_gen_spec(3));
  std::stringstream s;
  write_dataset_csv(d, s);
  const std::string text = s.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "x0,x1,label");
  EXPECT_EQ(text.find('\r'), std::string::npos);
  const Dataset back = read_dataset_csv(s);
  EXPECT_EQ(back.X, d.X);
  EXPECT_EQ(back.labels, d.labels);
}

TEST(Transforms, IdentityCases) {
  const Dataset d = gen_clusters(default_gen_spec(1));
  EXPECT_EQ(apply_transform({GaussianNoise{0.0}, 5}, d), d.X);
  EXPECT_EQ(apply_transform({Rotation{0.0, std::nullopt}, 5}, d), d.X);
  EXPECT_EQ(apply_transform({Duplicate{}, 5}, d), d.X);
}

TEST(Transforms, NoiseMeanWithinClt) {
  const Dataset d = gen_clusters(default_gen_spec(1));
  const auto t = apply_transform({GaussianNoise{4.0}, 17}, d);
  Vec mean(2, 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) axpy(1.0 / 400.0, sub(t[i], d.X[i]), mean);
  for (double m : mean) EXPECT_LE(std::abs(m), 0.3);
  EXPECT_EQ(t, apply_transform({GaussianNoise{4.0}, 17}, d));
  EXPECT_NE(t, apply_transform({GaussianNoise{4.0}, 18}, d));
}

TEST(Transforms, RotationAboutCenter) {
  Dataset d;
  d.X = {{2.0, 1.0}};
  d.labels = {0};
  d.centroids = {{1.0, 1.0}};
  const auto t = apply_transform({Rotation{std::numbers::pi / 2, Vec{1.0, 1.0}}, 0}, d);
  EXPECT_NEAR(t[0][0], 1.0, 1e-15);
  EXPECT_NEAR(t[0][1], 2.0, 1e-15);
}

TEST(Transforms, Validation) {
  EXPECT_THROW(validate(TransformSpec{GaussianNoise{-1.0}, 0}), Error);
  EXPECT_THROW(validate(TransformSpec{AlphaPair{0.5, 0.1}, 0}), Error);
  EXPECT_THROW(validate(TransformSpec{AlphaPair{-0.1, 0.5}, 0}), Error);
}

TEST(AlphaPairWeights, Structure) {
  const SymMatrix a = alpha_pair_weights(2, 2, {0.1, 0.5});
  EXPECT_EQ(a(0, 0), 0.0);
  EXPECT_EQ(a(0, 1), 0.1);
  EXPECT_EQ(a(0, 2), 0.5);
  EXPECT_EQ(a(2, 3), 0.5);
  EXPECT_EQ(a(1, 3), 0.5);
  const SymMatrix u = alpha_pair_weights(3, 3, {0.3, 0.3});
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(u(i, j), i == j ? 0.0 : 0.3);
  }
}

TEST(Supervision, Examples) {
  const Dataset d = gen_clusters(default_gen_spec(1));
  EXPECT_TRUE(check_positive_supervision(d, apply_transform({Duplicate{}, 0}, d)).valid);
  // Transform stream the experiment harness derives from seed 1.
  const std::uint64_t stream = mix64(1 ^ 0x6e6f697365ULL);
  EXPECT_TRUE(check_positive_supervision(d, apply_transform({GaussianNoise{1.0}, stream}, d)).valid);
  const auto bad = check_positive_supervision(d, apply_transform({GaussianNoise{100.0}, 1}, d));
  EXPECT_FALSE(bad.valid);
  EXPECT_FALSE(bad.violating_indices.empty());
}

TEST(ComparisonPair, Shapes) {
  const Dataset d = gen_clusters(default_gen_spec(1));
  const ComparisonPair dup = build_comparison_pair(d, {Duplicate{}, 0});
  EXPECT_EQ(dup.baseline.size(), 800u);
  EXPECT_EQ(dup.augmented.size(), 800u);
  EXPECT_EQ(dup.baseline.X, dup.augmented.X);

  const ComparisonPair noisy = build_comparison_pair(d, {GaussianNoise{6.0}, 2});
  std::size_t differing = 0;
  for (std::size_t i = 0; i < 800; ++i) {
    if (noisy.baseline.X[i] != noisy.augmented.X[i]) {
      ++differing;
      EXPECT_GE(i, 400u);
    }
  }
  EXPECT_EQ(differing, 400u);
  EXPECT_EQ(noisy.augmented.labels, noisy.baseline.labels);
}

}  // namespace
}  // namespace augopt

#include <gtest/gtest.h>

#include <random>

#include "bures/statistics.hpp"

using namespace bures;

TEST(Statistics, MomentsOfKnownSample) {
  const std::vector<double> v{1, 2, 3, 4, 10};
  const SampleMoments s = sample_moments(v);
  EXPECT_DOUBLE_EQ(s.mean, 4.0);
  EXPECT_DOUBLE_EQ(s.variance, 12.5);
  // scipy.stats.skew(v, bias=False)
  EXPECT_NEAR(s.skewness, 1.6970562748477143, 1e-14);
  EXPECT_THROW(sample_moments(std::vector<double>{1, 2, 3}), input_error);
}

TEST(Statistics, StandardErrorsMatchNormalTheory) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<double> v(200000);
  for (auto& x : v) x = g(rng);
  const SampleMoments s = sample_moments(v);
  EXPECT_NEAR(s.se_mean, 1.0 / std::sqrt(2e5), 1e-5);
  EXPECT_NEAR(s.se_variance, std::sqrt(2.0 / 2e5), 1e-4);  // (m4 - s^4) / n with m4 = 3
  EXPECT_NEAR(s.se_skewness, std::sqrt(6.0 / 2e5), 1e-6);
  EXPECT_LT(std::fabs(s.skewness), 4 * s.se_skewness);
}

TEST(Statistics, KolmogorovDistribution) {
  EXPECT_NEAR(kolmogorov_q(1.0), 0.26999967167735456, 1e-12);
  EXPECT_NEAR(kolmogorov_q(1.36), 0.049485876755377876, 1e-12);
  EXPECT_EQ(kolmogorov_q(0.0), 1.0);
  EXPECT_LT(kolmogorov_q(5.0), 1e-20);
}

TEST(Statistics, KsAgainstNormal) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<double> v(50000);
  for (auto& x : v) x = g(rng);
  EXPECT_LT(ks_statistic_normal(v), 1.63 / std::sqrt(5e4));
  for (auto& x : v) x += 0.1;
  EXPECT_GT(ks_statistic_normal(v), 0.03);
}

TEST(Statistics, TwoSampleKs) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<double> a(20000), b(20000), c(20000);
  for (auto& x : a) x = g(rng);
  for (auto& x : b) x = g(rng);
  for (auto& x : c) x = g(rng) * 1.1;
  EXPECT_GT(ks_two_sample(a, b).p_value, 0.001);
  EXPECT_LT(ks_two_sample(a, c).p_value, 1e-6);
  const KsResult same = ks_two_sample(a, a);
  EXPECT_EQ(same.statistic, 0.0);
  EXPECT_EQ(same.p_value, 1.0);
}

TEST(Statistics, CorrelationAndRhat) {
  const std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 6, 8, 10.5};
  EXPECT_GT(correlation(x, y), 0.998);
  EXPECT_NEAR(correlation(x, x), 1.0, 1e-15);
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> same(4, std::vector<double>(5000)), shifted = same;
  for (auto& ch : same) for (auto& v : ch) v = g(rng);
  for (std::size_t k = 0; k < shifted.size(); ++k) for (auto& v : shifted[k]) v = g(rng) + k;
  EXPECT_LT(split_rhat(same), 1.01);
  EXPECT_GT(split_rhat(shifted), 1.5);
}

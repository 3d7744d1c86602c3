#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>

#include "bures/moments.hpp"

using namespace bures;

TEST(Moments, FrozenValuesTwoByTwo) {
  const EnsembleParams p = params_from_dims(2, 2);
  // 2 ln 2 - 7/6 and 13 pi^2/48 - 95/36
  EXPECT_NEAR(mean_entropy(p), 0.2196276944532239521677975762496864694843, 1e-15);
  EXPECT_NEAR(variance_entropy(p), 0.03412896973947907037878575691090204359185, 1e-15);
}

TEST(Moments, FrozenValuesThreeByFive) {
  const EnsembleParams p = params_from_dims(3, 5);
  EXPECT_NEAR(mean_entropy(p), 0.7871459809540304896342048044834422543401, 1e-14);
  EXPECT_NEAR(variance_entropy(p), 0.01489147443299539354729070481184297717715, 1e-15);
}

TEST(Moments, InducedVarianceFrozen) {
  EXPECT_NEAR(induced_variance_T(params_from_alpha(3, 0.3)) / 39.43146840469154751309178344784755809498, 1.0, 1e-13);
  EXPECT_NEAR(induced_variance_T(params_from_alpha(5, 1.7)) / 213.36680493717949693908117960080324276, 1.0, 1e-13);
}

TEST(Moments, OneQubitSubsystemIsDegenerate) {
  for (int n = 1; n <= 20; ++n) {
    const EnsembleParams p = params_from_dims(1, n);
    EXPECT_EQ(mean_entropy(p), 0.0);
    EXPECT_EQ(variance_entropy(p), 0.0);
    EXPECT_THROW(standardize(0.0, p), degenerate_parameter_error);
  }
}

TEST(Moments, SpecializationToPhysicalDimensions) {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      const EnsembleParams p = params_from_dims(m, n);
      const double a = induced_variance_T(p), b = induced_variance_T_physical(p);
      EXPECT_LE(std::fabs(a - b) / std::fabs(b), 1e-12) << m << "," << n;
    }
  }
}

TEST(Moments, MeanWithinEntropyBounds) {
  for (int m = 2; m <= 30; ++m) {
    double prev = 0.0;
    for (int n = m; n <= m + 40; ++n) {
      const EnsembleParams p = params_from_dims(m, n);
      const double mu = mean_entropy(p);
      EXPECT_GT(mu, 0.0);
      EXPECT_LT(mu, std::log(double(m)));
      EXPECT_GT(mu, prev);  // more environment, more entanglement
      EXPECT_GT(variance_entropy(p), 0.0);
      prev = mu;
    }
  }
}

// E_f[S^2] predicted from the exact E_h[T^2] and E_f[S] matches var + mean^2.
TEST(Moments, SecondMomentRelationCloses) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; n <= m + 6; ++n) {
      const EnsembleParams p = params_from_dims(m, n);
      const double ET = induced_mean_T(p);
      const double ET2 = induced_variance_T(p) + ET * ET;
      const double mu = mean_entropy(p);
      const double lhs = second_moment_from_T(p, ET2, mu);
      const double rhs = variance_entropy(p) + mu * mu;
      EXPECT_NEAR(lhs, rhs, 1e-11 * std::max(1.0, ET2 / (p.d * (p.d + 1)))) << m << "," << n;
    }
  }
}

TEST(Moments, TraceDensityIsNormalized) {
  for (double a : {-0.5, 0.0, 0.5, 2.5}) {
    for (int m : {1, 2, 4}) {
      const EnsembleParams p = params_from_alpha(m, a);
      const auto f = [&](double t) { return trace_density(t, p); };
      const double total = boost::math::quadrature::exp_sinh<double>().integrate(f, 0.0, std::numeric_limits<double>::infinity());
      EXPECT_NEAR(total, 1.0, 1e-10) << m << "," << a;
    }
  }
  EXPECT_THROW(trace_density(-1.0, params_from_alpha(2, 0.5)), domain_error);
}

TEST(Moments, Parameterization) {
  const EnsembleParams p = params_from_dims(3, 7);
  EXPECT_DOUBLE_EQ(p.alpha, 3.5);
  EXPECT_DOUBLE_EQ(p.d, 0.5 * 3 * (3 + 2 * 3.5 + 1));
  EXPECT_DOUBLE_EQ(p.d, 3.0 * 7 - 4.5);  // mn - m^2/2
  EXPECT_TRUE(p.physical());
  EXPECT_FALSE(params_from_alpha(3, 0.2).physical());
  EXPECT_THROW(params_from_dims(4, 3), parameter_error);
  EXPECT_THROW(params_from_dims(0, 3), parameter_error);
  EXPECT_THROW(params_from_alpha(2, -1.0), parameter_error);
  EXPECT_THROW(mean_entropy(params_from_alpha(2, 0.5)), parameter_error);
}

TEST(Moments, EntropyFunctionals) {
  EXPECT_DOUBLE_EQ(entropy_S(Spectrum{{1.0, 0.0, 0.0}}), 0.0);
  EXPECT_NEAR(entropy_S(Spectrum{{0.25, 0.25, 0.25, 0.25}}), std::log(4.0), 1e-15);
  EXPECT_THROW(entropy_S(Spectrum{{0.5, 0.4}}), input_error);
  EXPECT_THROW(entropy_S(Spectrum{{1.5, -0.5}}), input_error);
  EXPECT_NEAR(entropy_T(RawSpectrum{{2.0, 3.0}}), 2 * std::log(2.0) + 3 * std::log(3.0), 1e-15);
  EXPECT_THROW(entropy_T(RawSpectrum{{1.0, 0.0}}), input_error);
  // S(x / theta) = ln theta - T(x) / theta
  const std::vector<double> x{0.3, 1.7, 2.2};
  const double th = 4.2;
  std::vector<double> lam;
  for (double v : x) lam.push_back(v / th);
  EXPECT_NEAR(entropy_S(std::span<const double>(lam)), std::log(th) - entropy_T(std::span<const double>(x)) / th, 1e-15);
}

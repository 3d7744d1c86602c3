#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "bures/specfun.hpp"

using namespace bures;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

}  // namespace

// Reference values from mpmath at 40 digits.
TEST(Specfun, FrozenValues) {
  EXPECT_LT(rel(log_gamma(10.5), 13.9406252194037636331612378879718494798), 1e-15);
  EXPECT_LT(rel(log_gamma(0.3), 1.095797994818075560562998500309163090233), 4e-15);
  EXPECT_LT(rel(log_gamma(123.456), 469.6055471299294687300691923309300468878), 1e-15);
  EXPECT_LT(rel(digamma(0.3), -3.502524222200133124915351147545803068825), 1e-15);
  EXPECT_LT(rel(trigamma(0.3), 12.24536454610773130116663596052054860633), 1e-15);
  EXPECT_LT(rel(digamma(7.25), 1.910453526883736028382494561222141388517), 1e-15);
  EXPECT_LT(rel(trigamma(7.25), 0.1478792331589321696521370560805090816835), 1e-15);
  EXPECT_LT(rel(digamma(100000.5), 11.51292546497439508675655102342182488225), 1e-15);
  EXPECT_LT(rel(reciprocal_gamma(-2.5), -1.057855469152043038027648971676448598458), 1e-14);
}

TEST(Specfun, ExactHalfIntegerAndIntegerPaths) {
  const double pi2 = static_cast<double>(kPi * kPi);
  EXPECT_NEAR(trigamma(2.5), pi2 / 2 - 40.0 / 9.0, 1e-15);
  EXPECT_NEAR(digamma(1.0), -static_cast<double>(kEulerGamma), 1e-16);
  EXPECT_NEAR(digamma(0.5), -static_cast<double>(kEulerGamma) - 2 * std::log(2.0), 1e-15);
  EXPECT_NEAR(trigamma(1.0), pi2 / 6, 1e-15);
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_EQ(log_gamma(2.0), 0.0);
  EXPECT_NEAR(log_gamma(11.0), std::log(3628800.0), 1e-14);
}

TEST(Specfun, ComplexValues) {
  const std::complex<double> z(1.0, 1.0);
  const auto p0 = digamma(z);
  const auto p1 = trigamma(z);
  EXPECT_NEAR(p0.real(), 0.09465032062247697727, 1e-14);
  EXPECT_NEAR(p0.imag(), 1.07667404746858117413, 1e-14);
  EXPECT_NEAR(p1.real(), 0.46300009662276378630, 1e-14);
  EXPECT_NEAR(p1.imag(), -0.79423354275931886558, 1e-14);
  const auto q = digamma(std::complex<long double>(-0.5L, 0.25L));
  EXPECT_NEAR(static_cast<double>(q.real()), 0.06183874429076425502, 1e-14);
  EXPECT_NEAR(static_cast<double>(q.imag()), 1.83011912462878998407, 1e-14);
}

TEST(Specfun, RecurrencesHoldOnRandomArguments) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 60.0);
  for (int k = 0; k < 2000; ++k) {
    const double x = u(rng);
    EXPECT_LT(rel(digamma(x + 1), digamma(x) + 1 / x), 1e-13) << x;
    EXPECT_LT(rel(trigamma(x + 1), trigamma(x) - 1 / (x * x)), 1e-13) << x;
    EXPECT_LT(rel(log_gamma(x + 1), log_gamma(x) + std::log(x)), 1e-13) << x;
  }
}

TEST(Specfun, FastPathsAgreeWithGeneralPath) {
  // Nudging off the exact lattice forces the general path.
  for (int k = 1; k <= 200; ++k) {
    for (double x : {double(k), k + 0.5}) {
      const double xn = std::nextafter(x, 1e9);
      EXPECT_LT(rel(digamma(x), digamma(xn)), 1e-13) << x;
      EXPECT_LT(rel(trigamma(x), trigamma(xn)), 1e-12) << x;
    }
  }
}

TEST(Specfun, MonotonicityAndSign) {
  double prev0 = digamma(0.05), prev1 = trigamma(0.05);
  for (double x = 0.1; x < 50; x += 0.37) {
    const double p0 = digamma(x), p1 = trigamma(x);
    EXPECT_GT(p0, prev0);
    EXPECT_LT(p1, prev1);
    EXPECT_GT(p1, 0.0);
    prev0 = p0;
    prev1 = p1;
  }
}

TEST(Specfun, RejectsNonPositiveArguments) {
  EXPECT_THROW(digamma(0.0), domain_error);
  EXPECT_THROW(trigamma(-1.5), domain_error);
  EXPECT_THROW(log_gamma(-0.5), domain_error);
  EXPECT_EQ(reciprocal_gamma(-3.0), 0.0);
}

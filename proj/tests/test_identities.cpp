#include <gtest/gtest.h>

#include <random>

#include "bures/identities.hpp"

using namespace bures;

class IdentityProperty : public ::testing::TestWithParam<IdentityId> {};

TEST_P(IdentityProperty, RandomCasesWithinTolerance) {
  std::mt19937_64 rng(12345 + static_cast<int>(GetParam()));
  for (int k = 0; k < 500; ++k) {
    const IdentityCase c = random_case(GetParam(), rng);
    EXPECT_LE(identity_residual(c), kIdentityTolerance)
        << to_string(c.id) << " m=" << c.m << " a=" << c.a << " b=" << c.b << " i=" << c.i << " s=" << c.s;
  }
}

INSTANTIATE_TEST_SUITE_P(All, IdentityProperty, ::testing::ValuesIn(kAllIdentities),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Identities, SeededCasesAreReproducible) {
  std::mt19937_64 r1(7), r2(7);
  for (IdentityId id : kAllIdentities) {
    const IdentityCase a = random_case(id, r1), b = random_case(id, r2);
    EXPECT_EQ(a.m, b.m);
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(identity_lhs(a), identity_lhs(b));
  }
}

TEST(Identities, A6IsSymmetricInItsParameters) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    IdentityCase c = random_case(IdentityId::A6, rng);
    const double r1 = identity_residual(c);
    std::swap(c.a, c.b);
    EXPECT_LE(std::fabs(identity_residual(c) - r1), 1e-12);
  }
}

TEST(Identities, DomainViolationsThrow) {
  EXPECT_THROW(identity_lhs({IdentityId::A1, 0, 1.0, 0, 0, 0}), parameter_error);
  EXPECT_THROW(identity_lhs({IdentityId::A6, 3, 1.0, 1.0, 0, 0}), parameter_error);  // a == b
  EXPECT_THROW(identity_lhs({IdentityId::A1, 3, -1.0, 0, 0, 0}), parameter_error);
  EXPECT_THROW(identity_lhs({IdentityId::T3t2, 3, -1.5, 0, 0, 0}), parameter_error);  // alpha <= -1
}

TEST(Identities, ThreeTwoDerivativesMatch) {
  struct Case {
    double i, s, a;
    int m;
  };
  for (const Case& c : {Case{1, 2, 0.5, 4}, Case{0, 0, -0.5, 3}, Case{2, 1, 1.25, 5}, Case{0, 3, 2.5, 6},
                        Case{1, 1, -0.9, 2}, Case{0, 0, 0.0, 1}}) {
    const DerivativeCheck d = t3t2_derivatives(c.i, c.s, c.a, c.m);
    EXPECT_LE(d.max_relative(), 1e-6) << c.i << " " << c.s << " " << c.a << " " << c.m;
  }
}

TEST(Identities, ContinuedSumMatchesFiniteSumAtIntegers) {
  // For integer i, s < m the terms past m vanish through the reciprocal gammas.
  for (int m = 1; m <= 8; ++m) {
    for (int i = 0; i < m; ++i) {
      const IdentityCase c{IdentityId::T3t2, m, 0.75, 0.0, double(i), double(m - 1 - i)};
      EXPECT_NEAR(t3t2_lhs_continued(c.i, c.s, c.a, m), identity_lhs(c),
                  1e-13 * std::max(1.0, std::fabs(identity_lhs(c))));
    }
  }
}

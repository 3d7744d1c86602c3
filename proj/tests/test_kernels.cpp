#include <gtest/gtest.h>

#include <random>

#include "bures/closedforms.hpp"
#include "bures/kernels.hpp"
#include "bures/moments.hpp"

using namespace bures;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

const KernelContext& ctx_2_half() {
  static const KernelContext c = build_context(2, 0.5);
  return c;
}

}  // namespace

// mpmath with adaptive quadrature for the Cauchy transforms.
TEST(Kernels, FrozenValuesAtTwoHalf) {
  const auto& c = ctx_2_half();
  EXPECT_LT(rel(kernel(c, KernelId::K00, 0.7, 1.3), 6.97169386272764635261385943022), 1e-12);
  EXPECT_LT(rel(kernel(c, KernelId::K01, 0.7, 1.3), 0.0699286015923919864349372569227), 1e-10);
  EXPECT_LT(rel(kernel(c, KernelId::K10, 0.7, 1.3), 1.97233047571996602293311800188), 1e-10);
  EXPECT_LT(rel(kernel(c, KernelId::K11, 0.7, 1.3), -0.00144689178631816553135059245623), 1e-8);
  EXPECT_LT(rel(density_one(c, 0.7), 0.343085463225780040345656943764), 1e-10);
}

TEST(Kernels, Biorthogonality) {
  for (int m = 1; m <= 6; ++m) {
    for (double a : {-0.5, 0.0, 0.5, 1.5, 3.25}) {
      const KernelContext c = build_context(m, a);
      EXPECT_LE(c.biorthogonality_residual, kBiorthogonalityTolerance) << m << " " << a;
    }
  }
}

TEST(Kernels, SumMatchesIntegralRepresentation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 4.0);
  for (const auto& [m, a] : std::vector<std::pair<int, double>>{{2, 0.5}, {3, -0.5}}) {
    const KernelContext c = build_context(m, a);
    for (int k = 0; k < 20; ++k) {
      const double x = u(rng), y = u(rng);
      for (KernelId id : {KernelId::K00, KernelId::K01, KernelId::K10, KernelId::K11}) {
        const double s = kernel(c, id, x, y);
        const double r = kernel_integral_rep(c, id, x, y);
        EXPECT_LE(std::fabs(s - r), 1e-6 * std::max(1.0, std::fabs(s)))
            << "m=" << m << " a=" << a << " K" << static_cast<int>(id) << " x=" << x << " y=" << y;
      }
    }
  }
  EXPECT_THROW(kernel_integral_rep(build_context(2, 1.0), KernelId::K00, 1.0, 1.0), parameter_error);
}

TEST(Kernels, OneDimensionalDensityProperties) {
  for (const auto& [m, a] : std::vector<std::pair<int, double>>{{1, 0.0}, {3, 0.5}, {4, -0.5}, {6, 2.0}}) {
    const KernelContext c = build_context(m, a);
    const QuadratureConfig& q = c.quadrature;
    const double ex = 2.0 * m + a + 6.0;
    const double norm = integrate_half_line_or_throw([&](double x) { return density_one(c, x); }, q, a, ex, "h1");
    EXPECT_NEAR(norm, 1.0, 1e-8) << m << " " << a;
    for (double x = 0.01; x < 40; x *= 1.3) EXPECT_GE(density_one(c, x), -1e-10);
    // int x ln x (K01 + K10)(x, x) dx = 2 E_h[T]
    const double lhs = integrate_half_line_or_throw(
        [&](double x) { return x * std::log(x) * 2.0 * m * density_one(c, x); }, q, a, ex, "xlnx");
    EXPECT_LT(rel(lhs, 2.0 * induced_mean_T(params_from_alpha(m, a))), 1e-7) << m << " " << a;
  }
}

TEST(Kernels, TwoPointDensity) {
  const auto& c = ctx_2_half();
  for (double x : {0.3, 1.1, 4.0}) {
    for (double y : {0.2, 2.5, 7.0}) EXPECT_NEAR(density_two(c, x, y), density_two(c, y, x), 1e-13);
  }
  EXPECT_THROW(density_two(build_context(1, 0.5), 1.0, 2.0), parameter_error);
}

TEST(Kernels, OracleAgreesWithClosedForms) {
  for (const auto& [m, a] : std::vector<std::pair<int, double>>{{1, 0.0}, {2, 0.5}}) {
    const OracleIntegrals o = oracle_integrals(build_context(m, a));
    const IntegralBundle b = assemble_variance(m, a);
    EXPECT_TRUE(o.converged);
    EXPECT_LT(rel(o.I_A.value, b.I_A), 1e-8);
    EXPECT_LT(rel(o.I_B.value + o.I_C.value, b.I_BC), 1e-8);
    EXPECT_LT(rel(o.I_D.value, b.I_D), 1e-8);
    EXPECT_NEAR(o.h1_norm.value, 1.0, 1e-8);
    EXPECT_NEAR(o.h2_norm.value, 1.0, 1e-6);
    EXPECT_LE(o.h2_marginal_error, 1e-6);
    EXPECT_LT(rel(o.trace_mean, params_from_alpha(m, a).d), 1e-8);
  }
}

TEST(Kernels, ScopeLimits) {
  EXPECT_THROW(build_context(7, 0.5), parameter_error);
  EXPECT_THROW(build_context(0, 0.5), parameter_error);
  EXPECT_THROW(build_context(2, -1.0), parameter_error);
  EXPECT_THROW(oracle_integrals(build_context(5, 0.5)), parameter_error);
  EXPECT_THROW(kernel(ctx_2_half(), KernelId::K00, 0.0, 1.0), domain_error);
}

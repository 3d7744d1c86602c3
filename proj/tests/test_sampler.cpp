#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "bures/sampler.hpp"

using namespace bures;

namespace {

McmcConfig quick(std::uint64_t seed) {
  McmcConfig c;
  c.seed = seed;
  c.burn_in = 1000;
  return c;
}

}  // namespace

TEST(Sampler, McmcIsReproducible) {
  const EnsembleParams p = params_from_alpha(3, 0.25);
  const SampleBatch a = sample_unconstrained(p, 2000, quick(9));
  const SampleBatch b = sample_unconstrained(p, 2000, quick(9));
  const SampleBatch c = sample_unconstrained(p, 2000, quick(10));
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.raw, b.raw);
  EXPECT_NE(a.values, c.values);
}

TEST(Sampler, OutputIndependentOfWorkerCount) {
  const EnsembleParams p = params_from_dims(2, 3);
  ::setenv("BURES_THREADS", "1", 1);
  const SampleBatch a = sample_unconstrained(p, 1000, quick(4));
  const SampleBatch ma = sample_matrix_model(2, 3, 1000, 4);
  ::setenv("BURES_THREADS", "3", 1);
  const SampleBatch b = sample_unconstrained(p, 1000, quick(4));
  const SampleBatch mb = sample_matrix_model(2, 3, 1000, 4);
  ::unsetenv("BURES_THREADS");
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(ma.values, mb.values);
}

TEST(Sampler, McmcMomentsMatchInducedEntropy) {
  const EnsembleParams p = params_from_alpha(2, 0.5);
  const SampleBatch b = sample_unconstrained(p, 40000, quick(21));
  const MomentReport r = summarize(b, p);
  EXPECT_LT(std::fabs(r.mean - induced_mean_T(p)), 4 * r.se_mean);
  EXPECT_LT(std::fabs(r.variance - induced_variance_T(p)), 4 * r.se_variance);
  EXPECT_GT(b.acceptance_rate, 0.15);
  EXPECT_LT(b.acceptance_rate, 0.5);
  EXPECT_LT(r.rhat, kRhatThreshold);
  EXPECT_FALSE(r.rhat_flag);
}

TEST(Sampler, NormalizedSpectraLieOnSimplex) {
  const EnsembleParams p = params_from_dims(3, 4);
  const SampleBatch u = sample_unconstrained(p, 500, quick(2));
  const SampleBatch c = to_constrained(u);
  const SampleBatch mm = sample_matrix_model(3, 4, 500, 2);
  for (const SampleBatch* b : {&c, &mm}) {
    ASSERT_EQ(b->raw.size(), b->values.size() * 3);
    for (std::size_t s = 0; s < b->values.size(); ++s) {
      const std::vector<double> lam(b->raw.begin() + 3 * s, b->raw.begin() + 3 * s + 3);
      EXPECT_NO_THROW(validate(Spectrum{lam}));
      EXPECT_NEAR(entropy_S(std::span<const double>(lam)), b->values[s], 1e-12);
      EXPECT_LE(b->values[s], std::log(3.0) + 1e-12);
    }
  }
  EXPECT_THROW(to_constrained(c), input_error);
}

TEST(Sampler, MatrixModelMomentsMatchExact) {
  const EnsembleParams p = params_from_dims(2, 3);
  const SampleBatch b = sample_matrix_model(2, 3, 40000, 77);
  const MomentReport r = summarize(b, p);
  EXPECT_LT(std::fabs(r.mean - mean_entropy(p)), 4 * r.se_mean);
  EXPECT_LT(std::fabs(r.variance - variance_entropy(p)), 4 * r.se_variance);
}

TEST(Sampler, HaarUnitaryIsUnitary) {
  std::mt19937_64 rng(8);
  const detail::cmat u = detail::haar_unitary(4, rng);
  EXPECT_LT((u.adjoint() * u - detail::cmat::Identity(4, 4)).norm(), 1e-13);
}

TEST(Sampler, OneDimensionalSubsystemIsDegenerate) {
  const EnsembleParams p = params_from_dims(1, 3);
  for (const SampleBatch& b : {to_constrained(sample_unconstrained(p, 200, quick(1))), sample_matrix_model(1, 3, 200, 1)}) {
    for (double v : b.values) EXPECT_EQ(v, 0.0);
    const MomentReport r = summarize(b, p);
    EXPECT_TRUE(r.degenerate);
    EXPECT_FALSE(r.ks_statistic.has_value());
  }
}

TEST(Sampler, ConfigValidation) {
  const EnsembleParams p = params_from_alpha(3, 0.5);
  McmcConfig c;
  c.burn_in = 999;
  EXPECT_THROW(sample_unconstrained(p, 10, c), parameter_error);
  c = McmcConfig{};
  c.thinning = 2;
  EXPECT_THROW(sample_unconstrained(p, 10, c), parameter_error);
  c = McmcConfig{};
  c.proposal_sigma = 0.0;
  EXPECT_THROW(sample_unconstrained(p, 10, c), parameter_error);
  EXPECT_THROW(sample_unconstrained(params_from_alpha(2, 0.5), 0), parameter_error);
  EXPECT_THROW(sample_matrix_model(3, 2, 10, 1), parameter_error);
  EXPECT_THROW(summarize(sample_matrix_model(2, 2, 50, 1), params_from_dims(2, 2)), input_error);
}

TEST(Sampler, CsvRoundTripIsExact) {
  const SampleBatch b = sample_matrix_model(2, 2, 300, 5);
  std::stringstream ss;
  write_batch_csv(ss, b, {"note=x"});
  const LoadedBatch l = read_batch_csv(ss);
  EXPECT_EQ(l.values, b.values);
  ASSERT_EQ(l.header.size(), 2u);
  EXPECT_EQ(l.header[0], "ensemble=constrained(m=2,n=2) seed=5");
  EXPECT_EQ(l.header[1], "note=x");
  std::stringstream bad("0.5\n0.3x\n");
  EXPECT_THROW(read_batch_csv(bad), input_error);
}

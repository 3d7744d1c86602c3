#pragma once

// Verification suites shared by the command-line tool and the acceptance
// runner. Each suite yields one row per check with the measured value, its
// reference, the residual and the tolerance it was held to.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bures/closedforms.hpp"
#include "bures/identities.hpp"
#include "bures/kernels.hpp"
#include "bures/moments.hpp"
#include "bures/sampler.hpp"

namespace bures {

struct CheckRow {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRow> rows;
  double seconds = 0.0;
  bool sampler_failure = false;
  std::string error;

  bool pass() const {
    if (!error.empty()) return false;
    for (const auto& r : rows) {
      if (!r.pass) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.pass ? 0 : 1;
    return n;
  }
  double worst_residual() const {
    double w = 0.0;
    for (const auto& r : rows) w = std::max(w, r.residual);
    return w;
  }
  void add(std::string name, double value, double reference, double residual, double tolerance) {
    rows.push_back({std::move(name), value, reference, residual, tolerance, residual <= tolerance});
  }
  void add_relative(std::string name, double value, double reference, double tolerance) {
    const double res = std::fabs(value - reference) / std::max(std::fabs(reference), 1e-300);
    add(std::move(name), value, reference, res, tolerance);
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace detail

// ---- identities ---------------------------------------------------------------

struct IdentitySuiteOptions {
  std::uint64_t seed = 7;
  int cases_per_identity = 500;
  double tolerance = kIdentityTolerance;
  double derivative_tolerance = 1e-6;
  double symmetry_tolerance = 1e-12;
};

inline SuiteReport verify_identities(const IdentitySuiteOptions& opt = {}) {
  detail::Stopwatch sw;
  SuiteReport rep;
  rep.suite = "identities";
  std::mt19937_64 rng(opt.seed);
  for (IdentityId id : kAllIdentities) {
    for (int k = 0; k < opt.cases_per_identity; ++k) {
      const IdentityCase c = random_case(id, rng);
      const double lhs = identity_lhs(c);
      const double rhs = identity_rhs(c);
      std::string name = std::string(to_string(id)) + " m=" + std::to_string(c.m) + " a=" + detail::fmt(c.a);
      if (id == IdentityId::A6) name += " b=" + detail::fmt(c.b);
      if (id == IdentityId::L41 || id == IdentityId::T3t2) name += " i=" + detail::fmt(c.i) + " s=" + detail::fmt(c.s);
      rep.add(name, lhs, rhs, identity_residual(c), opt.tolerance);
    }
  }
  // A6 is symmetric under a <-> b as an identity: the swapped residual is also ~0.
  std::mt19937_64 sym_rng(opt.seed ^ 0xa6);
  for (int k = 0; k < 20; ++k) {
    IdentityCase c = random_case(IdentityId::A6, sym_rng);
    const double r1 = identity_residual(c);
    std::swap(c.a, c.b);
    const double r2 = identity_residual(c);
    rep.add("A6 swap m=" + std::to_string(c.m), r2, r1, std::fabs(r1 - r2), opt.symmetry_tolerance);
  }
  const std::vector<std::tuple<double, double, double, int>> fd_cases = {
      {1, 2, 0.5, 4}, {0, 0, -0.5, 3}, {2, 1, 1.25, 5}, {0, 3, 2.5, 6}, {1, 1, -0.9, 2}, {0, 0, 0.0, 1}};
  for (const auto& [i, s, a, m] : fd_cases) {
    const DerivativeCheck d = t3t2_derivatives(i, s, a, m);
    rep.add("T3t2 d/di,d/ds,d2/dids i=" + detail::fmt(i) + " s=" + detail::fmt(s) + " a=" + detail::fmt(a) +
                " m=" + std::to_string(m),
            d.lhs_dids, d.rhs_dids, d.max_relative(), opt.derivative_tolerance);
  }
  rep.seconds = sw.seconds();
  return rep;
}

// ---- closed forms ---------------------------------------------------------

struct ClosedFormSuiteOptions {
  int m_max = 10;
  std::vector<double> alphas = {-0.5, 0.5, 1.5, 2.5, 1.25, 2.75};
  double tolerance = 1e-9;
  double precision_digits = 6.0;
};

inline SuiteReport verify_closedforms(const ClosedFormSuiteOptions& opt = {}) {
  detail::Stopwatch sw;
  SuiteReport rep;
  rep.suite = "closedforms";
  for (int m = 1; m <= opt.m_max; ++m) {
    for (double a : opt.alphas) {
      const IntegralBundle b = assemble_variance<long double>(m, a);
      const double ref = induced_variance_T(params_from_alpha(m, a));
      rep.add_relative("assembly m=" + std::to_string(m) + " a=" + detail::fmt(a), b.V_h_T, ref, opt.tolerance);
    }
  }
  for (int m = 1; m <= opt.m_max; ++m) {
    for (double a : opt.alphas) {
      if (a == 0.0 || (m == 1 && a == -0.5)) continue;  // prefactor vanishes
      if (!detail::dyadic(a)) continue;                  // no exact rational form
      const rational c = sum_block_coefficient(m, a);
      rep.add("sum-block m=" + std::to_string(m) + " a=" + detail::fmt(a), c.convert_to<double>(), 0.0,
              c == 0 ? 0.0 : 1.0, 0.0);
    }
  }
  {
    const double ext = assemble_variance<long double>(10, 2.5).V_h_T;
    const double dbl = assemble_variance<double>(10, 2.5).V_h_T;
    rep.add_relative("precision m=10 a=2.5 double vs extended", dbl, ext, std::pow(10.0, -opt.precision_digits));
  }
  rep.seconds = sw.seconds();
  return rep;
}

// ---- kernels ----------------------------------------------------------------

struct KernelSuiteOptions {
  std::vector<std::pair<int, double>> cases = {{1, 0.0}, {2, 0.5}, {2, -0.5}, {3, 0.5}};
  double tolerance = 1e-6;
  double h1_tolerance = 1e-8;
  double h2_tolerance = 1e-6;
  QuadratureConfig quadrature{};
};

inline void kernel_case_rows(SuiteReport& rep, int m, double a, const KernelSuiteOptions& opt) {
  const std::string tag = " m=" + std::to_string(m) + " a=" + detail::fmt(a);
  const KernelContext ctx = build_context(m, a, opt.quadrature);
  rep.add("biorthogonality" + tag, ctx.biorthogonality_residual, 0.0, ctx.biorthogonality_residual,
          kBiorthogonalityTolerance);
  const OracleIntegrals o = oracle_integrals(ctx);
  const IntegralBundle b = assemble_variance<long double>(m, a);
  const EnsembleParams p = params_from_alpha(m, a);
  rep.add_relative("I_A" + tag, o.I_A.value, b.I_A, opt.tolerance);
  rep.add_relative("I_B+I_C" + tag, o.I_B.value + o.I_C.value, b.I_BC, opt.tolerance);
  rep.add_relative("I_D" + tag, o.I_D.value, b.I_D, opt.tolerance);
  rep.add_relative("E_h[T]" + tag, o.E_h_T.value, induced_mean_T(p), opt.tolerance);
  rep.add_relative("V_h[T]" + tag, o.E_h_T2.value - o.E_h_T.value * o.E_h_T.value, induced_variance_T(p),
                   opt.tolerance);
  rep.add("h1 normalization" + tag, o.h1_norm.value, 1.0, std::fabs(o.h1_norm.value - 1.0), opt.h1_tolerance);
  if (m >= 2) {
    rep.add("h2 normalization" + tag, o.h2_norm.value, 1.0, std::fabs(o.h2_norm.value - 1.0), opt.h2_tolerance);
    rep.add("h2 marginal" + tag, o.h2_marginal_error, 0.0, o.h2_marginal_error, opt.h2_tolerance);
  }
  rep.add_relative("trace mean" + tag, o.trace_mean, p.d, opt.tolerance);
}

inline SuiteReport verify_kernels(const KernelSuiteOptions& opt = {}) {
  detail::Stopwatch sw;
  SuiteReport rep;
  rep.suite = "kernels";
  for (const auto& [m, a] : opt.cases) kernel_case_rows(rep, m, a, opt);
  rep.seconds = sw.seconds();
  return rep;
}

// ---- samplers ---------------------------------------------------------------

struct SamplerSuiteOptions {
  std::vector<std::pair<int, int>> dims = {{2, 2}, {2, 3}, {3, 4}, {4, 6}};
  std::size_t count = 100000;
  std::uint64_t seed = 2024;
  double sigmas = 3.0;
  double ks_p_min = 0.01;
};

struct SamplerCase {
  int m = 0, n = 0;
  SampleBatch unconstrained, mcmc, matrix;
};

inline void sampler_moment_rows(SuiteReport& rep, const std::string& tag, const SampleBatch& b,
                                const EnsembleParams& p, double sigmas) {
  const MomentReport r = summarize(b, p);
  const double mu = mean_entropy(p);
  const double var = variance_entropy(p);
  rep.add(tag + " mean (se units)", r.mean, mu, std::fabs(r.mean - mu) / r.se_mean, sigmas);
  rep.add(tag + " variance (se units)", r.variance, var, std::fabs(r.variance - var) / r.se_variance, sigmas);
}

inline SamplerCase run_sampler_case(int m, int n, std::size_t count, std::uint64_t seed) {
  SamplerCase c;
  c.m = m;
  c.n = n;
  const EnsembleParams p = params_from_dims(m, n);
  McmcConfig cfg;
  cfg.seed = seed + 17 * static_cast<std::uint64_t>(m) + 101 * static_cast<std::uint64_t>(n);
  c.unconstrained = sample_unconstrained(p, count, cfg);
  c.mcmc = to_constrained(c.unconstrained);
  c.matrix = sample_matrix_model(m, n, count, cfg.seed + 1);
  return c;
}

inline SuiteReport verify_samplers(const SamplerSuiteOptions& opt = {}) {
  detail::Stopwatch sw;
  SuiteReport rep;
  rep.suite = "samplers";
  try {
    for (const auto& [m, n] : opt.dims) {
      const EnsembleParams p = params_from_dims(m, n);
      const SamplerCase c = run_sampler_case(m, n, opt.count, opt.seed);
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      sampler_moment_rows(rep, "mcmc " + tag, c.mcmc, p, opt.sigmas);
      sampler_moment_rows(rep, "matrix " + tag, c.matrix, p, opt.sigmas);
      const KsResult ks = ks_two_sample(c.mcmc.values, c.matrix.values);
      // residual is 1 - p so that "residual <= 1 - p_min" reads as p >= p_min
      rep.add("two-sample KS p " + tag, ks.p_value, opt.ks_p_min, 1.0 - ks.p_value, 1.0 - opt.ks_p_min);
    }
  } catch (const tuning_error& e) {
    rep.sampler_failure = true;
    rep.error = e.what();
  }
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace bures

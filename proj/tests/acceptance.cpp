// Acceptance runner: one PASS/FAIL line per criterion with its tolerance and
// runtime. Exit status is the number of failed criteria (capped at 8).

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "bures/closedforms.hpp"
#include "bures/identities.hpp"
#include "bures/kernels.hpp"
#include "bures/moments.hpp"
#include "bures/sampler.hpp"
#include "bures/statistics.hpp"
#include "bures/verify.hpp"

using namespace bures;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail, double seconds, double limit) {
  const bool in_time = limit <= 0.0 || seconds < limit;
  const bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s | %s | %.2fs", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), seconds);
  if (limit > 0.0) std::printf(" (limit %.0fs%s)", limit, in_time ? "" : ", exceeded");
  std::printf("\n");
  std::fflush(stdout);
}

void note(const std::string& s) {
  std::printf("    %s\n", s.c_str());
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void first_failures(const SuiteReport& r, int max_lines = 5) {
  int shown = 0;
  for (const auto& row : r.rows) {
    if (!row.pass && shown++ < max_lines) note("failing: " + row.name + " residual " + sci(row.residual));
  }
  if (!r.error.empty()) note("error: " + r.error);
}

void criterion1() {
  detail::Stopwatch sw;
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const EnsembleParams p = params_from_dims(1, n);
    worst = std::max({worst, std::fabs(mean_entropy(p)), std::fabs(variance_entropy(p))});
  }
  report(1, "m=1 mean and variance vanish for n in 1..20", worst <= 1e-14,
         "max |value| " + sci(worst) + " <= 1e-14", sw.seconds(), 0.0);
}

void criterion2() {
  detail::Stopwatch sw;
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      const EnsembleParams p = params_from_dims(m, n);
      const double a = induced_variance_T(p), b = induced_variance_T_physical(p);
      worst = std::max(worst, std::fabs(a - b) / std::fabs(b));
    }
  }
  report(2, "induced variance specializes to (m,n) form, 1<=m<=n<=12", worst <= 1e-12,
         "max rel " + sci(worst) + " <= 1e-12", sw.seconds(), 1.0);
}

void criterion3() {
  IdentitySuiteOptions o;
  o.seed = 7;
  o.cases_per_identity = 500;
  const SuiteReport r = verify_identities(o);
  report(3, "identity suite, 500 seeded cases x 10 identities", r.pass(),
         std::to_string(r.rows.size()) + " checks, worst residual " + sci(r.worst_residual()) + " <= 1e-11",
         r.seconds, 10.0);
  first_failures(r);
}

void criterion4() {
  const SuiteReport r = verify_closedforms();
  double worst_assembly = 0.0;
  int sum_blocks = 0;
  for (const auto& row : r.rows) {
    if (row.name.rfind("assembly", 0) == 0) worst_assembly = std::max(worst_assembly, row.residual);
    if (row.name.rfind("sum-block", 0) == 0) ++sum_blocks;
  }
  report(4, "closed-form assembly on m=1..10 x 6 alphas, exact sum-block cancellation", r.pass(),
         "max rel " + sci(worst_assembly) + " <= 1e-9; " + std::to_string(sum_blocks) + " sum blocks exactly 0",
         r.seconds, 30.0);
  first_failures(r);
  // The "+2 I_D" sign as printed does not reproduce the induced variance.
  double worst_literal = 0.0;
  for (int m = 1; m <= 10; ++m) {
    for (double a : {-0.5, 0.5, 1.5, 2.5, 1.25, 2.75}) {
      const double lit = assemble_variance<long double>(m, a).V_h_T_literal;
      const double ref = induced_variance_T(params_from_alpha(m, a));
      worst_literal = std::max(worst_literal, std::fabs(lit - ref) / std::fabs(ref));
    }
  }
  note("diagnostic: (I_A - I_BC + 2 I_D)/2 as printed misses by up to " + sci(worst_literal) +
       " relative; the suite uses (I_A - I_BC - 2 I_D)/2");
}

void criterion5() {
  const SuiteReport r = verify_kernels();
  report(5, "kernel quadrature oracle vs closed forms at (1,0),(2,1/2),(2,-1/2),(3,1/2)", r.pass(),
         std::to_string(r.rows.size()) + " checks, worst residual " + sci(r.worst_residual()) +
             " (integrals 1e-6 rel, biorthogonality 1e-8, h1 1e-8, h2 1e-6)",
         r.seconds, 120.0);
  first_failures(r);
}

void criterion6(std::map<std::pair<int, int>, SamplerCase>& keep, std::size_t count) {
  detail::Stopwatch sw;
  SuiteReport rep;
  rep.suite = "samplers";
  const SamplerSuiteOptions opt;
  try {
    for (const auto& [m, n] : opt.dims) {
      const EnsembleParams p = params_from_dims(m, n);
      SamplerCase c = run_sampler_case(m, n, count, opt.seed);
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      sampler_moment_rows(rep, "mcmc " + tag, c.mcmc, p, 3.0);
      sampler_moment_rows(rep, "matrix " + tag, c.matrix, p, 3.0);
      const KsResult ks = ks_two_sample(c.mcmc.values, c.matrix.values);
      rep.add("two-sample KS p " + tag, ks.p_value, 0.01, 1.0 - ks.p_value, 0.99);
      keep.emplace(std::make_pair(m, n), std::move(c));
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  double worst_se = 0.0, min_p = 1.0;
  for (const auto& row : rep.rows) {
    if (row.name.find("KS") != std::string::npos) {
      min_p = std::min(min_p, row.value);
    } else {
      worst_se = std::max(worst_se, row.residual);
    }
  }
  report(6, "MCMC and matrix-model moments vs exact, " + std::to_string(count) + " samples", rep.pass(),
         "worst |delta| " + sci(worst_se) + " se <= 3; min KS p " + sci(min_p) + " > 0.01", sw.seconds(), 300.0);
  for (const auto& row : rep.rows) note(row.name + ": " + sci(row.residual) + (row.pass ? "" : "  <-- fail"));
  if (!rep.error.empty()) note("error: " + rep.error);
}

void criterion7(std::size_t count) {
  detail::Stopwatch sw;
  try {
    McmcConfig cfg;
    cfg.seed = 4606;
    const EnsembleParams p46 = params_from_dims(4, 6);
    const SampleBatch b46 = to_constrained(sample_unconstrained(p46, count, cfg));
    cfg.seed = 162416;
    const EnsembleParams p1624 = params_from_dims(16, 24);
    const SampleBatch b1624 = to_constrained(sample_unconstrained(p1624, count, cfg));
    const MomentReport r46 = summarize(b46, p46);
    const MomentReport r1624 = summarize(b1624, p1624);
    const double z = r46.skewness / r46.se_skewness;
    const bool skew_ok = z < -3.0;
    const bool ks_ok = *r1624.ks_statistic < *r46.ks_statistic;
    report(7, "(4,6) left skew and KS-to-normal shrinks from (4,6) to (16,24)", skew_ok && ks_ok,
           "skew(4,6) " + sci(r46.skewness) + " = " + sci(z) + " se (< -3); KS " + sci(*r46.ks_statistic) + " -> " +
               sci(*r1624.ks_statistic),
           sw.seconds(), 600.0);
  } catch (const std::exception& e) {
    report(7, "(4,6) left skew and KS-to-normal shrinks from (4,6) to (16,24)", false, e.what(), sw.seconds(), 600.0);
  }
}

void criterion8(const std::map<std::pair<int, int>, SamplerCase>& keep) {
  detail::Stopwatch sw;
  bool ok = true;
  std::string detail;
  for (const auto& key : {std::make_pair(2, 2), std::make_pair(3, 4)}) {
    const auto it = keep.find(key);
    if (it == keep.end()) {
      ok = false;
      detail += "missing samples; ";
      continue;
    }
    const SamplerCase& c = it->second;
    const EnsembleParams p = params_from_dims(key.first, key.second);
    std::vector<double> t2, s2;
    for (double t : c.unconstrained.values) t2.push_back(t * t);
    for (double s : c.matrix.values) s2.push_back(s * s);
    const SampleMoments mt = sample_moments(t2);
    const SampleMoments ms = sample_moments(s2);
    const double scale = p.d * (p.d + 1.0);
    const double predicted = second_moment_from_T(p, mt.mean, mean_entropy(p));
    const double se = std::sqrt(std::pow(mt.se_mean / scale, 2) + ms.se_mean * ms.se_mean);
    const double z = (predicted - ms.mean) / se;
    ok = ok && std::fabs(z) <= 3.0;
    detail += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ") " + sci(predicted) + " vs " +
              sci(ms.mean) + " = " + sci(z) + " se; ";
  }
  report(8, "E_f[S^2] from MC E_h[T^2] and exact E_f[S] vs matrix-model E_f[S^2]", ok, detail + "tol 3 se",
         sw.seconds(), 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t count = 100000;
  if (argc > 2 && std::string(argv[1]) == "--count") count = std::stoul(argv[2]);
  std::printf("acceptance run: %zu samples per Monte Carlo case, %u worker(s)\n", count, detail::worker_count());
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  std::map<std::pair<int, int>, SamplerCase> keep;
  criterion6(keep, count);
  criterion7(count);
  criterion8(keep);
  std::printf("%d of 8 criteria failed\n", failures);
  return std::min(failures, 8);
}

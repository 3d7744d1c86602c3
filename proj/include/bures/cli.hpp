#pragma once

// Command-line front end: moments, verify, sample, distribution, oracle.
// run() is the whole program; the executable only forwards argv.
//
// Exit codes: 0 pass, 1 numerical check failure, 2 sampler/tuning failure,
// 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bures/closedforms.hpp"
#include "bures/detail/parallel.hpp"
#include "bures/error.hpp"
#include "bures/kernels.hpp"
#include "bures/moments.hpp"
#include "bures/sampler.hpp"
#include "bures/statistics.hpp"
#include "bures/verify.hpp"

#ifndef BURES_VERSION
#define BURES_VERSION "0.0.0"
#endif

namespace bures::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitSampler = 2;
inline constexpr int kExitUsage = 64;

using json = nlohmann::ordered_json;

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // flag order
  std::uint64_t seed = 0;
  std::string tool_version = BURES_VERSION;
  std::string timestamp;

  std::vector<std::string> header_lines() const {
    std::vector<std::string> out;
    out.push_back("command=" + command);
    for (const auto& [k, v] : params) out.push_back("param." + k + "=" + v);
    out.push_back("seed=" + std::to_string(seed));
    out.push_back("tool_version=" + tool_version);
    out.push_back("timestamp=" + timestamp);
    return out;
  }

  json to_json() const {
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    return json{{"command", command}, {"params", p}, {"seed", seed}, {"tool_version", tool_version},
                {"timestamp", timestamp}};
  }
};

// UTC, or SOURCE_DATE_EPOCH when set so that whole files can be reproduced.
inline std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(e, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline void write_header(std::ostream& os, const RunManifest& man) {
  for (const auto& line : man.header_lines()) os << "# " << line << "\n";
}

// Opens path for writing, or returns the fallback stream when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw input_error("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

// ---- moments ----------------------------------------------------------------

struct MomentsArgs {
  int m = 0;
  std::optional<int> n;
  std::optional<double> alpha;
  double specialization_tol = 1e-12;
};

inline json moments_report(const MomentsArgs& a) {
  if (a.n && a.alpha) throw parameter_error("moments: give either --n or --alpha, not both");
  if (!a.n && !a.alpha) throw parameter_error("moments: one of --n or --alpha is required");
  const EnsembleParams p = a.n ? params_from_dims(a.m, *a.n) : params_from_alpha(a.m, *a.alpha);
  json j;
  j["m"] = p.m;
  if (p.n) j["n"] = *p.n;
  j["alpha"] = p.alpha;
  j["d"] = p.d;
  if (p.physical()) {
    j["mean"] = mean_entropy(p);
    j["variance"] = variance_entropy(p);
  }
  j["induced_mean_T"] = induced_mean_T(p);
  j["induced_variance_T"] = induced_variance_T(p);
  if (p.physical()) {
    const double v = induced_variance_T(p);
    const double w = induced_variance_T_physical(p);
    const double rel = std::fabs(v - w) / std::max(std::fabs(w), 1e-300);
    j["specialization_check"] = {{"induced_variance_T_physical", w},
                                 {"relative_difference", rel},
                                 {"tolerance", a.specialization_tol},
                                 {"pass", rel <= a.specialization_tol}};
  }
  return j;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 7;
  int cases = 500;
  double identity_tol = kIdentityTolerance;
  double closedform_tol = 1e-9;
  int m_max = 10;
  std::vector<double> alphas;
  std::optional<int> kernel_m;
  std::optional<double> kernel_alpha;
  double kernel_tol = 1e-6;
  std::size_t count = 100000;
  double sigmas = 3.0;
  double ks_p_min = 0.01;
  std::string table_path;
};

inline std::vector<SuiteReport> run_verify(const VerifyArgs& a) {
  std::vector<SuiteReport> out;
  const bool all = a.suite == "all";
  if (all || a.suite == "identities") {
    IdentitySuiteOptions o;
    o.seed = a.seed;
    o.cases_per_identity = a.cases;
    o.tolerance = a.identity_tol;
    out.push_back(verify_identities(o));
  }
  if (all || a.suite == "closedforms") {
    ClosedFormSuiteOptions o;
    o.m_max = a.m_max;
    o.tolerance = a.closedform_tol;
    if (!a.alphas.empty()) o.alphas = a.alphas;
    out.push_back(verify_closedforms(o));
  }
  if (all || a.suite == "kernels") {
    KernelSuiteOptions o;
    o.tolerance = a.kernel_tol;
    if (a.kernel_m || a.kernel_alpha) {
      if (!a.kernel_m || !a.kernel_alpha) throw parameter_error("verify kernels: --m and --alpha go together");
      o.cases = {{*a.kernel_m, *a.kernel_alpha}};
    }
    out.push_back(verify_kernels(o));
  }
  if (all || a.suite == "samplers") {
    SamplerSuiteOptions o;
    o.count = a.count;
    o.seed = a.seed;
    o.sigmas = a.sigmas;
    o.ks_p_min = a.ks_p_min;
    out.push_back(verify_samplers(o));
  }
  return out;
}

inline void write_verify_table(std::ostream& os, const RunManifest& man, const std::vector<SuiteReport>& reps) {
  write_header(os, man);
  os << "suite,check,value,reference,residual,tolerance,pass\n";
  for (const auto& r : reps) {
    for (const auto& row : r.rows) {
      os << r.suite << ",\"" << row.name << "\"," << num(row.value) << "," << num(row.reference) << ","
         << num(row.residual) << "," << num(row.tolerance) << "," << (row.pass ? 1 : 0) << "\n";
    }
  }
}

inline json verify_summary(const RunManifest& man, const std::vector<SuiteReport>& reps) {
  json j;
  j["manifest"] = man.to_json();
  bool pass = true;
  json suites = json::array();
  for (const auto& r : reps) {
    json s{{"suite", r.suite},     {"checks", r.rows.size()},          {"failures", r.failures()},
           {"pass", r.pass()},     {"worst_residual", r.worst_residual()}, {"seconds", r.seconds}};
    if (!r.error.empty()) s["error"] = r.error;
    json failing = json::array();
    for (const auto& row : r.rows) {
      if (!row.pass) failing.push_back({{"check", row.name}, {"residual", row.residual}, {"tolerance", row.tolerance}});
    }
    s["failing"] = failing;
    suites.push_back(s);
    pass = pass && r.pass();
  }
  j["suites"] = suites;
  j["pass"] = pass;
  return j;
}

// ---- sample / distribution ------------------------------------------------

struct SampleArgs {
  int m = 0;
  int n = 0;
  std::size_t count = 100000;
  std::uint64_t seed = 1;
  std::string method = "mcmc";
  int burn_in = 4000;
  int thinning = 0;
  int chains = 4;
  std::string out_path;
  std::string report_path;
  int bins = 50;
};

inline SampleBatch draw(const SampleArgs& a) {
  if (a.count < 100) throw parameter_error("sample: --count must be >= 100");
  const EnsembleParams p = params_from_dims(a.m, a.n);
  if (a.method == "matrix") return sample_matrix_model(a.m, a.n, a.count, a.seed);
  McmcConfig cfg;
  cfg.seed = a.seed;
  cfg.burn_in = a.burn_in;
  cfg.thinning = a.thinning;
  cfg.chains = a.chains;
  return to_constrained(sample_unconstrained(p, a.count, cfg));
}

inline json sample_report(const SampleBatch& b, const MomentReport& r) {
  const EnsembleParams& p = b.params;
  json j;
  j["ensemble"] = ensemble_label(b);
  j["method"] = b.method;
  j["count"] = r.count;
  j["mean"] = r.mean;
  j["variance"] = r.variance;
  j["skewness"] = r.skewness;
  j["se_mean"] = r.se_mean;
  j["se_variance"] = r.se_variance;
  j["se_skewness"] = r.se_skewness;
  j["exact_mean"] = mean_entropy(p);
  j["exact_variance"] = variance_entropy(p);
  j["degenerate"] = r.degenerate;
  if (!r.degenerate) {
    j["mean_delta_se"] = (r.mean - mean_entropy(p)) / r.se_mean;
    j["variance_delta_se"] = (r.variance - variance_entropy(p)) / r.se_variance;
    j["skewness_z"] = r.skewness / r.se_skewness;
  }
  if (r.ks_statistic) j["ks_statistic"] = *r.ks_statistic;
  if (std::isfinite(b.acceptance_rate)) j["acceptance_rate"] = b.acceptance_rate;
  if (std::isfinite(r.rhat)) {
    j["rhat"] = r.rhat;
    j["rhat_flag"] = r.rhat_flag;
  }
  return j;
}

struct HistogramRow {
  double center = 0.0, empirical = 0.0, gaussian = 0.0;
};

// Histogram of the standardized entropy over [min, max] of the sample.
inline std::vector<HistogramRow> standardized_histogram(const SampleBatch& b, int bins) {
  if (bins < 1) throw parameter_error("distribution: --bins must be >= 1");
  const EnsembleParams& p = b.params;
  if (!(variance_entropy(p) > 0.0)) throw parameter_error("distribution: degenerate ensemble (m = 1)");
  std::vector<double> z(b.values.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = standardize(b.values[i], p);
  const auto [lo_it, hi_it] = std::minmax_element(z.begin(), z.end());
  const double lo = *lo_it;
  const double hi = *hi_it > lo ? *hi_it : lo + 1.0;
  const double width = (hi - lo) / bins;
  std::vector<std::size_t> counts(bins, 0);
  for (double v : z) {
    const int k = std::clamp(static_cast<int>((v - lo) / width), 0, bins - 1);
    ++counts[k];
  }
  std::vector<HistogramRow> out(bins);
  const double total = static_cast<double>(z.size());
  for (int k = 0; k < bins; ++k) {
    const double c = lo + (k + 0.5) * width;
    out[k] = {c, counts[k] / (total * width), std::exp(-0.5 * c * c) / std::sqrt(2.0 * static_cast<double>(kPi))};
  }
  return out;
}

// ---- oracle -----------------------------------------------------------------

inline json oracle_report(int m, double alpha) {
  const KernelContext ctx = build_context(m, alpha);
  const OracleIntegrals o = oracle_integrals(ctx);
  const IntegralBundle cf = assemble_variance<long double>(m, alpha);
  const EnsembleParams p = params_from_alpha(m, alpha);
  const auto entry = [](const OracleValue& v, double closed) {
    return json{{"quadrature", v.value},
                {"error_estimate", v.error},
                {"closed_form", closed},
                {"relative_difference", std::fabs(v.value - closed) / std::max(std::fabs(closed), 1e-300)}};
  };
  json j;
  j["m"] = m;
  j["alpha"] = alpha;
  j["biorthogonality_residual"] = ctx.biorthogonality_residual;
  j["I_A"] = entry(o.I_A, cf.I_A);
  j["I_B"] = {{"quadrature", o.I_B.value}, {"error_estimate", o.I_B.error}};
  j["I_C"] = {{"quadrature", o.I_C.value}, {"error_estimate", o.I_C.error}};
  j["I_B+I_C"] = entry({o.I_B.value + o.I_C.value, o.I_B.error + o.I_C.error}, cf.I_BC);
  j["I_D"] = entry(o.I_D, cf.I_D);
  j["E_h_T"] = entry(o.E_h_T, induced_mean_T(p));
  const double v = o.E_h_T2.value - o.E_h_T.value * o.E_h_T.value;
  j["V_h_T"] = entry({v, o.E_h_T2.error + 2 * std::fabs(o.E_h_T.value) * o.E_h_T.error}, induced_variance_T(p));
  j["h1_norm"] = o.h1_norm.value;
  j["h2_norm"] = o.h2_norm.value;
  j["h2_marginal_error"] = o.h2_marginal_error;
  j["trace_mean"] = o.trace_mean;
  j["refinement_level"] = o.level;
  j["converged"] = o.converged;
  return j;
}

// ---- driver -----------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo moments of von Neumann entropy over the Bures-Hall ensemble", "bures"};
  app.set_version_flag("--version", BURES_VERSION);
  app.require_subcommand(1);

  MomentsArgs ma;
  auto* c_mom = app.add_subcommand("moments", "closed-form entropy and induced-entropy moments");
  c_mom->add_option("--m", ma.m, "subsystem dimension m")->required()->check(CLI::PositiveNumber);
  auto* o_n = c_mom->add_option("--n", ma.n, "environment dimension n >= m");
  auto* o_a = c_mom->add_option("--alpha", ma.alpha, "ensemble parameter alpha > -1");
  o_n->excludes(o_a);
  c_mom->add_option("--specialization-tol", ma.specialization_tol, "relative tolerance of the (m, n) cross-check");

  VerifyArgs va;
  auto* c_ver = app.add_subcommand("verify", "run a verification suite");
  c_ver->add_option("suite", va.suite, "identities|closedforms|kernels|samplers|all")
      ->check(CLI::IsMember({"identities", "closedforms", "kernels", "samplers", "all"}));
  c_ver->add_option("--seed", va.seed, "random seed");
  c_ver->add_option("--cases", va.cases, "random cases per identity")->check(CLI::PositiveNumber);
  c_ver->add_option("--identity-tol", va.identity_tol);
  c_ver->add_option("--closedform-tol", va.closedform_tol);
  c_ver->add_option("--m-max", va.m_max, "largest m on the closed-form grid")->check(CLI::Range(1, 40));
  c_ver->add_option("--alphas", va.alphas, "alpha grid for closed forms");
  c_ver->add_option("--m", va.kernel_m, "single kernel case: m");
  c_ver->add_option("--alpha", va.kernel_alpha, "single kernel case: alpha");
  c_ver->add_option("--kernel-tol", va.kernel_tol);
  c_ver->add_option("--count", va.count, "samples per sampler and case")->check(CLI::Range(100, 100000000));
  c_ver->add_option("--sigmas", va.sigmas, "moment tolerance in standard errors");
  c_ver->add_option("--ks-p-min", va.ks_p_min, "minimum two-sample KS p-value");
  c_ver->add_option("--table", va.table_path, "write the per-check CSV table here (default: stdout)");

  SampleArgs sa;
  const auto add_sample_options = [&sa](CLI::App* c) {
    c->add_option("--m", sa.m)->required()->check(CLI::PositiveNumber);
    c->add_option("--n", sa.n)->required()->check(CLI::PositiveNumber);
    c->add_option("--count", sa.count)->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    c->add_option("--seed", sa.seed);
    c->add_option("--method", sa.method)->check(CLI::IsMember({"mcmc", "matrix"}));
    c->add_option("--burn-in", sa.burn_in);
    c->add_option("--thinning", sa.thinning, "sweeps between kept samples (0: 2m+4)");
    c->add_option("--chains", sa.chains);
    c->add_option("--out", sa.out_path, "CSV output (default: stdout)");
  };
  auto* c_smp = app.add_subcommand("sample", "draw entropy samples and compare with the exact moments");
  add_sample_options(c_smp);
  c_smp->add_option("--report", sa.report_path, "JSON report path (default: stdout, or stderr when CSV goes to stdout)");
  auto* c_dst = app.add_subcommand("distribution", "histogram of the standardized entropy with a Gaussian overlay");
  add_sample_options(c_dst);
  c_dst->add_option("--bins", sa.bins)->check(CLI::PositiveNumber);

  int om = 2;
  double oa = 0.5;
  auto* c_orc = app.add_subcommand("oracle", "kernel quadrature oracle against the closed forms");
  c_orc->add_option("--m", om)->required()->check(CLI::Range(1, 4));
  c_orc->add_option("--alpha", oa)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << BURES_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  RunManifest man;
  man.timestamp = utc_timestamp();
  CLI::App* sub = app.get_subcommands().front();
  man.command = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string v;
    for (const auto& r : opt->results()) v += (v.empty() ? "" : " ") + r;
    man.params.emplace_back(opt->get_single_name(), v);
  }
  man.params.emplace_back("threads", std::to_string(detail::worker_count()));

  try {
    if (sub == c_mom) {
      json j = moments_report(ma);
      out << j.dump(2) << "\n";
      return j.contains("specialization_check") && !j["specialization_check"]["pass"].get<bool>() ? kExitCheckFailed
                                                                                                 : kExitOk;
    }
    if (sub == c_ver) {
      man.seed = va.seed;
      const auto reps = run_verify(va);
      {
        Sink table(va.table_path, out);
        write_verify_table(*table, man, reps);
      }
      const json j = verify_summary(man, reps);
      (va.table_path.empty() ? err : out) << j.dump(2) << "\n";
      for (const auto& r : reps) {
        if (r.sampler_failure) return kExitSampler;
      }
      return j["pass"].get<bool>() ? kExitOk : kExitCheckFailed;
    }
    if (sub == c_smp || sub == c_dst) {
      man.seed = sa.seed;
      const SampleBatch b = draw(sa);
      std::vector<std::string> extra = man.header_lines();
      if (sub == c_smp) {
        {
          Sink csv(sa.out_path, out);
          write_batch_csv(*csv, b, extra);
        }
        json j = sample_report(b, summarize(b, b.params));
        j["manifest"] = man.to_json();
        if (!sa.report_path.empty()) {
          Sink rep(sa.report_path, out);
          *rep << j.dump(2) << "\n";
        } else {
          (sa.out_path.empty() ? err : out) << j.dump(2) << "\n";
        }
        return kExitOk;
      }
      const auto rows = standardized_histogram(b, sa.bins);
      Sink csv(sa.out_path, out);
      *csv << "# ensemble=" << ensemble_label(b) << " seed=" << b.seed << "\n";
      write_header(*csv, man);
      *csv << "bin_center,empirical_density,gaussian_density\n";
      for (const auto& r : rows) *csv << num(r.center) << "," << num(r.empirical) << "," << num(r.gaussian) << "\n";
      return kExitOk;
    }
    if (sub == c_orc) {
      json j = oracle_report(om, oa);
      j["manifest"] = man.to_json();
      out << j.dump(2) << "\n";
      return j["converged"].get<bool>() ? kExitOk : kExitCheckFailed;
    }
  } catch (const tuning_error& e) {
    err << "sampler failure: " << e.what() << "\n";
    return kExitSampler;
  } catch (const parameter_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "check failure: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace bures::cli

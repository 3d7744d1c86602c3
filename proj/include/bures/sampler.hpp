#pragma once

// Monte Carlo routes to Bures-Hall spectra.
//
// sample_unconstrained: single-site Metropolis in u = ln x on
//   log h(u) = sum_{i<j} [2 ln|x_i - x_j| - ln(x_i + x_j)] + sum_i [(alpha+1) u_i - x_i].
// to_constrained: lambda = x / sum x, exact draws of the constrained law.
// sample_matrix_model: W = (I+U) Z Z^H (I+U)^H with Z complex Ginibre (m x n)
//   and U from |det(I+U)|^(2(n-m)) dHaar by independence Metropolis.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bures/detail/parallel.hpp"
#include "bures/error.hpp"
#include "bures/moments.hpp"
#include "bures/statistics.hpp"

namespace bures {

struct McmcConfig {
  int burn_in = 4000;     // sweeps
  int thinning = 0;       // sweeps between emitted samples; 0 picks 2m + 4
  double proposal_sigma = 0.5;
  std::uint64_t seed = 1;
  int chains = 4;
};

enum class BatchKind { constrained, unconstrained };

struct SampleBatch {
  EnsembleParams params;
  BatchKind kind = BatchKind::constrained;
  std::vector<double> values;  // S (constrained) or T (unconstrained)
  std::vector<double> raw;     // row-major count x m spectra (x for unconstrained, lambda for matrix model)
  double acceptance_rate = std::numeric_limits<double>::quiet_NaN();
  double rhat = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> tuned_sigma;  // per chain
  std::uint64_t seed = 0;
  std::string method;  // "mcmc", "mcmc+normalize", "matrix"
};

struct MomentReport {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double se_mean = 0.0;
  double se_variance = 0.0;
  double se_skewness = 0.0;
  std::optional<double> ks_statistic;  // absent when the exact variance is 0
  bool degenerate = false;
  double rhat = std::numeric_limits<double>::quiet_NaN();
  bool rhat_flag = false;  // split R-hat > 1.05
};

inline constexpr double kRhatThreshold = 1.05;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x5851f42d4c957f2dULL * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

inline std::vector<std::size_t> split_counts(std::size_t count, int parts) {
  std::vector<std::size_t> out(parts, count / parts);
  for (std::size_t i = 0; i < count % parts; ++i) ++out[i];
  return out;
}

struct ChainResult {
  std::vector<double> raw;  // n x m
  std::vector<double> T;
  double acceptance = 0.0;
  double sigma = 0.0;
};

inline double site_delta(const std::vector<double>& x, int i, double x_new, double alpha) {
  const double x_old = x[i];
  double delta = (alpha + 1.0) * std::log(x_new / x_old) - (x_new - x_old);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    const double xj = x[j];
    delta += 2.0 * std::log(std::fabs(x_new - xj) / std::fabs(x_old - xj)) - std::log((x_new + xj) / (x_old + xj));
  }
  return delta;
}

inline ChainResult run_chain(const EnsembleParams& p, std::size_t count, const McmcConfig& cfg,
                             std::uint64_t seed, int thinning) {
  const int m = p.m;
  const double alpha = p.alpha;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif;
  std::vector<double> x(m);
  for (int i = 0; i < m; ++i) x[i] = (alpha + 1.0) * (1.0 + 2.0 * i) + 0.1 * unif(rng);

  double log_sigma = std::log(cfg.proposal_sigma);
  const auto sweep = [&](double sigma) {
    int accepted = 0;
    for (int i = 0; i < m; ++i) {
      const double x_new = x[i] * std::exp(sigma * normal(rng));
      if (x_new == x[i] || !(x_new > 0.0) || !std::isfinite(x_new)) continue;
      const double delta = site_delta(x, i, x_new, alpha);
      if (delta >= 0.0 || unif(rng) < std::exp(delta)) {
        x[i] = x_new;
        ++accepted;
      }
    }
    return static_cast<double>(accepted) / m;
  };
  // Robbins-Monro on log sigma towards 0.3 acceptance, then frozen.
  for (int t = 0; t < cfg.burn_in; ++t) {
    const double acc = sweep(std::exp(log_sigma));
    log_sigma += (acc - 0.3) / std::pow(t + 10.0, 0.6);
  }
  const double sigma = std::exp(log_sigma);
  ChainResult r;
  r.sigma = sigma;
  r.raw.reserve(count * m);
  r.T.reserve(count);
  double acc_sum = 0.0;
  std::size_t sweeps = 0;
  for (std::size_t s = 0; s < count; ++s) {
    for (int k = 0; k < thinning; ++k) {
      acc_sum += sweep(sigma);
      ++sweeps;
    }
    r.raw.insert(r.raw.end(), x.begin(), x.end());
    r.T.push_back(entropy_T(std::span<const double>(x)));
  }
  r.acceptance = sweeps ? acc_sum / sweeps : 0.0;
  return r;
}

}  // namespace detail

inline int effective_thinning(const EnsembleParams& p, const McmcConfig& cfg) {
  return cfg.thinning > 0 ? cfg.thinning : 2 * p.m + 4;
}

inline void validate(const McmcConfig& cfg, const EnsembleParams& p) {
  if (cfg.burn_in < 1000) throw parameter_error("McmcConfig: burn_in must be >= 1000");
  if (effective_thinning(p, cfg) < p.m) throw parameter_error("McmcConfig: thinning must be >= m");
  if (!(cfg.proposal_sigma > 0.0)) throw parameter_error("McmcConfig: proposal_sigma must be > 0");
  if (cfg.chains < 1) throw parameter_error("McmcConfig: chains must be >= 1");
}

inline SampleBatch sample_unconstrained(const EnsembleParams& p, std::size_t count, const McmcConfig& cfg = {}) {
  if (!(p.alpha > -1.0)) throw parameter_error("sample_unconstrained: need alpha > -1");
  if (count < 1) throw parameter_error("sample_unconstrained: count must be >= 1");
  validate(cfg, p);
  const int thinning = effective_thinning(p, cfg);
  const auto counts = detail::split_counts(count, cfg.chains);
  std::vector<detail::ChainResult> chains(cfg.chains);
  detail::parallel_for(cfg.chains, [&](std::size_t c) {
    chains[c] = detail::run_chain(p, counts[c], cfg, detail::stream_seed(cfg.seed, c), thinning);
  });
  SampleBatch b;
  b.params = p;
  b.kind = BatchKind::unconstrained;
  b.seed = cfg.seed;
  b.method = "mcmc";
  double acc = 0.0;
  std::vector<std::vector<double>> per_chain;
  for (int c = 0; c < cfg.chains; ++c) {
    b.values.insert(b.values.end(), chains[c].T.begin(), chains[c].T.end());
    b.raw.insert(b.raw.end(), chains[c].raw.begin(), chains[c].raw.end());
    b.tuned_sigma.push_back(chains[c].sigma);
    acc += chains[c].acceptance * counts[c];
    per_chain.push_back(std::move(chains[c].T));
  }
  b.acceptance_rate = acc / static_cast<double>(count);
  if (b.acceptance_rate < 0.01 || b.acceptance_rate > 0.95) {
    throw tuning_error("sample_unconstrained: acceptance rate " + std::to_string(b.acceptance_rate) +
                       " outside [0.01, 0.95] after tuning");
  }
  b.rhat = split_rhat(per_chain);
  return b;
}

inline SampleBatch to_constrained(const SampleBatch& in) {
  if (in.kind != BatchKind::unconstrained) throw input_error("to_constrained: needs an unconstrained batch");
  const int m = in.params.m;
  if (in.raw.size() != in.values.size() * m) throw input_error("to_constrained: raw spectra not retained");
  SampleBatch out;
  out.params = in.params;
  out.kind = BatchKind::constrained;
  out.seed = in.seed;
  out.acceptance_rate = in.acceptance_rate;
  out.rhat = in.rhat;
  out.tuned_sigma = in.tuned_sigma;
  out.method = "mcmc+normalize";
  out.raw.resize(in.raw.size());
  out.values.resize(in.values.size());
  for (std::size_t s = 0; s < in.values.size(); ++s) {
    const double* x = &in.raw[s * m];
    long double theta = 0.0L;
    for (int i = 0; i < m; ++i) theta += x[i];
    if (!(theta > 0.0L)) throw std::logic_error("to_constrained: zero trace");
    double* lam = &out.raw[s * m];
    for (int i = 0; i < m; ++i) lam[i] = static_cast<double>(x[i] / theta);
    out.values[s] = entropy_S(std::span<const double>(lam, m));
  }
  return out;
}

// ---- Matrix model ---------------------------------------------------------

namespace detail {

using cmat = Eigen::MatrixXcd;

inline cmat ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  cmat g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = {normal(rng), normal(rng)};
  }
  return g;
}

inline cmat haar_unitary(int m, std::mt19937_64& rng) {
  const cmat g = ginibre(m, m, rng);
  Eigen::HouseholderQR<cmat> qr(g);
  cmat q = qr.householderQ();
  const cmat r = qr.matrixQR();
  for (int j = 0; j < m; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0 ? d / a : std::complex<double>(1.0));
  }
  return q;
}

// log |det(I + U)|
inline double log_abs_det_shift(const cmat& u) {
  const cmat a = cmat::Identity(u.rows(), u.cols()) + u;
  Eigen::PartialPivLU<cmat> lu(a);
  const cmat& f = lu.matrixLU();
  double acc = 0.0;
  for (int i = 0; i < f.rows(); ++i) acc += std::log(std::abs(f(i, i)));
  return acc;
}

struct MatrixStream {
  std::vector<double> lambdas;  // n x m
  std::vector<double> S;
  std::size_t accepted = 0;
  std::size_t proposed = 0;
  int proposals_per_sample = 0;
};

inline MatrixStream run_matrix_stream(int m, int n, std::size_t count, std::uint64_t seed, int proposals) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif;
  const double power = 2.0 * (n - m);
  MatrixStream out;
  out.lambdas.reserve(count * m);
  out.S.reserve(count);
  cmat u = haar_unitary(m, rng);
  double log_w = power * log_abs_det_shift(u);
  const auto step = [&] {
    cmat prop = haar_unitary(m, rng);
    ++out.proposed;
    if (power == 0.0) {
      u = std::move(prop);
      ++out.accepted;
      return;
    }
    const double log_w_new = power * log_abs_det_shift(prop);
    if (log_w_new >= log_w || unif(rng) < std::exp(log_w_new - log_w)) {
      u = std::move(prop);
      log_w = log_w_new;
      ++out.accepted;
    }
  };
  // Pilot run: pick enough proposals per emitted sample that the chance of
  // carrying U over unchanged is at most 5%.
  for (int b = 0; b < 500; ++b) step();
  const double pilot = static_cast<double>(out.accepted) / out.proposed;
  if (pilot < 1.0) {
    const double need = pilot > 0.0 ? std::ceil(std::log(0.05) / std::log1p(-pilot)) : 200.0;
    proposals = std::clamp(static_cast<int>(need), proposals, 200);
  }
  out.proposals_per_sample = proposals;
  out.accepted = out.proposed = 0;
  const cmat eye = cmat::Identity(m, m);
  std::vector<double> lam(m);
  for (std::size_t s = 0; s < count; ++s) {
    for (int k = 0; k < proposals; ++k) step();
    const cmat z = ginibre(m, n, rng);
    const cmat a = (eye + u) * z;
    const cmat w = a * a.adjoint();
    Eigen::SelfAdjointEigenSolver<cmat> es(w, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    long double tr = 0.0L;
    for (int i = 0; i < m; ++i) tr += std::max(ev(i), 0.0);
    for (int i = 0; i < m; ++i) lam[i] = static_cast<double>(std::max(ev(i), 0.0) / tr);
    out.lambdas.insert(out.lambdas.end(), lam.begin(), lam.end());
    out.S.push_back(entropy_S(std::span<const double>(lam)));
  }
  return out;
}

}  // namespace detail

inline constexpr int kMatrixStreams = 8;
inline constexpr int kMinProposalsPerSample = 10;

inline SampleBatch sample_matrix_model(int m, int n, std::size_t count, std::uint64_t seed) {
  const EnsembleParams p = params_from_dims(m, n);
  if (count < 1) throw parameter_error("sample_matrix_model: count must be >= 1");
  const auto counts = detail::split_counts(count, kMatrixStreams);
  std::vector<detail::MatrixStream> streams(kMatrixStreams);
  detail::parallel_for(kMatrixStreams, [&](std::size_t c) {
    streams[c] = detail::run_matrix_stream(m, n, counts[c], detail::stream_seed(seed, 1000 + c), kMinProposalsPerSample);
  });
  SampleBatch b;
  b.params = p;
  b.kind = BatchKind::constrained;
  b.seed = seed;
  b.method = "matrix";
  std::size_t acc = 0, prop = 0;
  for (auto& s : streams) {
    b.values.insert(b.values.end(), s.S.begin(), s.S.end());
    b.raw.insert(b.raw.end(), s.lambdas.begin(), s.lambdas.end());
    acc += s.accepted;
    prop += s.proposed;
  }
  b.acceptance_rate = prop ? static_cast<double>(acc) / prop : 1.0;
  return b;
}

// ---- Summaries ------------------------------------------------------------

inline MomentReport summarize(const SampleBatch& b, const EnsembleParams& p) {
  if (b.values.size() < 100) throw input_error("summarize: need at least 100 samples");
  const SampleMoments s = sample_moments(b.values);
  MomentReport r;
  r.count = s.count;
  r.mean = s.mean;
  r.variance = s.variance;
  r.skewness = s.skewness;
  r.se_mean = s.se_mean;
  r.se_variance = s.se_variance;
  r.se_skewness = s.se_skewness;
  r.rhat = b.rhat;
  r.rhat_flag = std::isfinite(b.rhat) && b.rhat > kRhatThreshold;
  double mu = 0.0, var = 0.0;
  if (b.kind == BatchKind::constrained) {
    if (p.physical()) {
      mu = mean_entropy(p);
      var = variance_entropy(p);
    }
  } else {
    mu = induced_mean_T(p);
    var = induced_variance_T(p);
  }
  if (!(var > 0.0)) {
    r.degenerate = true;
    return r;
  }
  std::vector<double> z(b.values.size());
  const double sd = std::sqrt(var);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = (b.values[i] - mu) / sd;
  r.ks_statistic = ks_statistic_normal(std::move(z));
  return r;
}

// ---- Persistence ----------------------------------------------------------

inline std::string ensemble_label(const SampleBatch& b) {
  std::ostringstream os;
  os << (b.kind == BatchKind::constrained ? "constrained" : "unconstrained") << "(m=" << b.params.m;
  if (b.params.n) {
    os << ",n=" << *b.params.n;
  } else {
    os << ",alpha=" << std::setprecision(17) << b.params.alpha;
  }
  os << ")";
  return os.str();
}

inline void write_batch_csv(std::ostream& os, const SampleBatch& b, const std::vector<std::string>& extra_header = {}) {
  os << "# ensemble=" << ensemble_label(b) << " seed=" << b.seed << "\n";
  for (const auto& line : extra_header) os << "# " << line << "\n";
  os << std::setprecision(17);
  for (double v : b.values) os << v << "\n";
}

inline void write_batch_csv(const std::string& path, const SampleBatch& b,
                            const std::vector<std::string>& extra_header = {}) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw input_error("write_batch_csv: cannot open " + path);
  write_batch_csv(f, b, extra_header);
}

// Values only; header lines are returned verbatim without the leading "# ".
struct LoadedBatch {
  std::vector<std::string> header;
  std::vector<double> values;
};

inline LoadedBatch read_batch_csv(std::istream& is) {
  LoadedBatch out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      out.header.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    std::size_t pos = 0;
    const double v = std::stod(line, &pos);
    if (pos != line.size()) throw input_error("read_batch_csv: malformed value: " + line);
    out.values.push_back(v);
  }
  return out;
}

}  // namespace bures

#pragma once

// Ensemble parameters and the closed-form moments of the von Neumann entropy
// over the (generalized) Bures-Hall ensemble and of the induced entropy
// T = sum x ln x over its unconstrained counterpart.

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bures/error.hpp"
#include "bures/specfun.hpp"

namespace bures {

struct EnsembleParams {
  int m = 1;
  std::optional<int> n;  // present for the physical (m, n) parameterization
  double alpha = 0.0;
  double d = 0.0;           // m(m + 2 alpha + 1) / 2, the degree of the trace law
  double log_C = 0.0;       // log of the simplex normalization
  double log_Cprime = 0.0;  // log_C + log Gamma(d)

  bool physical() const { return n.has_value(); }
};

namespace detail {

// log of 2^{-m(m+2a)} pi^{m/2} / Gamma(d) * prod_i Gamma(i+1) Gamma(i+2a+1) / Gamma(i+a+1/2)
inline double log_normalization(int m, double alpha, double d) {
  long double acc = -static_cast<long double>(m) * (m + 2.0L * alpha) * kLn2 +
                    0.5L * m * std::log(kPi) - log_gamma(static_cast<long double>(d));
  for (int i = 1; i <= m; ++i) {
    acc += log_gamma(static_cast<long double>(i + 1)) +
           log_gamma(static_cast<long double>(i) + 2.0L * alpha + 1.0L) -
           log_gamma(static_cast<long double>(i) + static_cast<long double>(alpha) + 0.5L);
  }
  return static_cast<double>(acc);
}

inline EnsembleParams finish_params(int m, std::optional<int> n, double alpha) {
  EnsembleParams p;
  p.m = m;
  p.n = n;
  p.alpha = alpha;
  p.d = 0.5 * m * (m + 2.0 * alpha + 1.0);
  p.log_C = log_normalization(m, alpha, p.d);
  p.log_Cprime = p.log_C + log_gamma(p.d);
  return p;
}

inline void require_physical(const EnsembleParams& p, const char* fn) {
  if (!p.physical()) {
    throw parameter_error(std::string(fn) + ": requires the (m, n) parameterization");
  }
}

}  // namespace detail

inline EnsembleParams params_from_dims(int m, int n) {
  if (m < 1 || m > n) {
    throw parameter_error("params_from_dims: need 1 <= m <= n, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
  }
  return detail::finish_params(m, n, n - m - 0.5);
}

inline EnsembleParams params_from_alpha(int m, double alpha) {
  if (m < 1) throw parameter_error("params_from_alpha: need m >= 1");
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw parameter_error("params_from_alpha: need alpha > -1");
  }
  return detail::finish_params(m, std::nullopt, alpha);
}

// Argument mn - m^2/2 + 1 shared by the mean and variance formulas; always an
// integer or half-integer, so the polygammas take their exact paths.
inline double entropy_upper_arg(const EnsembleParams& p) {
  return static_cast<double>(p.m) * *p.n - 0.5 * p.m * p.m + 1.0;
}

inline double mean_entropy(const EnsembleParams& p) {
  detail::require_physical(p, "mean_entropy");
  return digamma(entropy_upper_arg(p)) - digamma(*p.n + 0.5);
}

inline double variance_entropy(const EnsembleParams& p) {
  detail::require_physical(p, "variance_entropy");
  const double m = p.m;
  const double n = *p.n;
  const double coef = (2.0 * n * (2.0 * n + m) - m * m + 1.0) / (2.0 * n * (2.0 * m * n - m * m + 2.0));
  return -trigamma(entropy_upper_arg(p)) + coef * trigamma(n + 0.5);
}

inline double induced_mean_T(const EnsembleParams& p) {
  return p.d * digamma(p.m + p.alpha + 1.0);
}

inline double induced_variance_T(const EnsembleParams& p) {
  const double m = p.m;
  const double a = p.alpha;
  const double two_d = m * (m + 2.0 * a + 1.0);
  const double x = m + a + 1.0;
  const double psi0 = digamma(x);
  const double psi1 = trigamma(x);
  const double poly = 5.0 * m * m + 5.0 * m + 10.0 * a * m + 4.0 * a * a + 4.0 * a + 2.0;
  return two_d * psi0 + 0.5 * two_d * psi0 * psi0 + two_d * poly / (4.0 * (2.0 * m + 2.0 * a + 1.0)) * psi1;
}

// Induced variance written in the physical dimensions (m, n); equals
// induced_variance_T under alpha = n - m - 1/2.
inline double induced_variance_T_physical(const EnsembleParams& p) {
  detail::require_physical(p, "induced_variance_T_physical");
  const double m = p.m;
  const double n = *p.n;
  const double psi0 = digamma(n + 0.5);
  const double psi1 = trigamma(n + 0.5);
  return m * (2.0 * n - m) *
         (psi0 + 0.5 * psi0 * psi0 + (4.0 * n * n + 2.0 * m * n - m * m + 1.0) / (8.0 * n) * psi1);
}

// E_f[S^2] from E_h[T^2] and E_f[S] through the trace factorization.
inline double second_moment_from_T(const EnsembleParams& p, double E_h_T2, double E_f_S) {
  if (!(p.d > 0.0)) throw parameter_error("second_moment_from_T: need d > 0");
  const double psi0 = digamma(p.d + 2.0);
  const double psi1 = trigamma(p.d + 2.0);
  return E_h_T2 / (p.d * (p.d + 1.0)) + 2.0 * psi0 * E_f_S - psi0 * psi0 - psi1;
}

// Gamma(d, 1) density of the trace theta = sum x_i.
inline double trace_density(double theta, const EnsembleParams& p) {
  if (theta < 0.0 || std::isnan(theta)) throw domain_error("trace_density: theta must be >= 0");
  if (theta == 0.0) {
    if (p.d > 1.0) return 0.0;
    if (p.d == 1.0) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(-theta + (p.d - 1.0) * std::log(theta) - log_gamma(p.d));
}

struct Spectrum {
  std::vector<double> lambdas;
};

struct RawSpectrum {
  std::vector<double> xs;
};

inline constexpr double kSimplexTolerance = 1e-12;

inline void validate(const Spectrum& s) {
  if (s.lambdas.empty()) throw input_error("Spectrum: empty");
  long double sum = 0.0L;
  for (double l : s.lambdas) {
    if (!(l >= 0.0 && l <= 1.0)) throw input_error("Spectrum: eigenvalue outside [0, 1]");
    sum += l;
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > kSimplexTolerance) {
    throw input_error("Spectrum: eigenvalues do not sum to 1");
  }
}

// -sum lambda ln lambda with 0 ln 0 = 0.
inline double entropy_S(std::span<const double> lambdas) {
  long double acc = 0.0L;
  for (double l : lambdas) {
    if (l > 0.0) acc -= static_cast<long double>(l) * std::log(static_cast<long double>(l));
  }
  return static_cast<double>(acc);
}

inline double entropy_S(const Spectrum& s) {
  validate(s);
  return entropy_S(std::span<const double>(s.lambdas));
}

inline double entropy_T(std::span<const double> xs) {
  long double acc = 0.0L;
  for (double x : xs) {
    if (!(x > 0.0)) throw input_error("entropy_T: entries must be positive");
    acc += static_cast<long double>(x) * std::log(static_cast<long double>(x));
  }
  return static_cast<double>(acc);
}

inline double entropy_T(const RawSpectrum& r) {
  if (r.xs.empty()) throw input_error("RawSpectrum: empty");
  return entropy_T(std::span<const double>(r.xs));
}

inline double standardize(double S_value, const EnsembleParams& p) {
  const double var = variance_entropy(p);
  if (!(var > 0.0)) {
    throw degenerate_parameter_error("standardize: zero entropy variance (m = 1)");
  }
  return (S_value - mean_entropy(p)) / std::sqrt(var);
}

}  // namespace bures

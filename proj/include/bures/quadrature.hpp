#pragma once

// Fixed node rules on [0, inf) for integrands of the form
// x^(alpha + k) e^(-x) * (smooth or log factors).
//
// Below x = 1 the rule is Gauss-Legendre on uniform panels in u = ln x, which
// resolves both the x^alpha end behaviour and the 1/(x + v) transition of a
// Cauchy transform at small x. Above x = 1 it is Gauss-Legendre on uniform
// panels in x up to tail_cut. Each rule has a companion with fewer nodes per
// panel; the difference between the two is the error estimate, and a failed
// estimate halves every panel width.

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bures/error.hpp"

namespace bures {

struct QuadratureConfig {
  double abs_tol = 1e-14;
  double rel_tol = 1e-11;
  int max_subdivisions = 3;  // panel halvings allowed after the base level
  double tail_cut = 0.0;     // 0: chosen from abs_tol and the decay exponent
  double log_panel_width = 1.0;
  double linear_panel_width = 2.0;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

struct NodeRule {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

namespace detail {

template <unsigned N>
void append_gauss_panel(NodeRule& r, double a, double b, bool log_variable) {
  using G = boost::math::quadrature::gauss<double, N>;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const auto& abs = G::abscissa();
  const auto& wts = G::weights();
  const auto push = [&](double t, double wt) {
    const double u = mid + half * t;
    if (log_variable) {
      const double x = std::exp(u);
      r.x.push_back(x);
      r.w.push_back(half * wt * x);
    } else {
      r.x.push_back(u);
      r.w.push_back(half * wt);
    }
  };
  for (std::size_t i = 0; i < abs.size(); ++i) {
    if (abs[i] == 0.0) {
      push(0.0, wts[i]);
    } else {
      push(abs[i], wts[i]);
      push(-abs[i], wts[i]);
    }
  }
}

}  // namespace detail

// Smallest T >= max(2c, 8) with 2 T^c e^{-T} <= abs_tol / 10, which bounds
// the tail mass of x^c e^{-x} beyond T.
inline double choose_tail_cut(double c, double abs_tol) {
  if (!(abs_tol > 0.0)) throw parameter_error("choose_tail_cut: abs_tol must be positive");
  const double target = std::log(abs_tol / 10.0);
  double T = std::max(2.0 * std::max(c, 0.0), 8.0);
  while (std::log(2.0) + c * std::log(T) - T > target) T += 0.5;
  return T;
}

// Lower end of the log panels: the neglected mass near 0 scales like x^(alpha+1).
inline double choose_log_floor(double alpha, double abs_tol) {
  const double u = (std::log(abs_tol / 10.0) - 4.0) / (alpha + 1.0);
  return std::max(u, -700.0);
}

struct RuleSpec {
  double u_floor = -40.0;
  double tail_cut = 60.0;
  double log_width = 1.0;
  double linear_width = 2.0;
};

inline RuleSpec rule_spec(const QuadratureConfig& cfg, double alpha, double decay_exponent) {
  RuleSpec s;
  s.u_floor = choose_log_floor(alpha, cfg.abs_tol);
  s.tail_cut = cfg.tail_cut > 0.0 ? cfg.tail_cut : choose_tail_cut(decay_exponent, cfg.abs_tol);
  s.log_width = cfg.log_panel_width;
  s.linear_width = cfg.linear_panel_width;
  return s;
}

// level halves panel widths level times; coarse selects the 15-point companion.
inline NodeRule make_rule(const RuleSpec& s, int level, bool coarse) {
  NodeRule r;
  const double scale = std::ldexp(1.0, -level);
  const auto add = [&](double a, double b, bool log_variable) {
    if (coarse) {
      detail::append_gauss_panel<15>(r, a, b, log_variable);
    } else {
      detail::append_gauss_panel<20>(r, a, b, log_variable);
    }
  };
  const int n_log = std::max(1, static_cast<int>(std::ceil(-s.u_floor / (s.log_width * scale))));
  const double hl = -s.u_floor / n_log;
  for (int i = 0; i < n_log; ++i) add(s.u_floor + i * hl, s.u_floor + (i + 1) * hl, true);
  const int n_lin = std::max(1, static_cast<int>(std::ceil((s.tail_cut - 1.0) / (s.linear_width * scale))));
  const double hx = (s.tail_cut - 1.0) / n_lin;
  for (int i = 0; i < n_lin; ++i) add(1.0 + i * hx, 1.0 + (i + 1) * hx, false);
  return r;
}

template <class F>
double apply_rule(const NodeRule& r, F&& f) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < r.size(); ++i) acc += static_cast<long double>(r.w[i]) * f(r.x[i]);
  return static_cast<double>(acc);
}

struct RuleSum {
  double value = 0.0;
  double l1 = 0.0;  // sum of |w f|, the scale of the rounding error
};

template <class F>
RuleSum apply_rule_l1(const NodeRule& r, F&& f) {
  long double acc = 0.0L, mag = 0.0L;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const long double t = static_cast<long double>(r.w[i]) * f(r.x[i]);
    acc += t;
    mag += std::fabs(t);
  }
  return {static_cast<double>(acc), static_cast<double>(mag)};
}

inline constexpr double kRoundoffFactor = 256.0 * std::numeric_limits<double>::epsilon();

// l1 > 0 admits a rounding floor for integrands that cancel heavily.
inline bool within_tolerance(double value, double error, const QuadratureConfig& cfg, double l1 = 0.0) {
  return error <= std::max({cfg.abs_tol, cfg.rel_tol * std::fabs(value), kRoundoffFactor * l1});
}

// One-dimensional integral over [0, inf) with refinement on failure.
template <class F>
QuadResult integrate_half_line(F&& f, const QuadratureConfig& cfg, double alpha, double decay_exponent) {
  const RuleSpec spec = rule_spec(cfg, alpha, decay_exponent);
  QuadResult res;
  for (int level = 0; level <= cfg.max_subdivisions; ++level) {
    const RuleSum fine = apply_rule_l1(make_rule(spec, level, false), f);
    const double coarse = apply_rule(make_rule(spec, level, true), f);
    res.value = fine.value;
    res.error = std::fabs(fine.value - coarse);
    if (within_tolerance(fine.value, res.error, cfg, fine.l1)) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

template <class F>
double integrate_half_line_or_throw(F&& f, const QuadratureConfig& cfg, double alpha, double decay_exponent,
                                    const char* what) {
  const QuadResult r = integrate_half_line(f, cfg, alpha, decay_exponent);
  if (!r.converged) {
    throw quadrature_error(std::string(what) + ": quadrature did not converge", r.value, r.error);
  }
  return r.value;
}

}  // namespace bures

#pragma once

// Quadrature oracle for the Cauchy-Laguerre correlation kernels of the
// unconstrained Bures-Hall ensemble and the integrals I_A..I_D built on them.
//
// Weight  w(x, y) = x^a y^(a+1) e^(-x-y) / (x + y).
// Polynomials (terminating residue series of the Meijer G representation):
//   p_j(x) = sqrt2 (-1)^j sum_k (-1)^k G(2a+2+j+k) x^k / (k! (j-k)! G(a+1+k) G(2a+2+k))
//   q_j(x) = sqrt2 (-1)^j (j+a+1) sum_k (-1)^k G(2a+2+j+k) x^k / (k! (j-k)! G(a+2+k) G(2a+2+k))
// Cauchy transforms at negative argument:
//   P_j(-x) = -int v^a e^-v p_j(v) / (x+v) dv,  Q_j(-x) = -int v^(a+1) e^-v q_j(v) / (x+v) dv

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bures/detail/parallel.hpp"
#include "bures/error.hpp"
#include "bures/quadrature.hpp"
#include "bures/specfun.hpp"

namespace bures {

enum class KernelId { K00, K01, K10, K11 };

inline constexpr double kBiorthogonalityTolerance = 1e-8;

struct KernelContext {
  int m = 1;
  double alpha = 0.0;
  std::vector<std::vector<double>> p_coeffs;  // p_coeffs[j][k]: coefficient of x^k in p_j
  std::vector<std::vector<double>> q_coeffs;
  QuadratureConfig quadrature;
  std::vector<std::vector<double>> biorthogonality;  // int int p_k q_l w
  double biorthogonality_residual = 0.0;              // max |B - I|
};

struct OracleValue {
  double value = 0.0;
  double error = 0.0;
};

struct OracleIntegrals {
  OracleValue I_A, I_B, I_C, I_D, E_h_T, E_h_T2;
  OracleValue h1_norm, h2_norm;
  double h2_marginal_error = 0.0;  // max relative |int h2(x, y) dy - h1(x)| over nodes with h1 > 1e-3
  double trace_mean = 0.0;         // m int x h1, equals d
  int level = 0;
  bool converged = false;
};

namespace detail {

inline std::vector<double> biorthogonal_coeffs(int j, double a, bool q_side) {
  std::vector<double> c(j + 1);
  const double sign_j = (j % 2 == 0) ? 1.0 : -1.0;
  for (int k = 0; k <= j; ++k) {
    const double lg = log_gamma(2 * a + 2 + j + k) - log_gamma(k + 1.0) - log_gamma(j - k + 1.0) -
                      log_gamma(a + 1 + (q_side ? 1 : 0) + k) - log_gamma(2 * a + 2 + k);
    const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
    c[k] = std::sqrt(2.0) * sign_j * sign_k * std::exp(lg);
    if (q_side) c[k] *= (j + a + 1);
  }
  return c;
}

inline double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Decay exponent covering every integrand the oracle forms: degree 2m - 2
// polynomials, x^(a+1) weights, x^2 ln^2 x.
inline double decay_exponent(const KernelContext& ctx) { return 2.0 * ctx.m + ctx.alpha + 6.0; }

// Node values shared by every kernel evaluation on one rule.
struct Grid {
  NodeRule rule;
  std::vector<std::vector<double>> p, q, P, Q;  // [k][i]
};

inline double cauchy_on_rule(const NodeRule& r, const std::vector<double>& coeffs, double expo, double x) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double v = r.x[i];
    acc += r.w[i] * std::pow(v, expo) * std::exp(-v) * horner(coeffs, v) / (x + v);
  }
  return -static_cast<double>(acc);
}

inline Grid build_grid(const KernelContext& ctx, const NodeRule& rule) {
  Grid g;
  g.rule = rule;
  const std::size_t n = rule.size();
  const int m = ctx.m;
  g.p.assign(m, std::vector<double>(n));
  g.q.assign(m, std::vector<double>(n));
  g.P.assign(m, std::vector<double>(n));
  g.Q.assign(m, std::vector<double>(n));
  for (int k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      g.p[k][i] = horner(ctx.p_coeffs[k], rule.x[i]);
      g.q[k][i] = horner(ctx.q_coeffs[k], rule.x[i]);
    }
  }
  parallel_for(n, [&](std::size_t i) {
    for (int k = 0; k < m; ++k) {
      g.P[k][i] = cauchy_on_rule(rule, ctx.p_coeffs[k], ctx.alpha, rule.x[i]);
      g.Q[k][i] = cauchy_on_rule(rule, ctx.q_coeffs[k], ctx.alpha + 1.0, rule.x[i]);
    }
  });
  return g;
}

inline RuleSpec context_rule_spec(const KernelContext& ctx) {
  return rule_spec(ctx.quadrature, ctx.alpha, decay_exponent(ctx));
}

// Biorthogonality matrix on one rule.
inline std::vector<std::vector<double>> biorthogonality_on(const KernelContext& ctx, const NodeRule& r) {
  const std::size_t n = r.size();
  const int m = ctx.m;
  const double a = ctx.alpha;
  std::vector<std::vector<double>> qv(m, std::vector<double>(n));
  for (int l = 0; l < m; ++l) {
    for (std::size_t j = 0; j < n; ++j) qv[l][j] = horner(ctx.q_coeffs[l], r.x[j]);
  }
  // rows[i][l] = w_i x_i^a e^-x_i sum_j w_j y_j^(a+1) e^-y_j q_l(y_j) / (x_i + y_j)
  std::vector<std::vector<long double>> rows(n, std::vector<long double>(m, 0.0L));
  parallel_for(n, [&](std::size_t i) {
    const double xi = r.x[i];
    const double fx = r.w[i] * std::pow(xi, a) * std::exp(-xi);
    for (std::size_t j = 0; j < n; ++j) {
      const double yj = r.x[j];
      const double base = fx * r.w[j] * std::pow(yj, a + 1.0) * std::exp(-yj) / (xi + yj);
      for (int l = 0; l < m; ++l) rows[i][l] += base * qv[l][j];
    }
  });
  std::vector<std::vector<double>> B(m, std::vector<double>(m, 0.0));
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      long double acc = 0.0L;
      for (std::size_t i = 0; i < n; ++i) acc += horner(ctx.p_coeffs[k], r.x[i]) * rows[i][l];
      B[k][l] = static_cast<double>(acc);
    }
  }
  return B;
}

}  // namespace detail

inline double poly_p(const KernelContext& ctx, int j, double x) { return detail::horner(ctx.p_coeffs.at(j), x); }
inline double poly_q(const KernelContext& ctx, int j, double x) { return detail::horner(ctx.q_coeffs.at(j), x); }

inline KernelContext build_context(int m, double alpha, const QuadratureConfig& cfg = {}) {
  if (m < 1 || m > 6) throw parameter_error("build_context: oracle scale is 1 <= m <= 6");
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw parameter_error("build_context: need alpha > -1");
  KernelContext ctx;
  ctx.m = m;
  ctx.alpha = alpha;
  ctx.quadrature = cfg;
  for (int j = 0; j < m; ++j) {
    ctx.p_coeffs.push_back(detail::biorthogonal_coeffs(j, alpha, false));
    ctx.q_coeffs.push_back(detail::biorthogonal_coeffs(j, alpha, true));
  }
  const NodeRule rule = make_rule(detail::context_rule_spec(ctx), 0, false);
  ctx.biorthogonality = detail::biorthogonality_on(ctx, rule);
  double worst = 0.0;
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      worst = std::max(worst, std::fabs(ctx.biorthogonality[k][l] - (k == l ? 1.0 : 0.0)));
    }
  }
  ctx.biorthogonality_residual = worst;
  if (worst > kBiorthogonalityTolerance) {
    throw construction_error("build_context: biorthogonality residual " + std::to_string(worst));
  }
  return ctx;
}

namespace detail {

inline double cauchy_transform(const KernelContext& ctx, const std::vector<double>& coeffs, double expo, double x,
                               const char* what) {
  if (!(x > 0.0)) throw domain_error(std::string(what) + ": need x > 0");
  // Below the node floor the neglected piece is at most eps^(expo+1) / x.
  const double tol = ctx.quadrature.abs_tol / 10.0;
  const double floor_u = std::min((std::log(tol) + std::log(x)) / (expo + 1.0), std::log(x) - 2.0);
  const auto f = [&](double v) { return std::pow(v, expo) * std::exp(-v) * horner(coeffs, v) / (x + v); };
  QuadratureConfig cfg = ctx.quadrature;
  RuleSpec spec = rule_spec(cfg, ctx.alpha, decay_exponent(ctx));
  spec.u_floor = std::max(std::min(spec.u_floor, floor_u), -700.0);
  QuadResult res;
  for (int level = 0; level <= cfg.max_subdivisions; ++level) {
    const RuleSum fine = apply_rule_l1(make_rule(spec, level, false), f);
    const double coarse = apply_rule(make_rule(spec, level, true), f);
    res = {fine.value, std::fabs(fine.value - coarse), false};
    if (within_tolerance(fine.value, res.error, cfg, fine.l1)) return -fine.value;
  }
  throw quadrature_error(std::string(what) + ": quadrature did not converge", -res.value, res.error);
}

}  // namespace detail

inline double cauchy_transform_P(const KernelContext& ctx, int j, double x) {
  return detail::cauchy_transform(ctx, ctx.p_coeffs.at(j), ctx.alpha, x, "cauchy_transform_P");
}

inline double cauchy_transform_Q(const KernelContext& ctx, int j, double x) {
  return detail::cauchy_transform(ctx, ctx.q_coeffs.at(j), ctx.alpha + 1.0, x, "cauchy_transform_Q");
}

inline double weight(double alpha, double x, double y) {
  return std::pow(x, alpha) * std::pow(y, alpha + 1.0) * std::exp(-x - y) / (x + y);
}

inline double kernel(const KernelContext& ctx, KernelId which, double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw domain_error("kernel: need x, y > 0");
  const double a = ctx.alpha;
  double acc = 0.0;
  switch (which) {
    case KernelId::K00:
      for (int k = 0; k < ctx.m; ++k) acc += poly_p(ctx, k, x) * poly_q(ctx, k, y);
      return acc;
    case KernelId::K01:
      for (int k = 0; k < ctx.m; ++k) acc += poly_p(ctx, k, x) * cauchy_transform_Q(ctx, k, y);
      return -std::pow(x, 2 * a + 1) * std::pow(y, -a - 1) * std::exp(-y) * acc;
    case KernelId::K10:
      for (int k = 0; k < ctx.m; ++k) acc += cauchy_transform_P(ctx, k, x) * poly_q(ctx, k, y);
      return -std::pow(x, -a) * std::pow(y, 2 * a + 1) * std::exp(-x) * acc;
    case KernelId::K11:
      for (int k = 0; k < ctx.m; ++k) acc += cauchy_transform_P(ctx, k, y) * cauchy_transform_Q(ctx, k, x);
      return std::pow(x, a) * std::pow(y, a + 1) * std::exp(-x - y) * acc - weight(a, x, y);
  }
  return 0.0;
}

inline double density_one(const KernelContext& ctx, double x) {
  return (kernel(ctx, KernelId::K01, x, x) + kernel(ctx, KernelId::K10, x, x)) / (2.0 * ctx.m);
}

inline double density_two(const KernelContext& ctx, double x, double y) {
  if (ctx.m < 2) throw parameter_error("density_two: two-point density undefined for m = 1");
  const double dx = kernel(ctx, KernelId::K01, x, x) + kernel(ctx, KernelId::K10, x, x);
  const double dy = kernel(ctx, KernelId::K01, y, y) + kernel(ctx, KernelId::K10, y, y);
  const double k01xy = kernel(ctx, KernelId::K01, x, y), k01yx = kernel(ctx, KernelId::K01, y, x);
  const double k10xy = kernel(ctx, KernelId::K10, x, y), k10yx = kernel(ctx, KernelId::K10, y, x);
  const double k00xy = kernel(ctx, KernelId::K00, x, y), k00yx = kernel(ctx, KernelId::K00, y, x);
  const double k11xy = kernel(ctx, KernelId::K11, x, y), k11yx = kernel(ctx, KernelId::K11, y, x);
  return (dx * dy - 2 * k01xy * k01yx - 2 * k10xy * k10yx - 2 * k00xy * k11xy - 2 * k00yx * k11yx) /
         (4.0 * ctx.m * (ctx.m - 1));
}

// ---- Integral representation -------------------------------------------

// H_q(x) = sum_{k<m} (-1)^k/k! G(m+2a+2+k) x^k / (G(m-k) G(1+q+k) G(2a+2+k))
inline double H_q(const KernelContext& ctx, double q, double x) {
  const int m = ctx.m;
  const double a = ctx.alpha;
  double acc = 0.0;
  for (int k = 0; k < m; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign * std::exp(log_gamma(m + 2 * a + 2 + k) - log_gamma(k + 1.0) - log_gamma(double(m - k)) -
                           log_gamma(2 * a + 2 + k)) *
           std::pow(x, k) / std::tgamma(1 + q + k);
  }
  return acc;
}

// G_q as the sum of its two residue series; needs non-integer q.
inline double G_q(const KernelContext& ctx, double q, double x) {
  if (q == std::floor(q)) throw parameter_error("G_q: residue series needs non-integer q");
  if (!(x > 0.0)) throw domain_error("G_q: need x > 0");
  const int m = ctx.m;
  const double a = ctx.alpha;
  long double acc = 0.0L;
  for (int k = 0; k < m; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign * std::tgamma(-q - k) *
           std::exp(log_gamma(m + 2 * a + 2 + k) - log_gamma(k + 1.0) - log_gamma(double(m - k)) -
                    log_gamma(2 * a + 2 + k)) *
           std::pow(x, k);
  }
  long double t = std::tgamma(q) * std::exp(log_gamma(m + 2 * a + 2 - q) - log_gamma(m + q)) /
                  std::tgamma(2 * a + 2 - q) * std::pow(x, -q);
  for (int k = 0; k < 100000; ++k) {
    acc += t;
    if (k > x && std::fabs(static_cast<double>(t)) <= 1e-19 * std::fabs(static_cast<double>(acc))) break;
    t *= (-x) / (k + 1.0) / (q - k - 1.0) * (m + 2 * a + 2 - q + k) * (m + q - k - 1.0) / (2 * a + 2 - q + k);
    if (t == 0) break;
  }
  return static_cast<double>(acc);
}

inline double kernel_integral_rep(const KernelContext& ctx, KernelId which, double x, double y) {
  const double a = ctx.alpha;
  if (a == std::floor(a)) throw parameter_error("kernel_integral_rep: needs non-integer alpha");
  boost::math::quadrature::tanh_sinh<double> ts;
  const double p = 2 * a + 1;
  // Abscissae within a few ulps of t = 0 underflow the G_q series; the
  // integrand is integrable there, so they are dropped.
  const auto integrate = [&](auto f) {
    return ts.integrate(
        [&](double t) {
          if (t < 1e-200) return 0.0;
          const double v = std::pow(t, p) * f(t);
          return std::isfinite(v) ? v : 0.0;
        },
        0.0, 1.0);
  };
  switch (which) {
    case KernelId::K00:
      return integrate([&](double t) { return H_q(ctx, a, t * x) * H_q(ctx, a + 1, t * y); });
    case KernelId::K01:
      return std::pow(x, p) * integrate([&](double t) { return H_q(ctx, a, t * x) * G_q(ctx, a + 1, t * y); });
    case KernelId::K10:
      return std::pow(y, p) * integrate([&](double t) { return G_q(ctx, a, t * x) * H_q(ctx, a + 1, t * y); });
    case KernelId::K11:
      return std::pow(x * y, p) * integrate([&](double t) { return G_q(ctx, a + 1, t * x) * G_q(ctx, a, t * y); }) -
             std::pow(x, a) * std::pow(y, a + 1) / (x + y);
  }
  return 0.0;
}

// ---- Oracle integrals -----------------------------------------------------

namespace detail {

struct RawOracle {
  double IA = 0, IB = 0, IC = 0, ID = 0, ET = 0, ET2 = 0, h1n = 0, h2n = 0, marg = 0, trace = 0;
};

inline RawOracle oracle_on(const KernelContext& ctx, const NodeRule& rule) {
  const Grid g = build_grid(ctx, rule);
  const std::size_t n = rule.size();
  const int m = ctx.m;
  const double a = ctx.alpha;
  const auto& X = rule.x;
  const auto& W = rule.w;

  std::vector<double> L(n), d(n), ex(n), xa(n), xa1(n), x2a1(n), xma(n), xma1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = X[i];
    L[i] = x * std::log(x);
    ex[i] = std::exp(-x);
    xa[i] = std::pow(x, a);
    xa1[i] = std::pow(x, a + 1);
    x2a1[i] = std::pow(x, 2 * a + 1);
    xma[i] = std::pow(x, -a);
    xma1[i] = std::pow(x, -a - 1);
  }
  const auto K00 = [&](std::size_t i, std::size_t j) {
    double s = 0;
    for (int k = 0; k < m; ++k) s += g.p[k][i] * g.q[k][j];
    return s;
  };
  const auto K01 = [&](std::size_t i, std::size_t j) {
    double s = 0;
    for (int k = 0; k < m; ++k) s += g.p[k][i] * g.Q[k][j];
    return -x2a1[i] * xma1[j] * ex[j] * s;
  };
  const auto K10 = [&](std::size_t i, std::size_t j) {
    double s = 0;
    for (int k = 0; k < m; ++k) s += g.P[k][i] * g.q[k][j];
    return -xma[i] * ex[i] * x2a1[j] * s;
  };
  const auto K11 = [&](std::size_t i, std::size_t j) {
    double s = 0;
    for (int k = 0; k < m; ++k) s += g.P[k][j] * g.Q[k][i];
    return xa[i] * xa1[j] * ex[i] * ex[j] * (s - 1.0 / (X[i] + X[j]));
  };
  for (std::size_t i = 0; i < n; ++i) d[i] = K01(i, i) + K10(i, i);

  RawOracle r;
  long double ia = 0, et = 0, h1n = 0, tr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ia += W[i] * L[i] * L[i] * d[i];
    et += W[i] * L[i] * d[i];
    h1n += W[i] * d[i];
    tr += W[i] * X[i] * d[i];
  }
  r.IA = static_cast<double>(ia);
  r.ET = static_cast<double>(et / 2);
  r.h1n = static_cast<double>(h1n / (2.0 * m));
  r.trace = static_cast<double>(tr / 2);

  struct Row {
    long double ib = 0, ic = 0, id = 0, h2 = 0, llh2 = 0, h2row = 0;
  };
  std::vector<Row> rows(n);
  const double norm2 = m >= 2 ? 1.0 / (4.0 * m * (m - 1)) : 0.0;
  parallel_for(n, [&](std::size_t i) {
    Row& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double k01 = K01(i, j), k01t = K01(j, i);
      const double k10 = K10(i, j), k10t = K10(j, i);
      const double k00 = K00(i, j), k00t = K00(j, i);
      const double k11 = K11(i, j), k11t = K11(j, i);
      const double ww = W[i] * W[j];
      const double ll = L[i] * L[j];
      row.ib += ww * ll * k01 * k01t;
      row.ic += ww * ll * k10 * k10t;
      row.id += ww * ll * k00 * k11;
      if (m >= 2) {
        const double h2 = (d[i] * d[j] - 2 * k01 * k01t - 2 * k10 * k10t - 2 * k00 * k11 - 2 * k00t * k11t) * norm2;
        row.h2 += ww * h2;
        row.llh2 += ww * ll * h2;
        row.h2row += W[j] * h2;
      }
    }
  });
  long double ib = 0, ic = 0, id = 0, h2n = 0, llh2 = 0;
  double marg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ib += rows[i].ib;
    ic += rows[i].ic;
    id += rows[i].id;
    h2n += rows[i].h2;
    llh2 += rows[i].llh2;
    const double h1 = d[i] / (2.0 * m);
    if (m >= 2 && h1 > 1e-3) {
      marg = std::max(marg, std::fabs(static_cast<double>(rows[i].h2row) - h1) / h1);
    }
  }
  r.IB = static_cast<double>(ib);
  r.IC = static_cast<double>(ic);
  r.ID = static_cast<double>(id);
  r.h2n = m >= 2 ? static_cast<double>(h2n) : 1.0;
  r.marg = marg;
  // E_h[T^2] = m int (x ln x)^2 h1 + m (m-1) int int (x ln x)(y ln y) h2
  r.ET2 = static_cast<double>(m * (ia / (2.0 * m)) + (m >= 2 ? m * (m - 1) * llh2 : 0.0L));
  return r;
}

}  // namespace detail

inline OracleIntegrals oracle_integrals(const KernelContext& ctx) {
  if (ctx.m > 4) throw parameter_error("oracle_integrals: two-dimensional oracle limited to m <= 4");
  const RuleSpec spec = detail::context_rule_spec(ctx);
  OracleIntegrals out;
  for (int level = 0; level <= ctx.quadrature.max_subdivisions; ++level) {
    const auto fine = detail::oracle_on(ctx, make_rule(spec, level, false));
    const auto coarse = detail::oracle_on(ctx, make_rule(spec, level, true));
    const auto pack = [](double f, double c) { return OracleValue{f, std::fabs(f - c)}; };
    out.I_A = pack(fine.IA, coarse.IA);
    out.I_B = pack(fine.IB, coarse.IB);
    out.I_C = pack(fine.IC, coarse.IC);
    out.I_D = pack(fine.ID, coarse.ID);
    out.E_h_T = pack(fine.ET, coarse.ET);
    out.E_h_T2 = pack(fine.ET2, coarse.ET2);
    out.h1_norm = pack(fine.h1n, coarse.h1n);
    out.h2_norm = pack(fine.h2n, coarse.h2n);
    out.h2_marginal_error = fine.marg;
    out.trace_mean = fine.trace;
    out.level = level;
    const QuadratureConfig& c = ctx.quadrature;
    out.converged = true;
    for (const OracleValue* v : {&out.I_A, &out.I_B, &out.I_C, &out.I_D, &out.E_h_T, &out.E_h_T2}) {
      out.converged = out.converged && within_tolerance(v->value, v->error, c);
    }
    if (out.converged) break;
  }
  return out;
}

}  // namespace bures

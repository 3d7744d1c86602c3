#pragma once

// Closed forms of the four integrals behind V_h[T] and their assembly.
//
// I_A and I_B + I_C carry removable singularities at alpha = 0 (the 1/alpha
// prefactor) and alpha = -1/2 (psi0(2 alpha + 1), and m + 2 alpha at m = 1).
// Within kContourBand of either point the expression is evaluated through the
// Cauchy integral over a circle of radius kContourRadius around it, which
// returns the analytic continuation instead of 0/0.

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include "bures/coefficients.hpp"
#include "bures/error.hpp"
#include "bures/moments.hpp"
#include "bures/specfun.hpp"

namespace bures {

struct IntegralBundle {
  double I_A = 0.0;
  double I_BC = 0.0;
  double I_D = 0.0;
  double V_h_T = 0.0;          // (I_A - I_BC - 2 I_D) / 2
  double V_h_T_literal = 0.0;  // (I_A - I_BC + 2 I_D) / 2, kept as a diagnostic
};

inline constexpr double kContourBand = 0.125;
inline constexpr double kContourRadius = 0.25;
inline constexpr int kContourPoints = 128;

namespace detail {

template <class Z>
Z psi0z(Z x) {
  if constexpr (std::is_floating_point_v<Z>) {
    return x > Z(0) ? digamma(x) : digamma_shifted(x);
  } else {
    return digamma_shifted(x);
  }
}

template <class Z>
Z psi1z(Z x) {
  if constexpr (std::is_floating_point_v<Z>) {
    return x > Z(0) ? trigamma(x) : trigamma_shifted(x);
  } else {
    return trigamma_shifted(x);
  }
}

// Length-m psi0 sums that appear, with opposite signs, in I_A and I_B + I_C.
template <class Z>
Z sum_block(int m, Z a) {
  Z acc = Z(0);
  const Z mz = Z(static_cast<long double>(m));
  for (int k = m; k >= 1; --k) {
    const Z kz = Z(static_cast<long double>(k));
    const Z shifted = psi0z(kz + mz + Z(2) * a);
    acc += (psi0z(kz + a) + psi0z(kz + Z(2) * a) - shifted) / kz + shifted / (kz + a) +
           shifted / (kz + Z(2) * a);
  }
  return acc;
}

template <class Z>
struct PsiValues {
  Z p1, pm1, pa1, p2a1, pma1, pm2a1, p2m2a1;  // psi0 at 1, m+1, a+1, 2a+1, m+a+1, m+2a+1, 2m+2a+1
  Z q1a, q2a1, qma1, qm2a1, q2m2a1;           // psi1 at a+1, 2a+1, m+a+1, m+2a+1, 2m+2a+1

  PsiValues(int m, Z a) {
    const Z mz = Z(static_cast<long double>(m));
    p1 = psi0z(Z(1));
    pm1 = psi0z(mz + Z(1));
    pa1 = psi0z(a + Z(1));
    p2a1 = psi0z(Z(2) * a + Z(1));
    pma1 = psi0z(mz + a + Z(1));
    pm2a1 = psi0z(mz + Z(2) * a + Z(1));
    p2m2a1 = psi0z(Z(2) * mz + Z(2) * a + Z(1));
    q1a = psi1z(a + Z(1));
    q2a1 = psi1z(Z(2) * a + Z(1));
    qma1 = psi1z(mz + a + Z(1));
    qm2a1 = psi1z(mz + Z(2) * a + Z(1));
    q2m2a1 = psi1z(Z(2) * mz + Z(2) * a + Z(1));
  }

  // psi0 product block shared by I_A (with + sign) and I_B + I_C.
  Z product_block() const {
    return -Z(2) * p1 * pa1 - Z(2) * p1 * p2a1 + Z(2) * p1 * pm2a1 + pa1 * pa1 + p2a1 * p2a1 +
           Z(2) * pa1 * pm1 - Z(2) * pa1 * pma1 - Z(2) * pa1 * pm2a1 + Z(2) * p2a1 * pm1 -
           Z(4) * p2a1 * pm2a1 - Z(2) * pm1 * pm2a1;
  }
};

template <class Z, class CoefFn>
Z ia_value(int m, Z a, CoefFn coef) {
  const PsiValues<Z> P(m, a);
  const Z mz = Z(static_cast<long double>(m));
  const Z a0 = coef("a0");
  Z br = -Z(2) * a0 * sum_block(m, a) + coef("a1") + coef("a2") * (P.p1 - P.pm1) + coef("a3") * P.pa1 +
         coef("a4") * P.p2a1 + coef("a5") * P.pma1 + coef("a6") * P.pm2a1 + coef("a7") * P.p2m2a1;
  br += a0 * (P.product_block() - Z(2) * P.pma1 * P.pm2a1 + Z(4) * P.pma1 * P.p2m2a1 - P.pm2a1 * P.pm2a1 +
              Z(8) * P.pm2a1 * P.p2m2a1 - Z(4) * P.p2m2a1 * P.p2m2a1 - P.q1a - P.q2a1 + P.qm2a1);
  const Z s = Z(2) * mz + Z(2) * a + Z(1);
  return br / (Z(36) * a * (mz + a) * (mz + Z(2) * a) * s * s * s);
}

template <class Z, class CoefFn>
Z ibc_value(int m, Z a, CoefFn coef) {
  const PsiValues<Z> P(m, a);
  const Z mz = Z(static_cast<long double>(m));
  const Z b0 = coef("bc0");
  Z br = Z(2) * b0 * sum_block(m, a) + coef("bc1") + coef("bc2") * (P.p1 - P.pm1) + coef("bc3") * P.pa1 +
         coef("bc4") * P.p2a1 + coef("bc5") * P.pma1 + coef("bc6") * P.pm2a1 + coef("bc7") * P.p2m2a1;
  br += b0 * (-P.product_block() + P.q1a + P.q2a1 - P.qma1 - Z(3) * P.qm2a1 + Z(2) * P.q2m2a1);
  br += coef("bc8") * P.pma1 * P.pma1 + coef("bc9") * P.pma1 * P.pm2a1 +
        coef("bc10") * (P.pma1 * P.p2m2a1 + Z(2) * P.pm2a1 * P.p2m2a1 - P.p2m2a1 * P.p2m2a1) +
        coef("bc11") * P.pm2a1 * P.pm2a1;
  const Z s = Z(2) * mz + Z(2) * a + Z(1);
  return br / (Z(36) * a * (mz + a) * (mz + a + Z(1)) * (mz + Z(2) * a) * s * s * s * s);
}

template <class Z, class CoefFn>
Z id_value(int m, Z a, CoefFn coef) {
  const Z mz = Z(static_cast<long double>(m));
  const Z pma1 = psi0z(mz + a + Z(1));
  const Z pm2a1 = psi0z(mz + Z(2) * a + Z(1));
  const Z p2m2a1 = psi0z(Z(2) * mz + Z(2) * a + Z(1));
  const Z br = coef("d0") + coef("d1") * pma1 + coef("d2") * pm2a1 + coef("d3") * p2m2a1 +
               coef("d4") * (pm2a1 - p2m2a1) * (pm2a1 - p2m2a1 + pma1) + coef("d5") * pma1 * pma1 +
               coef("d6") * (psi1z(mz + Z(2) * a + Z(1)) - psi1z(Z(2) * mz + Z(2) * a + Z(1)));
  const Z s = Z(2) * mz + Z(2) * a + Z(1);
  return mz * br / (Z(8) * s * s * s * s);
}

inline void check_closed_form_domain(int m, double alpha, const char* fn) {
  if (m < 1) throw parameter_error(std::string(fn) + ": need m >= 1");
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw parameter_error(std::string(fn) + ": need alpha > -1");
}

// Nearest removable singularity within the contour band, if any.
inline std::optional<double> singular_center(double alpha) {
  for (double c : {0.0, -0.5}) {
    if (std::fabs(alpha - c) < kContourBand) return c;
  }
  return std::nullopt;
}

template <class T, template <class, class> class Value>
T evaluate(TableId table, int m, double alpha) {
  const CoefficientTable& tab = coefficient_table(table);
  if (const auto c = singular_center(alpha)) {
    using C = std::complex<T>;
    const T center = static_cast<T>(*c);
    const T target = static_cast<T>(alpha);
    C acc(0);
    for (int k = 0; k < kContourPoints; ++k) {
      const T theta = 2 * static_cast<T>(kPi) * (static_cast<T>(k) + T(0.5)) / kContourPoints;
      const C offset = std::polar(static_cast<T>(kContourRadius), theta);
      const C z = center + offset;
      const auto coef = [&](const char* name) { return eval_coefficient_as<C>(tab, name, m, z); };
      acc += Value<C, decltype(coef)>::eval(m, z, coef) * offset / (z - target);
    }
    return (acc / static_cast<T>(kContourPoints)).real();
  }
  const auto coef = [&](const char* name) { return eval_coefficient<T>(tab, name, m, alpha); };
  return Value<T, decltype(coef)>::eval(m, static_cast<T>(alpha), coef);
}

template <class Z, class F>
struct IAValue {
  static Z eval(int m, Z a, F f) { return ia_value<Z>(m, a, f); }
};
template <class Z, class F>
struct IBCValue {
  static Z eval(int m, Z a, F f) { return ibc_value<Z>(m, a, f); }
};
template <class Z, class F>
struct IDValue {
  static Z eval(int m, Z a, F f) { return id_value<Z>(m, a, f); }
};

}  // namespace detail

template <class T = long double>
T closed_form_IA(int m, double alpha) {
  detail::check_closed_form_domain(m, alpha, "closed_form_IA");
  return detail::evaluate<T, detail::IAValue>(TableId::IA, m, alpha);
}

template <class T = long double>
T closed_form_IBC(int m, double alpha) {
  detail::check_closed_form_domain(m, alpha, "closed_form_IBC");
  return detail::evaluate<T, detail::IBCValue>(TableId::IBC, m, alpha);
}

// Regular for every alpha > -1; no contour needed.
template <class T = long double>
T closed_form_ID(int m, double alpha) {
  detail::check_closed_form_domain(m, alpha, "closed_form_ID");
  const CoefficientTable& tab = coefficient_table(TableId::ID);
  const auto coef = [&](const char* name) { return eval_coefficient<T>(tab, name, m, alpha); };
  return detail::id_value<T>(m, static_cast<T>(alpha), coef);
}

template <class T = long double>
IntegralBundle assemble_variance(int m, double alpha) {
  const T ia = closed_form_IA<T>(m, alpha);
  const T ibc = closed_form_IBC<T>(m, alpha);
  const T id = closed_form_ID<T>(m, alpha);
  IntegralBundle b;
  b.I_A = static_cast<double>(ia);
  b.I_BC = static_cast<double>(ibc);
  b.I_D = static_cast<double>(id);
  b.V_h_T = static_cast<double>((ia - ibc - 2 * id) / 2);
  b.V_h_T_literal = static_cast<double>((ia - ibc + 2 * id) / 2);
  return b;
}

// Coefficient of the length-m psi0 sums in I_A - (I_B + I_C), i.e.
// -2 a0 / den_A - 2 (b0 + c0) / den_BC, in exact rational arithmetic.
// Requires a dyadic alpha away from the removable singularities.
inline rational sum_block_coefficient(int m, double alpha) {
  detail::check_closed_form_domain(m, alpha, "sum_block_coefficient");
  const auto q = detail::dyadic(alpha);
  if (!q) throw parameter_error("sum_block_coefficient: alpha must be a dyadic rational");
  const rational a = *q;
  const rational mm = m;
  const rational s = 2 * mm + 2 * a + 1;
  const rational den_a = 36 * a * (mm + a) * (mm + 2 * a) * s * s * s;
  const rational den_bc = 36 * a * (mm + a) * (mm + a + 1) * (mm + 2 * a) * s * s * s * s;
  if (den_a == 0 || den_bc == 0) {
    throw parameter_error("sum_block_coefficient: prefactor vanishes at this alpha");
  }
  const rational a0 = eval_coefficient_exact(coefficient_table(TableId::IA), "a0", m, a);
  const rational b0 = eval_coefficient_exact(coefficient_table(TableId::IBC), "bc0", m, a);
  return -2 * a0 / den_a - 2 * b0 / den_bc;
}

}  // namespace bures

#pragma once

// Finite-sum polygamma identities consumed by the closed-form integrals,
// each evaluated from both sides so that the residual can be checked.
//
//   A1  sum_{k=1}^m psi0(k+a)
//   A2  sum_{k=1}^m k psi0(k+a)
//   A3  sum_{k=1}^m k^2 psi0(k+a)
//   A4  sum_{k=1}^m psi0(k+a)/(k+a)
//   A5  sum_{k=1}^m psi0(m+1-k)/k
//   A6  sum_{k=1}^m psi0(k+b)/(k+a)        (right side keeps a mirrored sum)
//   A7  sum_{k=1}^m psi0(k)/(a+1-k), a > m (right side keeps a shifted sum)
//   A8  sum_{k=1}^m psi0(a+1-k)/k,   a > m (right side keeps a shifted sum)
//   L41 sum_{j=i}^{m-1} (j+a+1) G(j+i+2a+2) G(j+s+2a+2) / (G(j-i+1) G(j-s+1))
//   T3t2 sum_{k=0}^{m} (k+a+1) / (G(i-k+2) G(k+i+2a+4) G(s-k+2) G(k+s+2a+4))
//
// For L41 and T3t2 the field `a` carries the ensemble exponent alpha.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "bures/error.hpp"
#include "bures/specfun.hpp"

namespace bures {

enum class IdentityId { A1, A2, A3, A4, A5, A6, A7, A8, L41, T3t2 };

inline constexpr std::array<IdentityId, 10> kAllIdentities = {
    IdentityId::A1, IdentityId::A2, IdentityId::A3, IdentityId::A4,  IdentityId::A5,
    IdentityId::A6, IdentityId::A7, IdentityId::A8, IdentityId::L41, IdentityId::T3t2};

inline std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::A1: return "A1";
    case IdentityId::A2: return "A2";
    case IdentityId::A3: return "A3";
    case IdentityId::A4: return "A4";
    case IdentityId::A5: return "A5";
    case IdentityId::A6: return "A6";
    case IdentityId::A7: return "A7";
    case IdentityId::A8: return "A8";
    case IdentityId::L41: return "L41";
    case IdentityId::T3t2: return "T3t2";
  }
  return "?";
}

struct IdentityCase {
  IdentityId id = IdentityId::A1;
  int m = 1;
  double a = 0.0;
  double b = 0.0;  // A6 only
  double i = 0.0;  // L41, T3t2
  double s = 0.0;  // L41, T3t2
};

inline constexpr double kIdentityTolerance = 1e-11;
inline constexpr double kMinSeparation = 1e-6;  // |a - b| for A6

namespace detail {

using ld = long double;

inline ld psi0(ld x) { return digamma(x); }
inline ld psi1(ld x) { return trigamma(x); }
inline ld rgamma(ld x) { return reciprocal_gamma(x); }
inline ld gamma_pos(ld x) { return std::exp(log_gamma(x)); }

inline bool is_whole(double v) { return v == std::floor(v); }

inline void check_domain(const IdentityCase& c) {
  const auto fail = [&](const std::string& why) {
    throw parameter_error(std::string(to_string(c.id)) + ": " + why);
  };
  if (c.m < 1) fail("m must be >= 1");
  switch (c.id) {
    case IdentityId::A1:
    case IdentityId::A2:
    case IdentityId::A3:
    case IdentityId::A4:
      if (!(c.a >= 0.0)) fail("need a >= 0");
      break;
    case IdentityId::A5:
      break;
    case IdentityId::A6:
      if (!(c.a >= 0.0 && c.b >= 0.0)) fail("need a, b >= 0");
      if (std::fabs(c.a - c.b) < kMinSeparation) fail("need |a - b| >= 1e-6");
      break;
    case IdentityId::A7:
    case IdentityId::A8:
      if (!(c.a > c.m)) fail("need a > m");
      break;
    case IdentityId::L41:
      if (!(c.a > -1.0)) fail("need alpha > -1");
      if (!is_whole(c.i) || !is_whole(c.s)) fail("i and s must be integers");
      if (c.i < 0 || c.s < 0 || c.i > c.m - 1 || c.s > c.m - 1) fail("need 0 <= i, s <= m - 1");
      break;
    case IdentityId::T3t2:
      if (!(c.a > -1.0)) fail("need alpha > -1");
      if (!(c.i >= 0.0 && c.s >= 0.0)) fail("need i, s >= 0");
      if (std::max(c.i, c.s) + 1.0 > c.m) fail("need m >= max(i, s) + 1");
      break;
  }
}

inline ld t3t2_term(int k, ld i, ld s, ld al) {
  return (k + al + 1) * rgamma(s - k + 2) * rgamma(k + s + 2 * al + 4) * rgamma(i - k + 2) *
         rgamma(k + i + 2 * al + 4);
}

inline ld t3t2_rhs(ld i, ld s, ld al) {
  return rgamma(i + 2 * al + 3) * rgamma(s + 2 * al + 3) * rgamma(i + 2) * rgamma(s + 2) / (2 * (i + s + 2 * al + 4));
}

}  // namespace detail

inline double identity_lhs(const IdentityCase& c) {
  using detail::ld;
  using detail::psi0;
  detail::check_domain(c);
  const int m = c.m;
  const ld a = c.a;
  const ld b = c.b;
  ld acc = 0;
  switch (c.id) {
    case IdentityId::A1:
      for (int k = 1; k <= m; ++k) acc += psi0(k + a);
      break;
    case IdentityId::A2:
      for (int k = 1; k <= m; ++k) acc += k * psi0(k + a);
      break;
    case IdentityId::A3:
      for (int k = 1; k <= m; ++k) acc += ld(k) * k * psi0(k + a);
      break;
    case IdentityId::A4:
      for (int k = 1; k <= m; ++k) acc += psi0(k + a) / (k + a);
      break;
    case IdentityId::A5:
      for (int k = 1; k <= m; ++k) acc += psi0(ld(m + 1 - k)) / k;
      break;
    case IdentityId::A6:
      for (int k = 1; k <= m; ++k) acc += psi0(k + b) / (k + a);
      break;
    case IdentityId::A7:
      for (int k = 1; k <= m; ++k) acc += psi0(ld(k)) / (a + 1 - k);
      break;
    case IdentityId::A8:
      for (int k = 1; k <= m; ++k) acc += psi0(a + 1 - k) / k;
      break;
    case IdentityId::L41: {
      const ld i = c.i;
      const ld s = c.s;
      for (int j = static_cast<int>(c.i); j <= m - 1; ++j) {
        acc += (j + a + 1) * detail::gamma_pos(j + i + 2 * a + 2) * detail::gamma_pos(j + s + 2 * a + 2) *
               detail::rgamma(j - i + 1) * detail::rgamma(j - s + 1);
      }
      break;
    }
    case IdentityId::T3t2:
      for (int k = 0; k <= m; ++k) acc += detail::t3t2_term(k, c.i, c.s, a);
      break;
  }
  return static_cast<double>(acc);
}

inline double identity_rhs(const IdentityCase& c) {
  using detail::ld;
  using detail::psi0;
  using detail::psi1;
  detail::check_domain(c);
  const ld m = c.m;
  const ld a = c.a;
  const ld b = c.b;
  switch (c.id) {
    case IdentityId::A1:
      return static_cast<double>((m + a) * psi0(m + a + 1) - a * psi0(a + 1) - m);
    case IdentityId::A2:
      return static_cast<double>(0.5L * (m * m + m - a * a + a) * psi0(m + a + 1) +
                                 0.5L * (a - 1) * a * psi0(a + 1) + 0.25L * m * (2 * a - m - 3));
    case IdentityId::A3:
      return static_cast<double>(
          (2 * m * m * m + 3 * m * m + m + 2 * a * a * a - 3 * a * a + a) / 6 * psi0(m + a + 1) -
          a * (2 * a * a - 3 * a + 1) / 6 * psi0(a + 1) -
          m * (4 * m * m + 15 * m - 6 * m * a + 12 * a * a - 24 * a + 17) / 36);
    case IdentityId::A4: {
      const ld p0 = psi0(a + 1);
      const ld pm = psi0(m + a + 1);
      return static_cast<double>(0.5L * (-p0 * p0 + pm * pm - psi1(a + 1) + psi1(m + a + 1)));
    }
    case IdentityId::A5: {
      const ld pm = psi0(m + 1);
      return static_cast<double>(-psi0(ld(1)) * pm + pm * pm - psi1(ld(1)) + psi1(m + 1));
    }
    case IdentityId::A6: {
      ld mirrored = 0;
      for (int k = 1; k <= c.m; ++k) mirrored += psi0(k + a) / (k + b);
      return static_cast<double>(-mirrored + psi0(m + a + 1) * psi0(m + b + 1) - psi0(a + 1) * psi0(b + 1) +
                                 (psi0(m + a + 1) - psi0(m + b + 1) - psi0(a + 1) + psi0(b + 1)) / (a - b));
    }
    case IdentityId::A7: {
      ld shifted = 0;
      for (int k = 1; k <= c.m; ++k) shifted += psi0(ld(k)) / (k + a - m);
      const ld diff = psi0(a - m + 1) - psi0(a + 1);
      return static_cast<double>(shifted + 0.5L * diff * diff - 0.5L * (psi1(a - m + 1) - psi1(a + 1)));
    }
    case IdentityId::A8: {
      ld shifted = 0;
      for (int k = 1; k <= c.m; ++k) shifted += psi0(k + a - m) / k;
      const ld diff = psi0(a - m) - psi0(a + 1);
      return static_cast<double>(-shifted + (psi0(m + 1) - psi0(ld(1))) * (psi0(a - m) + psi0(a + 1)) +
                                 0.5L * (diff * diff + psi1(a + 1) - psi1(a - m)));
    }
    case IdentityId::L41: {
      const ld i = c.i;
      const ld s = c.s;
      return static_cast<double>(detail::gamma_pos(i + m + 2 * a + 2) * detail::gamma_pos(s + m + 2 * a + 2) /
                                 (2 * (i + s + 2 * a + 2)) * detail::rgamma(m - i) * detail::rgamma(m - s));
    }
    case IdentityId::T3t2:
      return static_cast<double>(detail::t3t2_rhs(c.i, c.s, a));
  }
  return 0.0;
}

inline double identity_residual(const IdentityCase& c) {
  const double lhs = identity_lhs(c);
  const double rhs = identity_rhs(c);
  return std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
}

// Left side of T3t2 with the k-sum continued past m until the terms are
// negligible. For real (non-integer) i, s the finite sum is exact only to
// first order around integer points; the mixed i-s derivative needs the tail.
inline double t3t2_lhs_continued(double i, double s, double alpha, int m) {
  detail::ld acc = 0;
  detail::ld last = 0;
  for (int k = 0; k <= m || k < 4000; ++k) {
    const detail::ld term = detail::t3t2_term(k, i, s, alpha);
    acc += term;
    if (k > m && std::fabs(static_cast<double>(term)) + std::fabs(static_cast<double>(last)) <=
                     1e-19 * std::fabs(static_cast<double>(acc))) {
      break;
    }
    last = term;
  }
  return static_cast<double>(acc);
}

// Central finite differences of both sides of T3t2 in the continued
// variables i, s. The left side uses t3t2_lhs_continued.
struct DerivativeCheck {
  double lhs_di = 0, rhs_di = 0;
  double lhs_ds = 0, rhs_ds = 0;
  double lhs_dids = 0, rhs_dids = 0;
  double max_relative() const {
    const auto rel = [](double a, double b) { return std::fabs(a - b) / std::max(1e-300, std::fabs(b)); };
    return std::max({rel(lhs_di, rhs_di), rel(lhs_ds, rhs_ds), rel(lhs_dids, rhs_dids)});
  }
};

inline DerivativeCheck t3t2_derivatives(double i, double s, double alpha, int m, double h = 1e-4) {
  const auto lhs = [&](double ii, double ss) { return t3t2_lhs_continued(ii, ss, alpha, m); };
  detail::check_domain(IdentityCase{IdentityId::T3t2, m, alpha, 0.0, i, s});
  const auto rhs = [&](double ii, double ss) { return static_cast<double>(detail::t3t2_rhs(ii, ss, alpha)); };
  DerivativeCheck d;
  d.lhs_di = (lhs(i + h, s) - lhs(i - h, s)) / (2 * h);
  d.rhs_di = (rhs(i + h, s) - rhs(i - h, s)) / (2 * h);
  d.lhs_ds = (lhs(i, s + h) - lhs(i, s - h)) / (2 * h);
  d.rhs_ds = (rhs(i, s + h) - rhs(i, s - h)) / (2 * h);
  d.lhs_dids = (lhs(i + h, s + h) - lhs(i + h, s - h) - lhs(i - h, s + h) + lhs(i - h, s - h)) / (4 * h * h);
  d.rhs_dids = (rhs(i + h, s + h) - rhs(i + h, s - h) - rhs(i - h, s + h) + rhs(i - h, s - h)) / (4 * h * h);
  return d;
}

// Seeded random case inside the stated domain of each identity.
template <class Rng>
IdentityCase random_case(IdentityId id, Rng& rng) {
  std::uniform_int_distribution<int> m_dist(1, 20);
  std::uniform_real_distribution<double> a_dist(0.0, 10.0);
  IdentityCase c;
  c.id = id;
  c.m = m_dist(rng);
  switch (id) {
    case IdentityId::A1:
    case IdentityId::A2:
    case IdentityId::A3:
    case IdentityId::A4:
    case IdentityId::A5:
      c.a = a_dist(rng);
      break;
    case IdentityId::A6:
      do {
        c.a = a_dist(rng);
        c.b = a_dist(rng);
      } while (std::fabs(c.a - c.b) < 1e-3);
      break;
    case IdentityId::A7:
    case IdentityId::A8:
      c.a = c.m + std::uniform_real_distribution<double>(0.05, 10.0)(rng);
      break;
    case IdentityId::L41:
    case IdentityId::T3t2: {
      c.m = std::uniform_int_distribution<int>(1, 12)(rng);
      c.a = std::uniform_real_distribution<double>(-0.95, 4.0)(rng);
      std::uniform_int_distribution<int> idx(0, c.m - 1);
      c.i = idx(rng);
      c.s = idx(rng);
      break;
    }
  }
  return c;
}

}  // namespace bures

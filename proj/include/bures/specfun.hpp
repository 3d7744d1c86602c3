#pragma once

// Log-gamma, digamma and trigamma on the positive reals.
//
// Integer and half-integer arguments are evaluated by their finite sums
//   psi0(l)       = -gamma + sum_{k=1}^{l-1} 1/k
//   psi0(l + 1/2) = -gamma - 2 ln 2 + 2 sum_{k=0}^{l-1} 1/(2k+1)
//   psi1(l)       = pi^2/6 - sum_{k=1}^{l-1} 1/k^2
//   psi1(l + 1/2) = pi^2/2 - 4 sum_{k=0}^{l-1} 1/(2k+1)^2
// accumulated in long double. Every other argument is shifted above
// kAsymptoticThreshold by the recurrences and finished with the Stirling-type
// asymptotic series.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>

#include "bures/error.hpp"

namespace bures {

inline constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
inline constexpr long double kPi = 3.141592653589793238462643383279502884L;
inline constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
inline constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639L;

struct PolyGammaArg {
  enum class Kind { integer, half_integer, general };
  double value;
  Kind kind;
  std::int64_t l;  // x = l (integer) or x = l + 1/2 (half_integer); 0 otherwise
};

namespace detail {

// Finite-sum fast paths are used up to this integer part; beyond it the
// asymptotic series is both faster and at least as accurate.
inline constexpr std::int64_t kFastPathLimit = std::int64_t{1} << 20;
inline constexpr double kAsymptoticThreshold = 12.0;

// B_{2k} for k = 1..10.
inline constexpr long double kBernoulli[] = {
    1.0L / 6.0L,       -1.0L / 30.0L,        1.0L / 42.0L,   -1.0L / 30.0L,
    5.0L / 66.0L,      -691.0L / 2730.0L,    7.0L / 6.0L,    -3617.0L / 510.0L,
    43867.0L / 798.0L, -174611.0L / 330.0L};

template <class T>
void require_positive(T x, const char* fn) {
  if (!(x > T(0)) || !std::isfinite(static_cast<long double>(x))) {
    throw domain_error(std::string(fn) + ": argument must be a positive finite real");
  }
}

// Digamma for x with Re x >= kAsymptoticThreshold. Z may be real or complex.
template <class Z>
Z digamma_asymptotic(Z x) {
  using std::log;
  const Z inv2 = Z(1) / (x * x);
  Z term = inv2;
  Z acc = Z(0);
  for (int k = 0; k < 10; ++k) {
    acc += Z(kBernoulli[k] / (2 * (k + 1))) * term;
    term *= inv2;
  }
  return log(x) - Z(0.5) / x - acc;
}

template <class Z>
Z trigamma_asymptotic(Z x) {
  const Z inv = Z(1) / x;
  const Z inv2 = inv * inv;
  Z term = inv2 * inv;
  Z acc = inv + Z(0.5) * inv2;
  for (int k = 0; k < 10; ++k) {
    acc += Z(kBernoulli[k]) * term;
    term *= inv2;
  }
  return acc;
}

template <class Z>
Z log_gamma_asymptotic(Z x) {
  using std::log;
  const Z inv = Z(1) / x;
  const Z inv2 = inv * inv;
  Z term = inv;
  Z acc = Z(0);
  for (int k = 0; k < 10; ++k) {
    acc += Z(kBernoulli[k] / ((2 * k + 2) * (2 * k + 1))) * term;
    term *= inv2;
  }
  return (x - Z(0.5)) * log(x) - x + Z(kHalfLog2Pi) + acc;
}

template <class Z>
auto real_part(const Z& z) {
  if constexpr (std::is_floating_point_v<Z>) {
    return z;
  } else {
    return z.real();
  }
}

// Recurrence shift plus asymptotic series; valid anywhere off the poles,
// including complex arguments with negative real part.
template <class Z>
Z digamma_shifted(Z x) {
  Z acc = Z(0);
  while (real_part(x) < kAsymptoticThreshold) {
    acc -= Z(1) / x;
    x += Z(1);
  }
  return acc + digamma_asymptotic(x);
}

template <class Z>
Z trigamma_shifted(Z x) {
  Z acc = Z(0);
  while (real_part(x) < kAsymptoticThreshold) {
    acc += Z(1) / (x * x);
    x += Z(1);
  }
  return acc + trigamma_asymptotic(x);
}

template <class T>
T log_gamma_shifted(T x) {
  T prod = T(1);
  T log_acc = T(0);
  while (x < T(kAsymptoticThreshold)) {
    prod *= x;
    if (prod > T(1e200) || prod < T(1e-200)) {
      log_acc += std::log(prod);
      prod = T(1);
    }
    x += T(1);
  }
  return log_gamma_asymptotic(x) - log_acc - std::log(prod);
}

}  // namespace detail

inline PolyGammaArg classify(double x) {
  if (!(x > 0.0)) return {x, PolyGammaArg::Kind::general, 0};
  if (x >= static_cast<double>(detail::kFastPathLimit)) {
    return {x, PolyGammaArg::Kind::general, 0};
  }
  const double twice = 2.0 * x;
  if (twice != std::floor(twice)) return {x, PolyGammaArg::Kind::general, 0};
  const auto t = static_cast<std::int64_t>(twice);
  if (t % 2 == 0) return {x, PolyGammaArg::Kind::integer, t / 2};
  return {x, PolyGammaArg::Kind::half_integer, (t - 1) / 2};
}

template <class T>
PolyGammaArg classify(T x) {
  // Only arguments exactly representable as double can take a fast path.
  const auto d = static_cast<double>(x);
  if (static_cast<T>(d) != x) return {d, PolyGammaArg::Kind::general, 0};
  return classify(d);
}

template <class T>
T log_gamma(T x) {
  static_assert(std::is_floating_point_v<T>);
  detail::require_positive(x, "log_gamma");
  const PolyGammaArg arg = classify(x);
  if (arg.kind == PolyGammaArg::Kind::integer && arg.l <= 171) {
    long double acc = 0.0L;
    for (std::int64_t k = 2; k < arg.l; ++k) acc += std::log(static_cast<long double>(k));
    return static_cast<T>(acc);
  }
  return detail::log_gamma_shifted(x);
}

template <class T>
T digamma(T x) {
  static_assert(std::is_floating_point_v<T>);
  detail::require_positive(x, "digamma");
  const PolyGammaArg arg = classify(x);
  if (arg.kind == PolyGammaArg::Kind::integer) {
    long double acc = 0.0L;
    for (std::int64_t k = arg.l - 1; k >= 1; --k) acc += 1.0L / static_cast<long double>(k);
    return static_cast<T>(acc - kEulerGamma);
  }
  if (arg.kind == PolyGammaArg::Kind::half_integer) {
    long double acc = 0.0L;
    for (std::int64_t k = arg.l - 1; k >= 0; --k) acc += 1.0L / static_cast<long double>(2 * k + 1);
    return static_cast<T>(2.0L * acc - kEulerGamma - 2.0L * kLn2);
  }
  return detail::digamma_shifted(x);
}

template <class T>
T trigamma(T x) {
  static_assert(std::is_floating_point_v<T>);
  detail::require_positive(x, "trigamma");
  const PolyGammaArg arg = classify(x);
  if (arg.kind == PolyGammaArg::Kind::integer) {
    long double acc = 0.0L;
    for (std::int64_t k = arg.l - 1; k >= 1; --k) {
      const auto kk = static_cast<long double>(k);
      acc += 1.0L / (kk * kk);
    }
    return static_cast<T>(kPi * kPi / 6.0L - acc);
  }
  if (arg.kind == PolyGammaArg::Kind::half_integer) {
    long double acc = 0.0L;
    for (std::int64_t k = arg.l - 1; k >= 0; --k) {
      const auto odd = static_cast<long double>(2 * k + 1);
      acc += 1.0L / (odd * odd);
    }
    return static_cast<T>(kPi * kPi / 2.0L - 4.0L * acc);
  }
  return detail::trigamma_shifted(x);
}

// 1/Gamma(x) on the whole real line; zero at the non-positive integers.
template <class T>
T reciprocal_gamma(T x) {
  static_assert(std::is_floating_point_v<T>);
  if (x > T(0)) return std::exp(-log_gamma(x));
  if (x == std::floor(x)) return T(0);
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
  const T one_minus = T(1) - x;
  const T frac = x - std::floor(x);
  const T s = std::sin(static_cast<T>(kPi) * frac) * ((static_cast<std::int64_t>(std::floor(x)) % 2 == 0) ? T(1) : T(-1));
  return s * std::exp(log_gamma(one_minus)) / static_cast<T>(kPi);
}

// Complex digamma and trigamma, used where a closed form is evaluated on a
// contour around a removable singularity. Poles are not guarded.
template <class T>
std::complex<T> digamma(std::complex<T> z) {
  return detail::digamma_shifted(z);
}

template <class T>
std::complex<T> trigamma(std::complex<T> z) {
  return detail::trigamma_shifted(z);
}

}  // namespace bures

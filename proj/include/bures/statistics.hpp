#pragma once

// Sample moments with standard errors and Kolmogorov-Smirnov tests.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "bures/error.hpp"

namespace bures {

struct SampleMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;  // adjusted Fisher-Pearson
  double m4 = 0.0;        // fourth central moment
  double se_mean = 0.0;
  double se_variance = 0.0;
  double se_skewness = 0.0;
};

inline SampleMoments sample_moments(std::span<const double> v) {
  SampleMoments s;
  const std::size_t n = v.size();
  if (n < 4) throw input_error("sample_moments: need at least 4 values");
  s.count = n;
  long double sum = 0.0L;
  for (double x : v) sum += x;
  const long double mean = sum / n;
  long double m2 = 0, m3 = 0, m4 = 0;
  for (double x : v) {
    const long double d = x - mean;
    const long double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  const double nd = static_cast<double>(n);
  s.mean = static_cast<double>(mean);
  s.variance = static_cast<double>(m2) * nd / (nd - 1.0);
  s.m4 = static_cast<double>(m4);
  s.skewness = m2 > 0 ? static_cast<double>(m3 / std::pow(m2, 1.5L)) * std::sqrt(nd * (nd - 1.0)) / (nd - 2.0) : 0.0;
  s.se_mean = std::sqrt(s.variance / nd);
  s.se_variance = std::sqrt(std::max(0.0, (s.m4 - static_cast<double>(m2 * m2)) / nd));
  s.se_skewness = std::sqrt(6.0 * nd * (nd - 1.0) / ((nd - 2.0) * (nd + 1.0) * (nd + 3.0)));
  return s;
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// sup |F_n - Phi| over the sample.
inline double ks_statistic_normal(std::vector<double> z) {
  if (z.empty()) throw input_error("ks_statistic_normal: empty sample");
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double d = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double f = normal_cdf(z[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) e^(-2 k^2 lambda^2).
inline double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double acc = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    acc += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-17) break;
  }
  return std::clamp(acc, 0.0, 1.0);
}

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

inline KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw input_error("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(i / na - j / nb));
  }
  const double en = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_q((en + 0.12 + 0.11 / en) * d)};
}

inline double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 3) throw input_error("correlation: size mismatch");
  const double n = static_cast<double>(a.size());
  long double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

// Split-chain potential scale reduction over equal-length chains.
inline double split_rhat(const std::vector<std::vector<double>>& chains) {
  std::vector<std::span<const double>> halves;
  for (const auto& c : chains) {
    const std::size_t h = c.size() / 2;
    if (h < 2) continue;
    halves.emplace_back(c.data(), h);
    halves.emplace_back(c.data() + h, h);
  }
  if (halves.size() < 2) return 1.0;
  std::size_t n = halves[0].size();
  for (const auto& h : halves) n = std::min(n, h.size());
  const double M = static_cast<double>(halves.size());
  const double N = static_cast<double>(n);
  std::vector<double> means;
  long double W = 0;
  for (const auto& h : halves) {
    long double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += h[i];
    const long double mu = s / n;
    means.push_back(static_cast<double>(mu));
    long double v = 0;
    for (std::size_t i = 0; i < n; ++i) v += (h[i] - mu) * (h[i] - mu);
    W += v / (n - 1);
  }
  W /= M;
  long double grand = 0;
  for (double mu : means) grand += mu;
  grand /= M;
  long double B = 0;
  for (double mu : means) B += (mu - grand) * (mu - grand);
  B *= N / (M - 1);
  if (W <= 0) return 1.0;
  const long double var_plus = (N - 1) / N * W + B / N;
  return static_cast<double>(std::sqrt(var_plus / W));
}

}  // namespace bures

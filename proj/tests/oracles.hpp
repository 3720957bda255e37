// Copyright 2026 The locdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracles, independent of the library's implementation paths:
//  - a long-double standard normal CDF built from a Taylor series and a
//    Lentz continued fraction (the library uses std::erfc),
//  - adaptive Simpson quadrature of densities over finite intervals,
//  - brute-force enumeration of threshold-realizable dichotomies for exact
//    empirical suprema on small pooled samples.

#ifndef LOCDISC_TESTS_ORACLES_HPP
#define LOCDISC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace test_oracle {

inline long double erfc_series(long double x) {
  // erf(x) = 2/sqrt(pi) * sum (-1)^n x^{2n+1} / (n! (2n+1)), |x| small.
  const long double spi = 1.7724538509055160272981674833411452L;
  long double term = x;
  long double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    const long double add = term / (2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-25L * std::abs(sum)) break;
  }
  return 1.0L - 2.0L / spi * sum;
}

inline long double erfc_continued_fraction(long double x) {
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  // evaluated with the modified Lentz algorithm.
  const long double spi = 1.7724538509055160272981674833411452L;
  const long double tiny = 1e-60L;
  long double f = x;
  long double c = f;
  long double d = 0.0L;
  for (int n = 1; n < 400; ++n) {
    const long double a = n * 0.5L;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0L) < 1e-22L) break;
  }
  return std::exp(-x * x) / (spi * f);
}

inline long double erfc_ld(long double x) {
  if (x < 0.0L) return 2.0L - erfc_ld(-x);
  if (x < 2.0L) return erfc_series(x);
  return erfc_continued_fraction(x);
}

inline long double normal_cdf_ld(long double z) {
  const long double inv_sqrt2 = 0.70710678118654752440084436210484903L;
  return 0.5L * erfc_ld(-z * inv_sqrt2);
}

inline long double normal_sf_ld(long double z) {
  const long double inv_sqrt2 = 0.70710678118654752440084436210484903L;
  return 0.5L * erfc_ld(z * inv_sqrt2);
}

// P(a <= Z < b), Z ~ N(mean, sd), tail-robust.
inline long double normal_interval_ld(long double mean, long double sd,
                                      long double a, long double b) {
  const long double za = (a - mean) / sd;
  const long double zb = (b - mean) / sd;
  if (za >= 0.0L) return normal_sf_ld(za) - normal_sf_ld(zb);
  if (zb <= 0.0L) return normal_sf_ld(-zb) - normal_sf_ld(-za);
  return 1.0L - normal_sf_ld(-za) - normal_sf_ld(zb);
}

inline long double simpson(const std::function<long double(long double)>& f,
                           long double a, long double b, int depth,
                           long double fa, long double fm, long double fb,
                           long double whole) {
  const long double m = 0.5L * (a + b);
  const long double lm = 0.5L * (a + m);
  const long double rm = 0.5L * (m + b);
  const long double flm = f(lm);
  const long double frm = f(rm);
  const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
  const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 1e-18L)
    return left + right;
  return simpson(f, a, m, depth - 1, fa, flm, fm, left) +
         simpson(f, m, b, depth - 1, fm, frm, fb, right);
}

// Adaptive Simpson integral over [a, b].
inline long double integrate(const std::function<long double(long double)>& f,
                             long double a, long double b) {
  const long double fa = f(a);
  const long double fb = f(b);
  const long double fm = f(0.5L * (a + b));
  const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
  return simpson(f, a, b, 48, fa, fm, fb, whole);
}

// ---------------------------------------------------------------------------
// Exact empirical suprema by dichotomy enumeration (threshold class).
// ---------------------------------------------------------------------------

// All labelings of `sorted_xs` realizable by thresholds-with-flips: for every
// cut position k, (1...1 0...0) and its complement.
inline std::vector<std::vector<int>> threshold_dichotomies(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<int> below(n, 0);
    for (std::size_t i = 0; i < k; ++i) below[i] = 1;
    std::vector<int> above(n);
    for (std::size_t i = 0; i < n; ++i) above[i] = 1 - below[i];
    out.push_back(below);
    out.push_back(above);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct PooledSample {
  // Pooled sorted positions with per-dataset membership and source labels.
  std::vector<double> xs;          // sorted pooled
  std::vector<int> from_source;    // 1 if the pooled point is a source point
  std::vector<int> source_labels;  // label when from_source, else -1
  std::size_t n_src = 0, n_tgt = 0;
};

inline PooledSample pool(const std::vector<double>& src_xs,
                         const std::vector<int>& src_ys,
                         const std::vector<double>& tgt_xs) {
  PooledSample p;
  std::vector<std::pair<double, int>> all;  // (x, source index or -1)
  for (std::size_t i = 0; i < src_xs.size(); ++i)
    all.emplace_back(src_xs[i], static_cast<int>(i));
  for (double x : tgt_xs) all.emplace_back(x, -1);
  std::sort(all.begin(), all.end());
  for (const auto& [x, si] : all) {
    p.xs.push_back(x);
    p.from_source.push_back(si >= 0 ? 1 : 0);
    p.source_labels.push_back(si >= 0 ? src_ys[static_cast<std::size_t>(si)] : -1);
  }
  p.n_src = src_xs.size();
  p.n_tgt = tgt_xs.size();
  return p;
}

inline double pattern_source_error(const PooledSample& p,
                                   const std::vector<int>& pattern) {
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < p.xs.size(); ++i)
    if (p.from_source[i] && pattern[i] != p.source_labels[i]) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(p.n_src);
}

// E_target L(a, b) - E_source L(a, b) for two label patterns.
inline double pattern_pair_value(const PooledSample& p,
                                 const std::vector<int>& a,
                                 const std::vector<int>& b) {
  std::size_t src = 0, tgt = 0;
  for (std::size_t i = 0; i < p.xs.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (p.from_source[i])
      ++src;
    else
      ++tgt;
  }
  return static_cast<double>(tgt) / static_cast<double>(p.n_tgt) -
         static_cast<double>(src) / static_cast<double>(p.n_src);
}

struct DichotomySups {
  double hdh_abs;         // sup |.| over all pairs
  double localized;       // signed sup over pairs with source error <= r
  bool localized_defined;
};

inline DichotomySups dichotomy_sups(const PooledSample& p, double r) {
  const auto pats = threshold_dichotomies(p.xs.size());
  DichotomySups sups{0.0, 0.0, false};
  std::vector<char> feasible(pats.size());
  for (std::size_t i = 0; i < pats.size(); ++i)
    feasible[i] = pattern_source_error(p, pats[i]) <= r + 1e-12;
  for (std::size_t i = 0; i < pats.size(); ++i) {
    for (std::size_t j = i; j < pats.size(); ++j) {
      const double v = pattern_pair_value(p, pats[i], pats[j]);
      sups.hdh_abs = std::max(sups.hdh_abs, std::abs(v));
      if (feasible[i] && feasible[j]) {
        sups.localized_defined = true;
        sups.localized = std::max(sups.localized, v);
      }
    }
  }
  return sups;
}

// Anchored signed sup over all threshold-realizable h' (unrestricted).
inline double dichotomy_disparity(const PooledSample& p,
                                  const std::vector<int>& anchor_pattern) {
  const auto pats = threshold_dichotomies(p.xs.size());
  double best = -1.0;
  for (const auto& pat : pats)
    best = std::max(best, pattern_pair_value(p, pat, anchor_pattern));
  return best;
}

}  // namespace test_oracle

#endif  // LOCDISC_TESTS_ORACLES_HPP

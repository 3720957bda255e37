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

#include "core/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "core/error.hpp"
#include "core/pair_scan.hpp"

namespace locdisc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kFeasSlack = 1e-12;

double pow_gamma(double x, double gamma) {
  return gamma == 1.0 ? x : std::pow(x, gamma);
}

double oracle_threshold(const DiscrepancyKind& kind, const Domain& source,
                        const Domain& target,
                        const HypothesisClassDescriptor& cls, double step) {
  const double lo = cls.t_lo;
  const double hi = cls.t_hi;
  const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / step)));
  std::vector<double> ts(n + 1);
  for (int i = 0; i <= n; ++i) ts[i] = lo + (hi - lo) * i / n;

  const bool localized = kind.r.has_value();
  std::vector<double> fs(ts.size()), ft(ts.size());
  std::vector<bool> feas_b(ts.size(), true), feas_a(ts.size(), true);
  const Marginal1D& src = std::get<Marginal1D>(source.marginal.value);
  const Marginal1D& tgt = std::get<Marginal1D>(target.marginal.value);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    fs[i] = src.cdf(ts[i]);
    ft[i] = tgt.cdf(ts[i]);
    if (localized) {
      feas_b[i] = expected_error(Hypothesis::threshold(ts[i], Orientation::kOneBelow),
                                 source) <= *kind.r + kFeasSlack;
      feas_a[i] = expected_error(Hypothesis::threshold(ts[i], Orientation::kOneAbove),
                                 source) <= *kind.r + kFeasSlack;
    }
  }

  switch (kind.tag) {
    case DiscrepancyKindTag::kHdhDivergence: {
      // max over pairs of |D(b)-D(a)| = spread of D.
      double dmin = std::numeric_limits<double>::infinity(), dmax = kNegInf;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const double d = ft[i] - fs[i];
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
      }
      return dmax - dmin;
    }
    case DiscrepancyKindTag::kLocalizedHdh: {
      std::vector<detail::ScanEntry> entries;
      entries.reserve(ts.size());
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!feas_b[i] && !feas_a[i]) continue;
        const double d = ft[i] - fs[i];
        entries.push_back(detail::ScanEntry{ts[i], d, d, feas_b[i], feas_a[i]});
      }
      require(!entries.empty(), ErrorCode::kEmptyLocalizedSpace,
              "empty localized space");
      return detail::scan_threshold_pairs(entries).value;
    }
    case DiscrepancyKindTag::kDisparity:
    case DiscrepancyKindTag::kLocalizedDisparity: {
      double best = kNegInf;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        for (const Orientation o :
             {Orientation::kOneBelow, Orientation::kOneAbove}) {
          if (o == Orientation::kOneBelow ? !feas_b[i] : !feas_a[i]) continue;
          const Hypothesis h = Hypothesis::threshold(ts[i], o);
          const Region reg = disagreement_region(h, *kind.anchor);
          best = std::max(best, target.marginal.mass(reg) -
                                    source.marginal.mass(reg));
        }
      }
      require(best > kNegInf, ErrorCode::kEmptyLocalizedSpace,
              "empty localized space");
      return best;
    }
    case DiscrepancyKindTag::kBoostedLocalizedHdh: {
      // Non-separable: all feasible grid pairs.
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < ts.size(); ++i)
        if (feas_b[i] || feas_a[i]) idx.push_back(i);
      require(!idx.empty(), ErrorCode::kEmptyLocalizedSpace,
              "empty localized space");
      double best = kNegInf;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a; b < idx.size(); ++b) {
          const std::size_t i = idx[a], j = idx[b];
          const double et_in = ft[j] - ft[i];
          const double es_in = fs[j] - fs[i];
          if ((feas_b[i] && feas_b[j]) || (feas_a[i] && feas_a[j]))
            best = std::max(best, et_in - pow_gamma(es_in, *kind.gamma));
          if ((feas_b[i] && feas_a[j]) || (feas_a[i] && feas_b[j]))
            best = std::max(best,
                            (1.0 - et_in) - pow_gamma(1.0 - es_in, *kind.gamma));
        }
      }
      return best;
    }
  }
  throw Error(ErrorCode::kInternal, "unreachable oracle kind");
}

double oracle_linear(const DiscrepancyKind& kind, const Domain& source,
                     const Domain& target, const HypothesisClassDescriptor& cls,
                     double fraction) {
  const int n_theta =
      std::clamp(static_cast<int>(std::round(1.0 / fraction)), 8, 512);
  const int n_b = n_theta;
  std::vector<Hypothesis> grid;
  grid.reserve(static_cast<std::size_t>(n_theta) * (n_b + 1));
  for (int it = 0; it < n_theta; ++it) {
    const double theta = 2.0 * std::numbers::pi * it / n_theta;
    for (int ib = 0; ib <= n_b; ++ib) {
      const double b = cls.b_lo + (cls.b_hi - cls.b_lo) * ib / n_b;
      grid.push_back(Hypothesis::linear2d(theta, b));
    }
  }
  std::vector<char> feas(grid.size(), 1);
  if (kind.r) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      feas[i] = expected_error(grid[i], source) <= *kind.r + kFeasSlack;
  }
  const bool anchored = kind.anchor.has_value();
  require(!anchored || kind.anchor->dim() == 2, ErrorCode::kDimensionMismatch,
          "oracle: anchor dimension mismatch");
  require(anchored || grid.size() <= 8000, ErrorCode::kInvalidArgument,
          "oracle: linear pair grid too large; use a coarser resolution");

  double best = kNegInf;
  auto value = [&](const Hypothesis& a, const Hypothesis& b) {
    const Region reg = disagreement_region(a, b);
    const double et = target.marginal.mass(reg);
    const double es = source.marginal.mass(reg);
    if (kind.gamma) return et - pow_gamma(es, *kind.gamma);
    const double v = et - es;
    return kind.tag == DiscrepancyKindTag::kHdhDivergence ? std::abs(v) : v;
  };
  if (anchored) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (feas[i]) best = std::max(best, value(grid[i], *kind.anchor));
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!feas[i]) continue;
      for (std::size_t j = i; j < grid.size(); ++j) {
        if (!feas[j]) continue;
        best = std::max(best, value(grid[i], grid[j]));
      }
    }
  }
  require(best > kNegInf, ErrorCode::kEmptyLocalizedSpace,
          "empty localized space");
  return best;
}

}  // namespace

double oracle_sup(const DiscrepancyKind& kind, const Domain& source,
                  const Domain& target, const HypothesisClassDescriptor& cls,
                  double resolution) {
  kind.validate();
  cls.validate();
  require(resolution > 0.0, ErrorCode::kInvalidArgument,
          "oracle resolution must be > 0");
  if (cls.kind == ClassKind::kThreshold1D) {
    require(std::isfinite(cls.t_lo) && std::isfinite(cls.t_hi),
            ErrorCode::kInvalidArgument, "oracle needs a finite parameter box");
    return oracle_threshold(kind, source, target, cls, resolution);
  }
  return oracle_linear(kind, source, target, cls, resolution);
}

double oracle_tolerance_1d(const Domain& source, const Domain& target,
                           double resolution) {
  const auto& s = std::get<Marginal1D>(source.marginal.value);
  const auto& t = std::get<Marginal1D>(target.marginal.value);
  return 2.0 * resolution * (s.density_bound() + t.density_bound()) + 1e-9;
}

}  // namespace locdisc

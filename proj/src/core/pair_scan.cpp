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

#include "core/pair_scan.hpp"

#include <limits>

namespace locdisc::detail {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void consider(ScanBest* best, double v, const Hypothesis& a,
              const Hypothesis& b) {
  if (!best->found() || v > best->value) {
    best->value = v;
    if (hypothesis_less(a, b)) {
      best->h = a;
      best->h_prime = b;
    } else {
      best->h = b;
      best->h_prime = a;
    }
  }
}
}  // namespace

ScanBest scan_threshold_pairs(const std::vector<ScanEntry>& entries) {
  ScanBest best;
  // Same orientation: disagreement [u, v) (below) or (u, v] (above); value is
  // the d-difference at the matching boundary convention.
  for (const bool below : {true, false}) {
    const Orientation o =
        below ? Orientation::kOneBelow : Orientation::kOneAbove;
    double run_min = std::numeric_limits<double>::infinity();
    double run_min_t = 0.0;
    for (const auto& e : entries) {
      if (!(below ? e.in_below : e.in_above)) continue;
      const double d = below ? e.d_lo : e.d_up;
      if (d < run_min) {
        run_min = d;
        run_min_t = e.t;
      }
      consider(&best, d - run_min, Hypothesis::threshold(run_min_t, o),
               Hypothesis::threshold(e.t, o));
    }
  }
  // Mixed orientations, u = min t, v = max t: disagreement is
  // (-inf, u] U [v, +inf); value = d_up(u) - d_lo(v).
  for (const bool below_leads : {true, false}) {
    double run_max = kNegInf;
    double run_max_t = 0.0;
    for (const auto& e : entries) {
      const bool lead = below_leads ? e.in_below : e.in_above;
      const bool trail = below_leads ? e.in_above : e.in_below;
      if (lead && e.d_up > run_max) {
        run_max = e.d_up;
        run_max_t = e.t;
      }
      if (trail && run_max > kNegInf) {
        consider(&best, run_max - e.d_lo,
                 Hypothesis::threshold(run_max_t,
                                       below_leads ? Orientation::kOneBelow
                                                   : Orientation::kOneAbove),
                 Hypothesis::threshold(e.t, below_leads
                                                ? Orientation::kOneAbove
                                                : Orientation::kOneBelow));
      }
    }
  }
  // Mixed pair at the same t: disagreement is everything but {t}; the value
  // is nonzero only when data sits exactly on t.
  for (const auto& e : entries) {
    if (e.in_below && e.in_above) {
      consider(&best, e.d_lo - e.d_up,
               Hypothesis::threshold(e.t, Orientation::kOneBelow),
               Hypothesis::threshold(e.t, Orientation::kOneAbove));
    }
  }
  return best;
}

}  // namespace locdisc::detail

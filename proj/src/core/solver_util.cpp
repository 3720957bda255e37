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

#include "core/solver_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace locdisc {

LineSearchResult maximize_on_interval(const std::function<double(double)>& f,
                                      double lo, double hi, double xtol,
                                      int comb) {
  require(comb >= 4, ErrorCode::kInvalidArgument, "comb too small");
  if (!(lo < hi)) return {lo, f(lo)};
  double best_x = lo;
  double best_v = -std::numeric_limits<double>::infinity();
  double a = lo, b = hi;
  // Each pass shrinks the bracket by ~comb/2; bounded pass count regardless.
  for (int pass = 0; pass < 64 && (b - a) > xtol; ++pass) {
    const double step = (b - a) / comb;
    int best_i = 0;
    double pass_best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= comb; ++i) {
      const double x = (i == comb) ? b : a + step * i;
      const double v = f(x);
      if (v > pass_best) {
        pass_best = v;
        best_i = i;
      }
    }
    const double xb = (best_i == comb) ? b : a + step * best_i;
    if (pass_best > best_v) {
      best_v = pass_best;
      best_x = xb;
    }
    const double na = std::max(lo, xb - step);
    const double nb = std::min(hi, xb + step);
    a = na;
    b = nb;
  }
  const double mid = 0.5 * (a + b);
  const double vm = f(mid);
  if (vm > best_v) {
    best_v = vm;
    best_x = mid;
  }
  return {best_x, best_v};
}

LineSearchResult maximize_on_intervals(
    const std::function<double(double)>& f,
    const std::vector<std::pair<double, double>>& intervals, double xtol,
    int comb) {
  LineSearchResult best{0.0, -std::numeric_limits<double>::infinity()};
  for (const auto& [a, b] : intervals) {
    const LineSearchResult r = maximize_on_interval(f, a, b, xtol, comb);
    if (r.value > best.value) best = r;
  }
  return best;
}

double bisect_root(const std::function<double(double)>& g, double a, double b,
                   double xtol) {
  double ga = g(a);
  double gb = g(b);
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  require(std::signbit(ga) != std::signbit(gb), ErrorCode::kInternal,
          "bisect_root: endpoints do not bracket a sign change");
  while (b - a > xtol) {
    const double m = 0.5 * (a + b);
    const double gm = g(m);
    if (gm == 0.0) return m;
    if (std::signbit(gm) == std::signbit(ga)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace locdisc

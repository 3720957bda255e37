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

#ifndef LOCDISC_CORE_SOLVER_UTIL_HPP
#define LOCDISC_CORE_SOLVER_UTIL_HPP

#include <functional>
#include <utility>
#include <vector>

namespace locdisc {

struct LineSearchResult {
  double x = 0.0;
  double value = 0.0;
};

// Iterated grid-zoom maximizer on [lo, hi]: sample a fixed comb, re-bracket
// around the best point, repeat until the bracket is below xtol. Unlike pure
// golden section this tolerates kinks and one-sided jumps, which the mass
// objectives have at support edges and feasibility walls.
LineSearchResult maximize_on_interval(const std::function<double(double)>& f,
                                      double lo, double hi, double xtol,
                                      int comb = 16);

inline LineSearchResult minimize_on_interval(
    const std::function<double(double)>& f, double lo, double hi, double xtol,
    int comb = 16) {
  LineSearchResult r = maximize_on_interval([&](double x) { return -f(x); },
                                            lo, hi, xtol, comb);
  r.value = -r.value;
  return r;
}

// Maximize over a union of closed intervals.
LineSearchResult maximize_on_intervals(
    const std::function<double(double)>& f,
    const std::vector<std::pair<double, double>>& intervals, double xtol,
    int comb = 16);

// Root bracketing refinement: g is continuous with g(a), g(b) of opposite
// sign (or zero); bisects to width xtol and returns the midpoint.
double bisect_root(const std::function<double(double)>& g, double a, double b,
                   double xtol);

}  // namespace locdisc

#endif  // LOCDISC_CORE_SOLVER_UTIL_HPP

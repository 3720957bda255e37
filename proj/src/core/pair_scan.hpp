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

#ifndef LOCDISC_CORE_PAIR_SCAN_HPP
#define LOCDISC_CORE_PAIR_SCAN_HPP

#include <optional>
#include <vector>

#include "core/hypothesis.hpp"

namespace locdisc::detail {

// One candidate threshold location with the CDF-difference statistics needed
// for exact pair suprema. d_lo uses below-counts (#x < t), d_up uses
// at-or-below counts (#x <= t); they coincide for atomless population
// marginals and differ empirically only when data sits exactly on t.
struct ScanEntry {
  double t = 0.0;
  double d_lo = 0.0;  // F_target(t^-) - F_source(t^-)
  double d_up = 0.0;  // F_target(t) - F_source(t)
  bool in_below = false;
  bool in_above = false;
};

struct ScanBest {
  double value = 0.0;
  std::optional<Hypothesis> h;
  std::optional<Hypothesis> h_prime;

  bool found() const { return h.has_value(); }
};

// Signed supremum of (E_target - E_source) over threshold pairs drawn from
// the feasibility-flagged entries (sorted by t). Same-orientation pairs
// contribute interval masses, mixed pairs complement masses; diagonal pairs
// are included, so the result is >= 0 whenever some entry is feasible.
ScanBest scan_threshold_pairs(const std::vector<ScanEntry>& entries);

}  // namespace locdisc::detail

#endif  // LOCDISC_CORE_PAIR_SCAN_HPP

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

#ifndef LOCDISC_CORE_EMPIRICAL_INDEX_HPP
#define LOCDISC_CORE_EMPIRICAL_INDEX_HPP

#include <cstdint>
#include <vector>

#include "core/domain.hpp"
#include "core/hypothesis.hpp"

namespace locdisc {

// Sorted view of a 1-D sample. Threshold counts and empirical errors become
// O(log n) prefix lookups; candidate thresholds never coincide with data
// points (midpoints and +-inf), so strict/non-strict below counts agree.
class SortedSample {
 public:
  explicit SortedSample(const Dataset& data);  // labels optional

  std::size_t size() const { return xs_.size(); }
  bool labeled() const { return !ones_prefix_.empty(); }

  // #{x_i < t}.
  std::size_t count_below(double t) const;
  double frac_below(double t) const {
    return static_cast<double>(count_below(t)) / static_cast<double>(size());
  }
  // #{x_i : a <= x_i < b} with a <= b.
  std::size_t count_in(double a, double b) const;

  // Empirical 0-1 error of a threshold against the stored labels.
  double threshold_error(double t, Orientation o) const;

 private:
  std::vector<double> xs_;
  std::vector<std::uint32_t> ones_prefix_;  // ones among the first k sorted
  std::uint32_t total_ones_ = 0;
};

}  // namespace locdisc

#endif  // LOCDISC_CORE_EMPIRICAL_INDEX_HPP

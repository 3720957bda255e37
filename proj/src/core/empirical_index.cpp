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

#include "core/empirical_index.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace locdisc {

SortedSample::SortedSample(const Dataset& data) {
  require(data.dim == 1, ErrorCode::kDimensionMismatch,
          "SortedSample requires a 1-D dataset");
  require(!data.points.empty(), ErrorCode::kInvalidArgument,
          "SortedSample requires a nonempty dataset");
  const std::size_t n = data.points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return data.points[i][0] < data.points[j][0];
  });
  xs_.reserve(n);
  for (std::size_t i : order) xs_.push_back(data.points[i][0]);
  if (data.labels) {
    ones_prefix_.resize(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      ones_prefix_[k + 1] =
          ones_prefix_[k] + static_cast<std::uint32_t>((*data.labels)[order[k]]);
    }
    total_ones_ = ones_prefix_[n];
  }
}

std::size_t SortedSample::count_below(double t) const {
  return static_cast<std::size_t>(
      std::lower_bound(xs_.begin(), xs_.end(), t) - xs_.begin());
}

std::size_t SortedSample::count_in(double a, double b) const {
  if (!(a < b)) return 0;
  return count_below(b) - count_below(a);
}

double SortedSample::threshold_error(double t, Orientation o) const {
  require(labeled(), ErrorCode::kInvalidArgument,
          "threshold_error needs labels");
  const std::size_t n = xs_.size();
  std::size_t mistakes;
  if (o == Orientation::kOneBelow) {
    // Predict 1 on x < t: wrong on zeros below t and ones at or above t.
    const std::size_t k = count_below(t);
    const std::uint32_t ones_k = ones_prefix_[k];
    mistakes = (k - ones_k) + (total_ones_ - ones_k);
  } else {
    // Predict 1 on x > t: wrong on ones at or below t and zeros above t.
    const std::size_t k = static_cast<std::size_t>(
        std::upper_bound(xs_.begin(), xs_.end(), t) - xs_.begin());
    const std::uint32_t ones_k = ones_prefix_[k];
    mistakes = ones_k + ((n - k) - (total_ones_ - ones_k));
  }
  return static_cast<double>(mistakes) / static_cast<double>(n);
}

}  // namespace locdisc

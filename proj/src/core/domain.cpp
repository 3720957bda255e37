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

#include "core/domain.hpp"

#include "core/error.hpp"

namespace locdisc {

void Domain::validate() const {
  marginal.validate();
  require(labeling.dim() == marginal.dim(), ErrorCode::kDimensionMismatch,
          "Domain: labeling dimension does not match marginal dimension");
}

void Dataset::validate() const {
  if (labels)
    require(labels->size() == points.size(), ErrorCode::kInvalidArgument,
            "Dataset: labels and points must have the same length");
}

Dataset sample(const Domain& domain, std::int64_t count, std::uint64_t seed,
               bool labeled) {
  require(count >= 1, ErrorCode::kInvalidArgument, "sample: count must be >= 1");
  domain.validate();
  Dataset data;
  data.dim = domain.dim();
  data.seed = seed;
  data.domain_id = domain.id;
  data.points.reserve(static_cast<std::size_t>(count));
  RngStream rng(seed);
  for (std::int64_t i = 0; i < count; ++i)
    data.points.push_back(domain.marginal.sample(rng));
  if (labeled) {
    std::vector<std::uint8_t> ys;
    ys.reserve(data.points.size());
    for (const auto& p : data.points)
      ys.push_back(static_cast<std::uint8_t>(domain.labeling.predict(p)));
    data.labels = std::move(ys);
  }
  return data;
}

double expected_error(const Hypothesis& h, const Domain& domain) {
  require(h.dim() == domain.dim(), ErrorCode::kDimensionMismatch,
          "expected_error: hypothesis dimension does not match domain");
  return domain.marginal.mass(disagreement_region(h, domain.labeling));
}

double empirical_error(const Hypothesis& h, const Dataset& data) {
  require(data.labeled(), ErrorCode::kInvalidArgument,
          "empirical_error: dataset is unlabeled");
  require(h.dim() == data.dim, ErrorCode::kDimensionMismatch,
          "empirical_error: hypothesis dimension does not match dataset");
  require(!data.points.empty(), ErrorCode::kInvalidArgument,
          "empirical_error: empty dataset");
  std::size_t mistakes = 0;
  const auto& ys = *data.labels;
  for (std::size_t i = 0; i < data.points.size(); ++i)
    if (h.predict(data.points[i]) != static_cast<int>(ys[i])) ++mistakes;
  return static_cast<double>(mistakes) / static_cast<double>(data.points.size());
}

}  // namespace locdisc

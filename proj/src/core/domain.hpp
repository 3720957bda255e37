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

#ifndef LOCDISC_CORE_DOMAIN_HPP
#define LOCDISC_CORE_DOMAIN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/hypothesis.hpp"
#include "core/marginal.hpp"

namespace locdisc {

// A marginal distribution plus a deterministic ground-truth labeler.
struct Domain {
  Marginal marginal;
  Hypothesis labeling;
  std::string id;

  int dim() const { return marginal.dim(); }
  void validate() const;
};

struct Dataset {
  int dim = 1;
  std::vector<Point> points;
  std::optional<std::vector<std::uint8_t>> labels;
  std::uint64_t seed = 0;
  std::string domain_id;

  std::size_t size() const { return points.size(); }
  bool labeled() const { return labels.has_value(); }
  void validate() const;
};

// i.i.d. draws; deterministic per (domain, count, seed). When labeled, each
// label is labeling(point).
Dataset sample(const Domain& domain, std::int64_t count, std::uint64_t seed,
               bool labeled);

// err_D(h): probability mass of the set where h disagrees with the labeling.
double expected_error(const Hypothesis& h, const Domain& domain);

// err_{D_n}(h): fraction of labeled points with h(x) != y.
double empirical_error(const Hypothesis& h, const Dataset& data);

}  // namespace locdisc

#endif  // LOCDISC_CORE_DOMAIN_HPP

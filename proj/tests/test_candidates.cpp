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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "core/hypothesis_class.hpp"
#include "core/rng.hpp"
#include "oracles.hpp"

using namespace locdisc;

namespace {
Dataset points1d(const std::vector<double>& xs) {
  Dataset d;
  d.dim = 1;
  for (double x : xs) d.points.push_back({x, 0.0});
  return d;
}

std::vector<int> labeling_of(const Hypothesis& h, const Dataset& d) {
  std::vector<int> out;
  for (const auto& p : d.points) out.push_back(h.predict(p));
  return out;
}
}  // namespace

TEST_CASE("canonical threshold candidates: counts and membership") {
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(0.0, 1.0);
  const Dataset d = points1d({0.1, 0.6, 0.9});
  const auto cands = canonical_candidates(cls, {&d});
  CHECK(cands.size() == 8);  // {-inf, 0.35, 0.75, +inf} x 2 orientations
  std::set<double> cuts;
  for (const auto& h : cands) cuts.insert(std::get<Threshold>(h.rule).t);
  CHECK(cuts.count(0.35) == 1);
  CHECK(cuts.count(0.75) == 1);
  CHECK(cuts.size() == 4);

  // A single point still realizes both constant labels.
  const Dataset single = points1d({0.42});
  const auto c1 = canonical_candidates(cls, {&single});
  CHECK(c1.size() == 4);
  std::set<int> labels;
  for (const auto& h : c1) labels.insert(h.predict({0.42, 0.0}));
  CHECK(labels == std::set<int>{0, 1});
}

TEST_CASE("canonical candidates realize every threshold dichotomy") {
  RngStream rng(13);
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform01() * 11);  // up to 12
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(rng.uniform(-1.0, 1.0));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const Dataset d = points1d(xs);
    const auto cands = canonical_candidates(cls, {&d});
    std::set<std::vector<int>> realized;
    for (const auto& h : cands) realized.insert(labeling_of(h, d));
    const auto expected = test_oracle::threshold_dichotomies(xs.size());
    CHECK(realized.size() == expected.size());
    for (const auto& pat : expected) CHECK(realized.count(pat) == 1);
  }
}

TEST_CASE("canonical linear candidates: count formula and probe dichotomies") {
  RngStream rng(17);
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::linear2d(-2.0, 2.0);
  Dataset d;
  d.dim = 2;
  const int n = 7;
  for (int i = 0; i < n; ++i)
    d.points.push_back({rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)});
  const auto cands = canonical_candidates(cls, {&d});
  CHECK(cands.size() == static_cast<std::size_t>(2 * n * (n - 1) + 4));

  std::set<std::vector<int>> realized;
  for (const auto& h : cands) realized.insert(labeling_of(h, d));
  // Every labeling produced by a random probe line must be realized.
  for (int probe = 0; probe < 500; ++probe) {
    const Hypothesis h = Hypothesis::linear2d(
        rng.uniform(0.0, 2.0 * 3.14159265358979), rng.uniform(-1.5, 1.5));
    CHECK(realized.count(labeling_of(h, d)) == 1);
  }
}

TEST_CASE("parameter grid") {
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(0.0, 1.0);
  const auto grid = parameter_grid(cls, 0.5);
  CHECK(grid.size() == 6);  // t in {0, 0.5, 1} x both orientations
  const auto fine = parameter_grid(cls, 0.25);
  CHECK(fine.size() == 10);  // roughly doubles per halving

  const HypothesisClassDescriptor lin =
      HypothesisClassDescriptor::linear2d(0.0, 1.0);
  const auto lgrid = parameter_grid(lin, 0.5);
  // theta in {0, 0.5, ..., < 2*pi} (13 values), b in {0, 0.5, 1}.
  CHECK(lgrid.size() == 13 * 3);
}

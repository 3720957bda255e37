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

#include "core/localization.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "core/empirical_index.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"

namespace locdisc {

namespace {
constexpr double kMembershipSlack = 1e-12;

double delta_penalty(double delta, EpsilonConvention conv) {
  if (conv == EpsilonConvention::kLog16OverDelta) return std::log(16.0 / delta);
  return -std::log(delta) / 16.0;
}
}  // namespace

double epsilon_term(std::int64_t n, int d, double delta,
                    EpsilonConvention conv) {
  require(d >= 1, ErrorCode::kInvalidArgument, "epsilon_term: d must be >= 1");
  require(n >= d, ErrorCode::kInvalidArgument, "epsilon_term: n must be >= d");
  require(delta > 0.0 && delta < 1.0, ErrorCode::kInvalidArgument,
          "epsilon_term: delta must be in (0,1)");
  const double log_nd =
      std::max(0.0, std::log(static_cast<double>(n) / static_cast<double>(d)));
  return 4.0 * (d * (1.0 + 4.0 * log_nd) + delta_penalty(delta, conv)) /
         static_cast<double>(n);
}

double c_plus(std::int64_t n, int d, double delta, double r,
              EpsilonConvention conv) {
  require(r >= 0.0, ErrorCode::kInvalidArgument, "c_plus: r must be >= 0");
  const double e = epsilon_term(n, d, delta, conv);
  return 0.5 * e * (1.0 + std::sqrt(1.0 + 4.0 * r / e));
}

double c_minus(std::int64_t n, int d, double delta, double r,
               EpsilonConvention conv) {
  const double e = epsilon_term(n, d, delta, conv);
  require(r > e, ErrorCode::kRadius, "radius not above capacity term");
  return std::sqrt(e * r);
}

LocalizationConstants LocalizationConstants::make(std::int64_t n, int d,
                                                  double delta, double r,
                                                  std::optional<double> gamma,
                                                  EpsilonConvention conv) {
  if (gamma)
    require(*gamma >= 1.0, ErrorCode::kInvalidArgument,
            "boost exponent gamma must be >= 1");
  LocalizationConstants c;
  c.n = n;
  c.d = d;
  c.delta = delta;
  c.r = r;
  c.gamma = gamma;
  c.convention = conv;
  c.epsilon = epsilon_term(n, d, delta, conv);
  c.cplus = c_plus(n, d, delta, r, conv);
  if (r > c.epsilon) c.cminus = c_minus(n, d, delta, r, conv);
  return c;
}

bool LocalizationConstants::derived_fields_consistent() const {
  const LocalizationConstants fresh = make(n, d, delta, r, gamma, convention);
  if (epsilon != fresh.epsilon || cplus != fresh.cplus) return false;
  if (cminus.has_value() != fresh.cminus.has_value()) return false;
  return !cminus || *cminus == *fresh.cminus;
}

namespace {

void check_membership_inputs(const Dataset& data,
                             const LocalizationConstants& c) {
  require(data.labeled(), ErrorCode::kInvalidArgument,
          "membership requires a labeled source dataset");
  require(static_cast<std::int64_t>(data.size()) == c.n,
          ErrorCode::kInvalidArgument,
          "dataset size does not match the constants' n");
}

}  // namespace

bool member_plus(const Hypothesis& h, const Dataset& source_data,
                 const LocalizationConstants& c) {
  check_membership_inputs(source_data, c);
  return empirical_error(h, source_data) <= c.r + c.cplus + kMembershipSlack;
}

bool member_minus(const Hypothesis& h, const Dataset& source_data,
                  const LocalizationConstants& c) {
  check_membership_inputs(source_data, c);
  require(c.cminus.has_value(), ErrorCode::kRadius,
          "radius not above capacity term");
  return empirical_error(h, source_data) <= c.r - *c.cminus + kMembershipSlack;
}

ContainmentResult containment_frequency(const Domain& source,
                                        const HypothesisClassDescriptor& cls,
                                        int d, double delta, double r,
                                        std::int64_t n, int trials,
                                        std::uint64_t seed,
                                        double grid_resolution_fraction) {
  require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be >= 1");
  const LocalizationConstants c = LocalizationConstants::make(n, d, delta, r);
  require(c.cminus.has_value(), ErrorCode::kRadius,
          "radius not above capacity term");

  // Fixed population grid shared by all trials.
  double span = cls.kind == ClassKind::kThreshold1D
                    ? cls.t_hi - cls.t_lo
                    : std::max(cls.theta_hi - cls.theta_lo, cls.b_hi - cls.b_lo);
  const std::vector<Hypothesis> grid =
      parameter_grid(cls, std::max(1e-12, grid_resolution_fraction * span));

  int ok_lower = 0;
  int ok_upper = 0;
  for (int t = 0; t < trials; ++t) {
    RngStream stream = derive_stream(seed, static_cast<std::uint64_t>(t));
    Dataset data = sample(source, n, stream.next_u64(), /*labeled=*/true);

    std::vector<Hypothesis> candidates = canonical_candidates(cls, {&data});
    candidates.insert(candidates.end(), grid.begin(), grid.end());

    // Fast threshold path; the generic evaluator covers the linear class.
    std::optional<SortedSample> sorted;
    if (cls.kind == ClassKind::kThreshold1D) sorted.emplace(data);
    auto emp_error = [&](const Hypothesis& h) {
      if (sorted) {
        const auto& th = std::get<Threshold>(h.rule);
        return sorted->threshold_error(th.t, th.orientation);
      }
      return empirical_error(h, data);
    };

    bool lower_ok = true;
    bool upper_ok = true;
    for (const Hypothesis& h : candidates) {
      const double emp = emp_error(h);
      const double pop = expected_error(h, source);
      if (emp <= r - *c.cminus + kMembershipSlack && pop > r + kMembershipSlack)
        lower_ok = false;
      if (pop <= r && emp > r + c.cplus + kMembershipSlack) upper_ok = false;
      if (!lower_ok && !upper_ok) break;
    }
    ok_lower += lower_ok ? 1 : 0;
    ok_upper += upper_ok ? 1 : 0;
  }
  ContainmentResult res;
  res.trials = trials;
  res.freq_lower_in_population = static_cast<double>(ok_lower) / trials;
  res.freq_population_in_upper = static_cast<double>(ok_upper) / trials;
  return res;
}

}  // namespace locdisc

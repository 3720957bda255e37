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

#ifndef LOCDISC_CORE_LOCALIZATION_HPP
#define LOCDISC_CORE_LOCALIZATION_HPP

#include <cstdint>
#include <optional>

#include "core/domain.hpp"
#include "core/hypothesis_class.hpp"

namespace locdisc {

// How the "- ln delta / 16" fragment of the capacity term is grouped. The
// default reads it as -ln(delta/16) = +ln(16/delta): a complexity penalty
// should grow as delta shrinks. The alternative -(ln delta)/16 is kept behind
// this switch for sensitivity reporting.
enum class EpsilonConvention { kLog16OverDelta, kLogDeltaDiv16 };

// E = 4*(d*(1 + 4*max(0, ln(n/d))) + penalty(delta)) / n. The log term is
// clamped at 0 for n < e*d.
double epsilon_term(std::int64_t n, int d, double delta,
                    EpsilonConvention conv = EpsilonConvention::kLog16OverDelta);

// c+ = (E/2)(1 + sqrt(1 + 4r/E)); defined for any r >= 0.
double c_plus(std::int64_t n, int d, double delta, double r,
              EpsilonConvention conv = EpsilonConvention::kLog16OverDelta);

// c- = sqrt(E*r); requires r > E ("radius not above capacity term" otherwise).
double c_minus(std::int64_t n, int d, double delta, double r,
               EpsilonConvention conv = EpsilonConvention::kLog16OverDelta);

struct LocalizationConstants {
  std::int64_t n = 0;
  int d = 0;
  double delta = 0.0;
  double r = 0.0;
  std::optional<double> gamma;
  EpsilonConvention convention = EpsilonConvention::kLog16OverDelta;
  // Derived.
  double epsilon = 0.0;
  double cplus = 0.0;
  std::optional<double> cminus;  // present iff r > epsilon

  static LocalizationConstants make(
      std::int64_t n, int d, double delta, double r,
      std::optional<double> gamma = std::nullopt,
      EpsilonConvention conv = EpsilonConvention::kLog16OverDelta);

  // Recomputing the derived fields from (n, d, delta, r) must reproduce the
  // stored values exactly.
  bool derived_fields_consistent() const;
};

// Membership in the empirical localized spaces: empirical error on the size-n
// source sample at most r + c+ (resp. r - c-), with 1e-12 slack on the <=.
bool member_plus(const Hypothesis& h, const Dataset& source_data,
                 const LocalizationConstants& c);
bool member_minus(const Hypothesis& h, const Dataset& source_data,
                  const LocalizationConstants& c);

struct ContainmentResult {
  // Frequency of trials where every checked h with empirical error <= r - c-
  // also has expected error <= r.
  double freq_lower_in_population = 0.0;
  // Frequency of trials where every checked h with expected error <= r also
  // has empirical error <= r + c+.
  double freq_population_in_upper = 0.0;
  int trials = 0;
};

// Monte-Carlo check of the two-sided containment. Membership over the
// infinite class is certified on a candidate family: the trial sample's
// canonical candidates plus a fixed parameter grid (absolute step
// grid_resolution x parameter span).
ContainmentResult containment_frequency(const Domain& source,
                                        const HypothesisClassDescriptor& cls,
                                        int d, double delta, double r,
                                        std::int64_t n, int trials,
                                        std::uint64_t seed,
                                        double grid_resolution_fraction = 1e-3);

}  // namespace locdisc

#endif  // LOCDISC_CORE_LOCALIZATION_HPP

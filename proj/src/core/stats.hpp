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

#ifndef LOCDISC_CORE_STATS_HPP
#define LOCDISC_CORE_STATS_HPP

#include <vector>

namespace locdisc {

// Standard normal CDF / survival function via erfc. The complementary-error
// formulation keeps relative error small deep in the tails (Phi(-19) etc.),
// where 1 - Phi(x) computed by differencing would cancel to zero.
double normal_cdf(double z);
double normal_sf(double z);

// P(a <= Z < b) for Z ~ N(mean, stddev). Endpoints may be +-infinity.
// Computed one-sided so that tiny tail masses retain relative accuracy.
double normal_interval_mass(double mean, double stddev, double a, double b);

// Peak density 1/(sigma*sqrt(2*pi)); Lipschitz bound ingredient for CDFs.
double normal_peak_density(double stddev);

// Spearman rank correlation; ties get average ranks. Needs >= 2 values.
double spearman_rank_correlation(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace locdisc

#endif  // LOCDISC_CORE_STATS_HPP

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

#include <cmath>

#include "core/error.hpp"
#include "core/localization.hpp"
#include "core/scenarios.hpp"

using namespace locdisc;

TEST_CASE("capacity term: frozen values and monotonicity") {
  // 4*(d*(1 + 4 ln(n/d)) + ln(16/delta))/n, frozen from the independent
  // high-precision evaluation.
  CHECK(epsilon_term(2000, 2, 0.1) ==
        doctest::Approx(0.12467443209418185).epsilon(1e-14));
  CHECK(epsilon_term(1000, 3, 0.1) ==
        doctest::Approx(0.31113955879600862).epsilon(1e-14));
  CHECK(epsilon_term(4000, 2, 0.1) < epsilon_term(2000, 2, 0.1));
  // The alternative grouping -(ln delta)/16 stays available for sensitivity.
  CHECK(epsilon_term(2000, 2, 0.1, EpsilonConvention::kLogDeltaDiv16) ==
        doctest::Approx(0.11481190760033845).epsilon(1e-12));
  CHECK_THROWS_AS(epsilon_term(1, 2, 0.1), Error);
  CHECK_THROWS_AS(epsilon_term(100, 2, 1.5), Error);
}

TEST_CASE("margins c+ and c-") {
  const double e = epsilon_term(2000, 2, 0.1);
  CHECK(c_plus(2000, 2, 0.1, e) ==
        doctest::Approx(0.5 * e * (1.0 + std::sqrt(5.0))).epsilon(1e-14));
  CHECK(c_minus(2000, 2, 0.1, 0.3) ==
        doctest::Approx(0.19339681907480938).epsilon(1e-14));
  CHECK(c_plus(2000, 2, 0.1, 0.3) ==
        doctest::Approx(0.26553233934673176).epsilon(1e-14));
  // Limits: c+ -> E and c- -> 0 as r -> 0.
  CHECK(c_plus(2000, 2, 0.1, 1e-14) == doctest::Approx(e).epsilon(1e-6));
  CHECK(c_minus(2000, 2, 0.1, e * (1.0 + 1e-12)) ==
        doctest::Approx(e).epsilon(1e-5));
  // r <= E is rejected for c-.
  try {
    c_minus(2000, 2, 0.1, 0.5 * e);
    FAIL("expected radius error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kRadius);
  }
}

TEST_CASE("derived fields recompute exactly and sandwich shrinks") {
  const LocalizationConstants c = LocalizationConstants::make(2000, 2, 0.1, 0.3);
  CHECK(c.derived_fields_consistent());
  REQUIRE(c.cminus.has_value());
  CHECK(c.cplus + *c.cminus > 0.0);
  double prev_width = 1e9;
  for (std::int64_t n : {2000, 4000, 8000, 16000, 32000}) {
    const LocalizationConstants cn = LocalizationConstants::make(n, 2, 0.1, 0.3);
    const double width = cn.cplus + cn.cminus.value();
    CHECK(width < prev_width);
    prev_width = width;
  }
  CHECK(prev_width < 0.12);  // both margins head to zero
}

TEST_CASE("membership in the empirical localized spaces") {
  const Domain source = example41_narrow(0.1);
  const LocalizationConstants c = LocalizationConstants::make(2000, 2, 0.1, 0.3);
  const Dataset data = sample(source, 2000, 17, true);

  // The labeling has empirical error 0.
  CHECK(member_minus(source.labeling, data, c));
  CHECK(member_plus(source.labeling, data, c));

  // r - c- = 0.10660: a hypothesis at empirical error ~0.07 is inside the
  // lower space, one at ~0.15 is not. (Note 0.11 also falls outside: the cut
  // sits just below 0.11.)
  const auto with_error = [&](double target_err) {
    // err(h_t) ~ |t - 1/2| / 0.2 on this source.
    return Hypothesis::threshold(0.5 + 0.2 * target_err,
                                 Orientation::kOneBelow);
  };
  const Hypothesis h_low = with_error(0.07);
  const Hypothesis h_high = with_error(0.15);
  CHECK(empirical_error(h_low, data) < 0.1066);
  CHECK(member_minus(h_low, data, c));
  CHECK(empirical_error(h_high, data) > 0.1066);
  CHECK(!member_minus(h_high, data, c));
  CHECK(member_plus(h_high, data, c));  // r + c+ = 0.5655 is far above

  // Monotone membership.
  CHECK(empirical_error(h_low, data) <= empirical_error(h_high, data));

  // Size mismatch is rejected.
  const Dataset small = sample(source, 100, 17, true);
  CHECK_THROWS_AS(member_plus(source.labeling, small, c), Error);
}

TEST_CASE("containment frequencies at a reduced configuration") {
  const Domain source = example41_narrow(0.1);
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-0.5, 1.5);
  // n = 2000 keeps r = 0.3 above the capacity term E = 0.1247.
  const ContainmentResult res =
      containment_frequency(source, cls, 2, 0.1, 0.3, 2000, 60, 5);
  CHECK(res.trials == 60);
  CHECK(res.freq_lower_in_population >= 0.9);
  CHECK(res.freq_population_in_upper >= 0.9);
  CHECK(res.freq_lower_in_population <= 1.0);
  CHECK(res.freq_population_in_upper <= 1.0);
}

TEST_CASE("vacuous upper containment when the radius swallows the class") {
  const Domain source = example41_narrow(0.1);
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-0.5, 1.5);
  // r = 0.9: every hypothesis has expected error <= 0.9... not quite, but
  // r + c+ > 1 makes the upper containment unconditionally true.
  const ContainmentResult res =
      containment_frequency(source, cls, 2, 0.1, 0.9, 400, 20, 5);
  CHECK(res.freq_population_in_upper == 1.0);
}

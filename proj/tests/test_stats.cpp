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
#include <limits>

#include "core/stats.hpp"
#include "oracles.hpp"

using namespace locdisc;

TEST_CASE("normal cdf matches the independent long-double oracle") {
  for (double z : {-19.0, -8.0, -3.5, -1.0, -0.1, 0.0, 0.3, 1.0, 5.5, 9.0, 19.0}) {
    const long double want = test_oracle::normal_cdf_ld(z);
    const double got = normal_cdf(z);
    if (want > 1e-300L) {
      CHECK(std::abs(static_cast<long double>(got) - want) / want < 1e-12L);
    } else {
      CHECK(got == doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
    }
    CHECK(normal_sf(-z) == doctest::Approx(got).epsilon(1e-13));
  }
}

TEST_CASE("tail masses keep relative accuracy") {
  // Phi-bar(19) ~ 5e-81: catastrophic if computed as 1 - Phi(19).
  const double sf19 = normal_sf(19.0);
  const long double want = test_oracle::normal_sf_ld(19.0L);
  CHECK(sf19 > 0.0);
  CHECK(std::abs(static_cast<long double>(sf19) - want) / want < 1e-12L);
}

TEST_CASE("interval masses agree with adaptive quadrature") {
  const long double inv_s2pi = 0.39894228040143267793994605993438L;
  auto density = [&](long double mu, long double sd) {
    return [mu, sd, inv_s2pi](long double x) {
      const long double z = (x - mu) / sd;
      return inv_s2pi / sd * std::exp(-0.5L * z * z);
    };
  };
  struct Case {
    double mu, sd, a, b;
  };
  for (const Case& c : {Case{0, 1, -1, 2}, Case{3, 0.5, 2.0, 3.25},
                        Case{-2, 2, -9, -3}}) {
    const long double want = test_oracle::integrate(density(c.mu, c.sd), c.a, c.b);
    CHECK(normal_interval_mass(c.mu, c.sd, c.a, c.b) ==
          doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
  }
  // Infinite endpoints.
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(normal_interval_mass(0, 1, -inf, inf) == doctest::Approx(1.0));
  CHECK(normal_interval_mass(0, 1, 19.0, inf) ==
        doctest::Approx(static_cast<double>(test_oracle::normal_sf_ld(19.0L)))
            .epsilon(1e-12));
}

TEST_CASE("spearman rank correlation") {
  CHECK(spearman_rank_correlation({1, 2, 3, 4}, {10, 20, 30, 40}) ==
        doctest::Approx(1.0));
  CHECK(spearman_rank_correlation({1, 2, 3, 4}, {9, 7, 5, 3}) ==
        doctest::Approx(-1.0));
  // One adjacent swap among five values costs 0.1.
  CHECK(spearman_rank_correlation({1, 2, 3, 4, 5}, {5, 4, 3, 1, 2}) ==
        doctest::Approx(-0.9));
}

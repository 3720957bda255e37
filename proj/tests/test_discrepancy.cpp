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
#include <vector>

#include "core/discrepancy.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/scenarios.hpp"
#include "oracles.hpp"

using namespace locdisc;

namespace {

const HypothesisClassDescriptor kThresholdBox =
    HypothesisClassDescriptor::threshold1d(-0.5, 1.5);

double reevaluate_pair(const DiscrepancyReport& rep, const Domain& src,
                       const Domain& tgt) {
  const Region reg =
      disagreement_region(*rep.witness_h, *rep.witness_h_prime);
  const double et = tgt.marginal.mass(reg);
  const double es = src.marginal.mass(reg);
  if (rep.kind.gamma && *rep.kind.gamma != 1.0)
    return et - std::pow(es, *rep.kind.gamma);
  if (rep.kind.tag == DiscrepancyKindTag::kHdhDivergence) return std::abs(et - es);
  return et - es;
}

Dataset labeled_from(const Domain& dom, std::int64_t n, std::uint64_t seed) {
  return sample(dom, n, seed, true);
}

}  // namespace

TEST_CASE("population values of the threshold example (forward direction)") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();

  const DiscrepancyReport hdh = hdh_divergence(
      Side::of(narrow), Side::of(wide), kThresholdBox, ComputeMode::kPopulationGrid);
  CHECK(std::abs(hdh.value - 0.8) < 1e-6);  // 1 - 2*eps
  CHECK(std::abs(reevaluate_pair(hdh, narrow, wide) - hdh.value) < 1e-9);

  const Hypothesis half = Hypothesis::threshold(0.5, Orientation::kOneBelow);
  const DiscrepancyReport disp =
      disparity_discrepancy(half, Side::of(narrow), Side::of(wide),
                            kThresholdBox, ComputeMode::kPopulationGrid);
  CHECK(std::abs(disp.value - 0.4) < 1e-6);  // 1/2 - eps

  for (double r : {0.05, 0.1, 0.2}) {
    const DiscrepancyReport loc =
        localized_hdh(Side::of(narrow), Side::of(wide), kThresholdBox, r,
                      ComputeMode::kPopulationGrid);
    CHECK(std::abs(loc.value) < 1e-9);
  }
}

TEST_CASE("identical source and target yield zero divergence") {
  const Domain wide = example41_wide();
  const DiscrepancyReport hdh = hdh_divergence(
      Side::of(wide), Side::of(wide), kThresholdBox, ComputeMode::kPopulationGrid);
  CHECK(std::abs(hdh.value) < 1e-12);
  const DiscrepancyReport disp = disparity_discrepancy(
      Hypothesis::threshold(0.3, Orientation::kOneBelow), Side::of(wide),
      Side::of(wide), kThresholdBox, ComputeMode::kPopulationGrid);
  CHECK(std::abs(disp.value) < 1e-12);
}

TEST_CASE("reversed direction (asymmetry of the localized statistic)") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();
  // Localizing on the wide source gives r(1/eps - 2).
  for (double r : {0.05, 0.1}) {
    const DiscrepancyReport rev =
        localized_hdh(Side::of(wide), Side::of(narrow), kThresholdBox, r,
                      ComputeMode::kPopulationGrid);
    CHECK(std::abs(rev.value - r * (1.0 / 0.1 - 2.0)) < 1e-6);
    CHECK(std::abs(reevaluate_pair(rev, wide, narrow) - rev.value) < 1e-9);
    const DiscrepancyReport fwd =
        localized_hdh(Side::of(narrow), Side::of(wide), kThresholdBox, r,
                      ComputeMode::kPopulationGrid);
    CHECK(fwd.value < rev.value);  // asymmetry witness
  }
}

TEST_CASE("r >= 1 reduces to the unlocalized statistics") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();
  // Signed pair sup at r=1 equals the signed H-delta-H value; for this
  // asymmetric pair the absolute variant is attained in the other direction,
  // so compare against the signed supremum computed from the reversed pair.
  const DiscrepancyReport loc1 = localized_hdh(
      Side::of(narrow), Side::of(wide), kThresholdBox, 1.0,
      ComputeMode::kPopulationGrid);
  const DiscrepancyReport hdh = hdh_divergence(
      Side::of(narrow), Side::of(wide), kThresholdBox, ComputeMode::kPopulationGrid);
  CHECK(loc1.value <= hdh.value + 1e-9);  // |.| dominates the signed sup
  CHECK(std::abs(loc1.value - 0.8) < 1e-6);  // the signed sup is also 0.8 here

  const Hypothesis anchor = Hypothesis::threshold(0.37, Orientation::kOneBelow);
  const DiscrepancyReport d1 = localized_disparity(
      anchor, Side::of(narrow), Side::of(wide), kThresholdBox, 1.0,
      ComputeMode::kPopulationGrid);
  const DiscrepancyReport d0 =
      disparity_discrepancy(anchor, Side::of(narrow), Side::of(wide),
                            kThresholdBox, ComputeMode::kPopulationGrid);
  CHECK(std::abs(d1.value - d0.value) < 1e-9);
}

TEST_CASE("localized disparity is dominated by the localized pair supremum") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();
  const double r = 0.1;
  const DiscrepancyReport pair_sup = localized_hdh(
      Side::of(narrow), Side::of(wide), kThresholdBox, r,
      ComputeMode::kPopulationGrid);
  // Anchor inside H_r.
  const Hypothesis anchor = Hypothesis::threshold(0.51, Orientation::kOneBelow);
  const DiscrepancyReport disp = localized_disparity(
      anchor, Side::of(narrow), Side::of(wide), kThresholdBox, r,
      ComputeMode::kPopulationGrid);
  CHECK(disp.value <= pair_sup.value + 1e-9);
  CHECK(std::abs(disp.value) < 1e-9);  // frozen by the dense-grid oracle
}

TEST_CASE("monotonicity in the localization radius") {
  RngStream rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Marginal1D src;
    src.components.push_back(MixtureComponent{
        0.6, UniformInterval{rng.uniform(-2.0, 0.0), rng.uniform(0.5, 2.0)}});
    src.components.push_back(
        MixtureComponent{0.4, Gaussian{rng.uniform(-1.0, 1.0), 0.8}});
    Marginal1D tgt;
    tgt.components.push_back(MixtureComponent{1.0, UniformInterval{-1.5, 2.5}});
    Domain s, t;
    s.marginal.value = src;
    s.labeling = Hypothesis::threshold(rng.uniform(-1.0, 1.0),
                                       Orientation::kOneBelow);
    t.marginal.value = tgt;
    t.labeling = s.labeling;
    const HypothesisClassDescriptor cls =
        HypothesisClassDescriptor::threshold1d(-4.0, 4.0);
    double prev = -1.0;
    for (double r : {0.1, 0.2, 0.4, 0.8}) {
      const DiscrepancyReport loc = localized_hdh(
          Side::of(s), Side::of(t), cls, r, ComputeMode::kPopulationGrid);
      CHECK(loc.value >= 0.0);
      CHECK(loc.value >= prev - 1e-9);
      prev = loc.value;
    }
  }
}

TEST_CASE("localized disparity is monotone in the radius") {
  const Domain wide = example41_wide();
  const Domain narrow = example41_narrow(0.1);
  const Hypothesis anchor = Hypothesis::threshold(0.45, Orientation::kOneBelow);
  double prev = -1e9;
  for (double r : {0.05, 0.1, 0.3, 0.7}) {
    const DiscrepancyReport d = localized_disparity(
        anchor, Side::of(wide), Side::of(narrow), kThresholdBox, r,
        ComputeMode::kPopulationGrid);
    CHECK(d.value >= prev - 1e-9);
    prev = d.value;
  }
}

TEST_CASE("empirical witnesses reproduce the reported value") {
  RngStream stream(808);
  const Dataset src = sample(example41_narrow(0.1), 300, stream.next_u64(), true);
  const Dataset tgt = sample(example41_wide(), 300, stream.next_u64(), false);
  const auto reeval = [&](const DiscrepancyReport& rep) {
    // Independent route: direct pointwise prediction over both samples.
    const auto frac_disagree = [&](const Dataset& data) {
      std::size_t k = 0;
      for (const auto& p : data.points)
        if (rep.witness_h->predict(p) != rep.witness_h_prime->predict(p)) ++k;
      return static_cast<double>(k) / static_cast<double>(data.size());
    };
    return frac_disagree(tgt) - frac_disagree(src);
  };
  const DiscrepancyReport loc = localized_hdh(
      Side::of(src), Side::of(tgt), kThresholdBox, 0.2,
      ComputeMode::kEmpiricalExact);
  CHECK(std::abs(reeval(loc) - loc.value) < 1e-12);
  const DiscrepancyReport hdh = hdh_divergence(
      Side::of(src), Side::of(tgt), kThresholdBox, ComputeMode::kEmpiricalExact);
  CHECK(std::abs(std::abs(reeval(hdh)) - hdh.value) < 1e-12);
}

TEST_CASE("boosted discrepancy: gamma identities and frozen values") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();
  const double r = 0.1;

  const DiscrepancyReport plain = localized_hdh(
      Side::of(narrow), Side::of(wide), kThresholdBox, r,
      ComputeMode::kPopulationGrid);
  const DiscrepancyReport g1 = boosted_localized_hdh(
      Side::of(narrow), Side::of(wide), kThresholdBox, r, 1.0,
      ComputeMode::kPopulationGrid);
  CHECK(std::abs(g1.value - plain.value) < 1e-12);

  // gamma = 2: the feasible window has |t - 1/2| <= 0.02; the objective
  // w - (5w)^2 over disagreement widths w has interior maximum 1/100.
  const DiscrepancyReport g2 = boosted_localized_hdh(
      Side::of(narrow), Side::of(wide), kThresholdBox, r, 2.0,
      ComputeMode::kPopulationGrid);
  CHECK(std::abs(g2.value - 0.01) < 1e-6);
  CHECK(std::abs(reevaluate_pair(g2, narrow, wide) - g2.value) < 1e-9);

  // gamma = 3: boundary maximum 0.04 - (0.2)^3.
  const DiscrepancyReport g3 = boosted_localized_hdh(
      Side::of(narrow), Side::of(wide), kThresholdBox, r, 3.0,
      ComputeMode::kPopulationGrid);
  CHECK(std::abs(g3.value - 0.032) < 1e-6);

  // Nondecreasing in gamma.
  CHECK(g1.value <= g2.value + 1e-12);
  CHECK(g2.value <= g3.value + 1e-12);
}

TEST_CASE("gaussian-mixture example: lambda and the localized window") {
  const Domain P = example42_source();
  const Domain Q = example42_target();
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-15.0, 15.0);

  const IdealJointError ije = ideal_joint_error(P, Q, cls);
  CHECK(ije.lambda <= 1e-10);
  CHECK(std::abs(std::get<Threshold>(ije.witness.rule).t) < 2.0);

  const double r = 1e-8;
  CHECK(r > ije.lambda);
  CHECK(r < std::sqrt(ije.lambda));

  const DiscrepancyReport loc = localized_hdh(
      Side::of(P), Side::of(Q), cls, r, ComputeMode::kPopulationGrid);
  // Frozen from the high-precision oracle: 1.2036083465628860e-4.
  CHECK(std::abs(loc.value - 1.2036083465628860e-4) < 1e-6);
  CHECK(loc.value < 0.001);

  const DiscrepancyReport hdh =
      hdh_divergence(Side::of(P), Side::of(Q), cls, ComputeMode::kPopulationGrid);
  // Frozen: (Phi(1) - Phi(-1)) / 2.
  CHECK(std::abs(hdh.value - 0.341344746068543) < 1e-6);

  const DiscrepancyReport disp = disparity_discrepancy(
      Hypothesis::threshold(0.0, Orientation::kOneBelow), Side::of(P),
      Side::of(Q), cls, ComputeMode::kPopulationGrid);
  CHECK(std::abs(disp.value - 0.341344746068543) < 1e-6);
}

TEST_CASE("ideal joint error seeds on shared labelings") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();
  const IdealJointError ije = ideal_joint_error(narrow, wide, kThresholdBox);
  CHECK(ije.lambda == 0.0);
  CHECK(std::get<Threshold>(ije.witness.rule).t == doctest::Approx(0.5));

  const IdealJointError self = ideal_joint_error(wide, wide, kThresholdBox);
  CHECK(self.lambda == 0.0);
}

TEST_CASE("empirical-exact supremum equals the dichotomy brute force") {
  RngStream rng(41);
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-1.0, 2.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform01() * 5.0);
    const int m = 2 + static_cast<int>(rng.uniform01() * 5.0);
    std::vector<double> sx, tx;
    std::vector<int> sy;
    Dataset src, tgt;
    src.dim = tgt.dim = 1;
    std::vector<std::uint8_t> labels;
    const double cut = rng.uniform(-0.5, 1.5);
    for (int i = 0; i < n; ++i) {
      const double x = rng.uniform(-1.0, 2.0);
      // Noisy labels keep the instance from being trivially separable.
      const int y = (x < cut) == (rng.uniform01() < 0.85) ? 1 : 0;
      sx.push_back(x);
      sy.push_back(y);
      src.points.push_back({x, 0.0});
      labels.push_back(static_cast<std::uint8_t>(y));
    }
    src.labels = labels;
    for (int i = 0; i < m; ++i) {
      const double x = rng.uniform(-1.0, 2.0);
      tx.push_back(x);
      tgt.points.push_back({x, 0.0});
    }

    const auto pooled = test_oracle::pool(sx, sy, tx);
    const double r = rng.uniform(0.0, 0.8);
    const auto oracle = test_oracle::dichotomy_sups(pooled, r);

    const DiscrepancyReport hdh = hdh_divergence(
        Side::of(src), Side::of(tgt), cls, ComputeMode::kEmpiricalExact);
    CHECK(hdh.value == doctest::Approx(oracle.hdh_abs).epsilon(1e-12));

    if (oracle.localized_defined) {
      const DiscrepancyReport loc = localized_hdh(
          Side::of(src), Side::of(tgt), cls, r, ComputeMode::kEmpiricalExact);
      CHECK(loc.value == doctest::Approx(oracle.localized).epsilon(1e-12));
    } else {
      CHECK_THROWS_AS(localized_hdh(Side::of(src), Side::of(tgt), cls, r,
                                    ComputeMode::kEmpiricalExact),
                      Error);
    }
  }
}

TEST_CASE("empirical disparity equals the dichotomy brute force") {
  RngStream rng(43);
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-1.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    Dataset src, tgt;
    src.dim = tgt.dim = 1;
    std::vector<double> sx, tx;
    std::vector<int> sy;
    std::vector<std::uint8_t> labels;
    for (int i = 0; i < 6; ++i) {
      const double x = rng.uniform(-1.0, 2.0);
      sx.push_back(x);
      sy.push_back(0);
      labels.push_back(0);
      src.points.push_back({x, 0.0});
    }
    src.labels = labels;
    for (int i = 0; i < 5; ++i) {
      const double x = rng.uniform(-1.0, 2.0);
      tx.push_back(x);
      tgt.points.push_back({x, 0.0});
    }
    const Hypothesis anchor =
        Hypothesis::threshold(rng.uniform(-1.0, 2.0), Orientation::kOneBelow);
    const auto pooled = test_oracle::pool(sx, sy, tx);
    std::vector<int> anchor_pattern;
    for (double x : pooled.xs)
      anchor_pattern.push_back(anchor.predict({x, 0.0}));
    const double oracle = test_oracle::dichotomy_disparity(pooled, anchor_pattern);
    const DiscrepancyReport disp = disparity_discrepancy(
        anchor, Side::of(src), Side::of(tgt), cls, ComputeMode::kEmpiricalExact);
    CHECK(disp.value == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("empty localized space is reported") {
  // Non-monotone labels: no threshold reaches empirical error below 1/3.
  Dataset src;
  src.dim = 1;
  src.points = {{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}};
  src.labels = std::vector<std::uint8_t>{1, 0, 1};
  Dataset tgt = src;
  tgt.labels.reset();
  const HypothesisClassDescriptor cls =
      HypothesisClassDescriptor::threshold1d(-1.0, 2.0);
  try {
    localized_hdh(Side::of(src), Side::of(tgt), cls, 0.1,
                  ComputeMode::kEmpiricalExact);
    FAIL("expected empty localized space");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyLocalizedSpace);
  }
}

TEST_CASE("localized empirical modes need a labeled source") {
  RngStream stream(852);
  Dataset src = sample(example41_narrow(0.1), 50, stream.next_u64(), false);
  Dataset tgt = sample(example41_wide(), 50, stream.next_u64(), false);
  try {
    localized_hdh(Side::of(src), Side::of(tgt), kThresholdBox, 0.3,
                  ComputeMode::kEmpiricalExact);
    FAIL("expected invalid argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("empirical-grid mode is a coarser variant of the exact mode") {
  RngStream stream(853);
  Dataset src = sample(example41_narrow(0.1), 400, stream.next_u64(), true);
  Dataset tgt = sample(example41_wide(), 400, stream.next_u64(), false);
  SolverOptions opts;
  opts.empirical_grid_step = 0.01;
  const DiscrepancyReport grid = hdh_divergence(
      Side::of(src), Side::of(tgt), kThresholdBox, ComputeMode::kEmpiricalGrid,
      opts);
  const DiscrepancyReport exact = hdh_divergence(
      Side::of(src), Side::of(tgt), kThresholdBox, ComputeMode::kEmpiricalExact);
  CHECK(grid.mode == ComputeMode::kEmpiricalGrid);
  // Every grid hypothesis induces a dichotomy the canonical set realizes, so
  // the exact mode dominates.
  CHECK(grid.value <= exact.value + 1e-12);
  CHECK(grid.value > exact.value - 0.1);
}

TEST_CASE("population mode rejects an unbounded parameter box") {
  const Domain wide = example41_wide();
  HypothesisClassDescriptor cls = kThresholdBox;
  cls.t_hi = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(hdh_divergence(Side::of(wide), Side::of(wide), cls,
                                 ComputeMode::kPopulationGrid),
                  Error);
}

TEST_CASE("monte-carlo mode approximates population values") {
  const Domain narrow = example41_narrow(0.1);
  const Domain wide = example41_wide();
  SolverOptions opts;
  opts.mc_samples = 20000;
  opts.mc_seed = 3;
  const DiscrepancyReport mc = hdh_divergence(
      Side::of(narrow), Side::of(wide), kThresholdBox, ComputeMode::kMonteCarlo,
      opts);
  CHECK(mc.mode == ComputeMode::kMonteCarlo);
  CHECK(std::abs(mc.value - 0.8) < 0.05);
}

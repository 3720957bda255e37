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

#ifndef LOCDISC_CORE_DISCREPANCY_HPP
#define LOCDISC_CORE_DISCREPANCY_HPP

#include <optional>
#include <string>

#include "core/domain.hpp"
#include "core/hypothesis_class.hpp"

namespace locdisc {

enum class DiscrepancyKindTag {
  kHdhDivergence,        // sup |E_tgt - E_src| over pairs
  kDisparity,            // sup (E_tgt - E_src) over h', anchored
  kLocalizedHdh,         // signed pair sup over H_r
  kLocalizedDisparity,   // signed anchored sup over h' in H_r
  kBoostedLocalizedHdh,  // sup (E_tgt - E_src^gamma) over H_r pairs
};

struct DiscrepancyKind {
  DiscrepancyKindTag tag = DiscrepancyKindTag::kHdhDivergence;
  std::optional<double> r;
  std::optional<double> gamma;
  std::optional<Hypothesis> anchor;

  void validate() const;
};

enum class ComputeMode {
  kPopulationGrid,  // exact masses, grid + refinement
  kEmpiricalExact,  // exact sup over canonical candidates of the sample
  kEmpiricalGrid,   // sup over parameter-grid candidates on the sample
  kMonteCarlo,      // internal sampling, then the empirical-exact path
};

struct SolverOptions {
  // Coarse scan step as a fraction of the parameter span.
  double grid_fraction = 1e-3;
  // Local refinement resolves parameters to this absolute step.
  double refine_step = 1e-8;
  // Feasibility boundaries of the localized spaces bisected to this step.
  double feasibility_tol = 1e-10;
  // kEmpiricalGrid candidate step (absolute); kMonteCarlo sample count/seed.
  double empirical_grid_step = 1e-3;
  std::int64_t mc_samples = 100000;
  std::uint64_t mc_seed = 1;
};

struct DiscrepancyReport {
  DiscrepancyKind kind;
  double value = 0.0;
  std::optional<Hypothesis> witness_h;        // pair suprema
  std::optional<Hypothesis> witness_h_prime;  // always set when a sup exists
  ComputeMode mode = ComputeMode::kPopulationGrid;
  double resolution = 0.0;  // refine step (population) or candidate count
  std::string source_id;
  std::string target_id;
};

// Either side of a discrepancy: a population domain or a finite sample.
struct Side {
  const Domain* domain = nullptr;
  const Dataset* dataset = nullptr;

  static Side of(const Domain& d) { return Side{&d, nullptr}; }
  static Side of(const Dataset& d) { return Side{nullptr, &d}; }
};

DiscrepancyReport compute_discrepancy(const DiscrepancyKind& kind,
                                      const Side& source, const Side& target,
                                      const HypothesisClassDescriptor& cls,
                                      ComputeMode mode,
                                      const SolverOptions& opts = {});

// Convenience wrappers mirroring the individual statistics.
DiscrepancyReport hdh_divergence(const Side& source, const Side& target,
                                 const HypothesisClassDescriptor& cls,
                                 ComputeMode mode, const SolverOptions& opts = {});
DiscrepancyReport disparity_discrepancy(const Hypothesis& anchor,
                                        const Side& source, const Side& target,
                                        const HypothesisClassDescriptor& cls,
                                        ComputeMode mode,
                                        const SolverOptions& opts = {});
DiscrepancyReport localized_hdh(const Side& source, const Side& target,
                                const HypothesisClassDescriptor& cls, double r,
                                ComputeMode mode, const SolverOptions& opts = {});
DiscrepancyReport localized_disparity(const Hypothesis& anchor,
                                      const Side& source, const Side& target,
                                      const HypothesisClassDescriptor& cls,
                                      double r, ComputeMode mode,
                                      const SolverOptions& opts = {});
DiscrepancyReport boosted_localized_hdh(const Side& source, const Side& target,
                                        const HypothesisClassDescriptor& cls,
                                        double r, double gamma, ComputeMode mode,
                                        const SolverOptions& opts = {});

struct IdealJointError {
  double lambda = 0.0;
  Hypothesis witness;
};

// min over the class of err_source(h) + err_target(h). The labelings of both
// domains seed the search, so a shared in-class labeling yields exactly 0.
IdealJointError ideal_joint_error(const Domain& source, const Domain& target,
                                  const HypothesisClassDescriptor& cls,
                                  const SolverOptions& opts = {});

// Feasible parameter set {h : err_source(h) <= r} of the threshold class,
// as closed t-intervals per orientation (boundaries bisected).
struct ThresholdFeasibleSet {
  std::vector<std::pair<double, double>> below;
  std::vector<std::pair<double, double>> above;
  bool empty() const { return below.empty() && above.empty(); }
};
ThresholdFeasibleSet threshold_feasible_set(const Domain& source,
                                            const HypothesisClassDescriptor& cls,
                                            double r, const SolverOptions& opts);

}  // namespace locdisc

#endif  // LOCDISC_CORE_DISCREPANCY_HPP

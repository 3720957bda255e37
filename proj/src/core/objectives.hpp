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

#ifndef LOCDISC_CORE_OBJECTIVES_HPP
#define LOCDISC_CORE_OBJECTIVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/discrepancy.hpp"
#include "core/localization.hpp"

namespace locdisc {

enum class ObjectiveKind {
  kLocalizedHdh,        // min err over H~_{r-}, plus pair discrepancy over H~_{r+}
  kLocalizedDisparity,  // min over all h of err + anchored discrepancy over H~_{r+}
  kBoosted,             // the boosted-discrepancy variant of the first
};

struct ObjectiveSolution {
  ObjectiveKind kind = ObjectiveKind::kLocalizedHdh;
  Hypothesis chosen;
  double value = 0.0;             // source_term + discrepancy_term
  double source_term = 0.0;       // empirical source error of `chosen`
  double discrepancy_term = 0.0;  // empirical discrepancy over H~_{r+}
  bool feasible = false;          // the H~_{r-} constraint held (first/boosted)
  std::optional<Hypothesis> inner_h, inner_h_prime;  // discrepancy witnesses
};

// min_{h in H~_{r-}} err(h) + disc_{H~_{r+}}(P_n, Q_m). Empty H~_{r-} is an
// error: feasibility is only promised for r above the ideal joint error and
// large enough n.
ObjectiveSolution solve_objective_13(const Dataset& source_data,
                                     const Dataset& target_data,
                                     const HypothesisClassDescriptor& cls,
                                     const LocalizationConstants& c);

// min_{h} [ err(h) + disc_{h, H~_{r+}}(P_n, Q_m) ]: no constraint on h, and
// the anchor participates in the inner supremum.
ObjectiveSolution solve_objective_16(const Dataset& source_data,
                                     const Dataset& target_data,
                                     const HypothesisClassDescriptor& cls,
                                     const LocalizationConstants& c);

// The boosted analogue of the first objective; needs c.gamma.
ObjectiveSolution solve_objective_21(const Dataset& source_data,
                                     const Dataset& target_data,
                                     const HypothesisClassDescriptor& cls,
                                     const LocalizationConstants& c);

struct Prop54Chain {
  double objective16_value = 0.0;  // O(h-check)
  double middle = 0.0;             // err(h-hat) + disc_{H~_{r+}}
  double upper = 0.0;              // r + disc_{H~_{r+}}
  bool holds = false;              // both <= with 1e-12 slack
};

Prop54Chain check_prop_54(const Dataset& source_data, const Dataset& target_data,
                          const HypothesisClassDescriptor& cls,
                          const LocalizationConstants& c);

struct BoundTerm {
  std::string name;
  double value = 0.0;
};

struct BoundReport {
  std::string theorem;
  double lhs = 0.0;
  std::vector<BoundTerm> terms;
  double rhs = 0.0;  // sum of terms
  bool holds = false;
  double tolerance = 0.0;
  bool diagnostic = false;  // true when unspecified constants are involved
};

enum class Thm32Variant { kHdh, kDisparity };

// err_target(h) <= err_source(h) + localized discrepancy + lambda, for
// r above the ideal joint error (and h in H_r for the pair variant).
BoundReport error_bound_rhs_thm32(const Hypothesis& h, const Domain& source,
                                  const Domain& target,
                                  const HypothesisClassDescriptor& cls, double r,
                                  Thm32Variant variant,
                                  const SolverOptions& opts = {},
                                  double base_tolerance = 1e-9);

// Assembly-only variant with precomputed lambda and discrepancy (used when
// checking many hypotheses against one configuration).
BoundReport assemble_thm32(const Hypothesis& h, const Domain& source,
                           const Domain& target, double lambda,
                           const DiscrepancyReport& disc, Thm32Variant variant,
                           double base_tolerance = 1e-9);

// err_target(h) <= 2^{gamma-1} err_source(h)^gamma + boosted discrepancy +
// lambda, for gamma >= 1, lambda < 1/2 and r in (lambda, 1/2).
BoundReport error_bound_rhs_thm62(const Hypothesis& h, const Domain& source,
                                  const Domain& target,
                                  const HypothesisClassDescriptor& cls, double r,
                                  double gamma, const SolverOptions& opts = {},
                                  double base_tolerance = 1e-9);

BoundReport assemble_thm62(const Hypothesis& h, const Domain& source,
                           const Domain& target, double lambda, double r,
                           double gamma, const DiscrepancyReport& boosted_disc,
                           double base_tolerance = 1e-9);

enum class GenBoundTheorem { k53, k55, k63 };

// Finite-sample generalization bound right-hand sides. O(.) factors carry an
// unspecified constant; they are evaluated with `multiplier` x (.) and the
// report is flagged diagnostic.
BoundReport gen_bound_rhs(GenBoundTheorem theorem,
                          const ObjectiveSolution& solution,
                          const Dataset& source_data, const Dataset& target_data,
                          const LocalizationConstants& c, double lambda,
                          const Domain& target_domain, double multiplier = 1.0);

// Same leading terms but with the classical sqrt(d log n / n) + sqrt(d log m
// / m) complexity, for side-by-side comparison.
BoundReport gen_bound_rhs_classical(const ObjectiveSolution& solution,
                                    const Dataset& source_data,
                                    const Dataset& target_data,
                                    const LocalizationConstants& c,
                                    double lambda, const Domain& target_domain,
                                    double multiplier = 1.0);

}  // namespace locdisc

#endif  // LOCDISC_CORE_OBJECTIVES_HPP

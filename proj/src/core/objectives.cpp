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

#include "core/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/discrepancy_impl.hpp"
#include "core/empirical_index.hpp"
#include "core/error.hpp"

namespace locdisc {

namespace {

constexpr double kSlack = 1e-12;

double emp_error_of(const Hypothesis& h, const Dataset& data,
                    const SortedSample* fast) {
  if (fast && h.dim() == 1) {
    const auto& th = std::get<Threshold>(h.rule);
    return fast->threshold_error(th.t, th.orientation);
  }
  return empirical_error(h, data);
}

void check_objective_inputs(const Dataset& src, const Dataset& tgt,
                            const HypothesisClassDescriptor& cls,
                            const LocalizationConstants& c) {
  require(src.labeled(), ErrorCode::kInvalidArgument,
          "objectives need a labeled source dataset");
  require(src.dim == cls.dim() && tgt.dim == cls.dim(),
          ErrorCode::kDimensionMismatch, "objective: dimension mismatch");
  require(static_cast<std::int64_t>(src.size()) == c.n,
          ErrorCode::kInvalidArgument,
          "objective: source size does not match the constants' n");
}

// Chooses argmin empirical source error subject to member_minus; deterministic
// tie-break toward the lexicographically smaller hypothesis.
Hypothesis pick_constrained_erm(const std::vector<Hypothesis>& candidates,
                                const Dataset& src, const SortedSample& fast,
                                const LocalizationConstants& c) {
  require(c.cminus.has_value(), ErrorCode::kRadius,
          "radius not above capacity term");
  const double cap = c.r - *c.cminus + kSlack;
  const Hypothesis* best = nullptr;
  double best_err = std::numeric_limits<double>::infinity();
  for (const auto& h : candidates) {
    const double e = emp_error_of(h, src, &fast);
    if (e > cap) continue;
    if (e < best_err || (e == best_err && best && hypothesis_less(h, *best))) {
      best_err = e;
      best = &h;
    }
  }
  require(best != nullptr, ErrorCode::kInfeasible, "objective infeasible");
  return *best;
}

DiscrepancyReport upper_space_discrepancy(const Dataset& src, const Dataset& tgt,
                                          const HypothesisClassDescriptor& cls,
                                          const LocalizationConstants& c,
                                          std::optional<double> gamma) {
  DiscrepancyKind kind;
  if (gamma && *gamma != 1.0) {
    kind.tag = DiscrepancyKindTag::kBoostedLocalizedHdh;
    kind.gamma = gamma;
  } else {
    kind.tag = DiscrepancyKindTag::kLocalizedHdh;
  }
  kind.r = c.r + c.cplus;  // membership in H~_{r+}
  SolverOptions opts;
  return detail::empirical_compute(kind, src, tgt, cls, opts, false);
}

ObjectiveSolution solve_constrained(const Dataset& src, const Dataset& tgt,
                                    const HypothesisClassDescriptor& cls,
                                    const LocalizationConstants& c,
                                    std::optional<double> gamma) {
  check_objective_inputs(src, tgt, cls, c);
  const std::vector<Hypothesis> candidates =
      canonical_candidates(cls, {&src, &tgt});
  std::optional<SortedSample> fast;
  if (cls.kind == ClassKind::kThreshold1D) fast.emplace(src);

  ObjectiveSolution sol;
  sol.kind = gamma ? ObjectiveKind::kBoosted : ObjectiveKind::kLocalizedHdh;
  if (cls.kind == ClassKind::kThreshold1D) {
    sol.chosen = pick_constrained_erm(candidates, src, *fast, c);
  } else {
    // Generic path for the linear class.
    require(c.cminus.has_value(), ErrorCode::kRadius,
            "radius not above capacity term");
    const double cap = c.r - *c.cminus + kSlack;
    const Hypothesis* best = nullptr;
    double best_err = std::numeric_limits<double>::infinity();
    for (const auto& h : candidates) {
      const double e = empirical_error(h, src);
      if (e > cap) continue;
      if (e < best_err || (e == best_err && best && hypothesis_less(h, *best))) {
        best_err = e;
        best = &h;
      }
    }
    require(best != nullptr, ErrorCode::kInfeasible, "objective infeasible");
    sol.chosen = *best;
  }
  sol.source_term = emp_error_of(sol.chosen, src, fast ? &*fast : nullptr);
  const DiscrepancyReport disc = upper_space_discrepancy(src, tgt, cls, c, gamma);
  sol.discrepancy_term = disc.value;
  sol.inner_h = disc.witness_h;
  sol.inner_h_prime = disc.witness_h_prime;
  sol.value = sol.source_term + sol.discrepancy_term;
  sol.feasible = true;
  return sol;
}

}  // namespace

ObjectiveSolution solve_objective_13(const Dataset& src, const Dataset& tgt,
                                     const HypothesisClassDescriptor& cls,
                                     const LocalizationConstants& c) {
  return solve_constrained(src, tgt, cls, c, std::nullopt);
}

ObjectiveSolution solve_objective_21(const Dataset& src, const Dataset& tgt,
                                     const HypothesisClassDescriptor& cls,
                                     const LocalizationConstants& c) {
  require(c.gamma.has_value(), ErrorCode::kInvalidArgument,
          "objective 21 needs the boost exponent gamma");
  if (*c.gamma == 1.0) {
    // Coincides with the unboosted objective by definition.
    ObjectiveSolution sol = solve_constrained(src, tgt, cls, c, std::nullopt);
    sol.kind = ObjectiveKind::kBoosted;
    return sol;
  }
  return solve_constrained(src, tgt, cls, c, c.gamma);
}

ObjectiveSolution solve_objective_16(const Dataset& src, const Dataset& tgt,
                                     const HypothesisClassDescriptor& cls,
                                     const LocalizationConstants& c) {
  check_objective_inputs(src, tgt, cls, c);
  const std::vector<Hypothesis> candidates =
      canonical_candidates(cls, {&src, &tgt});
  const double rplus = c.r + c.cplus;

  ObjectiveSolution sol;
  sol.kind = ObjectiveKind::kLocalizedDisparity;
  double best_value = std::numeric_limits<double>::infinity();
  const Hypothesis* best = nullptr;
  double best_src = 0.0, best_disc = 0.0;

  if (cls.kind == ClassKind::kThreshold1D) {
    const SortedSample src_sorted(src);
    const SortedSample tgt_sorted(tgt);
    // Candidate statistics at each cut: d_lo/d_up and feasibility flags.
    struct Cut {
      double t;
      double d_lo, d_up;
      bool in_below, in_above;
      double err_below, err_above;
    };
    std::vector<Cut> cuts;
    cuts.reserve(candidates.size() / 2 + 1);
    for (const auto& h : candidates) {
      const auto& th = std::get<Threshold>(h.rule);
      if (th.orientation == Orientation::kOneAbove) continue;  // t covered once
      Cut ct;
      ct.t = th.t;
      const double up =
          std::nextafter(ct.t, std::numeric_limits<double>::infinity());
      ct.d_lo = tgt_sorted.frac_below(ct.t) - src_sorted.frac_below(ct.t);
      ct.d_up = tgt_sorted.frac_below(up) - src_sorted.frac_below(up);
      ct.err_below = src_sorted.threshold_error(ct.t, Orientation::kOneBelow);
      ct.err_above = src_sorted.threshold_error(ct.t, Orientation::kOneAbove);
      ct.in_below = ct.err_below <= rplus + kSlack;
      ct.in_above = ct.err_above <= rplus + kSlack;
      cuts.push_back(ct);
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const Cut& a, const Cut& b) { return a.t < b.t; });
    bool any_feasible = false;
    for (const auto& ct : cuts) any_feasible |= ct.in_below || ct.in_above;
    require(any_feasible, ErrorCode::kEmptyLocalizedSpace,
            "empty localized space");

    const std::size_t k = cuts.size();
    const double neg_inf = -std::numeric_limits<double>::infinity();
    const double pos_inf = std::numeric_limits<double>::infinity();
    // Running statistics over the feasible sets, prefix and suffix.
    std::vector<double> pre_min_dlo_b(k, pos_inf), pre_max_dup_b(k, neg_inf);
    std::vector<double> pre_min_dup_a(k, pos_inf), pre_max_dup_a(k, neg_inf);
    std::vector<double> suf_max_dlo_b(k, neg_inf), suf_min_dlo_b(k, pos_inf);
    std::vector<double> suf_max_dup_a(k, neg_inf), suf_min_dlo_a(k, pos_inf);
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0) {
        pre_min_dlo_b[i] = pre_min_dlo_b[i - 1];
        pre_max_dup_b[i] = pre_max_dup_b[i - 1];
        pre_min_dup_a[i] = pre_min_dup_a[i - 1];
        pre_max_dup_a[i] = pre_max_dup_a[i - 1];
      }
      if (cuts[i].in_below) {
        pre_min_dlo_b[i] = std::min(pre_min_dlo_b[i], cuts[i].d_lo);
        pre_max_dup_b[i] = std::max(pre_max_dup_b[i], cuts[i].d_up);
      }
      if (cuts[i].in_above) {
        pre_min_dup_a[i] = std::min(pre_min_dup_a[i], cuts[i].d_up);
        pre_max_dup_a[i] = std::max(pre_max_dup_a[i], cuts[i].d_up);
      }
    }
    for (std::size_t ri = k; ri-- > 0;) {
      if (ri + 1 < k) {
        suf_max_dlo_b[ri] = suf_max_dlo_b[ri + 1];
        suf_min_dlo_b[ri] = suf_min_dlo_b[ri + 1];
        suf_max_dup_a[ri] = suf_max_dup_a[ri + 1];
        suf_min_dlo_a[ri] = suf_min_dlo_a[ri + 1];
      }
      if (cuts[ri].in_below) {
        suf_max_dlo_b[ri] = std::max(suf_max_dlo_b[ri], cuts[ri].d_lo);
        suf_min_dlo_b[ri] = std::min(suf_min_dlo_b[ri], cuts[ri].d_lo);
      }
      if (cuts[ri].in_above) {
        suf_max_dup_a[ri] = std::max(suf_max_dup_a[ri], cuts[ri].d_up);
        suf_min_dlo_a[ri] = std::min(suf_min_dlo_a[ri], cuts[ri].d_lo);
      }
    }

    // Inner sup for an anchor at cut index i with the given orientation.
    auto inner_sup = [&](std::size_t i, Orientation o) {
      const Cut& ct = cuts[i];
      double v = neg_inf;
      if (o == Orientation::kOneBelow) {
        // Same orientation: interval value D_lo difference.
        v = std::max(v, suf_max_dlo_b[i] - ct.d_lo);   // t' >= t
        v = std::max(v, ct.d_lo - pre_min_dlo_b[i]);   // t' <= t
        // Mixed: complement value d_up(min) - d_lo(max).
        v = std::max(v, ct.d_up - suf_min_dlo_a[i]);   // t' >= t (above)
        v = std::max(v, pre_max_dup_a[i] - ct.d_lo);   // t' <= t (above)
      } else {
        v = std::max(v, suf_max_dup_a[i] - ct.d_up);   // same orientation
        v = std::max(v, ct.d_up - pre_min_dup_a[i]);
        v = std::max(v, ct.d_up - suf_min_dlo_b[i]);   // mixed with below
        v = std::max(v, pre_max_dup_b[i] - ct.d_lo);
      }
      return v;
    };

    for (std::size_t i = 0; i < k; ++i) {
      for (const Orientation o :
           {Orientation::kOneBelow, Orientation::kOneAbove}) {
        const double err = o == Orientation::kOneBelow ? cuts[i].err_below
                                                       : cuts[i].err_above;
        const double v = err + inner_sup(i, o);
        const Hypothesis h = Hypothesis::threshold(cuts[i].t, o);
        if (v < best_value ||
            (v == best_value && best && hypothesis_less(h, *best))) {
          best_value = v;
          best_src = err;
          best_disc = v - err;
          sol.chosen = h;
          best = &sol.chosen;
        }
      }
    }
  } else {
    // Linear class: direct anchored sup per candidate anchor.
    DiscrepancyKind kind;
    kind.tag = DiscrepancyKindTag::kLocalizedDisparity;
    kind.r = rplus;
    SolverOptions opts;
    for (const auto& h : candidates) {
      kind.anchor = h;
      const DiscrepancyReport disc =
          detail::empirical_compute(kind, src, tgt, cls, opts, false);
      const double err = empirical_error(h, src);
      const double v = err + disc.value;
      if (v < best_value ||
          (v == best_value && best && hypothesis_less(h, *best))) {
        best_value = v;
        best_src = err;
        best_disc = disc.value;
        sol.chosen = h;
        best = &sol.chosen;
      }
    }
    require(best != nullptr, ErrorCode::kEmptyLocalizedSpace,
            "empty localized space");
  }

  sol.value = best_value;
  sol.source_term = best_src;
  sol.discrepancy_term = best_disc;
  sol.feasible = true;  // no lower-space constraint in this objective
  // Witnesses of the inner sup at the chosen anchor.
  DiscrepancyKind kind;
  kind.tag = DiscrepancyKindTag::kLocalizedDisparity;
  kind.r = rplus;
  kind.anchor = sol.chosen;
  SolverOptions opts;
  const DiscrepancyReport inner =
      detail::empirical_compute(kind, src, tgt, cls, opts, false);
  sol.inner_h_prime = inner.witness_h_prime;
  return sol;
}

Prop54Chain check_prop_54(const Dataset& src, const Dataset& tgt,
                          const HypothesisClassDescriptor& cls,
                          const LocalizationConstants& c) {
  const ObjectiveSolution sol13 = solve_objective_13(src, tgt, cls, c);
  const ObjectiveSolution sol16 = solve_objective_16(src, tgt, cls, c);
  Prop54Chain chain;
  chain.objective16_value = sol16.value;
  chain.middle = sol13.source_term + sol13.discrepancy_term;
  chain.upper = c.r + sol13.discrepancy_term;
  chain.holds = chain.objective16_value <= chain.middle + kSlack &&
                chain.middle <= chain.upper + kSlack;
  return chain;
}

namespace {

BoundReport assemble_simple(const std::string& theorem, double lhs,
                            std::vector<BoundTerm> terms, double tolerance,
                            bool diagnostic) {
  BoundReport rep;
  rep.theorem = theorem;
  rep.lhs = lhs;
  rep.terms = std::move(terms);
  rep.rhs = 0.0;
  for (const auto& t : rep.terms) rep.rhs += t.value;
  rep.tolerance = tolerance;
  rep.holds = lhs <= rep.rhs + tolerance;
  rep.diagnostic = diagnostic;
  return rep;
}

}  // namespace

BoundReport assemble_thm32(const Hypothesis& h, const Domain& source,
                           const Domain& target, double lambda,
                           const DiscrepancyReport& disc, Thm32Variant variant,
                           double base_tolerance) {
  const double src_err = expected_error(h, source);
  const double lhs = expected_error(h, target);
  return assemble_simple(
      variant == Thm32Variant::kHdh ? "thm-3.2-hdh" : "thm-3.2-disparity", lhs,
      {{"source_error", src_err},
       {"localized_discrepancy", disc.value},
       {"lambda", lambda}},
      base_tolerance + disc.resolution, /*diagnostic=*/false);
}

BoundReport error_bound_rhs_thm32(const Hypothesis& h, const Domain& source,
                                  const Domain& target,
                                  const HypothesisClassDescriptor& cls, double r,
                                  Thm32Variant variant, const SolverOptions& opts,
                                  double base_tolerance) {
  const IdealJointError ije = ideal_joint_error(source, target, cls, opts);
  require(r > ije.lambda, ErrorCode::kRadius, "radius below ideal joint error");
  if (variant == Thm32Variant::kHdh)
    require(expected_error(h, source) <= r + kSlack, ErrorCode::kInvalidArgument,
            "hypothesis outside the localized space");
  const DiscrepancyReport disc =
      variant == Thm32Variant::kHdh
          ? localized_hdh(Side::of(source), Side::of(target), cls, r,
                          ComputeMode::kPopulationGrid, opts)
          : localized_disparity(h, Side::of(source), Side::of(target), cls, r,
                                ComputeMode::kPopulationGrid, opts);
  BoundReport rep = assemble_thm32(h, source, target, ije.lambda, disc, variant,
                                   base_tolerance);
  return rep;
}

BoundReport assemble_thm62(const Hypothesis& h, const Domain& source,
                           const Domain& target, double lambda, double /*r*/,
                           double gamma, const DiscrepancyReport& boosted_disc,
                           double base_tolerance) {
  const double src_err = expected_error(h, source);
  const double lhs = expected_error(h, target);
  const double source_term =
      std::pow(2.0, gamma - 1.0) * (gamma == 1.0 ? src_err
                                                 : std::pow(src_err, gamma));
  return assemble_simple(
      "thm-6.2", lhs,
      {{"boosted_source_error", source_term},
       {"boosted_localized_discrepancy", boosted_disc.value},
       {"lambda", lambda}},
      base_tolerance + boosted_disc.resolution, /*diagnostic=*/false);
}

BoundReport error_bound_rhs_thm62(const Hypothesis& h, const Domain& source,
                                  const Domain& target,
                                  const HypothesisClassDescriptor& cls, double r,
                                  double gamma, const SolverOptions& opts,
                                  double base_tolerance) {
  require(gamma >= 1.0, ErrorCode::kInvalidArgument, "gamma must be >= 1");
  const IdealJointError ije = ideal_joint_error(source, target, cls, opts);
  require(ije.lambda < 0.5, ErrorCode::kInvalidArgument,
          "ideal joint error must be below 1/2");
  require(r > ije.lambda, ErrorCode::kRadius, "radius below ideal joint error");
  require(r < 0.5, ErrorCode::kRadius, "radius must be below 1/2");
  require(expected_error(h, source) <= r + kSlack, ErrorCode::kInvalidArgument,
          "hypothesis outside the localized space");
  const DiscrepancyReport disc =
      boosted_localized_hdh(Side::of(source), Side::of(target), cls, r, gamma,
                            ComputeMode::kPopulationGrid, opts);
  return assemble_thm62(h, source, target, ije.lambda, r, gamma, disc,
                        base_tolerance);
}

namespace {

double log_term(std::int64_t n, int d, double delta) {
  return d * std::log(static_cast<double>(n)) + std::log(1.0 / delta);
}

}  // namespace

BoundReport gen_bound_rhs(GenBoundTheorem theorem,
                          const ObjectiveSolution& solution,
                          const Dataset& source_data, const Dataset& target_data,
                          const LocalizationConstants& c, double lambda,
                          const Domain& target_domain, double multiplier) {
  const bool pairing_ok =
      (theorem == GenBoundTheorem::k53 &&
       solution.kind == ObjectiveKind::kLocalizedHdh) ||
      (theorem == GenBoundTheorem::k55 &&
       solution.kind == ObjectiveKind::kLocalizedDisparity) ||
      (theorem == GenBoundTheorem::k63 && solution.kind == ObjectiveKind::kBoosted);
  require(pairing_ok, ErrorCode::kInvalidArgument,
          "mismatched theorem/objective pairing");
  const auto n = static_cast<std::int64_t>(source_data.size());
  const auto m = static_cast<std::int64_t>(target_data.size());
  require(n == c.n, ErrorCode::kInvalidArgument,
          "constants inconsistent with the source sample size");

  const double ln_n = log_term(n, c.d, c.delta);
  const double ln_m = log_term(m, c.d, c.delta);
  const double gamma = c.gamma.value_or(1.0);
  const double disc = solution.discrepancy_term;

  double fast_n = multiplier * ln_n / static_cast<double>(n);
  const double fast_m = multiplier * ln_m / static_cast<double>(m);
  double sqrt_n = 0.0, sqrt_m = 0.0;
  std::string name;
  switch (theorem) {
    case GenBoundTheorem::k53:
      name = "thm-5.3";
      sqrt_n = multiplier * std::sqrt(2.0 * c.r * ln_n / n);
      sqrt_m = multiplier * std::sqrt((disc + 2.0 * c.r) * ln_m / m);
      break;
    case GenBoundTheorem::k55:
      name = "thm-5.5";
      sqrt_n = multiplier * std::sqrt((solution.source_term + c.r) * ln_n / n);
      sqrt_m = multiplier * std::sqrt((solution.value + c.r) * ln_m / m);
      break;
    case GenBoundTheorem::k63:
      name = "thm-6.3";
      // Source-side terms are raised to the boost exponent.
      fast_n = std::pow(fast_n, gamma);
      sqrt_n = std::pow(multiplier * std::sqrt(2.0 * c.r * ln_n / n), gamma);
      sqrt_m = multiplier *
               std::sqrt((disc + std::pow(2.0 * c.r, gamma)) * ln_m / m);
      break;
  }

  const double lhs = expected_error(solution.chosen, target_domain);
  return assemble_simple(name, lhs,
                         {{"empirical_source_error", solution.source_term},
                          {"empirical_discrepancy", disc},
                          {"lambda", lambda},
                          {"fast_term_source", fast_n},
                          {"fast_term_target", fast_m},
                          {"sqrt_term_source", sqrt_n},
                          {"sqrt_term_target", sqrt_m}},
                         /*tolerance=*/0.0, /*diagnostic=*/true);
}

BoundReport gen_bound_rhs_classical(const ObjectiveSolution& solution,
                                    const Dataset& source_data,
                                    const Dataset& target_data,
                                    const LocalizationConstants& c,
                                    double lambda, const Domain& target_domain,
                                    double multiplier) {
  const auto n = static_cast<std::int64_t>(source_data.size());
  const auto m = static_cast<std::int64_t>(target_data.size());
  const double sqrt_n = multiplier * std::sqrt(log_term(n, c.d, c.delta) / n);
  const double sqrt_m = multiplier * std::sqrt(log_term(m, c.d, c.delta) / m);
  const double lhs = expected_error(solution.chosen, target_domain);
  return assemble_simple("classical-form", lhs,
                         {{"empirical_source_error", solution.source_term},
                          {"empirical_discrepancy", solution.discrepancy_term},
                          {"lambda", lambda},
                          {"sqrt_term_source", sqrt_n},
                          {"sqrt_term_target", sqrt_m}},
                         /*tolerance=*/0.0, /*diagnostic=*/true);
}

}  // namespace locdisc

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

#include "core/discrepancy.hpp"

#include "core/discrepancy_impl.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"

namespace locdisc {

void DiscrepancyKind::validate() const {
  const bool needs_r = tag == DiscrepancyKindTag::kLocalizedHdh ||
                       tag == DiscrepancyKindTag::kLocalizedDisparity ||
                       tag == DiscrepancyKindTag::kBoostedLocalizedHdh;
  const bool needs_anchor = tag == DiscrepancyKindTag::kDisparity ||
                            tag == DiscrepancyKindTag::kLocalizedDisparity;
  if (needs_r) {
    require(r.has_value() && *r >= 0.0, ErrorCode::kInvalidArgument,
            "localized discrepancy kinds need a radius r >= 0");
  }
  if (tag == DiscrepancyKindTag::kBoostedLocalizedHdh) {
    require(r.has_value() && *r > 0.0, ErrorCode::kInvalidArgument,
            "boosted discrepancy needs r > 0");
    require(gamma.has_value() && *gamma >= 1.0, ErrorCode::kInvalidArgument,
            "boosted discrepancy needs gamma >= 1");
  }
  if (needs_anchor)
    require(anchor.has_value(), ErrorCode::kInvalidArgument,
            "disparity kinds need an anchor hypothesis");
}

DiscrepancyReport compute_discrepancy(const DiscrepancyKind& kind,
                                      const Side& source, const Side& target,
                                      const HypothesisClassDescriptor& cls,
                                      ComputeMode mode,
                                      const SolverOptions& opts) {
  kind.validate();
  cls.validate();
  if (kind.anchor)
    require(kind.anchor->dim() == cls.dim(), ErrorCode::kDimensionMismatch,
            "anchor hypothesis dimension does not match the class");

  switch (mode) {
    case ComputeMode::kPopulationGrid: {
      require(source.domain && target.domain, ErrorCode::kInvalidArgument,
              "population mode needs population domains on both sides");
      return detail::population_compute(kind, *source.domain, *target.domain,
                                        cls, opts);
    }
    case ComputeMode::kEmpiricalExact:
    case ComputeMode::kEmpiricalGrid: {
      require(source.dataset && target.dataset, ErrorCode::kInvalidArgument,
              "empirical modes need datasets on both sides");
      return detail::empirical_compute(kind, *source.dataset, *target.dataset,
                                       cls, opts,
                                       mode == ComputeMode::kEmpiricalGrid);
    }
    case ComputeMode::kMonteCarlo: {
      require(source.domain && target.domain, ErrorCode::kInvalidArgument,
              "monte-carlo mode samples from population domains");
      RngStream seeds(opts.mc_seed);
      const Dataset src =
          sample(*source.domain, opts.mc_samples, seeds.next_u64(),
                 /*labeled=*/true);
      const Dataset tgt = sample(*target.domain, opts.mc_samples,
                                 seeds.next_u64(), /*labeled=*/false);
      DiscrepancyReport rep =
          detail::empirical_compute(kind, src, tgt, cls, opts, false);
      rep.mode = ComputeMode::kMonteCarlo;
      rep.resolution = static_cast<double>(opts.mc_samples);
      rep.source_id = source.domain->id;
      rep.target_id = target.domain->id;
      return rep;
    }
  }
  throw Error(ErrorCode::kInternal, "unreachable compute mode");
}

DiscrepancyReport hdh_divergence(const Side& source, const Side& target,
                                 const HypothesisClassDescriptor& cls,
                                 ComputeMode mode, const SolverOptions& opts) {
  DiscrepancyKind kind;
  kind.tag = DiscrepancyKindTag::kHdhDivergence;
  return compute_discrepancy(kind, source, target, cls, mode, opts);
}

DiscrepancyReport disparity_discrepancy(const Hypothesis& anchor,
                                        const Side& source, const Side& target,
                                        const HypothesisClassDescriptor& cls,
                                        ComputeMode mode,
                                        const SolverOptions& opts) {
  DiscrepancyKind kind;
  kind.tag = DiscrepancyKindTag::kDisparity;
  kind.anchor = anchor;
  return compute_discrepancy(kind, source, target, cls, mode, opts);
}

DiscrepancyReport localized_hdh(const Side& source, const Side& target,
                                const HypothesisClassDescriptor& cls, double r,
                                ComputeMode mode, const SolverOptions& opts) {
  DiscrepancyKind kind;
  kind.tag = DiscrepancyKindTag::kLocalizedHdh;
  kind.r = r;
  return compute_discrepancy(kind, source, target, cls, mode, opts);
}

DiscrepancyReport localized_disparity(const Hypothesis& anchor,
                                      const Side& source, const Side& target,
                                      const HypothesisClassDescriptor& cls,
                                      double r, ComputeMode mode,
                                      const SolverOptions& opts) {
  DiscrepancyKind kind;
  kind.tag = DiscrepancyKindTag::kLocalizedDisparity;
  kind.r = r;
  kind.anchor = anchor;
  return compute_discrepancy(kind, source, target, cls, mode, opts);
}

DiscrepancyReport boosted_localized_hdh(const Side& source, const Side& target,
                                        const HypothesisClassDescriptor& cls,
                                        double r, double gamma, ComputeMode mode,
                                        const SolverOptions& opts) {
  DiscrepancyKind kind;
  kind.tag = DiscrepancyKindTag::kBoostedLocalizedHdh;
  kind.r = r;
  kind.gamma = gamma;
  return compute_discrepancy(kind, source, target, cls, mode, opts);
}

}  // namespace locdisc

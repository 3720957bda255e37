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

#ifndef LOCDISC_CORE_HYPOTHESIS_CLASS_HPP
#define LOCDISC_CORE_HYPOTHESIS_CLASS_HPP

#include <vector>

#include "core/domain.hpp"
#include "core/hypothesis.hpp"

namespace locdisc {

enum class ClassKind { kThreshold1D, kLinear2D };

struct HypothesisClassDescriptor {
  ClassKind kind = ClassKind::kThreshold1D;
  int vc_dimension = 2;  // 2 for thresholds-with-flips, 3 for linear-2d
  // Search bounds. Thresholds: [t_lo, t_hi]. Linear: theta in [theta_lo,
  // theta_hi) (orientation folded into theta), b in [b_lo, b_hi].
  double t_lo = 0.0, t_hi = 1.0;
  double theta_lo = 0.0, theta_hi = 0.0;
  double b_lo = 0.0, b_hi = 0.0;

  int dim() const { return kind == ClassKind::kThreshold1D ? 1 : 2; }
  void validate() const;

  static HypothesisClassDescriptor threshold1d(double t_lo, double t_hi);
  static HypothesisClassDescriptor linear2d(double b_lo, double b_hi);
};

// Finite candidate set making empirical suprema exact over the pooled points:
// thresholds at -inf, +inf and the midpoints between consecutive distinct
// sorted values, in both orientations; linear-2d uses the through-pair lines
// shifted by +-eta along their normal (eta = 1e-9 x bounding-box diagonal) in
// both orientations, plus four constant classifiers. Every labeling of the
// pooled points the class realizes is realized by some candidate.
std::vector<Hypothesis> canonical_candidates(
    const HypothesisClassDescriptor& cls, const std::vector<const Dataset*>& data);

// Uniform grid over the parameter box at absolute step `resolution`, both
// orientations, deterministic order.
std::vector<Hypothesis> parameter_grid(const HypothesisClassDescriptor& cls,
                                       double resolution);

}  // namespace locdisc

#endif  // LOCDISC_CORE_HYPOTHESIS_CLASS_HPP

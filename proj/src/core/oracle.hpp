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

#ifndef LOCDISC_CORE_ORACLE_HPP
#define LOCDISC_CORE_ORACLE_HPP

#include "core/discrepancy.hpp"

namespace locdisc {

// Brute-force dense-grid maximization of the same population objective the
// discrepancy engine optimizes: no refinement, no pruning. For the threshold
// class `resolution` is the absolute parameter step; for the linear class it
// is a fraction of each parameter axis. Authoritative within
// 2 x resolution x (local Lipschitz bound of the mass functions).
double oracle_sup(const DiscrepancyKind& kind, const Domain& source,
                  const Domain& target, const HypothesisClassDescriptor& cls,
                  double resolution);

// The comparison tolerance for 1-D configurations: 2 x step x (sum of the
// two marginals' density bounds), plus rounding headroom.
double oracle_tolerance_1d(const Domain& source, const Domain& target,
                           double resolution);

}  // namespace locdisc

#endif  // LOCDISC_CORE_ORACLE_HPP

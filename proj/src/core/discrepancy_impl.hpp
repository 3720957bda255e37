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

#ifndef LOCDISC_CORE_DISCREPANCY_IMPL_HPP
#define LOCDISC_CORE_DISCREPANCY_IMPL_HPP

#include "core/discrepancy.hpp"

namespace locdisc::detail {

DiscrepancyReport population_compute(const DiscrepancyKind& kind,
                                     const Domain& source, const Domain& target,
                                     const HypothesisClassDescriptor& cls,
                                     const SolverOptions& opts);

DiscrepancyReport empirical_compute(const DiscrepancyKind& kind,
                                    const Dataset& source, const Dataset& target,
                                    const HypothesisClassDescriptor& cls,
                                    const SolverOptions& opts, bool grid_mode);

}  // namespace locdisc::detail

#endif  // LOCDISC_CORE_DISCREPANCY_IMPL_HPP

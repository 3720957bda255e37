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

#ifndef LOCDISC_CORE_MARGINAL_HPP
#define LOCDISC_CORE_MARGINAL_HPP

#include <variant>
#include <vector>

#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace locdisc {

struct UniformInterval {
  double lo = 0.0;
  double hi = 1.0;
};

struct Gaussian {
  double mean = 0.0;
  double stddev = 1.0;
};

struct MixtureComponent {
  double weight = 1.0;
  std::variant<UniformInterval, Gaussian> shape;
};

// Mixture of uniform intervals and Gaussians on the line. Weights are
// nonnegative and sum to 1 within 1e-12.
struct Marginal1D {
  std::vector<MixtureComponent> components;

  void validate() const;
  double cdf(double x) const;                 // P(X < x) (atomless: = P(X <= x))
  double interval_mass(double a, double b) const;  // P(a <= X < b)
  double mass(const IntervalSet& s) const;
  double sample(RngStream& rng) const;
  double density_bound() const;  // sup of the mixture density
  // Smallest interval [lo, hi] carrying all but ~1e-12 of the mass.
  std::pair<double, double> effective_support() const;
  // Structural abscissas: uniform endpoints (CDF kinks) and gaussian means.
  // Scan-based solvers seed on these so narrow features at component edges
  // are never straddled by a coarse grid.
  std::vector<double> breakpoints() const;
};

struct UniformRect {
  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;
};

struct UniformSegment {
  Point a{0.0, 0.0};
  Point b{1.0, 0.0};
};

struct Marginal2D {
  std::variant<UniformRect, UniformSegment> shape;

  void validate() const;
  double mass(const std::vector<Wedge>& wedges) const;
  Point sample(RngStream& rng) const;
  std::pair<Point, Point> bounding_box() const;  // ({x_lo,y_lo},{x_hi,y_hi})
};

struct Marginal {
  std::variant<Marginal1D, Marginal2D> value;

  int dim() const { return std::holds_alternative<Marginal1D>(value) ? 1 : 2; }
  void validate() const;
  double mass(const Region& region) const;
  Point sample(RngStream& rng) const;
};

}  // namespace locdisc

#endif  // LOCDISC_CORE_MARGINAL_HPP

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

#ifndef LOCDISC_CORE_GEOMETRY_HPP
#define LOCDISC_CORE_GEOMETRY_HPP

#include <array>
#include <vector>

namespace locdisc {

using Point = std::array<double, 2>;  // 1-D instances use [0]; [1] stays 0.

// Half-open-by-default interval over the extended reals. Endpoint closedness
// only matters pointwise; every marginal in scope is atomless.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = false;

  bool contains(double x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }
  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
};

// Sorted pairwise-disjoint intervals.
struct IntervalSet {
  std::vector<Interval> parts;

  bool contains(double x) const {
    for (const auto& p : parts)
      if (p.contains(x)) return true;
    return false;
  }
  static IntervalSet empty_set() { return IntervalSet{}; }
  static IntervalSet all();  // (-inf, +inf)
};

// Normalizes: drops empties, sorts, asserts disjointness (merges touching
// intervals that share a closed/open boundary into one piece).
IntervalSet normalize(IntervalSet s);

// Union of two interval sets (result normalized).
IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);

// {x : cos(theta)*x + sin(theta)*y > b} when `greater`, else the complement
// {n.x <= b}. The exact complement pairing keeps pointwise XOR semantics.
struct HalfPlaneConstraint {
  double theta = 0.0;
  double b = 0.0;
  bool greater = true;

  double signed_value(const Point& p) const;
  bool contains(const Point& p) const {
    const double v = signed_value(p);
    return greater ? v > 0.0 : v <= 0.0;
  }
};

// Conjunction of at most two half-plane constraints.
struct Wedge {
  std::vector<HalfPlaneConstraint> constraints;

  bool contains(const Point& p) const {
    for (const auto& c : constraints)
      if (!c.contains(p)) return false;
    return true;
  }
};

// Disagreement set of a hypothesis pair. dim 1: interval union; dim 2: union
// of pairwise-disjoint wedges (the two halves of a symmetric difference).
struct Region {
  int dim = 1;
  IntervalSet intervals;       // dim == 1
  std::vector<Wedge> wedges;   // dim == 2

  bool contains(const Point& p) const;
};

// Convex polygon utilities (counter-clockwise vertex lists).
using Polygon = std::vector<Point>;

double polygon_area(const Polygon& poly);

// Clips `poly` against {n.x > b} (greater) or {n.x <= b}; boundary kept.
Polygon clip_polygon(const Polygon& poly, const HalfPlaneConstraint& c);

Polygon rect_polygon(double x_lo, double x_hi, double y_lo, double y_hi);

// Area of wedge-intersect-polygon.
double wedge_clip_area(const Wedge& w, const Polygon& poly);

// Fraction of the segment a->b (by length) inside the wedge; exact, including
// constraints whose boundary line contains the segment.
double wedge_segment_fraction(const Wedge& w, const Point& a, const Point& b);

}  // namespace locdisc

#endif  // LOCDISC_CORE_GEOMETRY_HPP

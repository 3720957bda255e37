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
#include <numbers>

#include "core/geometry.hpp"

using namespace locdisc;

TEST_CASE("interval containment respects endpoint flags") {
  const Interval half_open{0.25, 0.75, true, false};
  CHECK(half_open.contains(0.25));
  CHECK(!half_open.contains(0.75));
  CHECK(half_open.contains(0.5));
  const Interval open{0.0, 1.0, false, false};
  CHECK(!open.contains(0.0));
  CHECK(!open.contains(1.0));
}

TEST_CASE("interval union merges overlaps") {
  IntervalSet a;
  a.parts.push_back(Interval{0.0, 0.5, true, false});
  IntervalSet b;
  b.parts.push_back(Interval{0.5, 1.0, true, false});
  b.parts.push_back(Interval{2.0, 3.0, true, false});
  const IntervalSet u = interval_union(a, b);
  REQUIRE(u.parts.size() == 2);
  CHECK(u.parts[0].lo == 0.0);
  CHECK(u.parts[0].hi == 1.0);
  CHECK(u.parts[1].lo == 2.0);
}

TEST_CASE("polygon clipping against half-planes") {
  const Polygon unit = rect_polygon(0, 1, 0, 1);
  CHECK(polygon_area(unit) == doctest::Approx(1.0));
  // x > 0.5 keeps the right half.
  const Polygon right = clip_polygon(unit, HalfPlaneConstraint{0.0, 0.5, true});
  CHECK(polygon_area(right) == doctest::Approx(0.5));
  // Diagonal cut x + y > 1 keeps a triangle of area 1/2.
  const Polygon tri = clip_polygon(
      unit, HalfPlaneConstraint{std::numbers::pi / 4, std::sqrt(0.5), true});
  CHECK(polygon_area(tri) == doctest::Approx(0.5));
}

TEST_CASE("wedge areas and complements add up") {
  const Polygon unit = rect_polygon(0, 1, 0, 1);
  const HalfPlaneConstraint gx{0.0, 0.3, true};
  const HalfPlaneConstraint gy{std::numbers::pi / 2, 0.6, true};
  const Wedge both{{gx, gy}};
  const Wedge only_x{{gx, HalfPlaneConstraint{std::numbers::pi / 2, 0.6, false}}};
  CHECK(wedge_clip_area(both, unit) == doctest::Approx(0.7 * 0.4));
  CHECK(wedge_clip_area(only_x, unit) == doctest::Approx(0.7 * 0.6));
}

TEST_CASE("segment fractions, including a segment on the boundary line") {
  const Point a{0.0, 0.5};
  const Point b{1.0, 0.5};
  // x > 0.25 covers three quarters of the segment.
  CHECK(wedge_segment_fraction(Wedge{{HalfPlaneConstraint{0.0, 0.25, true}}}, a,
                               b) == doctest::Approx(0.75));
  // A segment lying exactly on the boundary line: theta = 0 keeps the normal
  // exactly representable, so a vertical segment on x = 0.5 is the exact
  // degenerate case. Strict > excludes it, the complement keeps it.
  const Point va{0.5, 0.0};
  const Point vb{0.5, 1.0};
  CHECK(wedge_segment_fraction(Wedge{{HalfPlaneConstraint{0.0, 0.5, true}}}, va,
                               vb) == doctest::Approx(0.0));
  CHECK(wedge_segment_fraction(Wedge{{HalfPlaneConstraint{0.0, 0.5, false}}},
                               va, vb) == doctest::Approx(1.0));
  // Two constraints carve out the middle piece.
  const Wedge band{{HalfPlaneConstraint{0.0, 0.2, true},
                    HalfPlaneConstraint{0.0, 0.7, false}}};
  CHECK(wedge_segment_fraction(band, a, b) == doctest::Approx(0.5));
}

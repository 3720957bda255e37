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

#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace locdisc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

IntervalSet IntervalSet::all() {
  IntervalSet s;
  s.parts.push_back(Interval{-kInf, kInf, false, false});
  return s;
}

IntervalSet normalize(IntervalSet s) {
  auto& v = s.parts;
  v.erase(std::remove_if(v.begin(), v.end(),
                         [](const Interval& i) { return i.empty(); }),
          v.end());
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  std::vector<Interval> out;
  for (const auto& cur : v) {
    if (!out.empty()) {
      Interval& last = out.back();
      const bool overlaps =
          cur.lo < last.hi ||
          (cur.lo == last.hi && (cur.lo_closed || last.hi_closed));
      if (overlaps) {
        if (cur.hi > last.hi) {
          last.hi = cur.hi;
          last.hi_closed = cur.hi_closed;
        } else if (cur.hi == last.hi) {
          last.hi_closed = last.hi_closed || cur.hi_closed;
        }
        continue;
      }
    }
    out.push_back(cur);
  }
  s.parts = std::move(out);
  return s;
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet s;
  s.parts = a.parts;
  s.parts.insert(s.parts.end(), b.parts.begin(), b.parts.end());
  return normalize(std::move(s));
}

double HalfPlaneConstraint::signed_value(const Point& p) const {
  return std::cos(theta) * p[0] + std::sin(theta) * p[1] - b;
}

bool Region::contains(const Point& p) const {
  if (dim == 1) return intervals.contains(p[0]);
  for (const auto& w : wedges)
    if (w.contains(p)) return true;
  return false;
}

double polygon_area(const Polygon& poly) {
  if (poly.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(twice) * 0.5;
}

Polygon clip_polygon(const Polygon& poly, const HalfPlaneConstraint& c) {
  // Sutherland-Hodgman against n.x >= b or n.x <= b; the boundary line has
  // zero area so strict vs non-strict does not change the result.
  const double nx = std::cos(c.theta);
  const double ny = std::sin(c.theta);
  const double sign = c.greater ? 1.0 : -1.0;
  auto side = [&](const Point& p) {
    return sign * (nx * p[0] + ny * p[1] - c.b);
  };
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % n];
    const double sc = side(cur);
    const double sn = side(nxt);
    if (sc >= 0.0) out.push_back(cur);
    if ((sc > 0.0 && sn < 0.0) || (sc < 0.0 && sn > 0.0)) {
      const double t = sc / (sc - sn);
      out.push_back(Point{cur[0] + t * (nxt[0] - cur[0]),
                          cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return out;
}

Polygon rect_polygon(double x_lo, double x_hi, double y_lo, double y_hi) {
  return Polygon{{x_lo, y_lo}, {x_hi, y_lo}, {x_hi, y_hi}, {x_lo, y_hi}};
}

double wedge_clip_area(const Wedge& w, const Polygon& poly) {
  Polygon p = poly;
  for (const auto& c : w.constraints) {
    p = clip_polygon(p, c);
    if (p.size() < 3) return 0.0;
  }
  return polygon_area(p);
}

double wedge_segment_fraction(const Wedge& w, const Point& a, const Point& b) {
  // Parameterize x(t) = a + t*(b-a), t in [0,1]; each constraint becomes a
  // sign condition on an affine function of t.
  double lo = 0.0, hi = 1.0;
  for (const auto& c : w.constraints) {
    const double nx = std::cos(c.theta);
    const double ny = std::sin(c.theta);
    const double c0 = nx * a[0] + ny * a[1] - c.b;
    const double c1 = nx * (b[0] - a[0]) + ny * (b[1] - a[1]);
    if (c1 == 0.0) {
      // Constant along the segment; the whole segment is in or out. A segment
      // lying exactly on the boundary line counts as out for `greater` and in
      // for its complement, matching the pointwise rule.
      const bool keep = c.greater ? c0 > 0.0 : c0 <= 0.0;
      if (!keep) return 0.0;
      continue;
    }
    const double tstar = -c0 / c1;
    // greater: c0 + c1*t > 0  <=>  t > tstar (c1 > 0) or t < tstar (c1 < 0).
    const bool keep_above = c.greater ? (c1 > 0.0) : (c1 < 0.0);
    if (keep_above) {
      lo = std::max(lo, tstar);
    } else {
      hi = std::min(hi, tstar);
    }
    if (lo >= hi) return 0.0;
  }
  return std::max(0.0, hi - lo);
}

}  // namespace locdisc

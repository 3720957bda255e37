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

#include "core/hypothesis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "core/error.hpp"

namespace locdisc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double canonical_theta(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t == kTwoPi) t = 0.0;
  return t;
}

Hypothesis Hypothesis::threshold(double t, Orientation o) {
  return Hypothesis{Threshold{t, o}};
}

Hypothesis Hypothesis::linear2d(double theta, double b) {
  return Hypothesis{Linear2D{canonical_theta(theta), b}};
}

int Hypothesis::predict(const Point& x) const {
  if (const auto* th = std::get_if<Threshold>(&rule)) {
    if (th->orientation == Orientation::kOneBelow) return x[0] < th->t ? 1 : 0;
    return x[0] > th->t ? 1 : 0;
  }
  const auto& lin = std::get<Linear2D>(rule);
  return std::cos(lin.theta) * x[0] + std::sin(lin.theta) * x[1] > lin.b ? 1 : 0;
}

Hypothesis flip(const Hypothesis& h) {
  if (const auto* th = std::get_if<Threshold>(&h.rule)) {
    return Hypothesis::threshold(th->t,
                                 th->orientation == Orientation::kOneBelow
                                     ? Orientation::kOneAbove
                                     : Orientation::kOneBelow);
  }
  const auto& lin = std::get<Linear2D>(h.rule);
  return Hypothesis::linear2d(lin.theta + std::numbers::pi, -lin.b);
}

namespace {

// Threshold disagreement. With u = min(t, t'), v = max(t, t'):
// below/below -> [u, v); above/above -> (u, v]; mixed -> complement of the
// open interval (u, v) (points at u and v disagree).
IntervalSet threshold_disagreement(const Threshold& a, const Threshold& b) {
  IntervalSet s;
  const bool same = a.orientation == b.orientation;
  const double u = std::min(a.t, b.t);
  const double v = std::max(a.t, b.t);
  if (same) {
    if (a.t == b.t) return s;  // identical
    if (a.orientation == Orientation::kOneBelow) {
      s.parts.push_back(Interval{u, v, true, false});
    } else {
      s.parts.push_back(Interval{u, v, false, true});
    }
    return s;
  }
  // Mixed orientations: agree exactly on the open interval between them.
  if (u == v) {
    // Same t, opposite orientations: disagree everywhere except x == t.
    s.parts.push_back(Interval{-kInf, u, false, false});
    s.parts.push_back(Interval{u, kInf, false, false});
    return s;
  }
  s.parts.push_back(Interval{-kInf, u, false, true});
  s.parts.push_back(Interval{v, kInf, true, false});
  return s;
}

}  // namespace

Region disagreement_region(const Hypothesis& a, const Hypothesis& b) {
  require(a.dim() == b.dim(), ErrorCode::kDimensionMismatch,
          "disagreement_region: hypothesis dimensions differ");
  Region r;
  r.dim = a.dim();
  if (r.dim == 1) {
    r.intervals = threshold_disagreement(std::get<Threshold>(a.rule),
                                         std::get<Threshold>(b.rule));
    return r;
  }
  const auto& la = std::get<Linear2D>(a.rule);
  const auto& lb = std::get<Linear2D>(b.rule);
  const HalfPlaneConstraint ga{la.theta, la.b, true};
  const HalfPlaneConstraint na{la.theta, la.b, false};
  const HalfPlaneConstraint gb{lb.theta, lb.b, true};
  const HalfPlaneConstraint nb{lb.theta, lb.b, false};
  // XOR of the two half-planes, as two disjoint wedges.
  r.wedges.push_back(Wedge{{ga, nb}});
  r.wedges.push_back(Wedge{{na, gb}});
  return r;
}

bool hypothesis_less(const Hypothesis& a, const Hypothesis& b) {
  const bool ta = std::holds_alternative<Threshold>(a.rule);
  const bool tb = std::holds_alternative<Threshold>(b.rule);
  if (ta != tb) return ta;  // thresholds order before linear
  if (ta) {
    const auto& x = std::get<Threshold>(a.rule);
    const auto& y = std::get<Threshold>(b.rule);
    if (x.orientation != y.orientation)
      return x.orientation == Orientation::kOneBelow;
    return x.t < y.t;
  }
  const auto& x = std::get<Linear2D>(a.rule);
  const auto& y = std::get<Linear2D>(b.rule);
  if (x.theta != y.theta) return x.theta < y.theta;
  return x.b < y.b;
}

bool hypothesis_equal(const Hypothesis& a, const Hypothesis& b) {
  return !hypothesis_less(a, b) && !hypothesis_less(b, a);
}

std::string orientation_name(Orientation o) {
  return o == Orientation::kOneBelow ? "1-below" : "1-above";
}

}  // namespace locdisc

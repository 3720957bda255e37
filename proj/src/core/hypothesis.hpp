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

#ifndef LOCDISC_CORE_HYPOTHESIS_HPP
#define LOCDISC_CORE_HYPOTHESIS_HPP

#include <string>
#include <variant>
#include <vector>

#include "core/geometry.hpp"

namespace locdisc {

enum class Orientation { kOneBelow, kOneAbove };

// Threshold classifier on the line. kOneBelow outputs 1 on x < t, 0
// otherwise; kOneAbove outputs 1 on x > t. Points exactly at t get 0 under
// both orientations (the deterministic boundary rule). t may be +-infinity,
// which yields the constant classifiers.
struct Threshold {
  double t = 0.0;
  Orientation orientation = Orientation::kOneBelow;
};

// Linear classifier in the plane: outputs 1 iff cos(theta)*x1 + sin(theta)*x2
// > b. Orientation is folded into theta (theta + pi flips the labels), theta
// canonicalized to [0, 2*pi).
struct Linear2D {
  double theta = 0.0;
  double b = 0.0;
};

struct Hypothesis {
  std::variant<Threshold, Linear2D> rule;

  int dim() const { return std::holds_alternative<Threshold>(rule) ? 1 : 2; }
  int predict(const Point& x) const;

  static Hypothesis threshold(double t, Orientation o = Orientation::kOneBelow);
  static Hypothesis linear2d(double theta, double b);
};

// 1 - h: complements every prediction off the decision boundary.
Hypothesis flip(const Hypothesis& h);

// Set where predict(a, .) != predict(b, .). Thresholds give an interval, a
// complement of an interval, a half-line, nothing or (almost) everything;
// linear pairs give the two halves of a symmetric difference of half-planes.
Region disagreement_region(const Hypothesis& a, const Hypothesis& b);

// Deterministic order used to break ties among equal-value witnesses:
// (kind, orientation/theta, t/b) lexicographically.
bool hypothesis_less(const Hypothesis& a, const Hypothesis& b);
bool hypothesis_equal(const Hypothesis& a, const Hypothesis& b);

std::string orientation_name(Orientation o);

double canonical_theta(double theta);  // wraps into [0, 2*pi)

}  // namespace locdisc

#endif  // LOCDISC_CORE_HYPOTHESIS_HPP

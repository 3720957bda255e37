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

#include "core/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/stats.hpp"

namespace locdisc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWeightTol = 1e-12;
}  // namespace

void Marginal1D::validate() const {
  require(!components.empty(), ErrorCode::kInvalidArgument,
          "Marginal1D needs at least one component");
  double total = 0.0;
  for (const auto& c : components) {
    require(c.weight >= 0.0, ErrorCode::kInvalidArgument,
            "component weight must be nonnegative");
    total += c.weight;
    if (const auto* u = std::get_if<UniformInterval>(&c.shape)) {
      require(u->lo < u->hi, ErrorCode::kInvalidArgument,
              "UniformInterval needs lo < hi");
    } else {
      require(std::get<Gaussian>(c.shape).stddev > 0.0,
              ErrorCode::kInvalidArgument, "Gaussian needs stddev > 0");
    }
  }
  require(std::abs(total - 1.0) <= kWeightTol, ErrorCode::kInvalidArgument,
          "component weights must sum to 1");
}

double Marginal1D::interval_mass(double a, double b) const {
  if (!(a < b)) return 0.0;
  double m = 0.0;
  for (const auto& c : components) {
    if (const auto* u = std::get_if<UniformInterval>(&c.shape)) {
      const double lo = std::max(a, u->lo);
      const double hi = std::min(b, u->hi);
      if (hi > lo) m += c.weight * (hi - lo) / (u->hi - u->lo);
    } else {
      const auto& g = std::get<Gaussian>(c.shape);
      m += c.weight * normal_interval_mass(g.mean, g.stddev, a, b);
    }
  }
  return std::min(m, 1.0);
}

double Marginal1D::cdf(double x) const { return interval_mass(-kInf, x); }

double Marginal1D::mass(const IntervalSet& s) const {
  double m = 0.0;
  for (const auto& p : s.parts) m += interval_mass(p.lo, p.hi);
  return std::min(m, 1.0);
}

double Marginal1D::sample(RngStream& rng) const {
  double u = rng.uniform01();
  std::size_t pick = components.size() - 1;
  double acc = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    acc += components[i].weight;
    if (u < acc) {
      pick = i;
      break;
    }
  }
  const auto& c = components[pick];
  if (const auto* uu = std::get_if<UniformInterval>(&c.shape))
    return rng.uniform(uu->lo, uu->hi);
  const auto& g = std::get<Gaussian>(c.shape);
  return rng.normal(g.mean, g.stddev);
}

double Marginal1D::density_bound() const {
  double d = 0.0;
  for (const auto& c : components) {
    if (const auto* u = std::get_if<UniformInterval>(&c.shape)) {
      d += c.weight / (u->hi - u->lo);
    } else {
      d += c.weight * normal_peak_density(std::get<Gaussian>(c.shape).stddev);
    }
  }
  return d;
}

std::vector<double> Marginal1D::breakpoints() const {
  std::vector<double> pts;
  for (const auto& c : components) {
    if (const auto* u = std::get_if<UniformInterval>(&c.shape)) {
      pts.push_back(u->lo);
      pts.push_back(u->hi);
    } else {
      pts.push_back(std::get<Gaussian>(c.shape).mean);
    }
  }
  return pts;
}

std::pair<double, double> Marginal1D::effective_support() const {
  double lo = kInf, hi = -kInf;
  for (const auto& c : components) {
    if (const auto* u = std::get_if<UniformInterval>(&c.shape)) {
      lo = std::min(lo, u->lo);
      hi = std::max(hi, u->hi);
    } else {
      const auto& g = std::get<Gaussian>(c.shape);
      lo = std::min(lo, g.mean - 8.0 * g.stddev);
      hi = std::max(hi, g.mean + 8.0 * g.stddev);
    }
  }
  return {lo, hi};
}

void Marginal2D::validate() const {
  if (const auto* r = std::get_if<UniformRect>(&shape)) {
    require(r->x_lo < r->x_hi && r->y_lo < r->y_hi, ErrorCode::kInvalidArgument,
            "UniformRect needs positive area");
  } else {
    const auto& s = std::get<UniformSegment>(shape);
    const double dx = s.b[0] - s.a[0];
    const double dy = s.b[1] - s.a[1];
    require(dx * dx + dy * dy > 0.0, ErrorCode::kInvalidArgument,
            "UniformSegment needs positive length");
  }
}

double Marginal2D::mass(const std::vector<Wedge>& wedges) const {
  double m = 0.0;
  if (const auto* r = std::get_if<UniformRect>(&shape)) {
    const Polygon rect = rect_polygon(r->x_lo, r->x_hi, r->y_lo, r->y_hi);
    const double area = (r->x_hi - r->x_lo) * (r->y_hi - r->y_lo);
    for (const auto& w : wedges) m += wedge_clip_area(w, rect) / area;
  } else {
    const auto& s = std::get<UniformSegment>(shape);
    for (const auto& w : wedges) m += wedge_segment_fraction(w, s.a, s.b);
  }
  return std::min(m, 1.0);
}

Point Marginal2D::sample(RngStream& rng) const {
  if (const auto* r = std::get_if<UniformRect>(&shape))
    return Point{rng.uniform(r->x_lo, r->x_hi), rng.uniform(r->y_lo, r->y_hi)};
  const auto& s = std::get<UniformSegment>(shape);
  const double t = rng.uniform01();
  return Point{s.a[0] + t * (s.b[0] - s.a[0]), s.a[1] + t * (s.b[1] - s.a[1])};
}

std::pair<Point, Point> Marginal2D::bounding_box() const {
  if (const auto* r = std::get_if<UniformRect>(&shape))
    return {Point{r->x_lo, r->y_lo}, Point{r->x_hi, r->y_hi}};
  const auto& s = std::get<UniformSegment>(shape);
  return {Point{std::min(s.a[0], s.b[0]), std::min(s.a[1], s.b[1])},
          Point{std::max(s.a[0], s.b[0]), std::max(s.a[1], s.b[1])}};
}

void Marginal::validate() const {
  if (const auto* m1 = std::get_if<Marginal1D>(&value)) {
    m1->validate();
  } else {
    std::get<Marginal2D>(value).validate();
  }
}

double Marginal::mass(const Region& region) const {
  require(region.dim == dim(), ErrorCode::kDimensionMismatch,
          "mass: region dimension does not match marginal dimension");
  if (const auto* m1 = std::get_if<Marginal1D>(&value))
    return m1->mass(region.intervals);
  return std::get<Marginal2D>(value).mass(region.wedges);
}

Point Marginal::sample(RngStream& rng) const {
  if (const auto* m1 = std::get_if<Marginal1D>(&value))
    return Point{m1->sample(rng), 0.0};
  return std::get<Marginal2D>(value).sample(rng);
}

}  // namespace locdisc

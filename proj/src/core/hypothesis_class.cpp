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

#include "core/hypothesis_class.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "core/error.hpp"

namespace locdisc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void HypothesisClassDescriptor::validate() const {
  if (kind == ClassKind::kThreshold1D) {
    require(vc_dimension == 2, ErrorCode::kInvalidArgument,
            "threshold-1d class has VC dimension 2");
    require(t_lo <= t_hi, ErrorCode::kInvalidArgument, "bad threshold box");
  } else {
    require(vc_dimension == 3, ErrorCode::kInvalidArgument,
            "linear-2d class has VC dimension 3");
    require(b_lo <= b_hi, ErrorCode::kInvalidArgument, "bad offset box");
  }
}

HypothesisClassDescriptor HypothesisClassDescriptor::threshold1d(double t_lo,
                                                                 double t_hi) {
  HypothesisClassDescriptor d;
  d.kind = ClassKind::kThreshold1D;
  d.vc_dimension = 2;
  d.t_lo = t_lo;
  d.t_hi = t_hi;
  return d;
}

HypothesisClassDescriptor HypothesisClassDescriptor::linear2d(double b_lo,
                                                              double b_hi) {
  HypothesisClassDescriptor d;
  d.kind = ClassKind::kLinear2D;
  d.vc_dimension = 3;
  d.theta_lo = 0.0;
  d.theta_hi = 2.0 * std::numbers::pi;
  d.b_lo = b_lo;
  d.b_hi = b_hi;
  return d;
}

namespace {

std::vector<Hypothesis> threshold_candidates(const std::vector<Point>& pooled) {
  std::vector<double> xs;
  xs.reserve(pooled.size());
  for (const auto& p : pooled) xs.push_back(p[0]);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> cuts;
  cuts.push_back(-kInf);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    cuts.push_back(0.5 * (xs[i] + xs[i + 1]));
  cuts.push_back(kInf);

  std::vector<Hypothesis> out;
  out.reserve(cuts.size() * 2);
  for (double t : cuts) out.push_back(Hypothesis::threshold(t, Orientation::kOneBelow));
  for (double t : cuts) out.push_back(Hypothesis::threshold(t, Orientation::kOneAbove));
  return out;
}

std::vector<Hypothesis> linear_candidates(const std::vector<Point>& pooled) {
  // Distinct points.
  std::vector<Point> pts = pooled;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double min_x = kInf, max_x = -kInf, min_y = kInf, max_y = -kInf;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const double diag = std::hypot(max_x - min_x, max_y - min_y);
  const double eta = 1e-9 * diag;

  std::vector<Hypothesis> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[j][0] - pts[i][0];
      const double dy = pts[j][1] - pts[i][1];
      // Normal of the through-pair line.
      const double theta = std::atan2(dx, -dy);
      const double nx = std::cos(theta);
      const double ny = std::sin(theta);
      const double b0 = nx * pts[i][0] + ny * pts[i][1];
      for (double shift : {-eta, eta}) {
        out.push_back(Hypothesis::linear2d(theta, b0 + shift));
        out.push_back(Hypothesis::linear2d(theta + std::numbers::pi, -(b0 + shift)));
      }
    }
  }
  // Constant classifiers beyond the bounding box, both labels, two axes.
  const double margin = std::max(1.0, diag);
  out.push_back(Hypothesis::linear2d(0.0, min_x - margin));             // all 1
  out.push_back(Hypothesis::linear2d(0.0, max_x + margin));             // all 0
  out.push_back(Hypothesis::linear2d(std::numbers::pi / 2, min_y - margin));
  out.push_back(Hypothesis::linear2d(std::numbers::pi / 2, max_y + margin));
  return out;
}

}  // namespace

std::vector<Hypothesis> canonical_candidates(
    const HypothesisClassDescriptor& cls,
    const std::vector<const Dataset*>& data) {
  cls.validate();
  std::vector<Point> pooled;
  for (const Dataset* d : data) {
    require(d != nullptr && !d->points.empty(), ErrorCode::kInvalidArgument,
            "canonical_candidates: empty dataset");
    require(d->dim == cls.dim(), ErrorCode::kDimensionMismatch,
            "canonical_candidates: dataset dimension does not match class");
    pooled.insert(pooled.end(), d->points.begin(), d->points.end());
  }
  require(!pooled.empty(), ErrorCode::kInvalidArgument,
          "canonical_candidates: no points");
  if (cls.kind == ClassKind::kThreshold1D) return threshold_candidates(pooled);
  return linear_candidates(pooled);
}

std::vector<Hypothesis> parameter_grid(const HypothesisClassDescriptor& cls,
                                       double resolution) {
  cls.validate();
  require(resolution > 0.0, ErrorCode::kInvalidArgument,
          "parameter_grid: resolution must be > 0");
  std::vector<Hypothesis> out;
  auto axis = [&](double lo, double hi) {
    std::vector<double> v;
    require(std::isfinite(lo) && std::isfinite(hi), ErrorCode::kInvalidArgument,
            "parameter_grid: parameter box must be finite");
    const auto steps = static_cast<std::size_t>(
        std::floor((hi - lo) / resolution + 1e-9));
    v.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) v.push_back(lo + static_cast<double>(k) * resolution);
    if (v.back() < hi - 1e-12 * std::max(1.0, std::abs(hi))) v.push_back(hi);
    return v;
  };
  if (cls.kind == ClassKind::kThreshold1D) {
    const auto ts = axis(cls.t_lo, cls.t_hi);
    for (double t : ts) out.push_back(Hypothesis::threshold(t, Orientation::kOneBelow));
    for (double t : ts) out.push_back(Hypothesis::threshold(t, Orientation::kOneAbove));
    return out;
  }
  // theta axis is half-open: theta_hi == theta_lo + 2*pi duplicates theta_lo.
  std::vector<double> thetas;
  for (double th = cls.theta_lo; th < cls.theta_hi - 1e-12; th += resolution)
    thetas.push_back(th);
  const auto bs = axis(cls.b_lo, cls.b_hi);
  for (double th : thetas)
    for (double b : bs) out.push_back(Hypothesis::linear2d(th, b));
  return out;
}

}  // namespace locdisc

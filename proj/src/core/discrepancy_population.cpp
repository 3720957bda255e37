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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>

#include "core/discrepancy_impl.hpp"
#include "core/error.hpp"
#include "core/pair_scan.hpp"
#include "core/solver_util.hpp"

namespace locdisc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kFeasSlack = 1e-12;

double pow_gamma(double x, double gamma) {
  return gamma == 1.0 ? x : std::pow(x, gamma);
}

// ---------------------------------------------------------------------------
// Threshold (1-D) population machinery.
// ---------------------------------------------------------------------------

double threshold_error_pop(const Domain& dom, double t, Orientation o) {
  return expected_error(Hypothesis::threshold(t, o), dom);
}

// Scan abscissas: a uniform comb over [lo, hi] merged with structural points
// (uniform-component edges, gaussian means, labeling thresholds). Features
// narrower than the comb step always sit at one of these.
std::vector<double> scan_abscissas(double lo, double hi, double scan_step,
                                   const std::vector<double>& extras) {
  std::vector<double> ts;
  const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / scan_step)));
  ts.reserve(static_cast<std::size_t>(n) + extras.size() + 1);
  for (int i = 0; i <= n; ++i) ts.push_back(lo + (hi - lo) * i / n);
  for (double x : extras)
    if (x > lo && x < hi && std::isfinite(x)) ts.push_back(x);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Feasible t-intervals of {h : err_source(h) <= r} for one orientation, by
// scan plus boundary bisection.
std::vector<std::pair<double, double>> feasible_intervals_1d(
    const Domain& source, Orientation o, double r, double lo, double hi,
    double scan_step, double bisect_tol, const std::vector<double>& extras) {
  std::vector<std::pair<double, double>> out;
  const auto g = [&](double t) { return threshold_error_pop(source, t, o) - r; };
  const std::vector<double> ts = scan_abscissas(lo, hi, scan_step, extras);
  double prev_t = ts.front();
  double prev_g = g(prev_t);
  std::optional<double> open_at;
  if (prev_g <= 0.0) open_at = prev_t;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double t = ts[i];
    const double gt = g(t);
    if (prev_g > 0.0 && gt <= 0.0) {
      open_at = bisect_root(g, prev_t, t, bisect_tol);
    } else if (prev_g <= 0.0 && gt > 0.0) {
      const double edge = bisect_root(g, prev_t, t, bisect_tol);
      out.emplace_back(*open_at, edge);
      open_at.reset();
    }
    prev_t = t;
    prev_g = gt;
  }
  if (open_at) out.emplace_back(*open_at, hi);
  return out;
}

struct PoolEntry {
  double t;
  double d;       // F_tgt(t) - F_src(t)
  bool in_below;
  bool in_above;
};

struct PairBest {
  double value = kNegInf;
  std::optional<Hypothesis> h, h_prime;

  void consider(double v, const Hypothesis& a, const Hypothesis& b) {
    if (v > value) {
      value = v;
      if (hypothesis_less(a, b)) {
        h = a;
        h_prime = b;
      } else {
        h = b;
        h_prime = a;
      }
    }
  }
};

bool in_intervals(const std::vector<std::pair<double, double>>& ivs, double t) {
  for (const auto& [a, b] : ivs)
    if (t >= a - kFeasSlack && t <= b + kFeasSlack) return true;
  return false;
}

std::optional<std::pair<double, double>> containing_interval(
    const std::vector<std::pair<double, double>>& ivs, double t) {
  for (const auto& [a, b] : ivs)
    if (t >= a - kFeasSlack && t <= b + kFeasSlack) return std::make_pair(a, b);
  return std::nullopt;
}

struct ThresholdPopContext {
  const Domain* source;
  const Domain* target;
  double lo, hi;
  double scan_step;
  const SolverOptions* opts;
  std::vector<double> extra_points;  // structural abscissas of both marginals

  double dfun(double t) const {
    return target->marginal.mass(region_below(t)) -
           source->marginal.mass(region_below(t));
  }
  static Region region_below(double t) {
    Region r;
    r.dim = 1;
    if (t != -std::numeric_limits<double>::infinity())
      r.intervals.parts.push_back(
          Interval{-std::numeric_limits<double>::infinity(), t, false, false});
    return r;
  }
};

// Pool = scan grid restricted to the feasible sets, plus every feasibility
// boundary. Refinement then polishes the top extremes of D inside their
// feasible intervals and reruns the pairing scan on the augmented pool.
std::vector<PoolEntry> build_pool(const ThresholdPopContext& ctx,
                                  const ThresholdFeasibleSet& feas) {
  std::vector<double> ts =
      scan_abscissas(ctx.lo, ctx.hi, ctx.scan_step, ctx.extra_points);
  for (const auto& [a, b] : feas.below) {
    ts.push_back(a);
    ts.push_back(b);
  }
  for (const auto& [a, b] : feas.above) {
    ts.push_back(a);
    ts.push_back(b);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<PoolEntry> pool;
  pool.reserve(ts.size());
  for (double t : ts) {
    PoolEntry e{t, 0.0, in_intervals(feas.below, t), in_intervals(feas.above, t)};
    if (!e.in_below && !e.in_above) continue;
    e.d = ctx.dfun(t);
    pool.push_back(e);
  }
  return pool;
}

// Adds refined local extrema of D (top-k maxima and minima per orientation
// class) to the pool.
void refine_pool_extremes(const ThresholdPopContext& ctx,
                          const ThresholdFeasibleSet& feas,
                          std::vector<PoolEntry>* pool) {
  const double xtol = ctx.opts->refine_step;
  const int top_k = 8;
  std::vector<PoolEntry> refined;
  for (const bool below : {true, false}) {
    const auto& ivs = below ? feas.below : feas.above;
    if (ivs.empty()) continue;
    std::vector<PoolEntry> members;
    for (const auto& e : *pool)
      if (below ? e.in_below : e.in_above) members.push_back(e);
    for (const bool maximize : {true, false}) {
      std::vector<PoolEntry> ranked = members;
      std::sort(ranked.begin(), ranked.end(),
                [&](const PoolEntry& a, const PoolEntry& b) {
                  return maximize ? a.d > b.d : a.d < b.d;
                });
      int taken = 0;
      std::vector<double> used;
      for (const PoolEntry& e : ranked) {
        if (taken >= top_k) break;
        bool close = false;
        for (double u : used)
          if (std::abs(u - e.t) < 3.0 * ctx.scan_step) close = true;
        if (close) continue;
        used.push_back(e.t);
        ++taken;
        const auto iv = containing_interval(ivs, e.t);
        if (!iv) continue;
        const double wlo = std::max(iv->first, e.t - ctx.scan_step);
        const double whi = std::min(iv->second, e.t + ctx.scan_step);
        if (!(wlo < whi)) continue;
        const auto f = [&](double t) {
          return maximize ? ctx.dfun(t) : -ctx.dfun(t);
        };
        const LineSearchResult r = maximize_on_interval(f, wlo, whi, xtol);
        refined.push_back(PoolEntry{r.x, maximize ? r.value : -r.value,
                                    in_intervals(feas.below, r.x),
                                    in_intervals(feas.above, r.x)});
      }
    }
  }
  pool->insert(pool->end(), refined.begin(), refined.end());
  std::sort(pool->begin(), pool->end(),
            [](const PoolEntry& a, const PoolEntry& b) { return a.t < b.t; });
}

ThresholdFeasibleSet whole_box_feasible(double lo, double hi) {
  ThresholdFeasibleSet f;
  f.below.emplace_back(lo, hi);
  f.above.emplace_back(lo, hi);
  return f;
}

// Signed localized pair sup; also the r >= 1 signed H∆H sup.
detail::ScanBest threshold_pair_sup(const ThresholdPopContext& ctx,
                                    const ThresholdFeasibleSet& feas) {
  std::vector<PoolEntry> pool = build_pool(ctx, feas);
  require(!pool.empty(), ErrorCode::kEmptyLocalizedSpace,
          "empty localized space");
  refine_pool_extremes(ctx, feas, &pool);
  std::vector<detail::ScanEntry> entries;
  entries.reserve(pool.size());
  for (const auto& e : pool)
    entries.push_back(
        detail::ScanEntry{e.t, e.d, e.d, e.in_below, e.in_above});
  return detail::scan_threshold_pairs(entries);
}

double mass_diff(const Domain& target, const Domain& source, const Region& reg) {
  return target.marginal.mass(reg) - source.marginal.mass(reg);
}

// Anchored sup over h' of E_tgt L(h',h) - E_src L(h',h), h' restricted to the
// feasible set. Direct 1-D optimization per feasible interval.
struct SingleBest {
  double value = kNegInf;
  std::optional<Hypothesis> witness;
};

SingleBest threshold_disparity_sup(const ThresholdPopContext& ctx,
                                   const ThresholdFeasibleSet& feas,
                                   const Hypothesis& anchor) {
  SingleBest best;
  for (const bool below : {true, false}) {
    const Orientation o = below ? Orientation::kOneBelow : Orientation::kOneAbove;
    const auto& ivs = below ? feas.below : feas.above;
    const auto f = [&](double t) {
      const Hypothesis h = Hypothesis::threshold(t, o);
      return mass_diff(*ctx.target, *ctx.source,
                       disagreement_region(h, anchor));
    };
    for (const auto& [a, b] : ivs) {
      // Coarse scan seeds (with structural points), then zoom around the
      // best few.
      std::vector<std::pair<double, double>> seeds;  // (value, t)
      for (double t : scan_abscissas(a, b, ctx.scan_step, ctx.extra_points))
        seeds.emplace_back(f(t), t);
      std::sort(seeds.rbegin(), seeds.rend());
      const int k = std::min<std::size_t>(5, seeds.size());
      for (int i = 0; i < k; ++i) {
        const double t0 = seeds[i].second;
        const LineSearchResult r = maximize_on_interval(
            f, std::max(a, t0 - ctx.scan_step), std::min(b, t0 + ctx.scan_step),
            ctx.opts->refine_step);
        if (r.value > best.value) {
          best.value = r.value;
          best.witness = Hypothesis::threshold(r.x, o);
        }
      }
    }
  }
  return best;
}

// Boosted pair sup: non-separable, so enumerate feasible pool pairs with
// cached CDFs and refine the leaders coordinate-wise.
PairBest threshold_boosted_sup(const ThresholdPopContext& ctx,
                               const ThresholdFeasibleSet& feas, double gamma) {
  std::vector<PoolEntry> pool = build_pool(ctx, feas);
  require(!pool.empty(), ErrorCode::kEmptyLocalizedSpace,
          "empty localized space");

  std::vector<double> fs(pool.size()), ft(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Region below = ThresholdPopContext::region_below(pool[i].t);
    fs[i] = ctx.source->marginal.mass(below);
    ft[i] = ctx.target->marginal.mass(below);
  }
  auto pair_value = [&](std::size_t i, std::size_t j, bool mixed) {
    const double et = ft[j] - ft[i];
    const double es = fs[j] - fs[i];
    if (!mixed) return et - pow_gamma(es, gamma);
    return (1.0 - et) - pow_gamma(1.0 - es, gamma);
  };

  struct Seed {
    double value;
    std::size_t i, j;
    Orientation oi, oj;
    bool mixed;
  };
  std::vector<Seed> seeds;
  PairBest best;
  auto consider = [&](double v, std::size_t i, std::size_t j, Orientation oi,
                      Orientation oj, bool mixed) {
    seeds.push_back(Seed{v, i, j, oi, oj, mixed});
    best.consider(v, Hypothesis::threshold(pool[i].t, oi),
                  Hypothesis::threshold(pool[j].t, oj));
  };

  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].in_below && pool[j].in_below)
        consider(pair_value(i, j, false), i, j, Orientation::kOneBelow,
                 Orientation::kOneBelow, false);
      if (pool[i].in_above && pool[j].in_above)
        consider(pair_value(i, j, false), i, j, Orientation::kOneAbove,
                 Orientation::kOneAbove, false);
      if (pool[i].in_below && pool[j].in_above)
        consider(pair_value(i, j, true), i, j, Orientation::kOneBelow,
                 Orientation::kOneAbove, true);
      if (pool[i].in_above && pool[j].in_below)
        consider(pair_value(i, j, true), i, j, Orientation::kOneAbove,
                 Orientation::kOneBelow, true);
    }
  }

  std::sort(seeds.begin(), seeds.end(),
            [](const Seed& a, const Seed& b) { return a.value > b.value; });
  const std::size_t top = std::min<std::size_t>(6, seeds.size());
  const double xtol = ctx.opts->refine_step;
  for (std::size_t s = 0; s < top; ++s) {
    const Seed& sd = seeds[s];
    double u = pool[sd.i].t;
    double v = pool[sd.j].t;
    const auto value_at = [&](double a, double b) {
      const Hypothesis ha = Hypothesis::threshold(a, sd.oi);
      const Hypothesis hb = Hypothesis::threshold(b, sd.oj);
      const Region reg = disagreement_region(ha, hb);
      const double et = ctx.target->marginal.mass(reg);
      const double es = ctx.source->marginal.mass(reg);
      return et - pow_gamma(es, gamma);
    };
    const auto ivu = containing_interval(
        sd.oi == Orientation::kOneBelow ? feas.below : feas.above, u);
    const auto ivv = containing_interval(
        sd.oj == Orientation::kOneBelow ? feas.below : feas.above, v);
    if (!ivu || !ivv) continue;
    for (int round = 0; round < 4; ++round) {
      LineSearchResult ru = maximize_on_interval(
          [&](double a) { return value_at(a, v); },
          std::max(ivu->first, u - ctx.scan_step),
          std::min(ivu->second, u + ctx.scan_step), xtol);
      u = ru.x;
      LineSearchResult rv = maximize_on_interval(
          [&](double b) { return value_at(u, b); },
          std::max(ivv->first, v - ctx.scan_step),
          std::min(ivv->second, v + ctx.scan_step), xtol);
      v = rv.x;
      best.consider(rv.value, Hypothesis::threshold(u, sd.oi),
                    Hypothesis::threshold(v, sd.oj));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Linear (2-D) population machinery: coarse pools + move-set refinement.
// ---------------------------------------------------------------------------

struct LinearPopContext {
  const Domain* source;
  const Domain* target;
  const HypothesisClassDescriptor* cls;
  const SolverOptions* opts;
  std::optional<double> r;  // localization radius on err_source

  bool feasible(const Hypothesis& h) const {
    if (!r) return true;
    return expected_error(h, *source) <= *r + kFeasSlack;
  }
};

std::vector<Point> pin_anchor_points(const Marginal& m) {
  std::vector<Point> pts;
  if (const auto* m2 = std::get_if<Marginal2D>(&m.value)) {
    if (const auto* seg = std::get_if<UniformSegment>(&m2->shape)) {
      pts.push_back(Point{0.5 * (seg->a[0] + seg->b[0]),
                          0.5 * (seg->a[1] + seg->b[1])});
    } else {
      const auto& r = std::get<UniformRect>(m2->shape);
      pts.push_back(Point{0.5 * (r.x_lo + r.x_hi), 0.5 * (r.y_lo + r.y_hi)});
    }
  }
  return pts;
}

struct SegmentLine {
  Point a;
  Point dir;  // not normalized
};

std::vector<SegmentLine> pin_support_lines(const Marginal& m) {
  std::vector<SegmentLine> lines;
  if (const auto* m2 = std::get_if<Marginal2D>(&m.value)) {
    if (const auto* seg = std::get_if<UniformSegment>(&m2->shape)) {
      lines.push_back(SegmentLine{
          seg->a, Point{seg->b[0] - seg->a[0], seg->b[1] - seg->a[1]}});
    }
  }
  return lines;
}

// One hypothesis of a (possibly single-element) tuple is optimized along a
// move family while the rest stay fixed.
class LinearRefiner {
 public:
  LinearRefiner(const LinearPopContext& ctx,
                std::function<double(const std::vector<Hypothesis>&)> objective)
      : ctx_(ctx), objective_(std::move(objective)) {
    for (const Marginal* m : {&ctx.source->marginal, &ctx.target->marginal}) {
      for (const auto& p : pin_anchor_points(*m)) anchor_points_.push_back(p);
      for (const auto& l : pin_support_lines(*m)) support_lines_.push_back(l);
    }
  }

  // Returns the refined tuple value; mutates hs in place.
  double refine(std::vector<Hypothesis>* hs, double start_value) {
    double best = start_value;
    const double xtol = ctx_.opts->refine_step;
    double theta_window = std::numbers::pi;
    double b_window = 0.5 * (ctx_.cls->b_hi - ctx_.cls->b_lo);
    for (int round = 0; round < 24; ++round) {
      double round_gain = 0.0;
      for (std::size_t i = 0; i < hs->size(); ++i) {
        round_gain += try_move(hs, i, best, MoveKind::kTranslate, b_window, xtol);
        round_gain += try_move(hs, i, best, MoveKind::kRotate, theta_window, xtol);
        round_gain += try_move(hs, i, best, MoveKind::kPinned, std::numbers::pi, xtol);
      }
      theta_window = std::max(theta_window * 0.4, 8.0 * xtol);
      b_window = std::max(b_window * 0.4, 8.0 * xtol);
      if (round_gain < 1e-14 && round >= 3) break;
    }
    return best;
  }

 private:
  enum class MoveKind { kTranslate, kRotate, kPinned };

  double eval(const std::vector<Hypothesis>& hs) const {
    for (const auto& h : hs)
      if (!ctx_.feasible(h)) return kNegInf;
    return objective_(hs);
  }

  double try_move(std::vector<Hypothesis>* hs, std::size_t i, double& best,
                  MoveKind kind, double window, double xtol) {
    const Linear2D cur = std::get<Linear2D>((*hs)[i].rule);
    double gained = 0.0;
    auto attempt = [&](const std::function<Hypothesis(double)>& make, double lo,
                       double hi) {
      const LineSearchResult r = maximize_on_interval(
          [&](double x) {
            std::vector<Hypothesis> trial = *hs;
            trial[i] = make(x);
            return eval(trial);
          },
          lo, hi, xtol);
      if (r.value > best) {
        gained += r.value - best;
        best = r.value;
        (*hs)[i] = make(r.x);
      }
    };
    switch (kind) {
      case MoveKind::kTranslate:
        attempt([&](double b) { return Hypothesis::linear2d(cur.theta, b); },
                std::max(ctx_.cls->b_lo, cur.b - window),
                std::min(ctx_.cls->b_hi, cur.b + window));
        break;
      case MoveKind::kRotate:
        attempt([&](double th) { return Hypothesis::linear2d(th, cur.b); },
                cur.theta - window, cur.theta + window);
        break;
      case MoveKind::kPinned: {
        // Rotate about a point fixed on the line: intersections with segment
        // supporting lines, then projections of marginal anchor points.
        std::vector<Point> pins;
        const double nx = std::cos(cur.theta);
        const double ny = std::sin(cur.theta);
        for (const auto& sl : support_lines_) {
          const double den = nx * sl.dir[0] + ny * sl.dir[1];
          if (std::abs(den) < 1e-12) continue;
          const double s = (cur.b - nx * sl.a[0] - ny * sl.a[1]) / den;
          pins.push_back(Point{sl.a[0] + s * sl.dir[0], sl.a[1] + s * sl.dir[1]});
        }
        for (const auto& q : anchor_points_) {
          const double excess = nx * q[0] + ny * q[1] - cur.b;
          pins.push_back(Point{q[0] - excess * nx, q[1] - excess * ny});
        }
        for (const auto& p : pins) {
          attempt(
              [&, p](double th) {
                const double bb = std::cos(th) * p[0] + std::sin(th) * p[1];
                return Hypothesis::linear2d(th, bb);
              },
              cur.theta - window, cur.theta + window);
        }
        break;
      }
    }
    return gained;
  }

  const LinearPopContext& ctx_;
  std::function<double(const std::vector<Hypothesis>&)> objective_;
  std::vector<Point> anchor_points_;
  std::vector<SegmentLine> support_lines_;
};

// Candidate hypotheses: theta comb x (feasible b representatives per theta,
// found by scan + boundary bisection when localized; a plain b grid
// otherwise).
std::vector<Hypothesis> linear_pool(const LinearPopContext& ctx, int n_theta,
                                    int n_b) {
  std::vector<Hypothesis> pool;
  const double b_lo = ctx.cls->b_lo;
  const double b_hi = ctx.cls->b_hi;
  for (int it = 0; it < n_theta; ++it) {
    const double theta = 2.0 * std::numbers::pi * it / n_theta;
    if (!ctx.r) {
      for (int ib = 0; ib <= n_b; ++ib)
        pool.push_back(
            Hypothesis::linear2d(theta, b_lo + (b_hi - b_lo) * ib / n_b));
      continue;
    }
    // Feasible b intervals at this angle.
    const auto g = [&](double b) {
      return expected_error(Hypothesis::linear2d(theta, b), *ctx.source) -
             *ctx.r;
    };
    const int scan = std::max(64, 2 * n_b);
    double prev_b = b_lo;
    double prev_g = g(b_lo);
    std::optional<double> open_at;
    if (prev_g <= 0.0) open_at = b_lo;
    auto emit = [&](double a, double b) {
      pool.push_back(Hypothesis::linear2d(theta, a));
      pool.push_back(Hypothesis::linear2d(theta, 0.5 * (a + b)));
      pool.push_back(Hypothesis::linear2d(theta, b));
    };
    for (int ib = 1; ib <= scan; ++ib) {
      const double b = b_lo + (b_hi - b_lo) * ib / scan;
      const double gb = g(b);
      if (prev_g > 0.0 && gb <= 0.0)
        open_at = bisect_root(g, prev_b, b, ctx.opts->feasibility_tol);
      else if (prev_g <= 0.0 && gb > 0.0) {
        emit(*open_at, bisect_root(g, prev_b, b, ctx.opts->feasibility_tol));
        open_at.reset();
      }
      prev_b = b;
      prev_g = gb;
    }
    if (open_at) emit(*open_at, b_hi);
  }
  return pool;
}

struct LinearObjective {
  // Pair objective over (h, h'); `single` anchors h and optimizes h' only.
  const LinearPopContext* ctx;
  std::optional<Hypothesis> anchor;
  std::optional<double> gamma;
  bool absolute = false;

  double operator()(const std::vector<Hypothesis>& hs) const {
    const Hypothesis& a = anchor ? *anchor : hs[0];
    const Hypothesis& b = anchor ? hs[0] : hs[1];
    const Region reg = disagreement_region(a, b);
    const double et = ctx->target->marginal.mass(reg);
    const double es = ctx->source->marginal.mass(reg);
    if (gamma) return et - pow_gamma(es, *gamma);
    const double v = et - es;
    return absolute ? std::abs(v) : v;
  }
};

struct LinearSearchResult {
  double value = kNegInf;
  std::vector<Hypothesis> witness;
};

LinearSearchResult linear_sup(const LinearPopContext& ctx,
                              const LinearObjective& objective, int arity,
                              int n_theta, int n_b) {
  const std::vector<Hypothesis> pool = linear_pool(ctx, n_theta, n_b);
  require(!pool.empty(), ErrorCode::kEmptyLocalizedSpace,
          "empty localized space");

  struct Seed {
    double value;
    std::size_t i, j;
  };
  // Keep only the best few seeds while sweeping the pool (pair pools reach
  // millions of combinations).
  constexpr std::size_t kTop = 10;
  std::vector<Seed> top;
  auto offer = [&](double v, std::size_t i, std::size_t j) {
    if (top.size() < kTop) {
      top.push_back(Seed{v, i, j});
      std::sort(top.begin(), top.end(),
                [](const Seed& a, const Seed& b) { return a.value > b.value; });
      return;
    }
    if (v <= top.back().value) return;
    top.back() = Seed{v, i, j};
    std::sort(top.begin(), top.end(),
              [](const Seed& a, const Seed& b) { return a.value > b.value; });
  };
  if (arity == 1) {
    for (std::size_t i = 0; i < pool.size(); ++i)
      offer(objective({pool[i]}), i, i);
  } else {
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j)
        offer(objective({pool[i], pool[j]}), i, j);
  }

  LinearSearchResult best;
  LinearRefiner refiner(ctx, [&](const std::vector<Hypothesis>& hs) {
    return objective(hs);
  });
  for (const Seed& s : top) {
    std::vector<Hypothesis> hs;
    hs.push_back(pool[s.i]);
    if (arity == 2) hs.push_back(pool[s.j]);
    if (s.value > best.value) {
      best.value = s.value;
      best.witness = hs;
    }
    const double v = refiner.refine(&hs, s.value);
    if (v > best.value) {
      best.value = v;
      best.witness = hs;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Entry points.
// ---------------------------------------------------------------------------

struct PopulationPlan {
  ThresholdPopContext tctx;
  ThresholdFeasibleSet tfeas;
};

DiscrepancyReport make_report(const DiscrepancyKind& kind, double value,
                              std::optional<Hypothesis> h,
                              std::optional<Hypothesis> hp,
                              const Domain& source, const Domain& target,
                              const SolverOptions& opts) {
  DiscrepancyReport rep;
  rep.kind = kind;
  rep.value = value;
  rep.witness_h = std::move(h);
  rep.witness_h_prime = std::move(hp);
  rep.mode = ComputeMode::kPopulationGrid;
  rep.resolution = opts.refine_step;
  rep.source_id = source.id;
  rep.target_id = target.id;
  return rep;
}

}  // namespace

namespace {

// Structural scan points for a threshold search over the pair of domains:
// both mixtures' breakpoints plus the labeling thresholds (the error
// functions kink there) and the anchor, when one exists.
std::vector<double> threshold_structural_points(const Domain& source,
                                                const Domain& target,
                                                const Hypothesis* anchor) {
  std::vector<double> pts;
  for (const Domain* d : {&source, &target}) {
    if (const auto* m1 = std::get_if<Marginal1D>(&d->marginal.value)) {
      const auto bp = m1->breakpoints();
      pts.insert(pts.end(), bp.begin(), bp.end());
    }
    if (const auto* th = std::get_if<Threshold>(&d->labeling.rule))
      pts.push_back(th->t);
  }
  if (anchor)
    if (const auto* th = std::get_if<Threshold>(&anchor->rule))
      pts.push_back(th->t);
  return pts;
}

}  // namespace

ThresholdFeasibleSet threshold_feasible_set(const Domain& source,
                                            const HypothesisClassDescriptor& cls,
                                            double r, const SolverOptions& opts) {
  require(cls.kind == ClassKind::kThreshold1D, ErrorCode::kInvalidArgument,
          "threshold_feasible_set needs the threshold class");
  const double span = cls.t_hi - cls.t_lo;
  const double step = std::max(1e-12, opts.grid_fraction * span);
  const std::vector<double> extras =
      threshold_structural_points(source, source, nullptr);
  ThresholdFeasibleSet f;
  f.below = feasible_intervals_1d(source, Orientation::kOneBelow, r, cls.t_lo,
                                  cls.t_hi, step, opts.feasibility_tol, extras);
  f.above = feasible_intervals_1d(source, Orientation::kOneAbove, r, cls.t_lo,
                                  cls.t_hi, step, opts.feasibility_tol, extras);
  return f;
}

namespace detail {

DiscrepancyReport population_compute(const DiscrepancyKind& kind,
                                     const Domain& source, const Domain& target,
                                     const HypothesisClassDescriptor& cls,
                                     const SolverOptions& opts) {
  kind.validate();
  source.validate();
  target.validate();
  require(source.dim() == target.dim() && source.dim() == cls.dim(),
          ErrorCode::kDimensionMismatch,
          "population discrepancy: dimensions do not agree");
  if (cls.kind == ClassKind::kThreshold1D)
    require(std::isfinite(cls.t_lo) && std::isfinite(cls.t_hi),
            ErrorCode::kInvalidArgument, "unbounded parameter box");
  else
    require(std::isfinite(cls.b_lo) && std::isfinite(cls.b_hi),
            ErrorCode::kInvalidArgument, "unbounded parameter box");

  const bool localized = kind.tag == DiscrepancyKindTag::kLocalizedHdh ||
                         kind.tag == DiscrepancyKindTag::kLocalizedDisparity ||
                         kind.tag == DiscrepancyKindTag::kBoostedLocalizedHdh;

  if (cls.kind == ClassKind::kThreshold1D) {
    ThresholdPopContext ctx;
    ctx.source = &source;
    ctx.target = &target;
    ctx.lo = cls.t_lo;
    ctx.hi = cls.t_hi;
    ctx.scan_step = std::max(1e-12, opts.grid_fraction * (cls.t_hi - cls.t_lo));
    ctx.opts = &opts;
    ctx.extra_points = threshold_structural_points(
        source, target, kind.anchor ? &*kind.anchor : nullptr);

    const ThresholdFeasibleSet feas =
        localized ? threshold_feasible_set(source, cls, *kind.r, opts)
                  : whole_box_feasible(cls.t_lo, cls.t_hi);
    if (localized)
      require(!feas.empty(), ErrorCode::kEmptyLocalizedSpace,
              "empty localized space");

    switch (kind.tag) {
      case DiscrepancyKindTag::kHdhDivergence: {
        // |.| sup = max of the signed sups in the two directions.
        const detail::ScanBest fwd = threshold_pair_sup(ctx, feas);
        ThresholdPopContext rctx = ctx;
        rctx.source = &target;
        rctx.target = &source;
        const detail::ScanBest rev = threshold_pair_sup(rctx, feas);
        const detail::ScanBest& win = rev.value > fwd.value ? rev : fwd;
        return make_report(kind, win.value, win.h, win.h_prime, source, target,
                           opts);
      }
      case DiscrepancyKindTag::kLocalizedHdh: {
        const detail::ScanBest b = threshold_pair_sup(ctx, feas);
        return make_report(kind, b.value, b.h, b.h_prime, source, target, opts);
      }
      case DiscrepancyKindTag::kDisparity:
      case DiscrepancyKindTag::kLocalizedDisparity: {
        const SingleBest b = threshold_disparity_sup(ctx, feas, *kind.anchor);
        require(b.witness.has_value(), ErrorCode::kEmptyLocalizedSpace,
                "empty localized space");
        return make_report(kind, b.value, std::nullopt, b.witness, source,
                           target, opts);
      }
      case DiscrepancyKindTag::kBoostedLocalizedHdh: {
        if (*kind.gamma == 1.0) {
          DiscrepancyKind plain = kind;
          plain.tag = DiscrepancyKindTag::kLocalizedHdh;
          plain.gamma.reset();
          DiscrepancyReport rep = population_compute(plain, source, target, cls, opts);
          rep.kind = kind;
          return rep;
        }
        const PairBest b = threshold_boosted_sup(ctx, feas, *kind.gamma);
        return make_report(kind, b.value, b.h, b.h_prime, source, target, opts);
      }
    }
  }

  // Linear 2-D.
  LinearPopContext ctx;
  ctx.source = &source;
  ctx.target = &target;
  ctx.cls = &cls;
  ctx.opts = &opts;
  if (localized) ctx.r = *kind.r;

  switch (kind.tag) {
    case DiscrepancyKindTag::kHdhDivergence: {
      LinearObjective obj{&ctx, std::nullopt, std::nullopt, /*absolute=*/true};
      const LinearSearchResult r = linear_sup(ctx, obj, 2, 64, 40);
      return make_report(kind, r.value, r.witness[0], r.witness[1], source,
                         target, opts);
    }
    case DiscrepancyKindTag::kLocalizedHdh: {
      LinearObjective obj{&ctx, std::nullopt, std::nullopt, false};
      const LinearSearchResult r = linear_sup(ctx, obj, 2, 64, 40);
      return make_report(kind, r.value, r.witness[0], r.witness[1], source,
                         target, opts);
    }
    case DiscrepancyKindTag::kDisparity:
    case DiscrepancyKindTag::kLocalizedDisparity: {
      LinearObjective obj{&ctx, *kind.anchor, std::nullopt, false};
      const LinearSearchResult r = linear_sup(ctx, obj, 1, 192, 60);
      return make_report(kind, r.value, std::nullopt, r.witness[0], source,
                         target, opts);
    }
    case DiscrepancyKindTag::kBoostedLocalizedHdh: {
      if (*kind.gamma == 1.0) {
        DiscrepancyKind plain = kind;
        plain.tag = DiscrepancyKindTag::kLocalizedHdh;
        plain.gamma.reset();
        DiscrepancyReport rep = population_compute(plain, source, target, cls, opts);
        rep.kind = kind;
        return rep;
      }
      LinearObjective obj{&ctx, std::nullopt, kind.gamma, false};
      const LinearSearchResult r = linear_sup(ctx, obj, 2, 64, 40);
      return make_report(kind, r.value, r.witness[0], r.witness[1], source,
                         target, opts);
    }
  }
  throw Error(ErrorCode::kInternal, "unreachable discrepancy kind");
}

}  // namespace detail

IdealJointError ideal_joint_error(const Domain& source, const Domain& target,
                                  const HypothesisClassDescriptor& cls,
                                  const SolverOptions& opts) {
  source.validate();
  target.validate();
  require(source.dim() == target.dim() && source.dim() == cls.dim(),
          ErrorCode::kDimensionMismatch, "ideal_joint_error: dimension mismatch");
  const auto joint = [&](const Hypothesis& h) {
    return expected_error(h, source) + expected_error(h, target);
  };

  IdealJointError best;
  best.lambda = std::numeric_limits<double>::infinity();
  auto consider = [&](const Hypothesis& h, double v) {
    if (v < best.lambda ||
        (v == best.lambda && hypothesis_less(h, best.witness))) {
      best.lambda = v;
      best.witness = h;
    }
  };

  // The domain labelings seed the search; a shared in-class labeling gives 0.
  for (const Hypothesis* h : {&source.labeling, &target.labeling})
    if (h->dim() == cls.dim()) consider(*h, joint(*h));

  if (cls.kind == ClassKind::kThreshold1D) {
    const double span = cls.t_hi - cls.t_lo;
    const double step = std::max(1e-12, opts.grid_fraction * span);
    const std::vector<double> extras =
        threshold_structural_points(source, target, nullptr);
    for (const Orientation o :
         {Orientation::kOneBelow, Orientation::kOneAbove}) {
      const auto f = [&](double t) {
        return joint(Hypothesis::threshold(t, o));
      };
      std::vector<std::pair<double, double>> seeds;
      for (double t : scan_abscissas(cls.t_lo, cls.t_hi, step, extras))
        seeds.emplace_back(f(t), t);
      std::sort(seeds.begin(), seeds.end());
      for (std::size_t s = 0; s < std::min<std::size_t>(5, seeds.size()); ++s) {
        const double t0 = seeds[s].second;
        const LineSearchResult r = minimize_on_interval(
            f, std::max(cls.t_lo, t0 - step), std::min(cls.t_hi, t0 + step),
            opts.refine_step);
        consider(Hypothesis::threshold(r.x, o), r.value);
      }
    }
    return best;
  }

  LinearPopContext ctx;
  ctx.source = &source;
  ctx.target = &target;
  ctx.cls = &cls;
  ctx.opts = &opts;
  // Reuse the refiner with the negated joint error as the objective.
  LinearRefiner refiner(ctx, [&](const std::vector<Hypothesis>& hs) {
    return -joint(hs[0]);
  });
  const std::vector<Hypothesis> pool = linear_pool(ctx, 96, 48);
  std::vector<std::pair<double, Hypothesis>> seeds;
  for (const auto& h : pool) seeds.emplace_back(joint(h), h);
  std::sort(seeds.begin(), seeds.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t s = 0; s < std::min<std::size_t>(8, seeds.size()); ++s) {
    std::vector<Hypothesis> hs{seeds[s].second};
    const double v = -refiner.refine(&hs, -seeds[s].first);
    consider(hs[0], v);
  }
  for (const Hypothesis* h : {&source.labeling, &target.labeling}) {
    std::vector<Hypothesis> hs{*h};
    const double v = -refiner.refine(&hs, -joint(*h));
    consider(hs[0], v);
  }
  return best;
}

}  // namespace locdisc

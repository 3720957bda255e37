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
#include <bit>
#include <cmath>
#include <limits>
#include <optional>

#include "core/discrepancy_impl.hpp"
#include "core/empirical_index.hpp"
#include "core/error.hpp"
#include "core/pair_scan.hpp"

namespace locdisc {

namespace {

constexpr double kFeasSlack = 1e-12;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double pow_gamma(double x, double gamma) {
  return gamma == 1.0 ? x : std::pow(x, gamma);
}

bool is_localized(const DiscrepancyKind& kind) {
  return kind.tag == DiscrepancyKindTag::kLocalizedHdh ||
         kind.tag == DiscrepancyKindTag::kLocalizedDisparity ||
         kind.tag == DiscrepancyKindTag::kBoostedLocalizedHdh;
}

// ---------------------------------------------------------------------------
// Threshold class: prefix-count machinery over the two sorted samples.
// ---------------------------------------------------------------------------

struct EmpiricalThresholds {
  SortedSample src;
  SortedSample tgt;
  std::vector<double> cuts;  // candidate threshold locations, sorted

  EmpiricalThresholds(const Dataset& s, const Dataset& t,
                      const std::vector<Hypothesis>& candidates)
      : src(s), tgt(t) {
    for (const auto& h : candidates)
      cuts.push_back(std::get<Threshold>(h.rule).t);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  }

  double frac_lo(const SortedSample& ss, double t) const {
    return static_cast<double>(ss.count_below(t)) /
           static_cast<double>(ss.size());
  }
  // Empirical mass of the disagreement of a threshold pair.
  double pair_mass(const SortedSample& ss, const Threshold& a,
                   const Threshold& b) const {
    const double u = std::min(a.t, b.t);
    const double v = std::max(a.t, b.t);
    const double n = static_cast<double>(ss.size());
    if (a.orientation == b.orientation) {
      if (a.orientation == Orientation::kOneBelow)
        return (count_lo(ss, v) - count_lo(ss, u)) / n;  // [u, v)
      return (count_up(ss, v) - count_up(ss, u)) / n;    // (u, v]
    }
    if (u == v) return (n - (count_up(ss, u) - count_lo(ss, u))) / n;
    // Complement of the open interval (u, v).
    return (n - (count_lo(ss, v) - count_up(ss, u))) / n;
  }

 private:
  static double count_lo(const SortedSample& ss, double t) {
    return static_cast<double>(ss.count_below(t));
  }
  static double count_up(const SortedSample& ss, double t) {
    return static_cast<double>(ss.count_below(std::nextafter(
        t, std::numeric_limits<double>::infinity())));
  }
};

struct EmpCandidate {
  double t;
  bool in_below;
  bool in_above;
};

std::vector<EmpCandidate> threshold_candidate_pool(
    const EmpiricalThresholds& idx, const std::optional<double>& r) {
  std::vector<EmpCandidate> pool;
  pool.reserve(idx.cuts.size());
  for (double t : idx.cuts) {
    EmpCandidate c{t, true, true};
    if (r) {
      c.in_below =
          idx.src.threshold_error(t, Orientation::kOneBelow) <= *r + kFeasSlack;
      c.in_above =
          idx.src.threshold_error(t, Orientation::kOneAbove) <= *r + kFeasSlack;
    }
    if (c.in_below || c.in_above) pool.push_back(c);
  }
  return pool;
}

detail::ScanBest threshold_signed_pair_sup(const EmpiricalThresholds& idx,
                                           const std::vector<EmpCandidate>& pool,
                                           bool swap_direction) {
  std::vector<detail::ScanEntry> entries;
  entries.reserve(pool.size());
  for (const auto& c : pool) {
    const double up = std::nextafter(c.t, std::numeric_limits<double>::infinity());
    double d_lo = idx.frac_lo(idx.tgt, c.t) - idx.frac_lo(idx.src, c.t);
    double d_up = idx.frac_lo(idx.tgt, up) - idx.frac_lo(idx.src, up);
    if (swap_direction) {
      d_lo = -d_lo;
      d_up = -d_up;
    }
    entries.push_back(detail::ScanEntry{c.t, d_lo, d_up, c.in_below, c.in_above});
  }
  return detail::scan_threshold_pairs(entries);
}

struct EmpBest {
  double value = kNegInf;
  std::optional<Hypothesis> h, h_prime;

  void consider(double v, std::optional<Hypothesis> a, const Hypothesis& b) {
    if (v > value) {
      value = v;
      if (a && hypothesis_less(b, *a)) {
        h = b;
        h_prime = *a;
      } else {
        h = std::move(a);
        h_prime = b;
      }
    }
  }
};

EmpBest threshold_boosted_sup(const EmpiricalThresholds& idx,
                              const std::vector<EmpCandidate>& pool,
                              double gamma) {
  EmpBest best;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      for (const Orientation oi :
           {Orientation::kOneBelow, Orientation::kOneAbove}) {
        if (oi == Orientation::kOneBelow ? !pool[i].in_below : !pool[i].in_above)
          continue;
        for (const Orientation oj :
             {Orientation::kOneBelow, Orientation::kOneAbove}) {
          if (oj == Orientation::kOneBelow ? !pool[j].in_below
                                           : !pool[j].in_above)
            continue;
          const Threshold a{pool[i].t, oi};
          const Threshold b{pool[j].t, oj};
          const double et = idx.pair_mass(idx.tgt, a, b);
          const double es = idx.pair_mass(idx.src, a, b);
          best.consider(et - pow_gamma(es, gamma),
                        Hypothesis::threshold(a.t, a.orientation),
                        Hypothesis::threshold(b.t, b.orientation));
        }
      }
    }
  }
  return best;
}

EmpBest threshold_disparity_sup(const EmpiricalThresholds& idx,
                                const std::vector<EmpCandidate>& pool,
                                const Hypothesis& anchor) {
  const Threshold a = std::get<Threshold>(anchor.rule);
  EmpBest best;
  for (const auto& c : pool) {
    for (const Orientation o :
         {Orientation::kOneBelow, Orientation::kOneAbove}) {
      if (o == Orientation::kOneBelow ? !c.in_below : !c.in_above) continue;
      const Threshold hp{c.t, o};
      const double et = idx.pair_mass(idx.tgt, hp, a);
      const double es = idx.pair_mass(idx.src, hp, a);
      best.consider(et - es, std::nullopt, Hypothesis::threshold(c.t, o));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Linear class: per-candidate prediction bitsets over both samples.
// ---------------------------------------------------------------------------

struct BitVec {
  std::vector<std::uint64_t> words;

  static BitVec zeros(std::size_t n) {
    return BitVec{std::vector<std::uint64_t>((n + 63) / 64, 0)};
  }
  void set(std::size_t i) { words[i >> 6] |= (1ULL << (i & 63)); }
};

std::size_t xor_popcount(const BitVec& a, const BitVec& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.words.size(); ++w)
    c += static_cast<std::size_t>(std::popcount(a.words[w] ^ b.words[w]));
  return c;
}

struct EmpiricalLinear {
  std::vector<Hypothesis> candidates;
  std::vector<BitVec> src_bits, tgt_bits;
  BitVec src_labels;
  std::size_t n = 0, m = 0;
  std::vector<bool> feasible;

  double pair_src(std::size_t i, std::size_t j) const {
    return static_cast<double>(xor_popcount(src_bits[i], src_bits[j])) /
           static_cast<double>(n);
  }
  double pair_tgt(std::size_t i, std::size_t j) const {
    return static_cast<double>(xor_popcount(tgt_bits[i], tgt_bits[j])) /
           static_cast<double>(m);
  }
};

EmpiricalLinear build_linear_index(const Dataset& src, const Dataset& tgt,
                                   const std::vector<Hypothesis>& candidates,
                                   const std::optional<double>& r) {
  EmpiricalLinear idx;
  idx.candidates = candidates;
  idx.n = src.size();
  idx.m = tgt.size();
  const std::size_t c2 =
      candidates.size() * candidates.size() * ((idx.n + idx.m) / 64 + 1);
  require(c2 <= std::size_t{6'000'000'000}, ErrorCode::kInvalidArgument,
          "pooled sample too large for exact enumeration of the linear class");
  idx.src_bits.reserve(candidates.size());
  idx.tgt_bits.reserve(candidates.size());
  for (const auto& h : candidates) {
    BitVec sb = BitVec::zeros(idx.n);
    for (std::size_t i = 0; i < idx.n; ++i)
      if (h.predict(src.points[i]) == 1) sb.set(i);
    BitVec tb = BitVec::zeros(idx.m);
    for (std::size_t i = 0; i < idx.m; ++i)
      if (h.predict(tgt.points[i]) == 1) tb.set(i);
    idx.src_bits.push_back(std::move(sb));
    idx.tgt_bits.push_back(std::move(tb));
  }
  if (r) {
    require(src.labeled(), ErrorCode::kInvalidArgument,
            "localized empirical discrepancy needs a labeled source sample");
    idx.src_labels = BitVec::zeros(idx.n);
    for (std::size_t i = 0; i < idx.n; ++i)
      if ((*src.labels)[i]) idx.src_labels.set(i);
    idx.feasible.resize(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double err =
          static_cast<double>(xor_popcount(idx.src_bits[i], idx.src_labels)) /
          static_cast<double>(idx.n);
      idx.feasible[i] = err <= *r + kFeasSlack;
    }
  } else {
    idx.feasible.assign(candidates.size(), true);
  }
  return idx;
}

EmpBest linear_pair_sup(const EmpiricalLinear& idx, bool absolute,
                        std::optional<double> gamma) {
  EmpBest best;
  for (std::size_t i = 0; i < idx.candidates.size(); ++i) {
    if (!idx.feasible[i]) continue;
    for (std::size_t j = i; j < idx.candidates.size(); ++j) {
      if (!idx.feasible[j]) continue;
      const double et = idx.pair_tgt(i, j);
      const double es = idx.pair_src(i, j);
      double v;
      if (gamma) {
        v = et - pow_gamma(es, *gamma);
      } else {
        v = et - es;
        if (absolute) v = std::abs(v);
      }
      best.consider(v, idx.candidates[i], idx.candidates[j]);
    }
  }
  return best;
}

EmpBest linear_disparity_sup(const Dataset& src, const Dataset& tgt,
                             const EmpiricalLinear& idx,
                             const Hypothesis& anchor) {
  EmpBest best;
  // Anchor predictions once.
  BitVec sa = BitVec::zeros(idx.n);
  for (std::size_t i = 0; i < idx.n; ++i)
    if (anchor.predict(src.points[i]) == 1) sa.set(i);
  BitVec ta = BitVec::zeros(idx.m);
  for (std::size_t i = 0; i < idx.m; ++i)
    if (anchor.predict(tgt.points[i]) == 1) ta.set(i);
  for (std::size_t i = 0; i < idx.candidates.size(); ++i) {
    if (!idx.feasible[i]) continue;
    const double et = static_cast<double>(xor_popcount(idx.tgt_bits[i], ta)) /
                      static_cast<double>(idx.m);
    const double es = static_cast<double>(xor_popcount(idx.src_bits[i], sa)) /
                      static_cast<double>(idx.n);
    best.consider(et - es, std::nullopt, idx.candidates[i]);
  }
  return best;
}

}  // namespace

namespace detail {

DiscrepancyReport empirical_compute(const DiscrepancyKind& kind,
                                    const Dataset& source, const Dataset& target,
                                    const HypothesisClassDescriptor& cls,
                                    const SolverOptions& opts, bool grid_mode) {
  kind.validate();
  require(source.dim == target.dim && source.dim == cls.dim(),
          ErrorCode::kDimensionMismatch,
          "empirical discrepancy: dimensions do not agree");
  require(!source.points.empty() && !target.points.empty(),
          ErrorCode::kInvalidArgument, "empirical discrepancy: empty dataset");

  const std::optional<double> r =
      is_localized(kind) ? kind.r : std::optional<double>{};
  if (r)
    require(source.labeled(), ErrorCode::kInvalidArgument,
            "localized empirical discrepancy needs a labeled source sample");

  const std::vector<Hypothesis> candidates =
      grid_mode ? parameter_grid(cls, opts.empirical_grid_step)
                : canonical_candidates(cls, {&source, &target});

  DiscrepancyReport rep;
  rep.kind = kind;
  rep.mode = grid_mode ? ComputeMode::kEmpiricalGrid : ComputeMode::kEmpiricalExact;
  rep.resolution = static_cast<double>(candidates.size());
  rep.source_id = source.domain_id;
  rep.target_id = target.domain_id;

  if (cls.kind == ClassKind::kThreshold1D) {
    const EmpiricalThresholds idx(source, target, candidates);
    const std::vector<EmpCandidate> pool = threshold_candidate_pool(idx, r);
    require(!pool.empty(), ErrorCode::kEmptyLocalizedSpace,
            "empty localized space");
    switch (kind.tag) {
      case DiscrepancyKindTag::kHdhDivergence: {
        const ScanBest fwd = threshold_signed_pair_sup(idx, pool, false);
        const ScanBest rev = threshold_signed_pair_sup(idx, pool, true);
        const ScanBest& win = rev.value > fwd.value ? rev : fwd;
        rep.value = win.value;
        rep.witness_h = win.h;
        rep.witness_h_prime = win.h_prime;
        return rep;
      }
      case DiscrepancyKindTag::kLocalizedHdh: {
        const ScanBest b = threshold_signed_pair_sup(idx, pool, false);
        rep.value = b.value;
        rep.witness_h = b.h;
        rep.witness_h_prime = b.h_prime;
        return rep;
      }
      case DiscrepancyKindTag::kDisparity:
      case DiscrepancyKindTag::kLocalizedDisparity: {
        const EmpBest b = threshold_disparity_sup(idx, pool, *kind.anchor);
        rep.value = b.value;
        rep.witness_h_prime = b.h_prime;
        return rep;
      }
      case DiscrepancyKindTag::kBoostedLocalizedHdh: {
        const EmpBest b = threshold_boosted_sup(idx, pool, *kind.gamma);
        rep.value = b.value;
        rep.witness_h = b.h;
        rep.witness_h_prime = b.h_prime;
        return rep;
      }
    }
  }

  const EmpiricalLinear idx = build_linear_index(source, target, candidates, r);
  require(std::any_of(idx.feasible.begin(), idx.feasible.end(),
                      [](bool f) { return f; }),
          ErrorCode::kEmptyLocalizedSpace, "empty localized space");
  switch (kind.tag) {
    case DiscrepancyKindTag::kHdhDivergence: {
      const EmpBest b = linear_pair_sup(idx, /*absolute=*/true, std::nullopt);
      rep.value = b.value;
      rep.witness_h = b.h;
      rep.witness_h_prime = b.h_prime;
      return rep;
    }
    case DiscrepancyKindTag::kLocalizedHdh: {
      const EmpBest b = linear_pair_sup(idx, false, std::nullopt);
      rep.value = b.value;
      rep.witness_h = b.h;
      rep.witness_h_prime = b.h_prime;
      return rep;
    }
    case DiscrepancyKindTag::kDisparity:
    case DiscrepancyKindTag::kLocalizedDisparity: {
      const EmpBest b = linear_disparity_sup(source, target, idx, *kind.anchor);
      rep.value = b.value;
      rep.witness_h_prime = b.h_prime;
      return rep;
    }
    case DiscrepancyKindTag::kBoostedLocalizedHdh: {
      const EmpBest b = linear_pair_sup(idx, false, kind.gamma);
      rep.value = b.value;
      rep.witness_h = b.h;
      rep.witness_h_prime = b.h_prime;
      return rep;
    }
  }
  throw Error(ErrorCode::kInternal, "unreachable empirical kind");
}

}  // namespace detail

}  // namespace locdisc

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

#include "core/json_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/error.hpp"

namespace locdisc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Extended reals: JSON numbers cannot carry infinities, so thresholds at the
// ends of the line serialize as strings.
Json extended_real(double x) {
  if (x == kInf) return Json("+inf");
  if (x == -kInf) return Json("-inf");
  return Json(x);
}

double extended_real_from(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw Error(ErrorCode::kParse, "bad extended real: " + s);
  }
  return j.get<double>();
}

template <typename F>
auto guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  return guard([&] { return Json::parse(text); });
}

Json to_json(const Hypothesis& h) {
  Json j;
  if (const auto* th = std::get_if<Threshold>(&h.rule)) {
    j["kind"] = "threshold";
    j["t"] = extended_real(th->t);
    j["orientation"] = orientation_name(th->orientation);
  } else {
    const auto& lin = std::get<Linear2D>(h.rule);
    j["kind"] = "linear2d";
    j["theta"] = lin.theta;
    j["b"] = lin.b;
  }
  return j;
}

Hypothesis hypothesis_from_json(const Json& j) {
  return guard([&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "threshold") {
      const std::string o = j.at("orientation").get<std::string>();
      require(o == "1-below" || o == "1-above", ErrorCode::kParse,
              "orientation must be 1-below or 1-above");
      return Hypothesis::threshold(extended_real_from(j.at("t")),
                                   o == "1-below" ? Orientation::kOneBelow
                                                  : Orientation::kOneAbove);
    }
    if (kind == "linear2d")
      return Hypothesis::linear2d(j.at("theta").get<double>(),
                                  j.at("b").get<double>());
    throw Error(ErrorCode::kParse, "unknown hypothesis kind: " + kind);
  });
}

Json to_json(const Marginal& m) {
  Json j;
  if (const auto* m1 = std::get_if<Marginal1D>(&m.value)) {
    j["dimension"] = 1;
    Json comps = Json::array();
    for (const auto& c : m1->components) {
      Json jc;
      jc["weight"] = c.weight;
      if (const auto* u = std::get_if<UniformInterval>(&c.shape)) {
        jc["kind"] = "uniform_interval";
        jc["lo"] = u->lo;
        jc["hi"] = u->hi;
      } else {
        const auto& g = std::get<Gaussian>(c.shape);
        jc["kind"] = "gaussian";
        jc["mean"] = g.mean;
        jc["stddev"] = g.stddev;
      }
      comps.push_back(jc);
    }
    j["components"] = comps;
  } else {
    const auto& m2 = std::get<Marginal2D>(m.value);
    j["dimension"] = 2;
    if (const auto* r = std::get_if<UniformRect>(&m2.shape)) {
      j["kind"] = "uniform_rect";
      j["x_range"] = Json::array({r->x_lo, r->x_hi});
      j["y_range"] = Json::array({r->y_lo, r->y_hi});
    } else {
      const auto& s = std::get<UniformSegment>(m2.shape);
      j["kind"] = "uniform_segment";
      j["endpoint_a"] = Json::array({s.a[0], s.a[1]});
      j["endpoint_b"] = Json::array({s.b[0], s.b[1]});
    }
  }
  return j;
}

Marginal marginal_from_json(const Json& j) {
  return guard([&] {
    const int dim = j.at("dimension").get<int>();
    Marginal m;
    if (dim == 1) {
      Marginal1D m1;
      for (const auto& jc : j.at("components")) {
        MixtureComponent c;
        c.weight = jc.at("weight").get<double>();
        const std::string kind = jc.at("kind").get<std::string>();
        if (kind == "uniform_interval") {
          c.shape = UniformInterval{jc.at("lo").get<double>(),
                                    jc.at("hi").get<double>()};
        } else if (kind == "gaussian") {
          c.shape = Gaussian{jc.at("mean").get<double>(),
                             jc.at("stddev").get<double>()};
        } else {
          throw Error(ErrorCode::kParse, "unknown component kind: " + kind);
        }
        m1.components.push_back(c);
      }
      m.value = m1;
    } else if (dim == 2) {
      Marginal2D m2;
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "uniform_rect") {
        const auto& x = j.at("x_range");
        const auto& y = j.at("y_range");
        m2.shape = UniformRect{x.at(0).get<double>(), x.at(1).get<double>(),
                               y.at(0).get<double>(), y.at(1).get<double>()};
      } else if (kind == "uniform_segment") {
        const auto& a = j.at("endpoint_a");
        const auto& b = j.at("endpoint_b");
        m2.shape = UniformSegment{
            Point{a.at(0).get<double>(), a.at(1).get<double>()},
            Point{b.at(0).get<double>(), b.at(1).get<double>()}};
      } else {
        throw Error(ErrorCode::kParse, "unknown marginal kind: " + kind);
      }
      m.value = m2;
    } else {
      throw Error(ErrorCode::kParse, "dimension must be 1 or 2");
    }
    m.validate();
    return m;
  });
}

Json to_json(const Domain& d) {
  Json j;
  j["marginal"] = to_json(d.marginal);
  j["labeling"] = to_json(d.labeling);
  if (!d.id.empty()) j["id"] = d.id;
  return j;
}

Domain domain_from_json(const Json& j) {
  return guard([&] {
    Domain d;
    d.marginal = marginal_from_json(j.at("marginal"));
    d.labeling = hypothesis_from_json(j.at("labeling"));
    if (j.contains("id")) d.id = j.at("id").get<std::string>();
    d.validate();
    return d;
  });
}

Json to_json(const Dataset& d) {
  Json j;
  j["dimension"] = d.dim;
  Json pts = Json::array();
  for (const auto& p : d.points) {
    if (d.dim == 1)
      pts.push_back(p[0]);
    else
      pts.push_back(Json::array({p[0], p[1]}));
  }
  j["points"] = pts;
  if (d.labels) {
    Json ys = Json::array();
    for (auto y : *d.labels) ys.push_back(static_cast<int>(y));
    j["labels"] = ys;
  }
  j["seed"] = d.seed;
  j["source_domain_id"] = d.domain_id;
  return j;
}

Dataset dataset_from_json(const Json& j) {
  return guard([&] {
    Dataset d;
    d.dim = j.at("dimension").get<int>();
    require(d.dim == 1 || d.dim == 2, ErrorCode::kParse,
            "dataset dimension must be 1 or 2");
    for (const auto& p : j.at("points")) {
      if (d.dim == 1)
        d.points.push_back(Point{p.get<double>(), 0.0});
      else
        d.points.push_back(Point{p.at(0).get<double>(), p.at(1).get<double>()});
    }
    if (j.contains("labels")) {
      std::vector<std::uint8_t> ys;
      for (const auto& y : j.at("labels"))
        ys.push_back(static_cast<std::uint8_t>(y.get<int>()));
      d.labels = std::move(ys);
    }
    if (j.contains("seed")) d.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("source_domain_id"))
      d.domain_id = j.at("source_domain_id").get<std::string>();
    d.validate();
    return d;
  });
}

Json to_json(const HypothesisClassDescriptor& c) {
  Json j;
  j["kind"] = c.kind == ClassKind::kThreshold1D ? "threshold-1d" : "linear-2d";
  j["vc_dimension"] = c.vc_dimension;
  Json box;
  if (c.kind == ClassKind::kThreshold1D) {
    box["t"] = Json::array({c.t_lo, c.t_hi});
  } else {
    box["theta"] = Json::array({c.theta_lo, c.theta_hi});
    box["b"] = Json::array({c.b_lo, c.b_hi});
  }
  j["parameter_box"] = box;
  return j;
}

HypothesisClassDescriptor class_from_json(const Json& j) {
  return guard([&] {
    const std::string kind = j.at("kind").get<std::string>();
    const Json& box = j.at("parameter_box");
    if (kind == "threshold-1d") {
      const auto& t = box.at("t");
      return HypothesisClassDescriptor::threshold1d(t.at(0).get<double>(),
                                                    t.at(1).get<double>());
    }
    if (kind == "linear-2d") {
      const auto& b = box.at("b");
      HypothesisClassDescriptor d = HypothesisClassDescriptor::linear2d(
          b.at(0).get<double>(), b.at(1).get<double>());
      if (box.contains("theta")) {
        d.theta_lo = box.at("theta").at(0).get<double>();
        d.theta_hi = box.at("theta").at(1).get<double>();
      }
      return d;
    }
    throw Error(ErrorCode::kParse, "unknown class kind: " + kind);
  });
}

namespace {
std::string convention_name(EpsilonConvention c) {
  return c == EpsilonConvention::kLog16OverDelta ? "ln(16/delta)"
                                                 : "-(ln delta)/16";
}
}  // namespace

Json to_json(const LocalizationConstants& c) {
  Json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["delta"] = c.delta;
  j["r"] = c.r;
  if (c.gamma) j["gamma"] = *c.gamma;
  j["epsilon_convention"] = convention_name(c.convention);
  j["epsilon"] = c.epsilon;
  j["c_plus"] = c.cplus;
  if (c.cminus) j["c_minus"] = *c.cminus;
  return j;
}

LocalizationConstants localization_from_json(const Json& j) {
  return guard([&] {
    std::optional<double> gamma;
    if (j.contains("gamma")) gamma = j.at("gamma").get<double>();
    EpsilonConvention conv = EpsilonConvention::kLog16OverDelta;
    if (j.contains("epsilon_convention") &&
        j.at("epsilon_convention").get<std::string>() == "-(ln delta)/16")
      conv = EpsilonConvention::kLogDeltaDiv16;
    return LocalizationConstants::make(
        j.at("n").get<std::int64_t>(), j.at("d").get<int>(),
        j.at("delta").get<double>(), j.at("r").get<double>(), gamma, conv);
  });
}

namespace {
std::string kind_name(DiscrepancyKindTag tag) {
  switch (tag) {
    case DiscrepancyKindTag::kHdhDivergence:
      return "hdh-divergence";
    case DiscrepancyKindTag::kDisparity:
      return "disparity";
    case DiscrepancyKindTag::kLocalizedHdh:
      return "localized-hdh";
    case DiscrepancyKindTag::kLocalizedDisparity:
      return "localized-disparity";
    case DiscrepancyKindTag::kBoostedLocalizedHdh:
      return "boosted-localized-hdh";
  }
  return "?";
}

std::string mode_name(ComputeMode m) {
  switch (m) {
    case ComputeMode::kPopulationGrid:
      return "population-grid";
    case ComputeMode::kEmpiricalExact:
      return "empirical-exact";
    case ComputeMode::kEmpiricalGrid:
      return "empirical-grid";
    case ComputeMode::kMonteCarlo:
      return "monte-carlo";
  }
  return "?";
}
}  // namespace

Json to_json(const DiscrepancyKind& k) {
  Json j;
  j["kind"] = kind_name(k.tag);
  if (k.r) j["r"] = *k.r;
  if (k.gamma) j["gamma"] = *k.gamma;
  if (k.anchor) j["anchor"] = to_json(*k.anchor);
  return j;
}

DiscrepancyKind discrepancy_kind_from_json(const Json& j) {
  return guard([&] {
    DiscrepancyKind k;
    const std::string name = j.at("kind").get<std::string>();
    if (name == "hdh-divergence")
      k.tag = DiscrepancyKindTag::kHdhDivergence;
    else if (name == "disparity")
      k.tag = DiscrepancyKindTag::kDisparity;
    else if (name == "localized-hdh")
      k.tag = DiscrepancyKindTag::kLocalizedHdh;
    else if (name == "localized-disparity")
      k.tag = DiscrepancyKindTag::kLocalizedDisparity;
    else if (name == "boosted-localized-hdh")
      k.tag = DiscrepancyKindTag::kBoostedLocalizedHdh;
    else
      throw Error(ErrorCode::kParse, "unknown discrepancy kind: " + name);
    if (j.contains("r")) k.r = j.at("r").get<double>();
    if (j.contains("gamma")) k.gamma = j.at("gamma").get<double>();
    if (j.contains("anchor")) k.anchor = hypothesis_from_json(j.at("anchor"));
    k.validate();
    return k;
  });
}

Json to_json(const DiscrepancyReport& r) {
  Json j;
  j["kind"] = kind_name(r.kind.tag);
  if (r.kind.r) j["r"] = *r.kind.r;
  if (r.kind.gamma) j["gamma"] = *r.kind.gamma;
  if (r.kind.anchor) j["anchor"] = to_json(*r.kind.anchor);
  j["value"] = r.value;
  Json w;
  if (r.witness_h) w["h"] = to_json(*r.witness_h);
  if (r.witness_h_prime) w["h_prime"] = to_json(*r.witness_h_prime);
  j["witness"] = w;
  j["mode"] = mode_name(r.mode);
  j["resolution"] = r.resolution;
  j["source"] = r.source_id;
  j["target"] = r.target_id;
  return j;
}

namespace {
std::string objective_name(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::kLocalizedHdh:
      return "localized-hdh";
    case ObjectiveKind::kLocalizedDisparity:
      return "localized-disparity";
    case ObjectiveKind::kBoosted:
      return "boosted";
  }
  return "?";
}
}  // namespace

Json to_json(const ObjectiveSolution& s) {
  Json j;
  j["objective"] = objective_name(s.kind);
  j["chosen"] = to_json(s.chosen);
  j["value"] = s.value;
  j["source_term"] = s.source_term;
  j["discrepancy_term"] = s.discrepancy_term;
  j["feasible"] = s.feasible;
  Json w;
  if (s.inner_h) w["h"] = to_json(*s.inner_h);
  if (s.inner_h_prime) w["h_prime"] = to_json(*s.inner_h_prime);
  j["inner_witness"] = w;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["lhs"] = r.lhs;
  Json terms;
  for (const auto& t : r.terms) terms[t.name] = t.value;
  j["terms"] = terms;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["tolerance"] = r.tolerance;
  j["diagnostic"] = r.diagnostic;
  return j;
}

namespace {
// Shortest decimal that round-trips the double.
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}
}  // namespace

std::string bound_report_csv_header(const BoundReport& r) {
  std::ostringstream os;
  os << "theorem,lhs";
  for (const auto& t : r.terms) os << ',' << t.name;
  os << ",rhs,holds";
  return os.str();
}

std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << r.theorem << ',' << format_double(r.lhs);
  for (const auto& t : r.terms) os << ',' << format_double(t.value);
  os << ',' << format_double(r.rhs) << ',' << (r.holds ? 1 : 0);
  return os.str();
}

}  // namespace locdisc

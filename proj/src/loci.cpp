// Copyright 2026 The Poncelet Loci Authors
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


#include "poncelet/loci.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace {

constexpr std::array<std::string_view, 14> kLocusNames = {
    "off", "xn", "v1", "v2", "v3", "env", "e12", "e23", "e31", "e1x", "e2x", "e3x",
    "omega1", "omega2"};

// Runs body(j) for j in [0, n). The first exception thrown by any iteration
// is rethrown after the loop.
template <class Body>
void for_samples(int n, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (int j = 0; j < n; ++j) body(j);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    try {
      body(j);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double param(int j, int n) { return kTwoPi * j / n; }

std::optional<Line> line_between(Point2 p, Point2 q, double scale) {
  if (!is_finite(p) || !is_finite(q) || !(dist(p, q) > 1e-14 * scale)) return std::nullopt;
  return Line::through(p, q);
}

std::optional<Line> generating_line(const Triangle& w, const Channel& ch, double scale,
                                    const CenterRegistry& reg) {
  switch (ch.locus_type) {
    case LocusType::E12: return line_between(w[0], w[1], scale);
    case LocusType::E23: return line_between(w[1], w[2], scale);
    case LocusType::E31: return line_between(w[2], w[0], scale);
    case LocusType::E1X: return line_between(w[0], center(w, ch.center, reg), scale);
    case LocusType::E2X: return line_between(w[1], center(w, ch.center, reg), scale);
    case LocusType::E3X: return line_between(w[2], center(w, ch.center, reg), scale);
    case LocusType::Env:
      return line_between(center(w, ch.partner, reg), center(w, ch.center, reg), scale);
    default: return std::nullopt;
  }
}

std::optional<Point2> point_target(const Triangle& w, const Channel& ch,
                                   const CenterRegistry& reg) {
  switch (ch.locus_type) {
    case LocusType::Xn: return center(w, ch.center, reg);
    case LocusType::V1: return w[0];
    case LocusType::V2: return w[1];
    case LocusType::V3: return w[2];
    case LocusType::Omega1: return brocard_points(w).first;
    case LocusType::Omega2: return brocard_points(w).second;
    default: return std::nullopt;
  }
}

// Channel triangle, or nothing when the construction degenerates.
std::optional<Triangle> try_channel_triangle(const FamilySpec& spec, const Channel& ch, double t,
                                             const CenterRegistry& reg) {
  try {
    Triangle w = channel_triangle(spec, ch, t, reg);
    if (w.is_degenerate()) return std::nullopt;
    return w;
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

LineFamily channel_lines(const FamilySpec& spec, const Channel& ch, const CenterRegistry& reg) {
  return [&spec, ch, &reg](double t) -> std::optional<Line> {
    const auto w = try_channel_triangle(spec, ch, t, reg);
    if (!w) return std::nullopt;
    try {
      return generating_line(*w, ch, spec.scale(), reg);
    } catch (const GeometryError&) {
      return std::nullopt;
    }
  };
}

}  // namespace

std::string_view locus_type_name(LocusType t) { return kLocusNames[static_cast<int>(t)]; }

std::optional<LocusType> parse_locus_type(std::string_view name) {
  for (LocusType t : kAllLocusTypes) {
    if (locus_type_name(t) == name) return t;
  }
  return std::nullopt;
}

bool is_envelope(LocusType t) {
  switch (t) {
    case LocusType::Env:
    case LocusType::E12:
    case LocusType::E23:
    case LocusType::E31:
    case LocusType::E1X:
    case LocusType::E2X:
    case LocusType::E3X:
      return true;
    default:
      return false;
  }
}

bool needs_center(LocusType t) {
  return t == LocusType::Xn || t == LocusType::Env || t == LocusType::E1X ||
         t == LocusType::E2X || t == LocusType::E3X;
}

std::string to_hex(Rgb c) { return fmt::format("#{:02x}{:02x}{:02x}", c.r, c.g, c.b); }

std::optional<Rgb> parse_hex(std::string_view text) {
  if (text.size() != 7 || text[0] != '#') return std::nullopt;
  std::array<std::uint8_t, 3> out{};
  for (int i = 0; i < 3; ++i) {
    int v = 0;
    for (int k = 0; k < 2; ++k) {
      const char c = text[1 + 2 * i + k];
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else return std::nullopt;
      v = 16 * v + d;
    }
    out[i] = static_cast<std::uint8_t>(v);
  }
  return Rgb{out[0], out[1], out[2]};
}

std::string Channel::label() const {
  switch (locus_type) {
    case LocusType::Off: return "";
    case LocusType::Xn: return fmt::format("X{}", center);
    case LocusType::V1: return "V1";
    case LocusType::V2: return "V2";
    case LocusType::V3: return "V3";
    case LocusType::Env: return fmt::format("Env{}-{}", center, partner);
    case LocusType::E12: return "E12";
    case LocusType::E23: return "E23";
    case LocusType::E31: return "E31";
    case LocusType::E1X: return fmt::format("E1X{}", center);
    case LocusType::E2X: return fmt::format("E2X{}", center);
    case LocusType::E3X: return fmt::format("E3X{}", center);
    case LocusType::Omega1: return "Ω1";
    case LocusType::Omega2: return "Ω2";
  }
  return "";
}

void validate_channel(const Channel& ch, const CenterRegistry& reg) {
  if (needs_center(ch.locus_type) && !reg.contains(ch.center)) {
    throw ValidationError("center", fmt::format("X{} is not a registered center", ch.center));
  }
  if (ch.locus_type == LocusType::Env && !reg.contains(ch.partner)) {
    throw ValidationError("partner", fmt::format("X{} is not a registered center", ch.partner));
  }
  if (ch.cevian != CevianKind::Off && !reg.contains(ch.cevian_center)) {
    throw ValidationError("cevian.center",
                          fmt::format("X{} is not a registered center", ch.cevian_center));
  }
}

Triangle channel_triangle(const FamilySpec& spec, const Channel& ch, double t,
                          const CenterRegistry& reg) {
  Triangle w = triangle_at(spec, t);
  if (ch.triangle_type != DerivedKind::Reference) w = derived_triangle(w, ch.triangle_type);
  if (ch.cevian != CevianKind::Off) w = cevian_like(w, ch.cevian, ch.cevian_center, reg);
  return w;
}

TriangleMetrics measure(const Triangle& t) {
  TriangleMetrics m;
  m.s = t.sides();
  m.theta = t.angles();
  m.L = m.s[0] + m.s[1] + m.s[2];
  m.A = t.area();
  m.r = 2.0 * m.A / m.L;
  m.R = m.s[0] * m.s[1] * m.s[2] / (4.0 * m.A);
  m.cot_omega = (m.s[0] * m.s[0] + m.s[1] * m.s[1] + m.s[2] * m.s[2]) / (4.0 * m.A);
  return m;
}

MetricSnapshot snapshot(const FamilySpec& spec, const Triangle& t,
                        const std::optional<Triangle>& derived) {
  t.require_nondegenerate();
  MetricSnapshot snap;
  snap.m = measure(t);

  const Ellipse& outer = spec.outer;
  bool on_outer = true;
  for (const Point2& v : t.v) {
    if (std::abs(norm(outer.to_unit(v)) - 1.0) > 1e-9) on_outer = false;
  }
  if (on_outer) {
    std::array<double, 3> k{};
    for (int i = 0; i < 3; ++i) k[i] = ellipse_curvature(outer, outer.parameter_of(t[i]));
    snap.kappa = k;
  }

  if (spec.kind != FamilyKind::Mounted) {
    const Ellipse& inner = spec.inner;
    std::array<double, 3> k{};
    bool tangent = true;
    for (int i = 0; i < 3 && tangent; ++i) {
      const Point2 u1 = inner.to_unit(t[i]);
      const Point2 d = normalized(inner.to_unit(t[(i + 1) % 3]) - u1);
      const Point2 foot = u1 - dot(u1, d) * d;
      if (std::abs(norm(foot) - 1.0) > 1e-6) tangent = false;
      k[i] = ellipse_curvature(inner, std::atan2(foot.y, foot.x));
    }
    if (tangent) snap.kappa_caustic = k;
  }

  if (spec.kind == FamilyKind::Confocal) {
    const Point2 v = normalized(t[1] - t[0]);
    const Point2 p = t[0] - outer.center();
    snap.J = dot(v, Point2{p.x / (outer.a() * outer.a()), p.y / (outer.b() * outer.b())});
  }

  if (derived) {
    derived->require_nondegenerate();
    snap.primed = measure(*derived);
  }
  return snap;
}

Locus sample_locus(const FamilySpec& spec, const Channel& ch, int n, const SampleOptions& opts,
                   const CenterRegistry& reg) {
  if (n < 8) throw ValidationError("samples", "samples must be >= 8");
  if (ch.locus_type == LocusType::Off) throw ValidationError("locus_type", "channel is off");
  validate_channel(ch, reg);

  Locus out;
  out.channel = ch;
  out.samples = n;

  if (is_envelope(ch.locus_type)) {
    const double delta = opts.envelope_delta.value_or(kTwoPi / n);
    EnvelopeResult env = envelope_of(channel_lines(spec, ch, reg), n, delta, opts.exec);
    out.points = std::move(env.points);
    out.skipped = std::move(env.skipped);
    if (out.points.empty()) {
      throw GeometryError(Errc::all_samples_parallel, "no envelope point could be formed");
    }
  } else {
    std::vector<std::optional<Point2>> pts(n);
    for_samples(n, opts.exec, [&](int j) {
      const auto w = try_channel_triangle(spec, ch, param(j, n), reg);
      if (!w) return;
      try {
        const auto p = point_target(*w, ch, reg);
        if (p && is_finite(*p)) pts[j] = *p;
      } catch (const GeometryError&) {
      }
    });
    for (int j = 0; j < n; ++j) {
      if (pts[j]) out.points.push_back(*pts[j]);
      else out.skipped.push_back(j);
    }
    if (out.points.empty()) {
      throw GeometryError(Errc::all_samples_degenerate, "every sample was degenerate");
    }
  }

  ClassifyOptions co;
  co.length_scale = spec.scale();
  out.cls = classify_curve(out.points, co);
  return out;
}

EnvelopeResult envelope_of(const LineFamily& lines, int n, double delta, Exec exec) {
  if (n < 32) throw ValidationError("samples", "envelopes need at least 32 samples");
  std::vector<std::optional<Point2>> pts(n);
  for_samples(n, exec, [&](int j) {
    const double t = param(j, n);
    const auto l1 = lines(t);
    if (!l1) return;
    const auto l2 = lines(t + delta);
    if (!l2) return;
    const auto p = intersect(*l1, *l2);
    if (p && is_finite(*p)) pts[j] = *p;
  });
  EnvelopeResult out;
  for (int j = 0; j < n; ++j) {
    if (pts[j]) out.points.push_back(*pts[j]);
    else out.skipped.push_back(j);
  }
  return out;
}

std::vector<Point2> envelope(const FamilySpec& spec, const Channel& ch, int n,
                             const SampleOptions& opts, const CenterRegistry& reg) {
  if (!is_envelope(ch.locus_type)) {
    throw ValidationError("locus_type", "not a line-generating locus type");
  }
  validate_channel(ch, reg);
  const double delta = opts.envelope_delta.value_or(kTwoPi / n);
  EnvelopeResult env = envelope_of(channel_lines(spec, ch, reg), n, delta, opts.exec);
  if (env.points.empty()) {
    throw GeometryError(Errc::all_samples_parallel, "no envelope point could be formed");
  }
  return std::move(env.points);
}

// --- invariants ---

const InvariantEntry* InvariantReport::find(std::string_view name) const {
  for (const InvariantEntry& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

bool InvariantReport::holds(std::string_view name) const {
  const InvariantEntry* e = find(name);
  return e && e->invariant;
}

std::vector<std::string> InvariantReport::invariant_names() const {
  std::vector<std::string> out;
  for (const InvariantEntry& e : entries) {
    if (e.invariant) out.push_back(e.name);
  }
  return out;
}

std::string InvariantReport::line() const {
  std::string out;
  for (const InvariantEntry& e : entries) {
    if (!e.invariant) continue;
    if (!out.empty()) out += ", ";
    out += fmt::format("{}={:.6g}", e.name, e.mean);
  }
  return out;
}

double relative_spread(const std::vector<double>& values, double* mean_out) {
  if (values.empty()) return std::numeric_limits<double>::infinity();
  double lo = values[0], hi = values[0], sum = 0.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  const double mean = sum / static_cast<double>(values.size());
  if (mean_out) *mean_out = mean;
  return (hi - lo) / std::max(std::abs(mean), kSpreadFloor);
}

namespace {

// NaN marks a sample excluded from one quantity.
constexpr double kExcluded = std::numeric_limits<double>::quiet_NaN();

bool near_right(const TriangleMetrics& m) {
  for (double th : m.theta) {
    if (std::abs(th - 0.5 * kPi) < kRightAngleExclusion) return true;
  }
  return false;
}

struct Quantity {
  std::string name;
  std::function<double(const TriangleMetrics&)> f;
};

const std::vector<Quantity>& triangle_quantities() {
  static const std::vector<Quantity> q = [] {
    using M = TriangleMetrics;
    auto sum = [](const std::array<double, 3>& x, auto g) { return g(x[0]) + g(x[1]) + g(x[2]); };
    auto prod = [](const std::array<double, 3>& x, auto g) { return g(x[0]) * g(x[1]) * g(x[2]); };
    auto sq = [](double v) { return v * v; };
    auto inv = [](double v) { return 1.0 / v; };
    auto inv2 = [](double v) { return 1.0 / (v * v); };
    auto id = [](double v) { return v; };
    auto sin_ = [](double v) { return std::sin(v); };
    auto cos_ = [](double v) { return std::cos(v); };
    auto cot_ = [](double v) { return std::cos(v) / std::sin(v); };
    std::vector<Quantity> v;
    v.push_back({"L", [](const M& m) { return m.L; }});
    v.push_back({"A", [](const M& m) { return m.A; }});
    v.push_back({"Σs²", [=](const M& m) { return sum(m.s, sq); }});
    v.push_back({"Σ1/s", [=](const M& m) { return sum(m.s, inv); }});
    v.push_back({"Σs⁻²", [=](const M& m) { return sum(m.s, inv2); }});
    v.push_back({"Πs", [=](const M& m) { return prod(m.s, id); }});
    v.push_back({"r", [](const M& m) { return m.r; }});
    v.push_back({"R", [](const M& m) { return m.R; }});
    v.push_back({"r/R", [](const M& m) { return m.r / m.R; }});
    v.push_back({"cotω", [](const M& m) { return m.cot_omega; }});
    v.push_back({"Σsin", [=](const M& m) { return sum(m.theta, sin_); }});
    v.push_back({"Σcos", [=](const M& m) { return sum(m.theta, cos_); }});
    v.push_back({"Σtan", [=](const M& m) {
                   if (near_right(m)) return kExcluded;
                   return sum(m.theta, [](double t) { return std::tan(t); });
                 }});
    v.push_back({"Σcot", [=](const M& m) { return sum(m.theta, cot_); }});
    v.push_back({"Πsin", [=](const M& m) { return prod(m.theta, sin_); }});
    v.push_back({"Πcos", [=](const M& m) { return prod(m.theta, cos_); }});
    v.push_back({"Πcot", [=](const M& m) {
                   if (near_right(m)) return kExcluded;
                   return prod(m.theta, cot_);
                 }});
    v.push_back({"Σs²/A", [=](const M& m) { return sum(m.s, sq) / m.A; }});
    v.push_back({"Σs²/Πs", [=](const M& m) { return sum(m.s, sq) / prod(m.s, id); }});
    return v;
  }();
  return q;
}

double kappa_sum(const std::optional<std::array<double, 3>>& k, double p) {
  if (!k) return kExcluded;
  return std::pow((*k)[0], p) + std::pow((*k)[1], p) + std::pow((*k)[2], p);
}

std::vector<std::string> quantity_names(bool with_primed) {
  std::vector<std::string> names;
  for (const Quantity& q : triangle_quantities()) names.push_back(q.name);
  names.insert(names.end(), {"Σκ^(2/3)", "Σκ^(-2/3)", "Σκ^(-4/3)", "Σκc^(2/3)", "J"});
  if (with_primed) {
    for (const Quantity& q : triangle_quantities()) names.push_back(q.name + "′");
    names.insert(names.end(), {"L′/L", "A′/A", "A′·A"});
  }
  return names;
}

std::vector<double> quantity_values(const MetricSnapshot& s) {
  std::vector<double> v;
  for (const Quantity& q : triangle_quantities()) v.push_back(q.f(s.m));
  v.push_back(kappa_sum(s.kappa, 2.0 / 3.0));
  v.push_back(kappa_sum(s.kappa, -2.0 / 3.0));
  v.push_back(kappa_sum(s.kappa, -4.0 / 3.0));
  v.push_back(kappa_sum(s.kappa_caustic, 2.0 / 3.0));
  v.push_back(s.J.value_or(kExcluded));
  if (s.primed) {
    for (const Quantity& q : triangle_quantities()) v.push_back(q.f(*s.primed));
    v.push_back(s.primed->L / s.m.L);
    v.push_back(s.primed->A / s.m.A);
    v.push_back(s.primed->A * s.m.A);
  }
  return v;
}

}  // namespace

InvariantReport detect_invariants(const FamilySpec& spec, const Channel& ch, int n, double tol,
                                  Exec exec, const CenterRegistry& reg) {
  if (n < 64) throw ValidationError("samples", "invariant detection needs at least 64 samples");
  if (ch.cevian != CevianKind::Off) validate_channel(ch, reg);

  const bool excentral = spec.kind == FamilyKind::ExcentralOfConfocal;
  const FamilySpec& base_spec = excentral ? *spec.derived_from : spec;
  const bool with_primed =
      excentral || ch.triangle_type != DerivedKind::Reference || ch.cevian != CevianKind::Off;

  std::vector<std::optional<std::vector<double>>> rows(n);
  for_samples(n, exec, [&](int j) {
    const double t = param(j, n);
    try {
      const Triangle base = excentral ? *parent_triangle_at(spec, t) : triangle_at(spec, t);
      std::optional<Triangle> primed;
      if (with_primed) primed = channel_triangle(spec, ch, t, reg);
      if (base.is_degenerate() || (primed && primed->is_degenerate())) return;
      rows[j] = quantity_values(snapshot(base_spec, base, primed));
    } catch (const GeometryError&) {
    }
  });

  const std::vector<std::string> names = quantity_names(with_primed);
  InvariantReport report;
  report.tolerance = tol;
  for (const auto& row : rows) {
    if (row) ++report.retained;
    else ++report.skipped;
  }
  if (report.retained == 0) {
    throw GeometryError(Errc::all_samples_degenerate, "every sample was degenerate");
  }
  for (std::size_t q = 0; q < names.size(); ++q) {
    std::vector<double> vals;
    bool excluded_some = false;
    for (const auto& row : rows) {
      if (!row) continue;
      const double v = (*row)[q];
      if (std::isnan(v)) excluded_some = true;
      else vals.push_back(v);
    }
    if (vals.empty()) continue;
    InvariantEntry e;
    e.name = names[q];
    e.count = static_cast<int>(vals.size());
    e.spread = relative_spread(vals, &e.mean);
    e.invariant = !excluded_some && e.count >= 2 && e.spread <= tol;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace poncelet

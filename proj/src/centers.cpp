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

#include "poncelet/centers.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "poncelet/errors.hpp"

namespace poncelet {

namespace detail {
extern const std::string_view kBuiltinCenterTable;
}  // namespace detail

namespace {

WeightVars vars_of(const Triangle& t) {
  WeightVars v;
  v.s = t.sides();
  v.t = t.angles();
  v.area = t.area();
  const double ss = v.s[0] * v.s[0] + v.s[1] * v.s[1] + v.s[2] * v.s[2];
  v.omega = std::atan2(4.0 * v.area, ss);
  v.circumradius = v.s[0] * v.s[1] * v.s[2] / (4.0 * v.area);
  v.inradius = 2.0 * v.area / (v.s[0] + v.s[1] + v.s[2]);
  return v;
}

WeightVars rotate(const WeightVars& v, std::size_t j) {
  WeightVars r = v;
  for (std::size_t i = 0; i < 3; ++i) {
    r.s[i] = v.s[(i + j) % 3];
    r.t[i] = v.t[(i + j) % 3];
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Point2 foot(Point2 p, Point2 a, Point2 b) { return Line::through(a, b).project(p); }

void require_non_right(const Triangle& t) {
  for (double th : t.angles()) {
    if (std::abs(std::cos(th)) < 1e-10) {
      throw GeometryError(Errc::right_angle, "construction undefined for a right triangle");
    }
  }
}

}  // namespace

CenterRegistry CenterRegistry::parse(std::string_view text) {
  CenterRegistry reg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string note;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      note = std::string(trim(line.substr(hash + 1)));
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'k<TAB>expression'",
                       line_no, 1);
    }
    const std::string_view key = trim(line.substr(0, tab));
    int k = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (ec != std::errc() || ptr != key.data() + key.size() || k <= 0) {
      throw ParseError("line " + std::to_string(line_no) + ": center index must be a positive integer",
                       line_no, 1);
    }
    if (reg.entries_.count(k)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate center X" +
                           std::to_string(k),
                       line_no, 1);
    }
    try {
      reg.entries_.emplace(k, CenterEntry{k, WeightExpr::parse(trim(line.substr(tab + 1))), note});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no,
                       e.column());
    }
  }
  return reg;
}

CenterRegistry CenterRegistry::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open center table " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const CenterRegistry& CenterRegistry::builtin() {
  static const CenterRegistry reg = parse(detail::kBuiltinCenterTable);
  return reg;
}

void CenterRegistry::extend(const CenterRegistry& other) {
  for (const auto& [k, e] : other.entries_) entries_.insert_or_assign(k, e);
}

std::vector<int> CenterRegistry::ids() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [k, e] : entries_) out.push_back(k);
  return out;
}

const CenterEntry& CenterRegistry::entry(int k) const {
  const auto it = entries_.find(k);
  if (it == entries_.end()) {
    throw GeometryError(Errc::unknown_center, "X" + std::to_string(k) + " is not registered");
  }
  return it->second;
}

std::array<double, 3> CenterRegistry::weights(const Triangle& t, int k) const {
  const CenterEntry& e = entry(k);
  const WeightVars base = vars_of(t);
  return {e.weight.evaluate(base), e.weight.evaluate(rotate(base, 1)),
          e.weight.evaluate(rotate(base, 2))};
}

Point2 from_barycentric(const Triangle& t, std::array<double, 3> w) {
  const double sum = w[0] + w[1] + w[2];
  const double mag = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
  if (!std::isfinite(sum) || !std::isfinite(mag)) {
    throw GeometryError(Errc::degenerate_construction, "non-finite barycentric weight");
  }
  if (!(std::abs(sum) > 1e-12 * mag)) {
    throw GeometryError(Errc::zero_weight_sum, "barycentric weights sum to zero");
  }
  return (w[0] * t[0] + w[1] * t[1] + w[2] * t[2]) / sum;
}

std::array<double, 3> barycentric_of(const Triangle& t, Point2 p) {
  const double total = t.signed_area();
  const double u = 0.5 * cross(t[1] - p, t[2] - p) / total;
  const double v = 0.5 * cross(t[2] - p, t[0] - p) / total;
  return {u, v, 1.0 - u - v};
}

Point2 center(const Triangle& t, int k) { return center(t, k, CenterRegistry::builtin()); }

Point2 center(const Triangle& t, int k, const CenterRegistry& registry) {
  const CenterEntry& e = registry.entry(k);
  t.require_nondegenerate();
  const WeightVars base = vars_of(t);
  return from_barycentric(t, {e.weight.evaluate(base), e.weight.evaluate(rotate(base, 1)),
                              e.weight.evaluate(rotate(base, 2))});
}

std::string_view derived_name(DerivedKind k) {
  switch (k) {
    case DerivedKind::Reference: return "reference";
    case DerivedKind::Medial: return "medial";
    case DerivedKind::Orthic: return "orthic";
    case DerivedKind::Excentral: return "excentral";
    case DerivedKind::Intouch: return "intouch";
    case DerivedKind::Extouch: return "extouch";
    case DerivedKind::Tangential: return "tangential";
    case DerivedKind::Anticomplementary: return "anticompl";
  }
  return "reference";
}

std::optional<DerivedKind> parse_derived(std::string_view name) {
  for (DerivedKind k : kAllDerivedKinds) {
    if (derived_name(k) == name) return k;
  }
  return std::nullopt;
}

Triangle derived_triangle(const Triangle& t, DerivedKind kind) {
  t.require_nondegenerate();
  const auto s = t.sides();
  const double semi = 0.5 * (s[0] + s[1] + s[2]);
  Triangle out = t;
  switch (kind) {
    case DerivedKind::Reference:
      break;
    case DerivedKind::Medial:
      for (std::size_t i = 0; i < 3; ++i) out[i] = midpoint(t[(i + 1) % 3], t[(i + 2) % 3]);
      break;
    case DerivedKind::Orthic:
      require_non_right(t);
      for (std::size_t i = 0; i < 3; ++i) out[i] = foot(t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
      break;
    case DerivedKind::Excentral:
      out[0] = from_barycentric(t, {-s[0], s[1], s[2]});
      out[1] = from_barycentric(t, {s[0], -s[1], s[2]});
      out[2] = from_barycentric(t, {s[0], s[1], -s[2]});
      break;
    case DerivedKind::Intouch:
    case DerivedKind::Extouch:
      for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        // Tangent length from vertex j along side i.
        const double from_j = kind == DerivedKind::Intouch ? semi - s[j] : semi - s[k];
        out[i] = t[j] + (from_j / s[i]) * (t[k] - t[j]);
      }
      break;
    case DerivedKind::Tangential: {
      require_non_right(t);
      const double a2 = s[0] * s[0], b2 = s[1] * s[1], c2 = s[2] * s[2];
      out[0] = from_barycentric(t, {-a2, b2, c2});
      out[1] = from_barycentric(t, {a2, -b2, c2});
      out[2] = from_barycentric(t, {a2, b2, -c2});
      break;
    }
    case DerivedKind::Anticomplementary:
      for (std::size_t i = 0; i < 3; ++i) out[i] = t[(i + 1) % 3] + t[(i + 2) % 3] - t[i];
      break;
  }
  return out;
}

std::string_view cevian_name(CevianKind k) {
  switch (k) {
    case CevianKind::Off: return "off";
    case CevianKind::Cevian: return "cevian";
    case CevianKind::Anticevian: return "anticevian";
    case CevianKind::Circumcevian: return "circumcevian";
    case CevianKind::Pedal: return "pedal";
    case CevianKind::Antipedal: return "antipedal";
  }
  return "off";
}

std::optional<CevianKind> parse_cevian(std::string_view name) {
  for (CevianKind k : {CevianKind::Off, CevianKind::Cevian, CevianKind::Anticevian,
                       CevianKind::Circumcevian, CevianKind::Pedal, CevianKind::Antipedal}) {
    if (cevian_name(k) == name) return k;
  }
  return std::nullopt;
}

Triangle cevian_like(const Triangle& t, CevianKind kind, int m, const CenterRegistry& registry) {
  if (kind == CevianKind::Off) return t;
  t.require_nondegenerate();
  const Point2 p = center(t, m, registry);
  const double scale = t.max_side();
  for (const Point2& v : t.v) {
    if (dist(p, v) < 1e-12 * scale) {
      throw GeometryError(Errc::degenerate_construction, "center coincides with a vertex");
    }
  }
  Triangle out = t;
  switch (kind) {
    case CevianKind::Off:
      break;
    case CevianKind::Cevian:
      for (std::size_t i = 0; i < 3; ++i) {
        const auto hit = intersect(Line::through(t[i], p),
                                   Line::through(t[(i + 1) % 3], t[(i + 2) % 3]));
        if (!hit) throw GeometryError(Errc::degenerate_construction, "cevian parallel to side");
        out[i] = *hit;
      }
      break;
    case CevianKind::Anticevian: {
      const auto w = barycentric_of(t, p);
      for (std::size_t i = 0; i < 3; ++i) {
        auto wi = w;
        wi[i] = -wi[i];
        out[i] = from_barycentric(t, wi);
      }
      break;
    }
    case CevianKind::Circumcevian: {
      const Circle cc = notable_circle(t, CircleKind::Circumcircle);
      for (std::size_t i = 0; i < 3; ++i) {
        const Point2 d = normalized(p - t[i]);
        out[i] = t[i] - 2.0 * dot(t[i] - cc.center, d) * d;
      }
      break;
    }
    case CevianKind::Pedal:
      for (std::size_t i = 0; i < 3; ++i) out[i] = foot(p, t[(i + 1) % 3], t[(i + 2) % 3]);
      break;
    case CevianKind::Antipedal:
      for (std::size_t i = 0; i < 3; ++i) {
        const Point2 vj = t[(i + 1) % 3], vk = t[(i + 2) % 3];
        const auto hit = intersect(Line::from_direction(vj, perp(p - vj)),
                                   Line::from_direction(vk, perp(p - vk)));
        if (!hit) throw GeometryError(Errc::degenerate_construction, "antipedal sides parallel");
        out[i] = *hit;
      }
      break;
  }
  return out;
}

std::pair<Point2, Point2> brocard_points(const Triangle& t) {
  t.require_nondegenerate();
  const auto s = t.sides();
  const double a2 = s[0] * s[0], b2 = s[1] * s[1], c2 = s[2] * s[2];
  return {from_barycentric(t, {1.0 / b2, 1.0 / c2, 1.0 / a2}),
          from_barycentric(t, {1.0 / c2, 1.0 / a2, 1.0 / b2})};
}

double brocard_angle(const Triangle& t) {
  const auto s = t.sides();
  return std::atan2(4.0 * t.area(), s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
}

Circle notable_circle(const Triangle& t, CircleKind which) {
  t.require_nondegenerate();
  switch (which) {
    case CircleKind::Incircle:
      return {center(t, 1), t.inradius()};
    case CircleKind::Circumcircle:
      return {center(t, 3), t.circumradius()};
    case CircleKind::NinePoint:
      return {center(t, 5), 0.5 * t.circumradius()};
    case CircleKind::Bevan: {
      const Triangle ex = derived_triangle(t, DerivedKind::Excentral);
      return {center(ex, 3), ex.circumradius()};
    }
  }
  return {};
}

BrocardInellipse brocard_inellipse(const Triangle& t) {
  const auto [w1, w2] = brocard_points(t);
  BrocardInellipse out;
  out.center = midpoint(w1, w2);
  const double c = 0.5 * dist(w1, w2);
  // Product of focal distances to any tangent line is b².
  const Line side = Line::through(t[1], t[2]);
  out.b = std::sqrt(side.distance(w1) * side.distance(w2));
  out.a = std::sqrt(out.b * out.b + c * c);
  out.angle = c > 1e-14 * t.max_side() ? std::atan2(w2.y - w1.y, w2.x - w1.x) : 0.0;
  return out;
}

}  // namespace poncelet

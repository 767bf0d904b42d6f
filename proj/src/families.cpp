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

#include "poncelet/families.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "poncelet/centers.hpp"
#include "poncelet/errors.hpp"

namespace poncelet {

std::string_view family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Confocal: return "confocal";
    case FamilyKind::Incircle: return "incircle";
    case FamilyKind::Circumcircle: return "circumcircle";
    case FamilyKind::Homothetic: return "homothetic";
    case FamilyKind::Dual: return "dual";
    case FamilyKind::ExcentralOfConfocal: return "excentral";
    case FamilyKind::Poristic: return "poristic";
    case FamilyKind::BrocardPorism: return "brocard";
    case FamilyKind::Mounted: return "mounted";
  }
  return "confocal";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (FamilyKind k : kPonceletKinds) {
    if (family_name(k) == name) return k;
  }
  if (name == "mounted") return FamilyKind::Mounted;
  if (name == "billiard") return FamilyKind::Confocal;
  return std::nullopt;
}

bool is_concentric(FamilyKind k) {
  switch (k) {
    case FamilyKind::Confocal:
    case FamilyKind::Incircle:
    case FamilyKind::Circumcircle:
    case FamilyKind::Homothetic:
    case FamilyKind::Dual:
      return true;
    default:
      return false;
  }
}

std::string_view pin_name(MountPin p) {
  switch (p) {
    case MountPin::Major: return "major";
    case MountPin::Minor: return "minor";
    case MountPin::Mixed: return "mixed";
    case MountPin::CtrMajor: return "ctrMajor";
    case MountPin::CtrMinor: return "ctrMinor";
    case MountPin::Fs: return "fs";
    case MountPin::FsCtr: return "fsCtr";
    case MountPin::FsLeft: return "fsLeft";
    case MountPin::FsRight: return "fsRight";
    case MountPin::FsTop: return "fsTop";
    case MountPin::TlBl: return "tl-bl";
    case MountPin::TlTr: return "tl-tr";
    case MountPin::TlL: return "tl-l";
    case MountPin::TlT: return "tl-t";
    case MountPin::TlB: return "tl-b";
    case MountPin::TlO: return "tl-o";
    case MountPin::TlBr: return "tl-br";
  }
  return "major";
}

std::optional<MountPin> parse_pin(std::string_view name) {
  for (MountPin p : kAllMountPins) {
    if (pin_name(p) == name) return p;
  }
  return std::nullopt;
}

std::array<Point2, 2> mount_pins(MountPin pin, const Ellipse& e) {
  const Point2 o = e.center();
  const double a = e.a(), b = e.b();
  const Point2 left = o + Point2{-a, 0}, right = o + Point2{a, 0};
  const Point2 top = o + Point2{0, b}, bottom = o + Point2{0, -b};
  const Point2 tl = o + Point2{-a, b};
  const auto [f1, f2] = e.foci();
  switch (pin) {
    case MountPin::Major: return {left, right};
    case MountPin::Minor: return {top, bottom};
    case MountPin::Mixed: return {left, top};
    case MountPin::CtrMajor: return {o, left};
    case MountPin::CtrMinor: return {o, top};
    case MountPin::Fs: return {f1, f2};
    case MountPin::FsCtr: return {o, f2};
    case MountPin::FsLeft: return {left, f2};
    case MountPin::FsRight: return {right, f2};
    case MountPin::FsTop: return {top, f2};
    case MountPin::TlBl: return {tl, o + Point2{-a, -b}};
    case MountPin::TlTr: return {tl, o + Point2{a, b}};
    case MountPin::TlL: return {tl, left};
    case MountPin::TlT: return {tl, top};
    case MountPin::TlB: return {tl, bottom};
    case MountPin::TlO: return {tl, o};
    case MountPin::TlBr: return {tl, o + Point2{a, -b}};
  }
  return {left, right};
}

Ellipse derive_caustic(FamilyKind kind, const Ellipse& outer, std::optional<double> aux) {
  const double a = outer.a(), b = outer.b();
  const Point2 o = outer.center();
  switch (kind) {
    case FamilyKind::Homothetic:
      return {o, 0.5 * a, 0.5 * b};
    case FamilyKind::Incircle: {
      const double r = a * b / (a + b);
      return Ellipse::circle(o, r);
    }
    case FamilyKind::Circumcircle: {
      if (!outer.is_circle()) {
        throw GeometryError(Errc::no_real_solution,
                            "circumcircle family needs a circular outer conic");
      }
      if (!aux || !(*aux > 0.0)) {
        throw GeometryError(Errc::no_real_solution,
                            "circumcircle family needs a positive caustic aspect ratio");
      }
      const double rho = *aux;
      return {o, a * rho / (1.0 + rho), a / (1.0 + rho)};
    }
    case FamilyKind::Dual: {
      const double q = a * a + b * b;
      return {o, a * b * b / q, a * a * b / q};
    }
    case FamilyKind::Confocal: {
      if (outer.is_circle()) return Ellipse::circle(o, 0.5 * a);
      // Closed form of {a'² - b'² = a² - b², a'/a + b'/b = 1}.
      const double delta = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
      const double den = a * a - b * b;
      const double ap = a * (delta - b * b) / den;
      const double bp = b * (a * a - delta) / den;
      if (!(ap > 0.0) || !(bp > 0.0)) {
        throw GeometryError(Errc::no_real_solution, "no confocal caustic for this pair");
      }
      return {o, ap, bp};
    }
    default:
      throw GeometryError(Errc::invalid_kind,
                          std::string(family_name(kind)) + " has its own constructor");
  }
}

FamilySpec concentric_spec(FamilyKind kind, const Ellipse& outer, std::optional<double> aux) {
  return FamilySpec{kind, outer, derive_caustic(kind, outer, aux), std::nullopt, nullptr};
}

FamilySpec excentral_of_confocal_spec(const Ellipse& billiard) {
  auto parent = std::make_shared<const FamilySpec>(
      concentric_spec(FamilyKind::Confocal, billiard));
  const double a = billiard.a(), b = billiard.b();
  const double delta = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
  // Excenters of billiard 3-periodics sweep this ellipse; the billiard table
  // is its caustic.
  const Ellipse outer(billiard.center(), (b * b + delta) / a, (a * a + delta) / b);
  return FamilySpec{FamilyKind::ExcentralOfConfocal, outer, billiard, std::nullopt,
                    std::move(parent)};
}

FamilySpec poristic_spec(double R, double r) {
  if (!(R > 0.0) || !(r > 0.0)) throw std::invalid_argument("radii must be positive");
  const double d2 = R * (R - 2.0 * r);
  if (d2 < -1e-15 * R * R) {
    throw GeometryError(Errc::infeasible_radii, "poristic family needs r <= R/2");
  }
  const double d = std::sqrt(std::max(0.0, d2));
  return FamilySpec{FamilyKind::Poristic, Ellipse::circle({0, 0}, R),
                    Ellipse::circle({d, 0}, r), std::nullopt, nullptr};
}

Triangle default_brocard_seed() {
  // Side 4 on the x axis; remaining sides 5 (from its right end) and 6.
  const double a = 4.0, b = 5.0, c = 6.0;
  const double x = (c * c - b * b + a * a) / (2.0 * a);
  const double y = std::sqrt(c * c - x * x);
  Triangle t{{Point2{x, y}, Point2{0.0, 0.0}, Point2{a, 0.0}}};
  const double R = t.circumradius();
  for (Point2& p : t.v) p = p / R;
  return t;
}

FamilySpec brocard_spec(const Triangle& seed) {
  if (seed.is_degenerate()) {
    throw GeometryError(Errc::degenerate_triangle, "degenerate Brocard seed");
  }
  const Point2 o = center(seed, 3);
  const double R = seed.circumradius();
  const BrocardInellipse ie = brocard_inellipse(seed);
  const Point2 c = rotated(ie.center - o, -ie.angle);
  return FamilySpec{FamilyKind::BrocardPorism, Ellipse::circle({0, 0}, R),
                    Ellipse(c, ie.a, ie.b), std::nullopt, nullptr};
}

FamilySpec mounted_spec(MountPin pin, const Ellipse& outer) {
  return FamilySpec{FamilyKind::Mounted, outer, outer, pin, nullptr};
}

Point2 poncelet_step(const FamilySpec& spec, Point2 p, std::optional<Point2> prev) {
  const auto tangents = tangents_from_point(spec.inner, p);
  if (tangents.size() < 2) {
    throw GeometryError(Errc::point_inside_caustic, "transverse point is not outside the caustic");
  }
  const Tangent* pick = &tangents[0];
  if (prev) {
    const Point2 back = normalized(*prev - p);
    if (std::abs(cross(tangents[1].line.d, back)) > std::abs(cross(tangents[0].line.d, back))) {
      pick = &tangents[1];
    }
  } else {
    const Point2 to_center = spec.inner.center() - p;
    if (cross(tangents[0].line.d, to_center) < cross(tangents[1].line.d, to_center)) {
      pick = &tangents[1];
    }
  }
  return second_intersection(spec.outer, p, pick->line.d);
}

namespace {

Triangle transverse_triangle(const FamilySpec& spec, double t) {
  const Point2 v1 = ellipse_point(spec.outer, t);
  const Point2 v2 = poncelet_step(spec, v1);
  const Point2 v3 = poncelet_step(spec, v2, v1);
  return {{v1, v2, v3}};
}

}  // namespace

Triangle triangle_at(const FamilySpec& spec, double t) {
  switch (spec.kind) {
    case FamilyKind::Mounted: {
      const auto pins = mount_pins(spec.pin.value_or(MountPin::Major), spec.outer);
      return {{pins[0], pins[1], ellipse_point(spec.outer, t)}};
    }
    case FamilyKind::ExcentralOfConfocal:
      return derived_triangle(transverse_triangle(*spec.derived_from, t), DerivedKind::Excentral);
    default:
      return transverse_triangle(spec, t);
  }
}

std::optional<Triangle> parent_triangle_at(const FamilySpec& spec, double t) {
  if (spec.kind != FamilyKind::ExcentralOfConfocal) return std::nullopt;
  return transverse_triangle(*spec.derived_from, t);
}

double closure_residual(const FamilySpec& spec, double t) {
  if (spec.kind == FamilyKind::Mounted) return 0.0;
  const Point2 p1 = ellipse_point(spec.outer, t);
  const Point2 p2 = poncelet_step(spec, p1);
  const Point2 p3 = poncelet_step(spec, p2, p1);
  const Point2 p4 = poncelet_step(spec, p3, p2);
  return dist(p4, p1);
}

std::vector<int> fixed_centers(FamilyKind k) {
  switch (k) {
    case FamilyKind::Confocal: return {9};
    case FamilyKind::Incircle: return {1};
    case FamilyKind::Circumcircle: return {3};
    case FamilyKind::Homothetic: return {2};
    case FamilyKind::Dual: return {4};
    case FamilyKind::ExcentralOfConfocal: return {6};
    case FamilyKind::Poristic: return {1, 3};
    case FamilyKind::BrocardPorism: return {3, 6};
    case FamilyKind::Mounted: return {};
  }
  return {};
}

}  // namespace poncelet

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

// Poncelet triangle families interscribed between nested conics, plus the
// ellipse-mounted families whose third vertex sweeps the outer ellipse.

#ifndef PONCELET_FAMILIES_HPP_
#define PONCELET_FAMILIES_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "poncelet/geom.hpp"
#include "poncelet/triangle.hpp"

namespace poncelet {

enum class FamilyKind {
  Confocal,
  Incircle,
  Circumcircle,
  Homothetic,
  Dual,
  ExcentralOfConfocal,
  Poristic,
  BrocardPorism,
  Mounted,
};

inline constexpr std::array<FamilyKind, 8> kPonceletKinds = {
    FamilyKind::Confocal,   FamilyKind::Incircle, FamilyKind::Circumcircle,
    FamilyKind::Homothetic, FamilyKind::Dual,     FamilyKind::ExcentralOfConfocal,
    FamilyKind::Poristic,   FamilyKind::BrocardPorism};

std::string_view family_name(FamilyKind k);
std::optional<FamilyKind> parse_family(std::string_view name);
bool is_concentric(FamilyKind k);

// Where the two fixed vertices of a mounted family sit. EV = ellipse vertex,
// TL/TR/BL/BR = corners of the ellipse's bounding box.
enum class MountPin {
  Major,     // left and right EVs
  Minor,     // top and bottom EVs
  Mixed,     // left and top EVs
  CtrMajor,  // center and left EV
  CtrMinor,  // center and top EV
  Fs,        // both foci
  FsCtr,     // center and right focus
  FsLeft,    // left EV and right focus
  FsRight,   // right EV and right focus
  FsTop,     // top EV and right focus
  TlBl,
  TlTr,
  TlL,
  TlT,
  TlB,
  TlO,
  TlBr,
};

inline constexpr std::array<MountPin, 17> kAllMountPins = {
    MountPin::Major, MountPin::Minor, MountPin::Mixed,  MountPin::CtrMajor, MountPin::CtrMinor,
    MountPin::Fs,    MountPin::FsCtr, MountPin::FsLeft, MountPin::FsRight,  MountPin::FsTop,
    MountPin::TlBl,  MountPin::TlTr,  MountPin::TlL,    MountPin::TlT,      MountPin::TlB,
    MountPin::TlO,   MountPin::TlBr};

std::string_view pin_name(MountPin p);
std::optional<MountPin> parse_pin(std::string_view name);
std::array<Point2, 2> mount_pins(MountPin pin, const Ellipse& outer);

struct FamilySpec {
  FamilyKind kind;
  Ellipse outer;
  // Caustic. Mounted families have none and carry a copy of `outer`.
  Ellipse inner;
  std::optional<MountPin> pin;
  // Generating family for ExcentralOfConfocal.
  std::shared_ptr<const FamilySpec> derived_from;

  // Length scale for tolerances: the outer conic's larger semi-axis.
  double scale() const { return outer.scale(); }
};

// Caustic of the concentric kinds. `aux` is the caustic aspect a'/b' and is
// only read for Circumcircle, whose outer conic must be a circle.
Ellipse derive_caustic(FamilyKind kind, const Ellipse& outer, std::optional<double> aux = {});

FamilySpec concentric_spec(FamilyKind kind, const Ellipse& outer, std::optional<double> aux = {});
// Excentral triangles of the confocal family on `billiard`.
FamilySpec excentral_of_confocal_spec(const Ellipse& billiard);
// Circumcircle radius R at the origin, incircle radius r at (d, 0) with
// d² = R(R - 2r). Throws infeasible_radii when r > R/2.
FamilySpec poristic_spec(double R, double r);
// Circumcircle and Brocard inellipse of `seed`, after the rigid motion that
// puts the circumcenter at the origin and the Brocard points on a horizontal
// line.
FamilySpec brocard_spec(const Triangle& seed);
// Sides 4, 5, 6 scaled to unit circumradius.
Triangle default_brocard_seed();
FamilySpec mounted_spec(MountPin pin, const Ellipse& outer);

// Next transverse point: the chord from p tangent to the caustic. With `prev`
// the tangent not leading back to prev is taken; without it, the one keeping
// the caustic on the left (counterclockwise advance).
Point2 poncelet_step(const FamilySpec& spec, Point2 p, std::optional<Point2> prev = {});

Triangle triangle_at(const FamilySpec& spec, double t);
// Confocal triangle whose excentral triangle is triangle_at(spec, t); empty
// for other kinds.
std::optional<Triangle> parent_triangle_at(const FamilySpec& spec, double t);

// |P4 - P1| after three transverse steps from the outer point at t. Zero for
// mounted families, which close by construction.
double closure_residual(const FamilySpec& spec, double t);

// Triangle centers held stationary by the family.
std::vector<int> fixed_centers(FamilyKind k);

}  // namespace poncelet

#endif  // PONCELET_FAMILIES_HPP_

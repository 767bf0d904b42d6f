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

// Triangle centers by Kimberling index, derived triangles, cevian-like
// constructions, Brocard points and a few notable circles.

#ifndef PONCELET_CENTERS_HPP_
#define PONCELET_CENTERS_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poncelet/center_expr.hpp"
#include "poncelet/geom.hpp"
#include "poncelet/triangle.hpp"

namespace poncelet {

struct CenterEntry {
  int k = 0;
  WeightExpr weight;  // weight of the first vertex; cyclic for the others
  std::string note;
};

// Table of barycentric weight functions keyed by Kimberling index.
//
// Text format: one entry per line, `k <TAB> expression [# note]`. Blank lines
// and lines starting with '#' are ignored. The expression grammar is the one
// documented in center_expr.hpp.
class CenterRegistry {
 public:
  // Throws ParseError with the 1-based line number on malformed input or a
  // duplicate index.
  static CenterRegistry parse(std::string_view text);
  static CenterRegistry from_file(const std::filesystem::path& path);
  // Core table compiled into the library (data/centers.tsv).
  static const CenterRegistry& builtin();

  // Adds every entry of `other`; entries already present are replaced.
  void extend(const CenterRegistry& other);

  bool contains(int k) const { return entries_.count(k) != 0; }
  std::vector<int> ids() const;
  std::size_t size() const { return entries_.size(); }
  const CenterEntry& entry(int k) const;

  // Raw (unnormalized) weights; throws unknown_center.
  std::array<double, 3> weights(const Triangle& t, int k) const;

 private:
  std::map<int, CenterEntry> entries_;
};

// Cartesian point of normalized barycentrics. Throws zero_weight_sum when
// the weights sum to zero (a point at infinity) and degenerate_construction
// when any weight is not finite.
Point2 from_barycentric(const Triangle& t, std::array<double, 3> w);
// Normalized barycentrics of p from signed sub-areas.
std::array<double, 3> barycentric_of(const Triangle& t, Point2 p);

Point2 center(const Triangle& t, int k);
Point2 center(const Triangle& t, int k, const CenterRegistry& registry);

enum class DerivedKind {
  Reference,
  Medial,
  Orthic,
  Excentral,
  Intouch,
  Extouch,
  Tangential,
  Anticomplementary,
};

std::string_view derived_name(DerivedKind k);
std::optional<DerivedKind> parse_derived(std::string_view name);
inline constexpr std::array<DerivedKind, 8> kAllDerivedKinds = {
    DerivedKind::Reference, DerivedKind::Medial,    DerivedKind::Orthic,
    DerivedKind::Excentral, DerivedKind::Intouch,   DerivedKind::Extouch,
    DerivedKind::Tangential, DerivedKind::Anticomplementary};

Triangle derived_triangle(const Triangle& t, DerivedKind kind);

enum class CevianKind { Off, Cevian, Anticevian, Circumcevian, Pedal, Antipedal };

std::string_view cevian_name(CevianKind k);
std::optional<CevianKind> parse_cevian(std::string_view name);

// Construction about P = X_m of t. `Off` returns t unchanged.
Triangle cevian_like(const Triangle& t, CevianKind kind, int m,
                     const CenterRegistry& registry = CenterRegistry::builtin());

// First and second Brocard points.
std::pair<Point2, Point2> brocard_points(const Triangle& t);
double brocard_angle(const Triangle& t);

struct Circle {
  Point2 center;
  double radius = 0.0;
};

enum class CircleKind { Incircle, Circumcircle, NinePoint, Bevan };

Circle notable_circle(const Triangle& t, CircleKind which);

// Inconic with foci at the Brocard points. `angle` is the direction of the
// focal axis; semi-axes from the focal distance and tangency to a side.
struct BrocardInellipse {
  Point2 center;
  double a = 0.0;
  double b = 0.0;
  double angle = 0.0;
};

BrocardInellipse brocard_inellipse(const Triangle& t);

}  // namespace poncelet

#endif  // PONCELET_CENTERS_HPP_

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

// Planar primitives: points, lines, axis-parallel ellipses and general conics,
// plus the tangency, intersection and inversive maps the families are built
// from. Everything here is a pure function of its arguments.

#ifndef PONCELET_GEOM_HPP_
#define PONCELET_GEOM_HPP_

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "poncelet/errors.hpp"

namespace poncelet {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
  constexpr Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr Point2& operator*=(double s) { x *= s; y *= s; return *this; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
constexpr Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
constexpr Point2 operator-(Point2 p) { return {-p.x, -p.y}; }
constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
constexpr Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }

constexpr double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
constexpr Point2 perp(Point2 p) { return {-p.y, p.x}; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 p, Point2 q) { return norm(p - q); }
constexpr Point2 midpoint(Point2 p, Point2 q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }
inline Point2 normalized(Point2 p) { return p / norm(p); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline Point2 rotated(Point2 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Infinite line through `p` with unit direction `d`.
struct Line {
  Point2 p;
  Point2 d;

  static Line through(Point2 a, Point2 b);
  static Line from_direction(Point2 p, Point2 dir);

  Point2 at(double s) const { return p + s * d; }
  Point2 normal() const { return perp(d); }
  double signed_distance(Point2 q) const { return cross(d, q - p); }
  double distance(Point2 q) const { return std::abs(signed_distance(q)); }
  Point2 project(Point2 q) const { return p + dot(q - p, d) * d; }
};

// Intersection of two lines; empty when they are parallel to within
// |sin angle| < parallel_tol.
std::optional<Point2> intersect(const Line& l1, const Line& l2, double parallel_tol = 1e-12);

// Axis-parallel ellipse; a along x, b along y. A circle when a == b.
class Ellipse {
 public:
  Ellipse(Point2 center, double a, double b);
  static Ellipse circle(Point2 center, double radius) { return {center, radius, radius}; }

  Point2 center() const { return center_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double scale() const { return std::max(a_, b_); }
  bool is_circle(double tol = 1e-12) const { return std::abs(a_ - b_) <= tol * scale(); }

  // Coordinates in the frame where this ellipse is the unit circle.
  Point2 to_unit(Point2 p) const { return {(p.x - center_.x) / a_, (p.y - center_.y) / b_}; }
  Point2 from_unit(Point2 u) const { return {center_.x + a_ * u.x, center_.y + b_ * u.y}; }

  // x²/a² + y²/b² - 1 relative to the center.
  double implicit(Point2 p) const;
  // Eccentric-anomaly parameter t with point(t) closest in the unit frame.
  double parameter_of(Point2 p) const;
  // Distance from the center to each focus; foci lie on the major axis.
  double focal_distance() const { return std::sqrt(std::abs(a_ * a_ - b_ * b_)); }
  std::array<Point2, 2> foci() const;

  friend bool operator==(const Ellipse&, const Ellipse&) = default;

 private:
  Point2 center_;
  double a_;
  double b_;
};

// Implicit conic Ax² + Bxy + Cy² + Dx + Ey + F = 0 with unit coefficient norm.
struct ConicCoeffs {
  std::array<double, 6> c{};

  double A() const { return c[0]; }
  double B() const { return c[1]; }
  double C() const { return c[2]; }
  double D() const { return c[3]; }
  double E() const { return c[4]; }
  double F() const { return c[5]; }

  double evaluate(Point2 p) const;
  double discriminant() const { return c[1] * c[1] - 4.0 * c[0] * c[2]; }
  // Discriminant over A² + B² + C²; 0 when the quadratic part vanishes.
  double relative_discriminant() const;

  // Normalizes to unit length with the sign fixed by a canonical rule.
  static ConicCoeffs canonical(std::array<double, 6> raw);
  static ConicCoeffs of_ellipse(const Ellipse& e);
};

enum class CurveClass { Ellipse, Hyperbola, Parabola, Line, Point, Other };

// Single-character curve codes: E, H, P, L, *, X.
char curve_code(CurveClass c);
std::optional<CurveClass> curve_from_code(char code);

Point2 ellipse_point(const Ellipse& e, double t);
double ellipse_curvature(const Ellipse& e, double t);
// Center of curvature at parameter t. Throws degenerate_circle for circles.
Point2 evolute_point(const Ellipse& e, double t);

struct Tangent {
  Line line;
  Point2 touch;
};

// 2 tangents when p is strictly outside, 1 on the boundary, 0 inside.
std::vector<Tangent> tangents_from_point(const Ellipse& e, Point2 p);

// Other root of the chord through p (on e) with direction dir. Returns p for
// a tangent direction. Throws point_not_on_ellipse when p is off the curve.
Point2 second_intersection(const Ellipse& e, Point2 p, Point2 dir, double on_tol = 1e-9);

struct ConicFit {
  ConicCoeffs coeffs;
  double rms_residual = 0.0;  // algebraic, in the normalized frame
  // More than one vanishing singular value: the points lie on a line and
  // `coeffs` is the squared line.
  bool rank_deficient = false;
};

ConicFit fit_conic(std::span<const Point2> points);

struct ClassifyOptions {
  double point_tol = 1e-6;
  double line_tol = 1e-10;
  double conic_tol = 1e-6;
  double parabola_tol = 1e-7;
  // Reference length for the stationary-point test. When unset the cloud's
  // RMS radius is used, falling back to the centroid magnitude when the
  // cloud has collapsed.
  std::optional<double> length_scale;
};

CurveClass classify_curve(std::span<const Point2> points, const ClassifyOptions& opts = {});

// Inversive maps with respect to the circle (c, rho).
Point2 invert_point(Point2 p, Point2 c, double rho);
Line polar_line(Point2 p, Point2 c, double rho);
Point2 pole_of(const Line& l, Point2 c, double rho);
Point2 cremona(Point2 p, Point2 origin);

}  // namespace poncelet

#endif  // PONCELET_GEOM_HPP_

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

#include "poncelet/geom.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <Eigen/Dense>

namespace poncelet {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::degenerate_triangle: return "degenerate-triangle";
    case Errc::right_angle: return "right-angle";
    case Errc::zero_weight_sum: return "zero-weight-sum";
    case Errc::unknown_center: return "unknown-center";
    case Errc::point_not_on_ellipse: return "point-not-on-ellipse";
    case Errc::center_singularity: return "center-singularity";
    case Errc::axis_singularity: return "axis-singularity";
    case Errc::degenerate_circle: return "degenerate-circle";
    case Errc::insufficient_points: return "insufficient-points";
    case Errc::invalid_kind: return "invalid-kind";
    case Errc::no_real_solution: return "no-real-solution";
    case Errc::infeasible_radii: return "infeasible-radii";
    case Errc::point_inside_caustic: return "point-inside-caustic";
    case Errc::all_samples_degenerate: return "all-samples-degenerate";
    case Errc::all_samples_parallel: return "all-samples-parallel";
    case Errc::degenerate_construction: return "degenerate-construction";
    case Errc::empty_input: return "empty-input";
  }
  return "unknown";
}

Line Line::through(Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len = norm(d);
  if (!(len > 0.0)) {
    throw GeometryError(Errc::degenerate_construction, "line through coincident points");
  }
  return {a, d / len};
}

Line Line::from_direction(Point2 p, Point2 dir) {
  const double len = norm(dir);
  if (!(len > 0.0)) {
    throw GeometryError(Errc::degenerate_construction, "line with zero direction");
  }
  return {p, dir / len};
}

std::optional<Point2> intersect(const Line& l1, const Line& l2, double parallel_tol) {
  const double den = cross(l1.d, l2.d);
  if (std::abs(den) < parallel_tol) return std::nullopt;
  const double s = cross(l2.p - l1.p, l2.d) / den;
  return l1.at(s);
}

Ellipse::Ellipse(Point2 center, double a, double b) : center_(center), a_(a), b_(b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b) || !is_finite(center)) {
    throw std::invalid_argument("ellipse semi-axes must be positive and finite");
  }
}

double Ellipse::implicit(Point2 p) const {
  const Point2 u = to_unit(p);
  return u.x * u.x + u.y * u.y - 1.0;
}

double Ellipse::parameter_of(Point2 p) const {
  const Point2 u = to_unit(p);
  return std::atan2(u.y, u.x);
}

std::array<Point2, 2> Ellipse::foci() const {
  const double c = focal_distance();
  if (a_ >= b_) return {center_ - Point2{c, 0.0}, center_ + Point2{c, 0.0}};
  return {center_ - Point2{0.0, c}, center_ + Point2{0.0, c}};
}

double ConicCoeffs::evaluate(Point2 p) const {
  return c[0] * p.x * p.x + c[1] * p.x * p.y + c[2] * p.y * p.y + c[3] * p.x + c[4] * p.y + c[5];
}

double ConicCoeffs::relative_discriminant() const {
  const double q = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  if (q == 0.0) return 0.0;
  return discriminant() / q;
}

ConicCoeffs ConicCoeffs::canonical(std::array<double, 6> raw) {
  double n2 = 0.0;
  for (double v : raw) n2 += v * v;
  const double n = std::sqrt(n2);
  if (!(n > 0.0)) throw GeometryError(Errc::degenerate_construction, "zero conic");
  for (double& v : raw) v /= n;
  // Sign: positive trace of the quadratic part, else largest entry positive.
  double key = raw[0] + raw[2];
  if (std::abs(key) < 1e-9) {
    key = *std::max_element(raw.begin(), raw.end(),
                            [](double x, double y) { return std::abs(x) < std::abs(y); });
  }
  if (key < 0.0) {
    for (double& v : raw) v = -v;
  }
  return ConicCoeffs{raw};
}

ConicCoeffs ConicCoeffs::of_ellipse(const Ellipse& e) {
  const double ia = 1.0 / (e.a() * e.a());
  const double ib = 1.0 / (e.b() * e.b());
  const Point2 m = e.center();
  return canonical({ia, 0.0, ib, -2.0 * ia * m.x, -2.0 * ib * m.y,
                    ia * m.x * m.x + ib * m.y * m.y - 1.0});
}

char curve_code(CurveClass c) {
  switch (c) {
    case CurveClass::Ellipse: return 'E';
    case CurveClass::Hyperbola: return 'H';
    case CurveClass::Parabola: return 'P';
    case CurveClass::Line: return 'L';
    case CurveClass::Point: return '*';
    case CurveClass::Other: return 'X';
  }
  return 'X';
}

std::optional<CurveClass> curve_from_code(char code) {
  switch (code) {
    case 'E': return CurveClass::Ellipse;
    case 'H': return CurveClass::Hyperbola;
    case 'P': return CurveClass::Parabola;
    case 'L': return CurveClass::Line;
    case '*': return CurveClass::Point;
    case 'X': return CurveClass::Other;
    default: return std::nullopt;
  }
}

Point2 ellipse_point(const Ellipse& e, double t) {
  return e.center() + Point2{e.a() * std::cos(t), e.b() * std::sin(t)};
}

double ellipse_curvature(const Ellipse& e, double t) {
  const double a = e.a(), b = e.b();
  const double s = std::sin(t), c = std::cos(t);
  const double q = a * a * s * s + b * b * c * c;
  return a * b / (q * std::sqrt(q));
}

Point2 evolute_point(const Ellipse& e, double t) {
  const double a = e.a(), b = e.b();
  if (std::abs(a - b) < 1e-12 * a) {
    throw GeometryError(Errc::degenerate_circle, "a circle's evolute is a single point");
  }
  const double c = std::cos(t), s = std::sin(t);
  return e.center() + Point2{(a * a - b * b) / a * c * c * c, (b * b - a * a) / b * s * s * s};
}

std::vector<Tangent> tangents_from_point(const Ellipse& e, Point2 p) {
  const Point2 u = e.to_unit(p);
  const double r = norm(u);
  const double phi = std::atan2(u.y, u.x);
  constexpr double kBoundaryTol = 1e-12;
  std::vector<Tangent> out;
  if (r < 1.0 - kBoundaryTol) return out;
  if (r <= 1.0 + kBoundaryTol) {
    const Point2 dir{-e.a() * std::sin(phi), e.b() * std::cos(phi)};
    out.push_back({Line::from_direction(p, dir), p});
    return out;
  }
  const double alpha = std::acos(1.0 / r);
  for (double sgn : {1.0, -1.0}) {
    const double th = phi + sgn * alpha;
    const Point2 touch = e.from_unit({std::cos(th), std::sin(th)});
    out.push_back({Line::through(p, touch), touch});
  }
  return out;
}

Point2 second_intersection(const Ellipse& e, Point2 p, Point2 dir, double on_tol) {
  const Point2 u = e.to_unit(p);
  const double ru = norm(u);
  if (std::abs(ru - 1.0) * std::min(e.a(), e.b()) > on_tol * e.scale()) {
    throw GeometryError(Errc::point_not_on_ellipse, "chord start is not on the ellipse");
  }
  const Point2 w{dir.x / e.a(), dir.y / e.b()};
  const double ww = dot(w, w);
  if (!(ww > 0.0)) throw GeometryError(Errc::degenerate_construction, "zero chord direction");
  const double uw = dot(u, w);
  if (std::abs(uw) <= 1e-15 * ru * std::sqrt(ww)) return p;
  // Roots of s²|w|² + 2s(u·w) + |u|² - 1 = 0; take the one away from p.
  const double disc = std::max(0.0, uw * uw - ww * (dot(u, u) - 1.0));
  const double q = -(uw + std::copysign(std::sqrt(disc), uw));
  return p + (q / ww) * dir;
}

namespace {

struct CloudStats {
  Point2 centroid;
  double rms_radius = 0.0;
  double var_min = 0.0;  // principal variances
  double var_max = 0.0;
  Point2 axis_max;       // unit direction of var_max
};

CloudStats cloud_stats(std::span<const Point2> pts) {
  CloudStats s;
  const double n = static_cast<double>(pts.size());
  for (Point2 p : pts) s.centroid += p;
  s.centroid *= 1.0 / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (Point2 p : pts) {
    const Point2 d = p - s.centroid;
    sxx += d.x * d.x;
    sxy += d.x * d.y;
    syy += d.y * d.y;
  }
  sxx /= n;
  sxy /= n;
  syy /= n;
  s.rms_radius = std::sqrt(sxx + syy);
  const double half_tr = 0.5 * (sxx + syy);
  const double det = sxx * syy - sxy * sxy;
  const double gap = std::sqrt(std::max(0.0, half_tr * half_tr - det));
  s.var_max = half_tr + gap;
  // det / var_max keeps the small eigenvalue accurate when it is tiny.
  s.var_min = s.var_max > 0.0 ? std::max(0.0, det / s.var_max) : 0.0;
  const double ang = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  s.axis_max = {std::cos(ang), std::sin(ang)};
  return s;
}

}  // namespace

ConicFit fit_conic(std::span<const Point2> points) {
  if (points.size() < 6) {
    throw GeometryError(Errc::insufficient_points, "conic fit needs at least 6 points");
  }
  const CloudStats st = cloud_stats(points);
  if (!(st.rms_radius > 0.0)) {
    throw GeometryError(Errc::insufficient_points, "conic fit on identical points");
  }
  const Point2 m = st.centroid;
  const double s = st.rms_radius;
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(n, 6);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point2 q = (points[static_cast<std::size_t>(i)] - m) / s;
    design.row(i) << q.x * q.x, q.x * q.y, q.y * q.y, q.x, q.y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  ConicFit fit;
  fit.rms_residual = sv(5) / std::sqrt(static_cast<double>(n));

  if (sv(4) <= 1e-8 * sv(0)) {
    // Collinear data: every conic containing the line fits; report the
    // squared line through the principal axis.
    fit.rank_deficient = true;
    const Point2 nrm = perp(st.axis_max);
    const double h = dot(nrm, m);
    const double p = nrm.x, q = nrm.y;
    fit.coeffs = ConicCoeffs::canonical(
        {p * p, 2.0 * p * q, q * q, -2.0 * p * h, -2.0 * q * h, h * h});
    return fit;
  }

  const Eigen::VectorXd v = svd.matrixV().col(5);
  const double A = v(0), B = v(1), C = v(2), D = v(3), E = v(4), F = v(5);
  // Undo x' = (x - m)/s after multiplying through by s².
  fit.coeffs = ConicCoeffs::canonical({
      A,
      B,
      C,
      -2.0 * A * m.x - B * m.y + D * s,
      -2.0 * C * m.y - B * m.x + E * s,
      A * m.x * m.x + B * m.x * m.y + C * m.y * m.y - D * s * m.x - E * s * m.y + F * s * s,
  });
  return fit;
}

CurveClass classify_curve(std::span<const Point2> points, const ClassifyOptions& opts) {
  if (points.empty()) return CurveClass::Other;
  const CloudStats st = cloud_stats(points);
  // Bounding-box diagonal: an upper bound on the diameter within a factor
  // of sqrt(2), so the point test never accepts a wider cloud.
  Point2 lo = points.front(), hi = points.front();
  for (Point2 p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double diameter = dist(lo, hi);
  const double scale = opts.length_scale ? *opts.length_scale
                                         : std::max(st.rms_radius, norm(st.centroid));
  if (diameter <= opts.point_tol * scale || points.size() < 2) return CurveClass::Point;
  if (st.var_max > 0.0 && st.var_min / st.var_max < opts.line_tol) return CurveClass::Line;
  if (points.size() < 6) return CurveClass::Other;

  const ConicFit fit = fit_conic(points);
  if (fit.rank_deficient) return CurveClass::Line;
  if (fit.rms_residual >= opts.conic_tol) return CurveClass::Other;
  const double rd = fit.coeffs.relative_discriminant();
  if (std::abs(rd) < opts.parabola_tol) return CurveClass::Parabola;
  return rd < 0.0 ? CurveClass::Ellipse : CurveClass::Hyperbola;
}

Point2 invert_point(Point2 p, Point2 c, double rho) {
  const Point2 d = p - c;
  const double r2 = dot(d, d);
  if (std::sqrt(r2) < 1e-14) {
    throw GeometryError(Errc::center_singularity, "inversion of the circle center");
  }
  return c + (rho * rho / r2) * d;
}

Line polar_line(Point2 p, Point2 c, double rho) {
  const Point2 q = invert_point(p, c, rho);
  return Line::from_direction(q, perp(p - c));
}

Point2 pole_of(const Line& l, Point2 c, double rho) {
  const Point2 foot = l.project(c);
  if (dist(foot, c) < 1e-14) {
    throw GeometryError(Errc::center_singularity, "line through the circle center has no pole");
  }
  return invert_point(foot, c, rho);
}

Point2 cremona(Point2 p, Point2 origin) {
  const Point2 d = p - origin;
  if (std::abs(d.x) < 1e-14 || std::abs(d.y) < 1e-14) {
    throw GeometryError(Errc::axis_singularity, "Cremona map undefined on the axes");
  }
  return origin + Point2{1.0 / d.x, 1.0 / d.y};
}

}  // namespace poncelet

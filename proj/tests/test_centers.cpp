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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "poncelet/centers.hpp"
#include "poncelet/errors.hpp"

namespace poncelet {
namespace {

const Triangle kScalene{{Point2{0.3, 2.1}, Point2{-1.2, -0.4}, Point2{2.0, -0.3}}};

double line_dist(Point2 p, Point2 a, Point2 b) { return Line::through(a, b).distance(p); }

void expect_point(Point2 p, Point2 q, double tol = 1e-12) {
  EXPECT_NEAR(p.x, q.x, tol);
  EXPECT_NEAR(p.y, q.y, tol);
}

// Random non-degenerate triangles for property checks.
std::vector<Triangle> random_triangles(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Triangle> out;
  while (static_cast<int>(out.size()) < n) {
    Triangle t{{Point2{u(rng), u(rng)}, Point2{u(rng), u(rng)}, Point2{u(rng), u(rng)}}};
    const auto th = t.angles();
    if (t.is_degenerate(1e-3)) continue;
    if (*std::max_element(th.begin(), th.end()) > 2.6) continue;
    out.push_back(t);
  }
  return out;
}

TEST(Registry, BuiltinHasCoreCenters) {
  const CenterRegistry& reg = CenterRegistry::builtin();
  for (int k : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 20, 39, 100, 511, 512}) {
    EXPECT_TRUE(reg.contains(k)) << k;
  }
  EXPECT_FALSE(reg.contains(99999));
  EXPECT_GE(reg.size(), 25u);
}

TEST(Registry, ParseCommentsAndNotes) {
  const auto reg = CenterRegistry::parse("# comment\n\n1\ta\t# incenter\n2\t1\n");
  EXPECT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.entry(1).note, "incenter");
  EXPECT_EQ(reg.ids(), (std::vector<int>{1, 2}));
}

TEST(Registry, ParseErrorCarriesLine) {
  try {
    CenterRegistry::parse("1\ta\n2\tb+*c\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Registry, DuplicateRejected) {
  EXPECT_THROW(CenterRegistry::parse("1\ta\n1\tb\n"), ParseError);
}

TEST(Registry, ExtendReplaces) {
  auto reg = CenterRegistry::parse("1\ta\n");
  reg.extend(CenterRegistry::parse("1\t1\n7000\ta^3\n"));
  EXPECT_EQ(reg.size(), 2u);
  expect_point(center(kScalene, 1, reg), center(kScalene, 2));
}

TEST(Registry, UnknownCenterThrows) {
  try {
    center(kScalene, 424242);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), Errc::unknown_center);
  }
}

TEST(Barycentric, RoundTrip) {
  const Point2 p{0.2, 0.5};
  const auto w = barycentric_of(kScalene, p);
  EXPECT_NEAR(w[0] + w[1] + w[2], 1.0, 1e-14);
  expect_point(from_barycentric(kScalene, w), p, 1e-14);
}

TEST(Barycentric, ZeroSumThrows) {
  try {
    from_barycentric(kScalene, {1.0, -1.0, 0.0});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), Errc::zero_weight_sum);
  }
}

TEST(Centers, InfinitePointsThrow) {
  EXPECT_THROW(center(kScalene, 511), GeometryError);
  EXPECT_THROW(center(kScalene, 512), GeometryError);
}

TEST(Centers, IncenterEquidistantFromSides) {
  for (const Triangle& t : random_triangles(50, 1)) {
    const Point2 i = center(t, 1);
    const double r = t.inradius();
    EXPECT_NEAR(line_dist(i, t[1], t[2]), r, 1e-10);
    EXPECT_NEAR(line_dist(i, t[2], t[0]), r, 1e-10);
    EXPECT_NEAR(line_dist(i, t[0], t[1]), r, 1e-10);
  }
}

TEST(Centers, CentroidIsVertexMean) {
  expect_point(center(kScalene, 2), (kScalene[0] + kScalene[1] + kScalene[2]) / 3.0);
}

TEST(Centers, CircumcenterEquidistantFromVertices) {
  for (const Triangle& t : random_triangles(50, 2)) {
    const Point2 o = center(t, 3);
    const double R = t.circumradius();
    for (const Point2& v : t.v) EXPECT_NEAR(dist(o, v), R, 1e-9 * R);
  }
}

TEST(Centers, OrthocenterOnAltitudes) {
  for (const Triangle& t : random_triangles(50, 3)) {
    const Point2 h = center(t, 4);
    for (int i = 0; i < 3; ++i) {
      const Point2 side = t[(i + 2) % 3] - t[(i + 1) % 3];
      EXPECT_NEAR(dot(h - t[i], side) / (norm(side) * std::max(1.0, norm(h - t[i]))), 0.0, 1e-9);
    }
  }
}

TEST(Centers, EulerLineRelations) {
  const Triangle& t = kScalene;
  const Point2 o = center(t, 3), h = center(t, 4), g = center(t, 2);
  expect_point(center(t, 5), midpoint(o, h));
  expect_point(g, o + (h - o) / 3.0);
  expect_point(center(t, 20), 2.0 * o - h);
}

TEST(Centers, NagelAndSpieker) {
  const Triangle& t = kScalene;
  const Point2 i = center(t, 1), g = center(t, 2);
  expect_point(center(t, 8), 3.0 * g - 2.0 * i);
  expect_point(center(t, 10), midpoint(i, center(t, 8)));
}

TEST(Centers, SymmedianDistancesProportionalToSides) {
  const Point2 k = center(kScalene, 6);
  const auto s = kScalene.sides();
  const double d0 = line_dist(k, kScalene[1], kScalene[2]) / s[0];
  EXPECT_NEAR(line_dist(k, kScalene[2], kScalene[0]) / s[1], d0, 1e-12);
  EXPECT_NEAR(line_dist(k, kScalene[0], kScalene[1]) / s[2], d0, 1e-12);
}

TEST(Centers, GergonneThroughIntouchPoints) {
  const Triangle in = derived_triangle(kScalene, DerivedKind::Intouch);
  const Point2 ge = center(kScalene, 7);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(line_dist(ge, kScalene[i], in[i]), 0.0, 1e-12);
}

TEST(Centers, FermatSeesSidesAt120Degrees) {
  const Point2 f = center(kScalene, 13);
  for (int i = 0; i < 3; ++i) {
    const Point2 p = kScalene[i] - f, q = kScalene[(i + 1) % 3] - f;
    EXPECT_NEAR(std::atan2(std::abs(cross(p, q)), dot(p, q)), 2.0 * kPi / 3.0, 1e-10);
  }
}

TEST(Centers, X100OnCircumcircle) {
  const Circle c = notable_circle(kScalene, CircleKind::Circumcircle);
  EXPECT_NEAR(dist(center(kScalene, 100), c.center), c.radius, 1e-10);
}

TEST(Centers, X39IsBrocardMidpoint) {
  const auto [w1, w2] = brocard_points(kScalene);
  expect_point(center(kScalene, 39), midpoint(w1, w2));
}

TEST(Centers, InvariantUnderSimilarity) {
  Triangle moved = kScalene;
  for (Point2& p : moved.v) p = rotated(p, 0.7) * 2.5 + Point2{1.0, -3.0};
  for (int k : CenterRegistry::builtin().ids()) {
    if (k == 511 || k == 512) continue;
    const Point2 expect = rotated(center(kScalene, k), 0.7) * 2.5 + Point2{1.0, -3.0};
    expect_point(center(moved, k), expect, 1e-9);
  }
}

TEST(Centers, EquilateralAllCoincide) {
  const Triangle eq{{Point2{0, 1}, Point2{-std::sqrt(3.0) / 2, -0.5}, Point2{std::sqrt(3.0) / 2, -0.5}}};
  for (int k : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) expect_point(center(eq, k), {0, 0}, 1e-12);
}

TEST(Derived, MedialAndAnticomplementaryAreInverse) {
  const Triangle m = derived_triangle(derived_triangle(kScalene, DerivedKind::Anticomplementary),
                                      DerivedKind::Medial);
  for (int i = 0; i < 3; ++i) expect_point(m[i], kScalene[i]);
}

TEST(Derived, OrthicFeetArePerpendicular) {
  const Triangle o = derived_triangle(kScalene, DerivedKind::Orthic);
  for (int i = 0; i < 3; ++i) {
    const Point2 b = kScalene[(i + 1) % 3], c = kScalene[(i + 2) % 3];
    EXPECT_NEAR(line_dist(o[i], b, c), 0.0, 1e-12);
    EXPECT_NEAR(dot(o[i] - kScalene[i], c - b), 0.0, 1e-12);
  }
}

TEST(Derived, RightTriangleOrthicThrows) {
  const Triangle right{{Point2{0, 0}, Point2{4, 0}, Point2{0, 3}}};
  try {
    derived_triangle(right, DerivedKind::Orthic);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), Errc::right_angle);
  }
}

TEST(Derived, ExcentersAtExradius) {
  const Triangle ex = derived_triangle(kScalene, DerivedKind::Excentral);
  const auto s = kScalene.sides();
  const double semi = 0.5 * (s[0] + s[1] + s[2]);
  for (int i = 0; i < 3; ++i) {
    const double ri = kScalene.area() / (semi - s[i]);
    EXPECT_NEAR(line_dist(ex[i], kScalene[0], kScalene[1]), ri, 1e-10);
    EXPECT_NEAR(line_dist(ex[i], kScalene[1], kScalene[2]), ri, 1e-10);
    EXPECT_NEAR(line_dist(ex[i], kScalene[2], kScalene[0]), ri, 1e-10);
  }
}

TEST(Derived, IntouchOnIncircle) {
  const Triangle in = derived_triangle(kScalene, DerivedKind::Intouch);
  const Circle c = notable_circle(kScalene, CircleKind::Incircle);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(dist(in[i], c.center), c.radius, 1e-12);
    EXPECT_NEAR(line_dist(in[i], kScalene[(i + 1) % 3], kScalene[(i + 2) % 3]), 0.0, 1e-12);
  }
}

TEST(Derived, ExtouchOnExcircles) {
  const Triangle et = derived_triangle(kScalene, DerivedKind::Extouch);
  const Triangle ex = derived_triangle(kScalene, DerivedKind::Excentral);
  const auto s = kScalene.sides();
  const double semi = 0.5 * (s[0] + s[1] + s[2]);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(dist(et[i], ex[i]), kScalene.area() / (semi - s[i]), 1e-10);
  }
}

TEST(Derived, TangentialSidesTouchCircumcircle) {
  const Triangle tg = derived_triangle(kScalene, DerivedKind::Tangential);
  const Point2 o = center(kScalene, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      EXPECT_NEAR(dot(tg[i] - kScalene[j], kScalene[j] - o), 0.0, 1e-10);
    }
  }
}

TEST(Derived, NamesRoundTrip) {
  for (DerivedKind k : kAllDerivedKinds) EXPECT_EQ(parse_derived(derived_name(k)), k);
  EXPECT_FALSE(parse_derived("mixtilinear"));
}

TEST(Cevian, FeetOnSidesAndCevians) {
  const Point2 p = center(kScalene, 2);
  const Triangle c = cevian_like(kScalene, CevianKind::Cevian, 2);
  const Triangle m = derived_triangle(kScalene, DerivedKind::Medial);
  for (int i = 0; i < 3; ++i) {
    expect_point(c[i], m[i]);
    EXPECT_NEAR(line_dist(c[i], kScalene[i], p), 0.0, 1e-12);
  }
}

TEST(Cevian, AnticevianOfIncenterIsExcentral) {
  const Triangle a = cevian_like(kScalene, CevianKind::Anticevian, 1);
  const Triangle ex = derived_triangle(kScalene, DerivedKind::Excentral);
  for (int i = 0; i < 3; ++i) expect_point(a[i], ex[i], 1e-10);
}

TEST(Cevian, CircumcevianOnCircumcircle) {
  const Triangle c = cevian_like(kScalene, CevianKind::Circumcevian, 1);
  const Circle cc = notable_circle(kScalene, CircleKind::Circumcircle);
  const Point2 p = center(kScalene, 1);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(dist(c[i], cc.center), cc.radius, 1e-10);
    EXPECT_NEAR(line_dist(c[i], kScalene[i], p), 0.0, 1e-10);
  }
}

TEST(Cevian, PedalOfCircumcenterIsMedial) {
  const Triangle p = cevian_like(kScalene, CevianKind::Pedal, 3);
  const Triangle m = derived_triangle(kScalene, DerivedKind::Medial);
  for (int i = 0; i < 3; ++i) expect_point(p[i], m[i], 1e-11);
}

TEST(Cevian, PedalOfAntipedalIsIdentity) {
  const Triangle ap = cevian_like(kScalene, CevianKind::Antipedal, 4);
  const Point2 h = center(kScalene, 4);
  for (int i = 0; i < 3; ++i) {
    const Point2 b = ap[(i + 1) % 3], c = ap[(i + 2) % 3];
    EXPECT_NEAR(line_dist(kScalene[i], b, c), 0.0, 1e-10);
    EXPECT_NEAR(dot(c - b, kScalene[i] - h), 0.0, 1e-10);
  }
}

TEST(Cevian, OffIsIdentity) {
  EXPECT_EQ(cevian_like(kScalene, CevianKind::Off, 1), kScalene);
}

TEST(Brocard, EqualAnglesAndCotIdentity) {
  for (const Triangle& t : random_triangles(30, 4)) {
    const auto s = t.sides();
    const double w = brocard_angle(t);
    EXPECT_NEAR(1.0 / std::tan(w), (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]) / (4 * t.area()), 1e-9);
    const auto [w1, w2] = brocard_points(t);
    for (const Point2 p : {w1, w2}) {
      // The three vertex angles at p subtended toward the next (or previous)
      // vertex all equal ω for one of the two orientations.
      auto ang = [&](int i, int step) {
        const Point2 u = t[(i + step) % 3] - t[i], v = p - t[i];
        return std::atan2(std::abs(cross(u, v)), dot(u, v));
      };
      const bool fwd = std::abs(ang(0, 1) - w) < 1e-8 && std::abs(ang(1, 1) - w) < 1e-8 &&
                       std::abs(ang(2, 1) - w) < 1e-8;
      const bool bwd = std::abs(ang(0, 2) - w) < 1e-8 && std::abs(ang(1, 2) - w) < 1e-8 &&
                       std::abs(ang(2, 2) - w) < 1e-8;
      EXPECT_TRUE(fwd || bwd);
    }
  }
}

TEST(Circles, NinePointThroughMidpointsAndFeet) {
  const Circle np = notable_circle(kScalene, CircleKind::NinePoint);
  const Triangle m = derived_triangle(kScalene, DerivedKind::Medial);
  const Triangle o = derived_triangle(kScalene, DerivedKind::Orthic);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(dist(m[i], np.center), np.radius, 1e-11);
    EXPECT_NEAR(dist(o[i], np.center), np.radius, 1e-11);
  }
}

TEST(Circles, BevanRadiusIsTwiceCircumradius) {
  const Circle b = notable_circle(kScalene, CircleKind::Bevan);
  EXPECT_NEAR(b.radius, 2.0 * kScalene.circumradius(), 1e-11);
}

TEST(BrocardInellipse, TangentToSidesWithBrocardFoci) {
  for (const Triangle& t : random_triangles(20, 5)) {
    const BrocardInellipse e = brocard_inellipse(t);
    const Point2 u{std::cos(e.angle), std::sin(e.angle)}, v = perp(u);
    for (int i = 0; i < 3; ++i) {
      const Line side = Line::through(t[(i + 1) % 3], t[(i + 2) % 3]);
      const Point2 n = side.normal();
      const double support = std::sqrt(std::pow(e.a * dot(n, u), 2) + std::pow(e.b * dot(n, v), 2));
      EXPECT_NEAR(side.distance(e.center), support, 1e-9 * t.max_side());
    }
    const auto [w1, w2] = brocard_points(t);
    const double c = std::sqrt(e.a * e.a - e.b * e.b);
    EXPECT_NEAR(dist(w1, w2), 2 * c, 1e-9);
    expect_point(midpoint(w1, w2), e.center, 1e-10);
  }
}

}  // namespace
}  // namespace poncelet

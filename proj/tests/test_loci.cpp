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

#include "poncelet/errors.hpp"
#include "poncelet/loci.hpp"

namespace poncelet {
namespace {

Channel make(LocusType type, int k = 1, DerivedKind tt = DerivedKind::Reference) {
  Channel ch;
  ch.locus_type = type;
  ch.center = k;
  ch.triangle_type = tt;
  return ch;
}

FamilySpec confocal(double a, double b = 1.0) {
  return concentric_spec(FamilyKind::Confocal, Ellipse({0, 0}, a, b));
}

double hausdorff(const std::vector<Point2>& p, const std::vector<Point2>& q) {
  auto one_sided = [](const std::vector<Point2>& x, const std::vector<Point2>& y) {
    double worst = 0.0;
    for (const Point2& u : x) {
      double best = INFINITY;
      for (std::size_t i = 0; i < y.size(); ++i) {
        const Point2 a = y[i], b = y[(i + 1) % y.size()];
        const Point2 d = b - a;
        const double s = std::clamp(dot(u - a, d) / std::max(dot(d, d), 1e-300), 0.0, 1.0);
        best = std::min(best, dist(u, a + s * d));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(p, q), one_sided(q, p));
}

TEST(Snapshot, Equilateral) {
  const Triangle t{{Point2{0, 0}, Point2{1, 0}, Point2{0.5, std::sqrt(3.0) / 2}}};
  const FamilySpec spec = mounted_spec(MountPin::Major, Ellipse({0, 0}, 2, 1));
  const MetricSnapshot s = snapshot(spec, t);
  EXPECT_NEAR(s.m.L, 3.0, 1e-15);
  EXPECT_NEAR(s.m.A, std::sqrt(3.0) / 4, 1e-15);
  EXPECT_NEAR(s.m.r / s.m.R, 0.5, 1e-15);
  EXPECT_NEAR(std::cos(s.m.theta[0]) * 3, 1.5, 1e-15);
  EXPECT_NEAR(s.m.cot_omega, std::sqrt(3.0), 1e-14);
  EXPECT_FALSE(s.kappa);
  EXPECT_FALSE(s.J);
}

TEST(Snapshot, RightTriangleAgainstHeron) {
  const Triangle t{{Point2{0, 0}, Point2{4, 0}, Point2{0, 3}}};
  const MetricSnapshot s = snapshot(mounted_spec(MountPin::Major, Ellipse({0, 0}, 2, 1)), t);
  const double a = 5, b = 3, c = 4, semi = 6;
  const double heron = std::sqrt(semi * (semi - a) * (semi - b) * (semi - c));
  EXPECT_NEAR(s.m.L, 12.0, 1e-14);
  EXPECT_NEAR(s.m.A, heron, 1e-14);
  EXPECT_NEAR(s.m.r, heron / semi, 1e-14);
  EXPECT_NEAR(s.m.R, a * b * c / (4 * heron), 1e-14);
}

TEST(Snapshot, DegenerateThrows) {
  const Triangle t{{Point2{0, 0}, Point2{1, 0}, Point2{2, 0}}};
  EXPECT_THROW(snapshot(confocal(2), t), GeometryError);
}

TEST(Snapshot, ConfocalPerimeterAndJoachimsthal) {
  const FamilySpec s = confocal(2.0);
  const MetricSnapshot p = snapshot(s, triangle_at(s, 0.4));
  const MetricSnapshot q = snapshot(s, triangle_at(s, 1.9));
  EXPECT_NEAR(p.m.L, q.m.L, 1e-9);
  ASSERT_TRUE(p.J && q.J);
  EXPECT_NEAR(*p.J, *q.J, 1e-12);
  // Same value computed at every vertex.
  const Triangle t = triangle_at(s, 0.4);
  for (int i = 0; i < 3; ++i) {
    const Point2 v = normalized(t[(i + 1) % 3] - t[i]);
    const double j = 0.5 * dot(v, Point2{2 * t[i].x / 4.0, 2 * t[i].y});
    EXPECT_NEAR(j, *p.J, 1e-12);
  }
}

TEST(Snapshot, CurvaturesAtVertices) {
  const FamilySpec s = concentric_spec(FamilyKind::Homothetic, Ellipse({0, 0}, 2.0, 1.0));
  const Triangle t = triangle_at(s, 0.0);
  const MetricSnapshot m = snapshot(s, t);
  ASSERT_TRUE(m.kappa);
  // V1 is the right vertex: κ = a/b².
  EXPECT_NEAR((*m.kappa)[0], 2.0, 1e-12);
  ASSERT_TRUE(m.kappa_caustic);
}

TEST(Snapshot, PerSampleIdentities) {
  const std::vector<FamilySpec> specs = {
      confocal(1.5), concentric_spec(FamilyKind::Dual, Ellipse({0, 0}, 3, 1)),
      poristic_spec(1.0, 0.45), brocard_spec(default_brocard_seed())};
  for (const FamilySpec& s : specs) {
    for (int j = 0; j < 90; ++j) {
      const MetricSnapshot m = snapshot(s, triangle_at(s, kTwoPi * j / 90));
      const auto& th = m.m.theta;
      EXPECT_NEAR(th[0] + th[1] + th[2], kPi, 1e-10);
      EXPECT_NEAR(std::cos(th[0]) + std::cos(th[1]) + std::cos(th[2]), 1 + m.m.r / m.m.R, 1e-10);
      const double cots = 1 / std::tan(th[0]) + 1 / std::tan(th[1]) + 1 / std::tan(th[2]);
      EXPECT_NEAR(cots, m.m.cot_omega, 1e-10);
    }
  }
}

TEST(SampleLocus, IncenterOverBilliardIsEllipse) {
  const Locus l = sample_locus(confocal(2.0), make(LocusType::Xn, 1), 720);
  EXPECT_EQ(l.cls, CurveClass::Ellipse);
  EXPECT_EQ(l.points.size(), 720u);
  EXPECT_TRUE(l.skipped.empty());
}

TEST(SampleLocus, MittenpunktIsStationary) {
  EXPECT_EQ(sample_locus(confocal(2.0), make(LocusType::Xn, 9), 720).cls, CurveClass::Point);
}

TEST(SampleLocus, VerticesSweepOuterEllipse) {
  for (FamilyKind k : {FamilyKind::Confocal, FamilyKind::Incircle, FamilyKind::Homothetic,
                       FamilyKind::Dual}) {
    const Ellipse outer({0, 0}, 1.7, 1.0);
    const Locus l = sample_locus(concentric_spec(k, outer), make(LocusType::V1), 720);
    ASSERT_EQ(l.cls, CurveClass::Ellipse);
    const ConicFit fit = fit_conic(l.points);
    const ConicCoeffs want = ConicCoeffs::of_ellipse(outer);
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(fit.coeffs.c[i], want.c[i], 1e-8);
  }
}

TEST(SampleLocus, OrthicIncenterNotConic) {
  EXPECT_EQ(sample_locus(confocal(1.5), make(LocusType::Xn, 1, DerivedKind::Orthic), 720).cls,
            CurveClass::Other);
  EXPECT_EQ(sample_locus(confocal(1.5), make(LocusType::Xn, 3, DerivedKind::Orthic), 720).cls,
            CurveClass::Ellipse);
}

TEST(SampleLocus, InfiniteCenterEverywhereDegenerate) {
  try {
    sample_locus(confocal(1.5), make(LocusType::Xn, 511), 64);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), Errc::all_samples_degenerate);
  }
}

TEST(SampleLocus, Validation) {
  EXPECT_THROW(sample_locus(confocal(1.5), make(LocusType::Xn, 1), 4), ValidationError);
  EXPECT_THROW(sample_locus(confocal(1.5), make(LocusType::Xn, 77777), 64), ValidationError);
  EXPECT_THROW(sample_locus(confocal(1.5), make(LocusType::Off), 64), ValidationError);
}

TEST(SampleLocus, SerialMatchesParallelBitwise) {
  const FamilySpec s = confocal(1.5);
  for (const Channel& ch : {make(LocusType::Xn, 4), make(LocusType::E12), make(LocusType::Omega1)}) {
    SampleOptions serial{Exec::Serial, {}};
    SampleOptions par{Exec::OpenMP, {}};
    const Locus a = sample_locus(s, ch, 360, serial);
    const Locus b = sample_locus(s, ch, 360, par);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i], b.points[i]);
    EXPECT_EQ(a.skipped, b.skipped);
    EXPECT_EQ(a.cls, b.cls);
  }
}

TEST(SampleLocus, BrocardPointLocusOverBilliard) {
  const Locus l = sample_locus(confocal(1.5), make(LocusType::Omega1), 720);
  EXPECT_TRUE(l.skipped.empty());
  EXPECT_NE(l.cls, CurveClass::Point);
}

TEST(Envelope, TangentsOfUnitCircle) {
  const LineFamily lines = [](double t) -> std::optional<Line> {
    const Point2 p{std::cos(t), std::sin(t)};
    return Line::from_direction(p, perp(p));
  };
  const EnvelopeResult env = envelope_of(lines, 400, 1e-4, Exec::Serial);
  ASSERT_EQ(env.points.size(), 400u);
  for (const Point2& p : env.points) EXPECT_NEAR(norm(p), 1.0, 1e-6);
}

TEST(Envelope, ParallelLinesSkipped) {
  const LineFamily lines = [](double t) -> std::optional<Line> {
    return Line::from_direction({0, t}, {1, 0});
  };
  const EnvelopeResult env = envelope_of(lines, 40, 0.1, Exec::Serial);
  EXPECT_TRUE(env.points.empty());
  EXPECT_EQ(env.skipped.size(), 40u);
}

TEST(Envelope, BilliardSidesEnvelopeTheCaustic) {
  const FamilySpec s = confocal(1.5);
  const auto pts = envelope(s, make(LocusType::E12), 720, {Exec::OpenMP, 1e-4});
  for (const Point2& p : pts) EXPECT_NEAR(norm(s.inner.to_unit(p)), 1.0, 1e-6 * s.scale());
}

TEST(Envelope, BilliardBisectorsEnvelopeTheEvolute) {
  // V1X1 bisects the billiard angle at V1, so it is the normal there.
  const FamilySpec s = confocal(1.5);
  const auto pts = envelope(s, make(LocusType::E1X, 1), 720, {Exec::OpenMP, 1e-4});
  std::vector<Point2> evo;
  for (int i = 0; i < 7200; ++i) evo.push_back(evolute_point(s.outer, kTwoPi * i / 7200));
  EXPECT_LT(hausdorff(pts, evo), 1e-3 * s.scale());
}

TEST(Envelope, IncircleFamilyLinesPassThroughFixedIncenter) {
  // X1 is fixed in the incircle family, so every V1X1 line passes through
  // it and the characteristic points collapse there.
  const FamilySpec s = concentric_spec(FamilyKind::Incircle, Ellipse({0, 0}, 1.5, 1.0));
  const auto pts = envelope(s, make(LocusType::E1X, 1), 720, {Exec::OpenMP, 1e-4});
  for (const Point2& p : pts) EXPECT_LT(norm(p), 1e-8);
}

TEST(Envelope, RejectsPointChannel) {
  EXPECT_THROW(envelope(confocal(1.5), make(LocusType::Xn), 64), ValidationError);
}

TEST(Invariants, BilliardRow) {
  const InvariantReport r = detect_invariants(confocal(2.0), make(LocusType::Xn), 720);
  for (const char* q : {"L", "J", "r/R", "Σcos", "Σκ^(2/3)"}) EXPECT_TRUE(r.holds(q)) << q;
  EXPECT_FALSE(r.holds("A"));
  EXPECT_EQ(r.retained, 720);
}

TEST(Invariants, HomotheticRowAndNegativeControl) {
  const FamilySpec s = concentric_spec(FamilyKind::Homothetic, Ellipse({0, 0}, 2.0, 1.0));
  const InvariantReport r = detect_invariants(s, make(LocusType::Xn), 720);
  for (const char* q : {"A", "Σs²", "cotω", "Σκ^(-2/3)", "Σκ^(-4/3)", "Σcot"}) {
    EXPECT_TRUE(r.holds(q)) << q;
  }
  ASSERT_TRUE(r.find("L"));
  EXPECT_GT(r.find("L")->spread, 1e-3);
  EXPECT_EQ(r.line().find("L="), std::string::npos);
  EXPECT_NE(r.line().find("A="), std::string::npos);
}

TEST(Invariants, ToleranceFlipsReporting) {
  const FamilySpec s = concentric_spec(FamilyKind::Homothetic, Ellipse({0, 0}, 1.2, 1.0));
  const double spread = detect_invariants(s, make(LocusType::Xn), 720).find("L")->spread;
  ASSERT_GT(spread, 1e-7);
  ASSERT_LT(spread, 1e-2);
  EXPECT_FALSE(detect_invariants(s, make(LocusType::Xn), 720, 1e-7).holds("L"));
  EXPECT_TRUE(detect_invariants(s, make(LocusType::Xn), 720, 1e-2).holds("L"));
}

TEST(Invariants, CircumcircleOrthicRadii) {
  const FamilySpec s = concentric_spec(FamilyKind::Circumcircle, Ellipse::circle({0, 0}, 1.0), 2.0);
  const InvariantReport r = detect_invariants(s, make(LocusType::Xn, 1, DerivedKind::Orthic), 720);
  for (const char* q : {"Σs²", "Πcos", "r′", "R′", "Σκc^(2/3)"}) EXPECT_TRUE(r.holds(q)) << q;
}

TEST(Invariants, ExcentralAgainstParent) {
  const FamilySpec s = excentral_of_confocal_spec(Ellipse({0, 0}, 2.0, 1.0));
  const InvariantReport r = detect_invariants(s, make(LocusType::Xn), 720);
  for (const char* q : {"A′/A", "Πcos′", "Σs²/Πs′"}) EXPECT_TRUE(r.holds(q)) << q;
}

TEST(Invariants, PoristicAndBrocardRows) {
  const InvariantReport p = detect_invariants(poristic_spec(1.0, 0.3), make(LocusType::Xn), 720);
  EXPECT_TRUE(p.holds("r/R"));
  EXPECT_TRUE(p.holds("Σcos"));
  const InvariantReport b =
      detect_invariants(brocard_spec(default_brocard_seed()), make(LocusType::Xn), 720);
  EXPECT_TRUE(b.holds("Σcot"));
  EXPECT_TRUE(b.holds("Σs²/A"));
}

TEST(Invariants, IncircleRow) {
  const FamilySpec s = concentric_spec(FamilyKind::Incircle, Ellipse({0, 0}, 3.0, 1.0));
  const InvariantReport r = detect_invariants(s, make(LocusType::Xn), 720);
  EXPECT_TRUE(r.holds("R"));
  EXPECT_TRUE(r.holds("Σcos"));
  EXPECT_FALSE(r.holds("L"));
}

TEST(Invariants, SpreadDefinition) {
  double mean = 0;
  EXPECT_DOUBLE_EQ(relative_spread({1.0, 2.0, 3.0}, &mean), 1.0);
  EXPECT_DOUBLE_EQ(mean, 2.0);
  // Floor keeps a zero mean from dividing by zero.
  EXPECT_DOUBLE_EQ(relative_spread({0.0, 0.0}), 0.0);
  EXPECT_GT(relative_spread({-1e-13, 1e-13}), 0.1);
}

TEST(Invariants, SerialMatchesParallel) {
  const FamilySpec s = confocal(1.5);
  const InvariantReport a = detect_invariants(s, make(LocusType::Xn), 360, 1e-7, Exec::Serial);
  const InvariantReport b = detect_invariants(s, make(LocusType::Xn), 360, 1e-7, Exec::OpenMP);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].mean, b.entries[i].mean);
    EXPECT_EQ(a.entries[i].spread, b.entries[i].spread);
  }
}

TEST(Channel, LabelsAndHex) {
  EXPECT_EQ(make(LocusType::Xn, 4).label(), "X4");
  EXPECT_EQ(make(LocusType::E1X, 1).label(), "E1X1");
  EXPECT_EQ(make(LocusType::Off).label(), "");
  EXPECT_EQ(to_hex({255, 0, 16}), "#ff0010");
  EXPECT_EQ(parse_hex("#FF0010"), (Rgb{255, 0, 16}));
  EXPECT_FALSE(parse_hex("ff0010"));
  EXPECT_FALSE(parse_hex("#ff00g0"));
  for (LocusType t : kAllLocusTypes) EXPECT_EQ(parse_locus_type(locus_type_name(t)), t);
}

}  // namespace
}  // namespace poncelet

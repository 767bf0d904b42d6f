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


// Sweeping a family: per-channel loci and envelopes, metric snapshots and
// conserved-quantity detection.

#ifndef PONCELET_LOCI_HPP_
#define PONCELET_LOCI_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/families.hpp"
#include "poncelet/geom.hpp"
#include "poncelet/triangle.hpp"

namespace poncelet {

enum class Exec { Serial, OpenMP };

enum class LocusType {
  Off,
  Xn,
  V1,
  V2,
  V3,
  Env,  // segment X_m X_n
  E12,
  E23,
  E31,
  E1X,  // V_i X_n
  E2X,
  E3X,
  Omega1,
  Omega2,
};

inline constexpr std::array<LocusType, 14> kAllLocusTypes = {
    LocusType::Off, LocusType::Xn,  LocusType::V1,  LocusType::V2,     LocusType::V3,
    LocusType::Env, LocusType::E12, LocusType::E23, LocusType::E31,    LocusType::E1X,
    LocusType::E2X, LocusType::E3X, LocusType::Omega1, LocusType::Omega2};

std::string_view locus_type_name(LocusType t);
std::optional<LocusType> parse_locus_type(std::string_view name);
bool is_envelope(LocusType t);
bool needs_center(LocusType t);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// "#rrggbb".
std::string to_hex(Rgb c);
std::optional<Rgb> parse_hex(std::string_view text);

struct Channel {
  LocusType locus_type = LocusType::Off;
  DerivedKind triangle_type = DerivedKind::Reference;
  int center = 1;
  // X_m of Env(m, n); `center` is n.
  int partner = 2;
  CevianKind cevian = CevianKind::Off;
  int cevian_center = 1;
  Rgb color{0, 0, 0};

  // "X1", "V2", "E1X3", "E12", "Env2-3", "Ω1"; empty when Off.
  std::string label() const;
  friend bool operator==(const Channel&, const Channel&) = default;
};

// Throws ValidationError naming the offending field.
void validate_channel(const Channel& ch, const CenterRegistry& reg = CenterRegistry::builtin());

// Triangle the channel measures at parameter t: family triangle, then the
// derived triangle, then the cevian-like construction.
Triangle channel_triangle(const FamilySpec& spec, const Channel& ch, double t,
                          const CenterRegistry& reg = CenterRegistry::builtin());

struct TriangleMetrics {
  std::array<double, 3> s{};
  std::array<double, 3> theta{};
  double L = 0, A = 0, r = 0, R = 0, cot_omega = 0;
};

TriangleMetrics measure(const Triangle& t);

struct MetricSnapshot {
  TriangleMetrics m;
  // Outer-conic curvature at the vertices; absent when a vertex is off it.
  std::optional<std::array<double, 3>> kappa;
  // Caustic curvature at the tangency points of the three sides.
  std::optional<std::array<double, 3>> kappa_caustic;
  // Confocal only.
  std::optional<double> J;
  std::optional<TriangleMetrics> primed;
};

// Throws degenerate_triangle.
MetricSnapshot snapshot(const FamilySpec& spec, const Triangle& t,
                        const std::optional<Triangle>& derived = std::nullopt);

struct Locus {
  Channel channel;
  std::vector<Point2> points;
  std::vector<int> skipped;  // sample indices with no retained point
  int samples = 0;
  CurveClass cls = CurveClass::Other;
};

struct SampleOptions {
  Exec exec = Exec::OpenMP;
  // Parameter step between the two lines intersected for an envelope
  // point; 2π/n when unset.
  std::optional<double> envelope_delta;
};

// Throws all_samples_degenerate (or all_samples_parallel for envelopes)
// when nothing is retained.
Locus sample_locus(const FamilySpec& spec, const Channel& ch, int n, const SampleOptions& opts = {},
                   const CenterRegistry& reg = CenterRegistry::builtin());

// Generating line at t, or nothing where it is undefined.
using LineFamily = std::function<std::optional<Line>(double)>;

struct EnvelopeResult {
  std::vector<Point2> points;
  std::vector<int> skipped;
};

// Characteristic points: line(tⱼ) ∩ line(tⱼ + Δ) for tⱼ = 2πj/n.
EnvelopeResult envelope_of(const LineFamily& lines, int n, double delta, Exec exec = Exec::OpenMP);
std::vector<Point2> envelope(const FamilySpec& spec, const Channel& ch, int n,
                             const SampleOptions& opts = {},
                             const CenterRegistry& reg = CenterRegistry::builtin());

struct InvariantEntry {
  std::string name;
  double mean = 0;
  double spread = 0;
  bool invariant = false;
  int count = 0;  // samples that contributed
};

struct InvariantReport {
  std::vector<InvariantEntry> entries;
  double tolerance = 0;
  int retained = 0;
  int skipped = 0;

  const InvariantEntry* find(std::string_view name) const;
  bool holds(std::string_view name) const;
  std::vector<std::string> invariant_names() const;
  // "L=7.14, r/R=0.324, ..." over the invariant entries.
  std::string line() const;
};

inline constexpr double kDefaultInvariantTol = 1e-7;
inline constexpr double kSpreadFloor = 1e-12;
inline constexpr double kRightAngleExclusion = 1e-9;

double relative_spread(const std::vector<double>& values, double* mean_out = nullptr);

// Unprimed quantities come from the family triangle (the confocal parent
// for ExcentralOfConfocal); primed ones from the channel triangle when it
// differs.
InvariantReport detect_invariants(const FamilySpec& spec, const Channel& ch, int n,
                                  double tol = kDefaultInvariantTol, Exec exec = Exec::OpenMP,
                                  const CenterRegistry& reg = CenterRegistry::builtin());

}  // namespace poncelet

#endif  // PONCELET_LOCI_HPP_

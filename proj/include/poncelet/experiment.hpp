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


// Experiment configuration: JSON and URL forms, loci and SVG export,
// playlists.

#ifndef PONCELET_EXPERIMENT_HPP_
#define PONCELET_EXPERIMENT_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/families.hpp"
#include "poncelet/loci.hpp"

namespace poncelet {

struct FamilyParams {
  FamilyKind kind = FamilyKind::Confocal;
  double ab = 1.5;
  // Caustic aspect for circumcircle, inradius (R = 1) for poristic.
  std::optional<double> aux;
  std::optional<MountPin> pin;
  // Side lengths of the Brocard seed triangle.
  std::optional<std::array<double, 3>> seed;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

inline constexpr int kConfigVersion = 1;
inline constexpr int kChannelCount = 4;

struct ExperimentConfig {
  FamilyParams family;
  // Major axis vertical; set when a lenient parse inverted a/b < 1.
  bool swap_axes = false;
  std::array<Channel, kChannelCount> channels = default_channels();
  int samples = 720;
  double rmax = 4.0;  // view half-width in units of b
  int rotation = 0;   // degrees, multiple of 90
  Rgb background{255, 255, 255};

  static std::array<Channel, kChannelCount> default_channels();
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

enum class Strictness { Strict, Lenient };

// Throws ValidationError naming the first bad field. Lenient mode inverts
// a/b < 1 and toggles swap_axes instead of rejecting it.
void validate(ExperimentConfig& cfg, Strictness mode = Strictness::Strict);

std::string to_json(const ExperimentConfig& cfg);
// Throws ParseError (malformed text) or ValidationError (schema, bounds).
ExperimentConfig from_json(std::string_view text, Strictness mode = Strictness::Strict);

// key=value pairs joined by '&'; fields equal to their default are omitted.
std::string to_url(const ExperimentConfig& cfg);
ExperimentConfig from_url(std::string_view query, Strictness mode = Strictness::Strict);

Triangle seed_triangle(const std::array<double, 3>& sides);
FamilySpec make_family_spec(const FamilyParams& p, bool swap_axes = false);
inline FamilySpec make_family_spec(const ExperimentConfig& cfg) {
  return make_family_spec(cfg.family, cfg.swap_axes);
}

// Throws GeometryError(empty_input) for an empty list.
std::string export_loci_json(const std::vector<Locus>& loci);
std::vector<Locus> parse_loci_json(std::string_view text);
std::string export_svg(const std::vector<Locus>& loci, const ExperimentConfig& cfg);

// Rotation by a multiple of 90 degrees, exact.
Point2 rotate_quarter(Point2 p, int degrees);

struct PlaylistItem {
  std::string caption;
  ExperimentConfig config;
};

struct Playlist {
  std::string name;
  std::vector<PlaylistItem> items;
};

std::vector<Playlist> parse_playlists(std::string_view text);
std::vector<Playlist> load_playlists(const std::filesystem::path& path);

}  // namespace poncelet

#endif  // PONCELET_EXPERIMENT_HPP_

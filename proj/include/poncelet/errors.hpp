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

#ifndef PONCELET_ERRORS_HPP_
#define PONCELET_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class Errc {
  degenerate_triangle,
  right_angle,
  zero_weight_sum,
  unknown_center,
  point_not_on_ellipse,
  center_singularity,
  axis_singularity,
  degenerate_circle,
  insufficient_points,
  invalid_kind,
  no_real_solution,
  infeasible_radii,
  point_inside_caustic,
  all_samples_degenerate,
  all_samples_parallel,
  degenerate_construction,
  empty_input,
};

std::string_view errc_name(Errc code);

// Raised by geometric operations whose preconditions do not hold for the
// given input. Samplers catch it per parameter and record a skipped sample.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Text that could not be parsed (registry tables, JSON, query strings).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed input that violates a config rule. `field` names the offending
// key using a dotted path, e.g. "channels[2].center".
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace poncelet

#endif  // PONCELET_ERRORS_HPP_

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

#ifndef PONCELET_TRIANGLE_HPP_
#define PONCELET_TRIANGLE_HPP_

#include <array>

#include "poncelet/geom.hpp"

namespace poncelet {

// Ordered vertex triple. Side i is opposite vertex i, so s1 = |v2 v3|.
struct Triangle {
  std::array<Point2, 3> v;

  const Point2& operator[](std::size_t i) const { return v[i]; }
  Point2& operator[](std::size_t i) { return v[i]; }

  std::array<double, 3> sides() const {
    return {dist(v[1], v[2]), dist(v[2], v[0]), dist(v[0], v[1])};
  }
  double signed_area() const { return 0.5 * cross(v[1] - v[0], v[2] - v[0]); }
  double area() const { return std::abs(signed_area()); }
  double perimeter() const {
    const auto s = sides();
    return s[0] + s[1] + s[2];
  }
  double max_side() const {
    const auto s = sides();
    return std::max({s[0], s[1], s[2]});
  }
  // Internal angle at each vertex, radians.
  std::array<double, 3> angles() const {
    std::array<double, 3> th{};
    for (std::size_t i = 0; i < 3; ++i) {
      const Point2 p = v[(i + 1) % 3] - v[i];
      const Point2 q = v[(i + 2) % 3] - v[i];
      th[i] = std::atan2(std::abs(cross(p, q)), dot(p, q));
    }
    return th;
  }
  double inradius() const { return 2.0 * area() / perimeter(); }
  double circumradius() const {
    const auto s = sides();
    return s[0] * s[1] * s[2] / (4.0 * area());
  }

  // Collinear to within area <= rel_tol * (longest side)².
  bool is_degenerate(double rel_tol = 1e-12) const {
    const double m = max_side();
    return !(m > 0.0) || !(area() > rel_tol * m * m) || !is_finite(v[0]) ||
           !is_finite(v[1]) || !is_finite(v[2]);
  }
  void require_nondegenerate() const {
    if (is_degenerate()) throw GeometryError(Errc::degenerate_triangle, "degenerate triangle");
  }

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

}  // namespace poncelet

#endif  // PONCELET_TRIANGLE_HPP_

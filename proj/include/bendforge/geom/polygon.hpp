// Copyright 2026 The BendForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "bendforge/geom/vec.hpp"

namespace bendforge {

/// Open vertex ring (first vertex not repeated), counter-clockwise when valid.
struct Polygon2 {
  std::vector<Vec2> vertices;

  std::size_t size() const { return vertices.size(); }
  const Vec2& operator[](std::size_t i) const { return vertices[i]; }
  bool operator==(const Polygon2&) const = default;
};

enum class BooleanOp { intersection, difference };

double signed_area(const Polygon2& p);
inline double area(const Polygon2& p) { return std::abs(signed_area(p)); }
Vec2 centroid(const Polygon2& p);

/// True when no two non-adjacent edges touch and the ring has >= 3 vertices.
bool is_simple(const Polygon2& p);

/// Drops repeated and collinear vertices (within tol, mm) and reorients to CCW.
Polygon2 cleaned(const Polygon2& p, double tol = 1e-9);

/// Axis-aligned rectangle [x0,x1] x [y0,y1], CCW.
Polygon2 rectangle(double x0, double y0, double x1, double y1);

/// Crossing-number point test; points on the boundary may go either way.
bool contains_point(const Polygon2& p, const Vec2& q);

/// Boolean of two simple CCW polygons. Results are simple, CCW and disjoint.
/// Throws GeometryError for degenerate input (area < 1e-9 mm^2) or when the
/// result would need a hole.
std::vector<Polygon2> polygon_boolean(const Polygon2& a, const Polygon2& b, BooleanOp op);

/// Area of a intersected with b; holes in the result are accounted for.
double intersection_area(const Polygon2& a, const Polygon2& b);

/// Ear-clipping triangulation of a simple CCW polygon; indices into p.vertices.
std::vector<std::array<int, 3>> triangulate(const Polygon2& p);

}  // namespace bendforge

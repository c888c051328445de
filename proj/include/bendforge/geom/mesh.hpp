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
#include <vector>

#include "bendforge/geom/polygon.hpp"
#include "bendforge/geom/vec.hpp"

namespace bendforge {

struct Triangle {
  Vec3 a, b, c;
};

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;

  bool empty() const { return triangles.empty(); }
  Triangle triangle(std::size_t i) const {
    const auto& t = triangles[i];
    return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
  }
  /// Appends other as a separate component.
  void append(const TriMesh& other);
};

/// Prism over profile (local u,v of frame) swept along frame.n by length.
/// Throws GeometryError when length <= 0 or the profile is not simple.
TriMesh extrude(const Polygon2& profile, const Frame& frame, double length);

/// Signed-tetrahedron volume. Throws GeometryError when the result is negative
/// (inward-oriented mesh); orientation is never flipped silently.
double mesh_volume(const TriMesh& m);
Aabb mesh_aabb(const TriMesh& m);

/// Number of edges not shared by exactly two triangles (0 for a closed mesh).
std::size_t boundary_edge_count(const TriMesh& m);
inline bool is_watertight(const TriMesh& m) { return !m.empty() && boundary_edge_count(m) == 0; }

Vec3 triangle_normal(const Triangle& t);
double triangle_area(const Triangle& t);

}  // namespace bendforge

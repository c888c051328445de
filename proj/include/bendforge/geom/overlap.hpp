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

#include <optional>
#include <utility>

#include "bendforge/geom/bvh.hpp"
#include "bendforge/geom/mesh.hpp"

namespace bendforge {

/// Distances below this (mm) are treated as exactly on a plane.
constexpr double kPlaneEps = 1e-9;

/// Closed-triangle intersection via plane-interval overlap. Coplanar pairs
/// count as touching, never intersecting: they bound zero volume. Degenerate
/// triangles never intersect.
bool triangles_intersect(const Triangle& a, const Triangle& b);

/// Scales t about its incenter so every edge moves inward by d.
/// Returns nullopt when the inradius does not exceed d.
std::optional<Triangle> shrink_triangle(const Triangle& t, double d);

/// A mesh with its BVH, built once and queried many times.
class MeshIndex {
 public:
  MeshIndex() = default;
  explicit MeshIndex(TriMesh mesh);

  const TriMesh& mesh() const { return mesh_; }
  const Bvh& bvh() const { return bvh_; }
  const Aabb& box() const { return box_; }

 private:
  TriMesh mesh_;
  Bvh bvh_;
  Aabb box_;
};

struct OverlapResult {
  bool overlaps = false;
  std::optional<std::pair<int, int>> triangle_pair;  // (tri in a, tri in b)
  std::optional<Vec3> containment_point;
};

/// Interference test between two closed meshes. Triangle pairs are tested with
/// one side shrunk by pen_tol, in both directions, so designed contact and
/// shared boundary faces do not count. When no pair crosses, the meshes
/// overlap only if one contains the other (ray parity on a sample point that
/// is farther than pen_tol from the other surface). Symmetric in a, b.
/// Throws GeometryError if a containment test is needed on a mesh that is not
/// watertight.
OverlapResult mesh_overlap(const MeshIndex& a, const MeshIndex& b, double pen_tol);
OverlapResult mesh_overlap(const TriMesh& a, const TriMesh& b, double pen_tol);

/// Ray-parity inside test. The caller guarantees p is not on the surface.
bool point_in_mesh(const MeshIndex& m, const Vec3& p);

/// True when some triangle of m lies within dist of p.
bool within_distance(const MeshIndex& m, const Vec3& p, double dist);

Vec3 closest_point_on_triangle(const Vec3& p, const Triangle& t);

}  // namespace bendforge

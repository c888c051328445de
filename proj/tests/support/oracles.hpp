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

// Slow reference implementations used only by tests. None of them call into
// the geometry kernel beyond plain data types.

#pragma once

#include <vector>

#include "bendforge/forming.hpp"
#include "bendforge/geom/mesh.hpp"
#include "bendforge/labeling.hpp"

namespace oracle {

using bendforge::PartDesign;
using bendforge::Polygon2;
using bendforge::TriMesh;
using bendforge::UnfoldedPattern;
using bendforge::Vec2;
using bendforge::Vec3;

/// Crossing-number point-in-polygon.
bool inside(const Polygon2& p, Vec2 q);

/// Area covered by the union of polys, counted on a grid of cell x cell
/// samples. The grid is shifted off the axis-aligned lattice so that sample
/// points never land on polygon edges of round coordinates.
double raster_area(const std::vector<Polygon2>& polys, double cell);
/// Area covered by both a and b.
double raster_intersection_area(const Polygon2& a, const Polygon2& b, double cell);

/// Closed-form |arc length| of a polyline.
double polyline_length(const std::vector<Vec2>& pts);

/// Signed volume of a closed triangle mesh by the divergence theorem over
/// triangle fans about the origin.
double volume(const TriMesh& m);

/// Generalized winding number of a closed mesh around p (1 inside, 0 outside).
double winding_number(const TriMesh& m, const Vec3& p);

/// Euclidean distance from p to the surface, by brute force.
double surface_distance(const TriMesh& m, const Vec3& p);

/// All-pairs reference for mesh_overlap: every triangle pair is tested after
/// shrinking one side by pen_tol about its incenter, with an edge-crosses-
/// triangle predicate built on orientation determinants; nesting is decided
/// by the winding number of the first vertex farther than pen_tol from the
/// other surface.
bool brute_overlap(const TriMesh& a, const TriMesh& b, double pen_tol);

struct RasterOverlap {
  bool overlap = false;
  double max_area = 0.0;  // largest rasterized pair intersection, mm^2
};

/// Unfold overlap by rasterizing every pair of pattern pieces not joined by a
/// bend line. Any shared sample counts as overlap.
RasterOverlap raster_unfold_overlap(const UnfoldedPattern& p, const PartDesign& d, double cell);

}  // namespace oracle

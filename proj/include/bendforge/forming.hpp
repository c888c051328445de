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

#include <vector>

#include "bendforge/geom/mesh.hpp"
#include "bendforge/model.hpp"

namespace bendforge {

/// Flat length consumed by a bend of angle_deg. Throws std::invalid_argument
/// for K outside [0.3, 0.5], negative angle or non-positive r, t.
double bend_allowance(double angle_deg, double radius, double k_factor, double thickness);

/// One target angle per bend, degrees.
using AngleAssignment = std::vector<double>;
AngleAssignment final_angles(const PartDesign& design);
AngleAssignment flat_angles(const PartDesign& design);

/// Frame of the base sheet for its principal plane.
Frame base_frame(SheetPlane plane);

/// Rigid 2D placement of a face inside the base plane.
struct PlaneFrame2 {
  Vec2 origin;
  Vec2 u{1, 0};
  Vec2 v{0, 1};
  Vec2 point(const Vec2& p) const { return origin + u * p.x + v * p.y; }
  Vec2 dir(const Vec2& d) const { return u * d.x + v * d.y; }
};

/// Placement of every face in the flat pattern (base-local coordinates).
std::vector<PlaneFrame2> flat_frames(const PartDesign& design, const PartGeometry& geometry);

/// Cross-section of one bend at some state. Section coordinates (s, z): s runs
/// outward from the bend line across the parent face plane, z along the parent
/// normal; "along" is measured from the parent edge start.
struct BendSection {
  int bend = 0;
  Frame parent;         // parent face frame at this state
  Vec2 edge_start;      // parent-local
  Vec2 edge_dir;        // parent-local unit vector along the edge
  double offset = 0.0;
  double width = 0.0;
  double angle = 0.0;   // current angle, degrees
  double sigma = 1.0;   // +1 up, -1 down
  double radius = 0.0;
  double thickness = 0.0;
  double k_factor = 0.4;
  double strip = 0.0;   // flat allowance emitted on each side of the arc

  Vec2 outward() const { return right_perp(edge_dir); }
  /// Arc center in section coordinates.
  Vec2 center() const;
  /// Unit radial at sweep angle alpha (degrees), pointing away from the
  /// concave side at alpha = 0.
  Vec2 radial(double alpha_deg) const;
  /// Material point at radius rho, sweep alpha_deg.
  Vec2 arc_point(double rho, double alpha_deg) const;
  double neutral_radius() const { return radius + k_factor * thickness; }

  Vec3 world(double along, const Vec2& sz) const;
  Vec3 world_dir(const Vec2& sz) const;
  Vec3 edge_dir3() const { return parent.dir(edge_dir); }
  /// Frame whose (u, v) is the section plane at the given along position and
  /// whose n points back toward the edge start (u = outward, v = normal).
  Frame section_frame(double along) const;
};

struct FormedState {
  std::vector<Frame> frames;            // per face
  std::vector<BendSection> sections;    // per bend
};

/// Throws std::invalid_argument when angles do not match the design or fall
/// outside [0, final].
FormedState form(const PartDesign& design, const PartGeometry& geometry, const AngleAssignment& angles);

enum class PieceKind { slab, bend_shell, allowance_strip };

struct Piece {
  TriMesh mesh;
  PieceKind kind = PieceKind::slab;
  int source = -1;  // -1 for the base sheet, else bend index
};

struct SolidSet {
  std::vector<Piece> pieces;
  std::vector<Frame> frames;
  TriMesh merged() const;
};

/// 3D solids of the design at the given angles. Construction failures surface
/// as ConstructionError with the offending bend index.
SolidSet realize(const PartDesign& design, const AngleAssignment& angles,
                 double arc_step_deg = kDefaultArcStepDeg);
SolidSet realize(const PartDesign& design, const PartGeometry& geometry, const FormedState& state,
                 double arc_step_deg = kDefaultArcStepDeg);

enum class PatternKind { face, strip };

struct PatternFace {
  Polygon2 polygon;   // base-local coordinates
  PatternKind kind = PatternKind::face;
  int source = -1;    // face: -1 base, else bend index; strip: bend index
};

struct UnfoldedPattern {
  std::vector<PatternFace> faces;
  double thickness = 0.0;
  Frame frame;        // base frame the polygons live in
};

UnfoldedPattern unfold(const PartDesign& design, double arc_step_deg = kDefaultArcStepDeg);
/// Axis-aligned area of the pattern in base-local coordinates, mm^2.
double pattern_bbox_area(const UnfoldedPattern& p);
/// Flat pattern as solids of thickness t, for export.
TriMesh pattern_mesh(const UnfoldedPattern& p);

struct SolidMetrics {
  double volume = 0.0;       // mm^3
  double aabb_volume = 0.0;  // mm^3
  Aabb aabb;
};
SolidMetrics solid_metrics(const SolidSet& s);

}  // namespace bendforge

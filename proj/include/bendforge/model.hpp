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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bendforge/geom/polygon.hpp"
#include "bendforge/geom/vec.hpp"

namespace bendforge {

/// Face 0 is the base sheet; bend i creates face i + 1.
using FaceId = int;
inline FaceId flange_face(int bend_index) { return bend_index + 1; }

constexpr double kDefaultArcStepDeg = 5.0;

struct MaterialSpec {
  double thickness = 3.0;       // mm
  double k_factor = 0.4;        // neutral-fiber position, [0.3, 0.5]
  double density = 7850.0;      // kg/m^3
  bool operator==(const MaterialSpec&) const = default;
};

enum class SheetPlane { XY, YZ, XZ };

struct SheetSpec {
  double length = 200.0;  // mm, along the base u axis
  double width = 150.0;   // mm, along the base v axis
  SheetPlane plane = SheetPlane::XY;
  bool operator==(const SheetSpec&) const = default;
};

enum class BendDirection { up, down };
enum class FlangeType { rectangular, slanted, rounded };

struct Relief {
  double notch_width = 0.0;  // mm along the edge
  double notch_depth = 0.0;  // mm into the parent face
  bool operator==(const Relief&) const = default;
};

struct BendSpec {
  FaceId parent_face = 0;
  int parent_edge = 0;
  double offset = 0.0;          // mm from the edge start
  double width = 0.0;           // mm along the edge
  double angle = 90.0;          // degrees
  double radius = 3.0;          // inner radius, mm
  BendDirection direction = BendDirection::up;
  double flange_height = 75.0;  // flat length beyond the arc, mm
  FlangeType flange_type = FlangeType::rectangular;
  double slant_angle = 0.0;     // degrees, slanted flanges only
  std::optional<Relief> relief;
  std::optional<int> mirror_of;
  bool operator==(const BendSpec&) const = default;
};

struct PartDesign {
  SheetSpec sheet;
  MaterialSpec material;
  std::vector<BendSpec> bends;
  std::string id;
  std::uint64_t seed = 0;
  bool operator==(const PartDesign&) const = default;

  std::size_t face_count() const { return bends.size() + 1; }
};

/// Geometric construction failed for a specific bend.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(int bend_index, const std::string& reason, const std::string& context = "")
      : std::runtime_error(context + "bend " + std::to_string(bend_index) + ": " + reason),
        bend_(bend_index),
        reason_(reason) {}
  int bend_index() const { return bend_; }
  const std::string& reason() const { return reason_; }

 private:
  int bend_;
  std::string reason_;
};

struct EdgeRef {
  FaceId face = 0;
  int edge = 0;
  auto operator<=>(const EdgeRef&) const = default;
};

struct EdgeSegment {
  Vec2 start;
  Vec2 end;
  double length() const { return norm(end - start); }
  Vec2 direction() const { return normalized(end - start); }
  Vec2 outward() const { return right_perp(direction()); }
};

/// Static 2D geometry of one face in its own local frame.
struct FaceGeometry {
  Polygon2 nominal;  // outline before relief cuts; defines edge numbering
  Polygon2 cut;      // nominal minus relief notches
  int source_bend = -1;
};

struct PartGeometry {
  std::vector<FaceGeometry> faces;
  EdgeSegment edge(EdgeRef ref) const;
};

/// Nominal outline of a face. Edges are numbered counter-clockwise from the
/// local origin; for flanges edge 0 is the attached bend line.
Polygon2 nominal_outline(const PartDesign& design, FaceId face, double arc_step_deg = kDefaultArcStepDeg);

/// The two relief notches of a partial-width bend, in parent-face coordinates.
std::vector<Polygon2> relief_notches(const PartDesign& design, int bend_index,
                                     double arc_step_deg = kDefaultArcStepDeg);

/// Builds every face outline and cuts reliefs. Throws ConstructionError when a
/// notch does not fit inside its face.
PartGeometry build_part_geometry(const PartDesign& design, double arc_step_deg = kDefaultArcStepDeg);

struct EdgeEntry {
  double length = 0.0;
  int depth = 0;       // bends between this edge's face and the base
  Vec3 start;          // endpoints in the flat-pattern plane of the base frame
  Vec3 end;
};
using EdgePool = std::map<EdgeRef, EdgeEntry>;

/// Free edges after applying the first prefix bends.
EdgePool eligible_edges(const PartDesign& design, std::size_t prefix);

struct Violation {
  int bend_index = -1;  // -1 for part-level problems
  std::string code;     // short stable identifier, e.g. "terminal flange"
  std::string message;
};

/// Checks every BendSpec invariant, edge eligibility in sequence order and the
/// field ranges. Never throws; an empty list means the design is valid.
std::vector<Violation> validate(const PartDesign& design);

/// The edge on the same face mirrored across the face centerline parallel to
/// the queried edge, when it is free and of equal length (1e-6 mm).
std::optional<int> symmetric_counterpart(const PartDesign& design, std::size_t prefix, FaceId face,
                                         int edge);

std::string to_string(SheetPlane p);
std::string to_string(BendDirection d);
std::string to_string(FlangeType t);
SheetPlane sheet_plane_from_string(const std::string& s);
BendDirection bend_direction_from_string(const std::string& s);
FlangeType flange_type_from_string(const std::string& s);

}  // namespace bendforge

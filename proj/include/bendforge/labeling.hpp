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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bendforge/forming.hpp"
#include "bendforge/tooling.hpp"

namespace bendforge {

enum class TaxonomyQuadrant {
  geometric_feasibility,
  configurational_feasibility,
  geometric_complexity,
  configurational_complexity,
};
std::string to_string(TaxonomyQuadrant q);
TaxonomyQuadrant quadrant_from_string(const std::string& s);

template <class T>
struct Label {
  T value{};
  TaxonomyQuadrant quadrant = TaxonomyQuadrant::geometric_complexity;
  bool operator==(const Label&) const = default;
};

struct LabelingOptions {
  double arc_step_deg = kDefaultArcStepDeg;
  double sweep_step_deg = 5.0;
  double pen_tol = 1e-3;      // mm
  double area_eps = 1e-4;     // mm^2
  bool operator==(const LabelingOptions&) const = default;
};

/// {0, step, 2 step, ...} below the final angle, plus the final angle itself.
std::vector<double> sweep_angles(double final_deg, double step_deg);

struct ToolSweep {
  std::vector<double> punch;  // colliding sweep angles
  std::vector<double> die;
  bool operator==(const ToolSweep&) const = default;
};

struct BendCollisionRecord {
  int bend = 0;
  std::array<ToolSweep, 3> alignments;  // indexed like kAlignments
  bool punch_collides = false;          // every alignment has a colliding punch step
  bool die_collides = false;
  bool collides = false;                // every alignment has a colliding punch or die step
  std::optional<double> first_colliding_angle;
  std::vector<std::string> diagnostics;
  bool operator==(const BendCollisionRecord&) const = default;
};

/// Swept tool check of bend i: bends before i at their final angle, later bends
/// flat, bend i stepped through sweep_angles. Tool construction failures mark
/// the (alignment, step) as colliding and add a diagnostic.
BendCollisionRecord check_bend(const PartDesign& design, int bend, const ToolingSpec& spec,
                               const LabelingOptions& options = {});

struct PatternRef {
  PatternKind kind = PatternKind::face;
  int index = -1;  // face id for faces, bend index for strips
  auto operator<=>(const PatternRef&) const = default;
};
std::string to_string(const PatternRef& r);

struct UnfoldOverlap {
  bool overlap = false;
  std::vector<std::pair<PatternRef, PatternRef>> pairs;
};

/// Intersections between pattern pieces that are not joined by a bend line.
UnfoldOverlap unfold_overlap(const PartDesign& design, const LabelingOptions& options = {});
UnfoldOverlap unfold_overlap(const UnfoldedPattern& pattern, const PartDesign& design,
                             const LabelingOptions& options = {});

struct ReorientationRecord {
  int transition = 0;  // bend index i, compared against i - 1
  Vec3 m_prev;
  Vec3 m_i;
  Vec3 n_end_prev;
  Vec3 n_start_i;
  double distance = 0.0;   // mm
  double angle = 0.0;      // degrees
  bool flip = false;
  bool operator==(const ReorientationRecord&) const = default;
};

struct ReorientationTotals {
  double total_distance = 0.0;
  double total_angle = 0.0;
  int n_flips = 0;
};

/// Angles above this count as a flip; the slack absorbs round-off at 90.
constexpr double kFlipThresholdDeg = 90.0 + 1e-9;

struct Reorientation {
  std::vector<ReorientationRecord> records;
  ReorientationTotals totals;
};
Reorientation reorientation(const PartDesign& design);

struct LabelSet {
  // Configurational feasibility.
  std::vector<BendCollisionRecord> bends;
  Label<bool> has_tool_collision{false, TaxonomyQuadrant::configurational_feasibility};
  Label<int> n_colliding_bends{0, TaxonomyQuadrant::configurational_feasibility};
  Label<int> n_punch_colliding_bends{0, TaxonomyQuadrant::configurational_feasibility};
  Label<int> n_die_colliding_bends{0, TaxonomyQuadrant::configurational_feasibility};
  // Geometric feasibility.
  Label<bool> unfold_overlap{false, TaxonomyQuadrant::geometric_feasibility};
  Label<std::vector<std::pair<PatternRef, PatternRef>>> overlap_pairs{{}, TaxonomyQuadrant::geometric_feasibility};
  // Configurational complexity.
  std::vector<ReorientationRecord> reorientation;
  Label<double> total_distance_mm{0.0, TaxonomyQuadrant::configurational_complexity};
  Label<double> total_angle_deg{0.0, TaxonomyQuadrant::configurational_complexity};
  Label<int> n_flips{0, TaxonomyQuadrant::configurational_complexity};
  // Geometric complexity.
  Label<int> n_bends{0, TaxonomyQuadrant::geometric_complexity};
  Label<double> thickness_mm{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> bbox_volume_cm3{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> solid_volume_cm3{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> unfolded_bbox_area_cm2{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> mass_kg{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<int> n_distinct_angles{0, TaxonomyQuadrant::geometric_complexity};
  Label<int> n_distinct_radii{0, TaxonomyQuadrant::geometric_complexity};
  Label<double> min_flange_height_mm{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> max_flange_height_mm{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> min_angle_deg{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> max_angle_deg{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> min_radius_mm{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<double> max_radius_mm{0.0, TaxonomyQuadrant::geometric_complexity};
  Label<int> n_reliefs{0, TaxonomyQuadrant::geometric_complexity};
  Label<int> n_rounded{0, TaxonomyQuadrant::geometric_complexity};

  bool operator==(const LabelSet&) const = default;
};

/// Every label for a design. Construction errors propagate with the part id
/// prefixed to the message.
LabelSet label_part(const PartDesign& design, const ToolingSpec& spec, const LabelingOptions& options = {});

}  // namespace bendforge

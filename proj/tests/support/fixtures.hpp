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

// Hand-built designs shared by the unit and acceptance tests. Base edges are
// 0 south, 1 east, 2 north, 3 west.

#pragma once

#include "bendforge/model.hpp"

namespace fixtures {

using namespace bendforge;

inline PartDesign base(double length, double width, double t = 3.0, double k = 0.4) {
  PartDesign d;
  d.id = "fixture";
  d.sheet = {length, width, SheetPlane::XY};
  d.material = {t, k, 7850.0};
  return d;
}

inline BendSpec full_bend(int face, int edge, double edge_length, double angle = 90, double radius = 3,
                          double height = 75, BendDirection dir = BendDirection::up) {
  BendSpec b;
  b.parent_face = face;
  b.parent_edge = edge;
  b.offset = 0;
  b.width = edge_length;
  b.angle = angle;
  b.radius = radius;
  b.direction = dir;
  b.flange_height = height;
  return b;
}

/// 200 x 150 x 3 sheet, no bends.
inline PartDesign flat_sheet() { return base(200, 150); }

/// 200 x 150 x 3 base with one 90 degree flange (h 75, r 3) on the south edge.
inline PartDesign single_bend() {
  PartDesign d = base(200, 150);
  d.bends.push_back(full_bend(0, 0, 200));
  return d;
}

/// 200 x 200 base, a 150 mm flange on the east edge, then the bend under test
/// on the south edge (last bend). With flanked_both_ends a second tall flange
/// sits on the west edge as well.
inline PartDesign tall_flange_neighbour(bool flanked_both_ends) {
  PartDesign d = base(200, 200);
  d.bends.push_back(full_bend(0, 1, 200, 90, 3, 150));
  if (flanked_both_ends) d.bends.push_back(full_bend(0, 3, 200, 90, 3, 150));
  d.bends.push_back(full_bend(0, 0, 200, 90, 3, 75));
  return d;
}

/// Flange chain that folds back over the east flange in the flat state:
/// C on the base east edge, A on the north edge, B on A's east side edge and D
/// on B's side edge nearest the base, which runs back down across C.
inline PartDesign wrap_around() {
  PartDesign d = base(200, 200, 2.0);
  d.bends.push_back(full_bend(0, 1, 200, 90, 2, 100));  // C
  d.bends.push_back(full_bend(0, 2, 200, 90, 2, 100));  // A
  d.bends.push_back(full_bend(2, 1, 100, 90, 2, 100));  // B on A
  d.bends.push_back(full_bend(3, 1, 100, 90, 2, 150));  // D on B
  return d;
}

/// 90 degree flanges on both 200 mm edges of a 200 x 150 base.
inline PartDesign parallel_pair() {
  PartDesign d = base(200, 150);
  d.bends.push_back(full_bend(0, 0, 200));
  d.bends.push_back(full_bend(0, 2, 200));
  return d;
}

/// First bend at 135 degrees, second bend on the opposite base edge.
inline PartDesign sharp_then_base() {
  PartDesign d = base(200, 150);
  d.bends.push_back(full_bend(0, 0, 200, 135));
  d.bends.push_back(full_bend(0, 2, 200));
  return d;
}

}  // namespace fixtures

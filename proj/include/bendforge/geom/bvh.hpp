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
#include <vector>

#include "bendforge/geom/mesh.hpp"

namespace bendforge {

/// Binary bounding-volume hierarchy over the triangles of one mesh.
/// Median split on the longest centroid axis; leaves hold at most kLeafSize
/// triangles.
class Bvh {
 public:
  static constexpr int kLeafSize = 4;

  struct Node {
    Aabb box;
    std::int32_t left = -1;   // child index, or -1 for a leaf
    std::int32_t right = -1;
    std::int32_t first = 0;   // leaf range into order()
    std::int32_t count = 0;
    bool leaf() const { return left < 0; }
  };

  Bvh() = default;
  explicit Bvh(const TriMesh& mesh);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<int>& order() const { return order_; }
  const Aabb& triangle_box(int tri) const { return tri_boxes_[tri]; }
  bool empty() const { return nodes_.empty(); }

 private:
  int build(int first, int count, std::vector<Vec3>& centroids);

  std::vector<Node> nodes_;
  std::vector<int> order_;
  std::vector<Aabb> tri_boxes_;
};

}  // namespace bendforge

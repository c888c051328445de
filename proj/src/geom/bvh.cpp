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

#include "bendforge/geom/bvh.hpp"

#include <algorithm>

namespace bendforge {

Bvh::Bvh(const TriMesh& mesh) {
  const int n = static_cast<int>(mesh.triangles.size());
  if (n == 0) return;
  tri_boxes_.resize(n);
  std::vector<Vec3> centroids(n);
  for (int i = 0; i < n; ++i) {
    const Triangle t = mesh.triangle(i);
    tri_boxes_[i].expand(t.a);
    tri_boxes_[i].expand(t.b);
    tri_boxes_[i].expand(t.c);
    centroids[i] = (t.a + t.b + t.c) * (1.0 / 3.0);
  }
  order_.resize(n);
  for (int i = 0; i < n; ++i) order_[i] = i;
  nodes_.reserve(2 * (n / kLeafSize + 1));
  build(0, n, centroids);
}

int Bvh::build(int first, int count, std::vector<Vec3>& centroids) {
  const int index = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  Aabb box;
  Aabb centroid_box;
  for (int i = first; i < first + count; ++i) {
    box.expand(tri_boxes_[order_[i]]);
    centroid_box.expand(centroids[order_[i]]);
  }
  nodes_[index].box = box;
  if (count <= kLeafSize) {
    nodes_[index].first = first;
    nodes_[index].count = count;
    return index;
  }
  const int axis = centroid_box.longest_axis();
  const int mid = first + count / 2;
  // Ties broken by triangle index so the tree is deterministic.
  std::nth_element(order_.begin() + first, order_.begin() + mid, order_.begin() + first + count,
                   [&](int a, int b) {
                     const double ca = centroids[a][axis];
                     const double cb = centroids[b][axis];
                     return ca < cb || (ca == cb && a < b);
                   });
  const int left = build(first, mid - first, centroids);
  const int right = build(mid, first + count - mid, centroids);
  nodes_[index].left = left;
  nodes_[index].right = right;
  return index;
}

}  // namespace bendforge

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

#include "bendforge/geom/mesh.hpp"

#include <map>
#include <utility>

namespace bendforge {

void TriMesh::append(const TriMesh& other) {
  const int base = static_cast<int>(vertices.size());
  vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
  triangles.reserve(triangles.size() + other.triangles.size());
  for (const auto& t : other.triangles) triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
}

TriMesh extrude(const Polygon2& profile, const Frame& frame, double length) {
  if (!(length > 0.0)) throw GeometryError("extrude: length must be positive");
  Polygon2 p = cleaned(profile);
  if (p.size() < 3 || area(p) < 1e-12) throw GeometryError("extrude: degenerate profile");
  if (!is_simple(p)) throw GeometryError("extrude: profile is not simple");

  const int n = static_cast<int>(p.size());
  TriMesh m;
  m.vertices.reserve(2 * n);
  for (const Vec2& q : p.vertices) m.vertices.push_back(frame.point(q, 0.0));
  for (const Vec2& q : p.vertices) m.vertices.push_back(frame.point(q, length));

  const auto caps = triangulate(p);
  m.triangles.reserve(2 * caps.size() + 2 * n);
  for (const auto& t : caps) {
    m.triangles.push_back({t[0], t[2], t[1]});          // bottom faces -n
    m.triangles.push_back({t[0] + n, t[1] + n, t[2] + n});  // top faces +n
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    m.triangles.push_back({i, j, j + n});
    m.triangles.push_back({i, j + n, i + n});
  }
  return m;
}

double mesh_volume(const TriMesh& m) {
  double six_v = 0.0;
  for (const auto& t : m.triangles) {
    const Vec3& a = m.vertices[t[0]];
    const Vec3& b = m.vertices[t[1]];
    const Vec3& c = m.vertices[t[2]];
    six_v += dot(a, cross(b, c));
  }
  const double v = six_v / 6.0;
  const Aabb box = mesh_aabb(m);
  const double scale = box.empty() ? 0.0 : box.volume();
  if (v < -1e-12 * std::max(1.0, scale))
    throw GeometryError("mesh_volume: negative volume, mesh is inward-oriented");
  return std::max(v, 0.0);
}

Aabb mesh_aabb(const TriMesh& m) {
  Aabb box;
  for (const Vec3& v : m.vertices) box.expand(v);
  return box;
}

std::size_t boundary_edge_count(const TriMesh& m) {
  // Directed edge (i,j) must be matched by exactly one (j,i).
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : m.triangles) {
    for (int k = 0; k < 3; ++k) ++directed[{t[k], t[(k + 1) % 3]}];
  }
  std::size_t bad = 0;
  for (const auto& [e, count] : directed) {
    auto it = directed.find({e.second, e.first});
    if (count != 1 || it == directed.end() || it->second != 1) ++bad;
  }
  return bad;
}

Vec3 triangle_normal(const Triangle& t) { return normalized(cross(t.b - t.a, t.c - t.a)); }

double triangle_area(const Triangle& t) { return 0.5 * norm(cross(t.b - t.a, t.c - t.a)); }

}  // namespace bendforge

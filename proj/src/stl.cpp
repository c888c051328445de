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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bendforge/dataset.hpp"

namespace bendforge {

namespace {

void put(std::string& out, double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  // "-0.000000" and friends print as zero so output is sign-stable.
  if (buf[0] == '-') {
    bool zero = true;
    for (const char* p = buf + 1; *p; ++p) zero = zero && (*p == '0' || *p == '.');
    if (zero) {
      out += buf + 1;
      return;
    }
  }
  out += buf;
}

void put3(std::string& out, const char* prefix, const Vec3& v) {
  out += prefix;
  put(out, v.x);
  out += ' ';
  put(out, v.y);
  out += ' ';
  put(out, v.z);
  out += '\n';
}

}  // namespace

std::string stl_string(const TriMesh& m, const std::string& name) {
  std::string out = "solid " + name + "\n";
  out.reserve(out.size() + m.triangles.size() * 260);
  for (std::size_t i = 0; i < m.triangles.size(); ++i) {
    const Triangle t = m.triangle(i);
    put3(out, "  facet normal ", triangle_normal(t));
    out += "    outer loop\n";
    put3(out, "      vertex ", t.a);
    put3(out, "      vertex ", t.b);
    put3(out, "      vertex ", t.c);
    out += "    endloop\n  endfacet\n";
  }
  out += "endsolid " + name + "\n";
  return out;
}

void write_stl(const std::string& path, const TriMesh& m, const std::string& name) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << stl_string(m, name);
  if (!f) throw std::runtime_error("write failed: " + path);
}

TriMesh read_stl(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  TriMesh m;
  std::string word;
  std::string header;
  f >> header;
  if (header != "solid") throw SchemaError(path + ": not an ASCII STL");
  while (f >> word) {
    if (word != "vertex") continue;
    Vec3 v;
    if (!(f >> v.x >> v.y >> v.z)) throw SchemaError(path + ": malformed vertex");
    m.vertices.push_back(v);
    if (m.vertices.size() % 3 == 0) {
      const int b = static_cast<int>(m.vertices.size()) - 3;
      m.triangles.push_back({b, b + 1, b + 2});
    }
  }
  if (m.vertices.size() % 3 != 0) throw SchemaError(path + ": incomplete facet");
  return m;
}

}  // namespace bendforge

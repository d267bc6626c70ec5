// Copyright 2026 The Planecode Authors.
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

#include "surface_patch.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace planecode::detail {

TrianglePlanes::TrianglePlanes(const TriangleMesh& mesh) {
  const auto n = mesh.num_triangles();
  planes.reserve(n);
  normals.reserve(n);
  areas.reserve(n);
  for (int t = 0; t < static_cast<int>(n); ++t) {
    planes.push_back(triangle_plane(mesh, t));
    normals.push_back(planes.back().normal());
    areas.push_back(triangle_area(mesh.corner(t, 0), mesh.corner(t, 1), mesh.corner(t, 2)));
  }
}

bool coplanar(const TriangleMesh& mesh, const TrianglePlanes& tp, int t, int s, double eps) {
  const auto ti = static_cast<std::size_t>(t);
  if (tp.normals[ti].dot(tp.normals[static_cast<std::size_t>(s)]) <= 0.0) return false;
  for (int v : mesh.triangle(s)) {
    if (std::abs(tp.normals[ti].dot(mesh.vertex(v)) - tp.planes[ti].h) > eps) return false;
  }
  for (int v : mesh.triangle(t)) {
    const auto si = static_cast<std::size_t>(s);
    if (std::abs(tp.normals[si].dot(mesh.vertex(v)) - tp.planes[si].h) > eps) return false;
  }
  return true;
}

std::vector<std::vector<int>> coplanar_classes(const TriangleMesh& mesh, const TrianglePlanes& tp,
                                               std::span<const int> tris, double eps) {
  std::vector<int> sorted(tris.begin(), tris.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<int> members(sorted.begin(), sorted.end());
  std::unordered_set<int> seen;
  std::vector<std::vector<int>> classes;
  for (int seed : sorted) {
    if (seen.count(seed)) continue;
    std::vector<int> cls{seed};
    seen.insert(seed);
    for (std::size_t head = 0; head < cls.size(); ++head) {
      const int t = cls[head];
      for (int s : mesh.neighbors(t)) {
        if (s < 0 || !members.count(s) || seen.count(s)) continue;
        if (coplanar(mesh, tp, t, s, eps)) {
          seen.insert(s);
          cls.push_back(s);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::optional<std::vector<int>> boundary_ring(const TriangleMesh& mesh, std::span<const int> tris) {
  std::unordered_set<int> members(tris.begin(), tris.end());
  std::map<int, int> next;  // boundary edge start -> end
  std::size_t edge_count = 0;
  for (int t : tris) {
    const Triangle& tri = mesh.triangle(t);
    for (int k = 0; k < 3; ++k) {
      const int s = mesh.neighbor(t, k);
      if (s >= 0 && members.count(s)) continue;
      const int a = tri[static_cast<std::size_t>(k)];
      const int b = tri[static_cast<std::size_t>((k + 1) % 3)];
      if (!next.emplace(a, b).second) return std::nullopt;  // pinch vertex
      ++edge_count;
    }
  }
  if (next.empty()) return std::nullopt;
  std::vector<int> ring;
  const int start = next.begin()->first;
  int v = start;
  do {
    ring.push_back(v);
    auto it = next.find(v);
    if (it == next.end() || ring.size() > edge_count) return std::nullopt;
    v = it->second;
  } while (v != start);
  if (ring.size() != edge_count) return std::nullopt;  // more than one loop
  return ring;
}

bool ring_is_convex(const TriangleMesh& mesh, const std::vector<int>& ring, const Vec3& normal, double eps) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = mesh.vertex(ring[i]);
    const Vec3& b = mesh.vertex(ring[(i + 1) % n]);
    const Vec3& c = mesh.vertex(ring[(i + 2) % n]);
    // Distance of c from the line ab, signed positive on the interior side.
    const Vec3 ab = b - a;
    const double len = ab.norm();
    if (len == 0.0) return false;
    if (normal.dot(ab.cross(c - b)) / len < -eps) return false;
  }
  return true;
}

bool inside_convex_ring(const TriangleMesh& mesh, const std::vector<int>& ring, const Vec3& normal,
                        const Vec3& p, double eps) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = mesh.vertex(ring[i]);
    const Vec3& b = mesh.vertex(ring[(i + 1) % n]);
    const Vec3 ab = b - a;
    if (normal.dot(ab.cross(p - a)) / ab.norm() < -eps) return false;
  }
  return true;
}

int largest_triangle(const TrianglePlanes& tp, std::span<const int> tris) {
  int best = tris.front();
  for (int t : tris) {
    if (tp.areas[static_cast<std::size_t>(t)] > tp.areas[static_cast<std::size_t>(best)]) best = t;
  }
  return best;
}

bool reconstructible(const TriangleMesh& mesh, const TrianglePlanes& tp, std::span<const int> tris,
                     double eps) {
  const auto classes = coplanar_classes(mesh, tp, tris, eps);
  std::vector<int> verts;
  for (int t : tris) {
    for (int v : mesh.triangle(t)) verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  for (const auto& cls : classes) {
    auto ring = boundary_ring(mesh, cls);
    if (!ring) return false;
    const auto& plane = tp.planes[static_cast<std::size_t>(largest_triangle(tp, cls))];
    const Vec3 n = plane.normal();
    if (!ring_is_convex(mesh, *ring, n, eps)) return false;
    std::unordered_set<int> on_ring(ring->begin(), ring->end());
    for (int v : verts) {
      if (on_ring.count(v)) continue;
      const Vec3& p = mesh.vertex(v);
      if (std::abs(n.dot(p) - plane.h) > eps) continue;
      if (!inside_convex_ring(mesh, *ring, n, p, eps)) return false;
    }
  }
  return true;
}

}  // namespace planecode::detail

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

#include "planecode/mesh.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace planecode {

TriangleMesh::TriangleMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  const int n = static_cast<int>(vertices_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Triangle& tri = triangles_[t];
    for (int v : tri) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("triangle " + std::to_string(t) + " references vertex " +
                                    std::to_string(v) + " of " + std::to_string(n));
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw Error(Errc::DegenerateTriangle, "triangle " + std::to_string(t) + " repeats a vertex");
    }
  }
  build_adjacency();
}

void TriangleMesh::build_adjacency() {
  struct Use {
    int tri;
    int edge;
  };
  std::unordered_map<std::uint64_t, std::vector<Use>> edges;
  edges.reserve(triangles_.size() * 2);
  auto key = [](int a, int b) {
    const auto lo = static_cast<std::uint64_t>(std::min(a, b));
    const auto hi = static_cast<std::uint64_t>(std::max(a, b));
    return (lo << 32) | hi;
  };
  for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
    for (int k = 0; k < 3; ++k) {
      const Triangle& tri = triangles_[static_cast<std::size_t>(t)];
      edges[key(tri[k], tri[(k + 1) % 3])].push_back({t, k});
    }
  }

  neighbors_.assign(triangles_.size(), {kBoundary, kBoundary, kBoundary});
  edge_manifold_ = true;
  consistently_oriented_ = true;
  closed_ = true;
  for (const auto& [k, uses] : edges) {
    if (uses.size() == 1) {
      closed_ = false;
      continue;
    }
    if (uses.size() > 2) {
      edge_manifold_ = false;
      closed_ = false;
      for (const Use& u : uses) {
        neighbors_[static_cast<std::size_t>(u.tri)][static_cast<std::size_t>(u.edge)] = kNonManifold;
      }
      continue;
    }
    const Use& a = uses[0];
    const Use& b = uses[1];
    const Triangle& ta = triangles_[static_cast<std::size_t>(a.tri)];
    const Triangle& tb = triangles_[static_cast<std::size_t>(b.tri)];
    // A consistent pair traverses the shared edge in opposite directions.
    if (ta[static_cast<std::size_t>(a.edge)] == tb[static_cast<std::size_t>(b.edge)]) {
      consistently_oriented_ = false;
    }
    neighbors_[static_cast<std::size_t>(a.tri)][static_cast<std::size_t>(a.edge)] = b.tri;
    neighbors_[static_cast<std::size_t>(b.tri)][static_cast<std::size_t>(b.edge)] = a.tri;
  }
}

double TriangleMesh::bounding_box_diagonal() const {
  if (vertices_.empty()) return 0.0;
  Eigen::AlignedBox3d box;
  for (const Vec3& v : vertices_) box.extend(v);
  return box.diagonal().norm();
}

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

double surface_area(const TriangleMesh& mesh) {
  double area = 0.0;
  for (int t = 0; t < static_cast<int>(mesh.num_triangles()); ++t) {
    area += triangle_area(mesh.corner(t, 0), mesh.corner(t, 1), mesh.corner(t, 2));
  }
  return area;
}

double enclosed_volume(const TriangleMesh& mesh) {
  double six_v = 0.0;
  for (int t = 0; t < static_cast<int>(mesh.num_triangles()); ++t) {
    six_v += mesh.corner(t, 0).dot(mesh.corner(t, 1).cross(mesh.corner(t, 2)));
  }
  return six_v / 6.0;
}

OrientedPlaned triangle_plane(const TriangleMesh& mesh, int t, double eps_area) {
  try {
    return plane_from_triangle(mesh.corner(t, 0), mesh.corner(t, 1), mesh.corner(t, 2), eps_area);
  } catch (const Error& e) {
    throw Error(e.code(), "triangle " + std::to_string(t) + ": " + e.what());
  }
}

double default_tolerance(const TriangleMesh& mesh) {
  return std::max(1e-7 * mesh.bounding_box_diagonal(), 1e-12);
}

}  // namespace planecode

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

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "planecode/geom.hpp"

namespace planecode {

/// Vertex indices of one triangle, counterclockwise seen from the positive
/// side of its plane.
using Triangle = std::array<int, 3>;

/// Indexed triangle mesh with shared-edge adjacency. Immutable once built.
class TriangleMesh {
 public:
  static constexpr int kBoundary = -1;
  static constexpr int kNonManifold = -2;

  TriangleMesh() = default;
  /// Throws std::invalid_argument on out-of-range indices and
  /// Errc::DegenerateTriangle on repeated indices within a triangle.
  TriangleMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_triangles() const { return triangles_.size(); }
  bool empty() const { return triangles_.empty(); }

  const Vec3& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const Triangle& triangle(int t) const { return triangles_[static_cast<std::size_t>(t)]; }
  const Vec3& corner(int t, int k) const { return vertex(triangle(t)[static_cast<std::size_t>(k)]); }

  /// Triangle across edge k (corner k -> corner k+1), kBoundary or kNonManifold.
  int neighbor(int t, int k) const {
    return neighbors_[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
  }
  const std::array<int, 3>& neighbors(int t) const { return neighbors_[static_cast<std::size_t>(t)]; }

  bool edge_manifold() const { return edge_manifold_; }
  bool consistently_oriented() const { return consistently_oriented_; }
  /// Edge-manifold with no boundary edges.
  bool closed() const { return closed_; }

  double bounding_box_diagonal() const;

  friend bool operator==(const TriangleMesh& a, const TriangleMesh& b) {
    return a.vertices_ == b.vertices_ && a.triangles_ == b.triangles_;
  }

 private:
  void build_adjacency();

  std::vector<Vec3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<int, 3>> neighbors_;
  bool edge_manifold_ = true;
  bool consistently_oriented_ = true;
  bool closed_ = true;
};

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);
double surface_area(const TriangleMesh& mesh);
/// Signed volume by the divergence theorem; positive for outward-oriented
/// closed meshes.
double enclosed_volume(const TriangleMesh& mesh);

/// Plane of triangle t. Throws Errc::DegenerateTriangle.
OrientedPlaned triangle_plane(const TriangleMesh& mesh, int t, double eps_area = 1e-12);

/// Default distance tolerance for geometric tests: 1e-7 of the bounding-box
/// diagonal, never below 1e-12.
double default_tolerance(const TriangleMesh& mesh);

}  // namespace planecode

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

// Triangle-set helpers shared by segmentation and polygonization.

#include <optional>
#include <span>
#include <vector>

#include "planecode/geom.hpp"
#include "planecode/mesh.hpp"

namespace planecode::detail {

/// Per-triangle planes of a mesh, computed once.
struct TrianglePlanes {
  explicit TrianglePlanes(const TriangleMesh& mesh);

  std::vector<OrientedPlaned> planes;
  std::vector<Vec3> normals;
  std::vector<double> areas;
};

/// Adjacent triangles t and s lie in one oriented plane.
bool coplanar(const TriangleMesh& mesh, const TrianglePlanes& tp, int t, int s, double eps);

/// Edge-connected coplanar classes of `tris` (adjacency restricted to
/// `tris`). Classes are ordered by their smallest triangle, members ascending.
std::vector<std::vector<int>> coplanar_classes(const TriangleMesh& mesh, const TrianglePlanes& tp,
                                               std::span<const int> tris, double eps);

/// Outer boundary loop of an edge-connected triangle set, following the
/// triangles' orientation and starting at the smallest vertex index.
/// nullopt when the boundary is not one simple loop (hole or pinch).
std::optional<std::vector<int>> boundary_ring(const TriangleMesh& mesh, std::span<const int> tris);

/// Counterclockwise ring about `normal` with no reflex corner (collinear
/// corners allowed).
bool ring_is_convex(const TriangleMesh& mesh, const std::vector<int>& ring, const Vec3& normal, double eps);

/// p lies inside or on the convex ring (after projection along `normal`).
bool inside_convex_ring(const TriangleMesh& mesh, const std::vector<int>& ring, const Vec3& normal,
                        const Vec3& p, double eps);

/// Index of the largest triangle in `tris`.
int largest_triangle(const TrianglePlanes& tp, std::span<const int> tris);

/// A triangle set whose surface is recoverable from the planes of its
/// coplanar classes plus cutting planes along its boundary: every class is a
/// convex polygon and every vertex of the set lying in a class's plane lies
/// inside that class's polygon.
bool reconstructible(const TriangleMesh& mesh, const TrianglePlanes& tp, std::span<const int> tris,
                     double eps);

}  // namespace planecode::detail

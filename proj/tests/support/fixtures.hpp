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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "planecode/convex_codec.hpp"
#include "planecode/mesh.hpp"

namespace planecode::testing {

struct NamedMesh {
  std::string name;
  TriangleMesh mesh;
};

TriangleMesh unit_cube();
TriangleMesh box(const Vec3& lo, const Vec3& hi);
TriangleMesh tetrahedron();

/// Box with a raised frustum collar around a square pocket: 16 vertices and
/// 14 quadrilaterals, bottom face first.
TriangleMesh notched_staircase();
inline constexpr int kStaircaseQuads = 14;

/// Extrudes a simple counter-clockwise polygon in the xy plane to height h.
TriangleMesh prism(const std::vector<Eigen::Vector2d>& outline, double h);
TriangleMesh l_prism();
TriangleMesh two_notch_solid();
TriangleMesh regular_prism(int sides, double radius, double h);

/// Five faces of the unit cube; the top is open.
TriangleMesh open_box();

/// Unit cube planes plus one plane cutting off the (1,1,1) corner at
/// distance `cut` along each edge.
PlaneSet chamfered_cube_planes(double cut);

/// Convex hull of `count` random points, built by brute force.
TriangleMesh random_hull(std::mt19937_64& rng, int count);

/// The shared corpus for segmentation and segmented round trips.
std::vector<NamedMesh> segmentation_corpus();

}  // namespace planecode::testing
